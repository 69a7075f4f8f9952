//! Set cover by near-isosceles fat triangles inscribed in the unit circle.
//!
//! Edges of a degree-three graph are properly colored with four colors and
//! realized as points clustered around the four axis directions, one
//! cluster per color. Each vertex becomes the triangle through its edge
//! points, padded with private filler points so that every triangle spans
//! three distinct clusters containing an antipodal pair. That forces every
//! triangle to be within `δ` of a right isosceles triangle with diameter
//! close to two, while a triangle contains exactly the points of its own
//! vertices, so covering the edge points is covering the graph's edges.

use crate::combinat::{
    edge_color, exact_min_set_cover, exhaustive_min_vertex_cover, EdgeColoring, Graph,
};
use crate::error::BuildError;
use crate::geom2d::{
    angle_strictly_within, compare_angle_to_degrees, convex_hull, diameter_in_range,
    point_in_triangle, unit_circle_point, Point2, Triangle2, UnitCirclePoint,
};
use crate::rational::{
    approximate_with_denominator, rat, rat_int, rational_from_f64, rational_to_f64, Rational,
};
use crate::reductions::{CoverGeometry, ReportBuilder, VerificationReport, ROUND_DENOMINATOR};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FatTriangleInstance {
    pub points: Vec<UnitCirclePoint>,
    /// Axis cluster (0..4) a point belongs to; cluster `c` surrounds the
    /// direction at `90c` degrees.
    pub arc_of: Vec<usize>,
    pub is_filler: Vec<bool>,
    /// For filler points, the vertex whose triangle uses them.
    pub owner: Vec<Option<usize>>,
    /// Edge index to ground point index.
    pub edge_point: Vec<usize>,
    /// One triangle per vertex, in vertex order.
    pub triangles: Vec<Triangle2>,
    #[serde(with = "crate::rational::serde_rational")]
    pub delta: Rational,
    /// Cluster half-width `δ/4` in degrees.
    #[serde(with = "crate::rational::serde_rational")]
    pub alpha: Rational,
    pub source: Graph,
    pub coloring: EdgeColoring,
}

#[derive(Clone, Copy)]
enum Member {
    Edge(usize),
    Filler(usize),
}

/// Filler clusters for a vertex whose incident edges occupy `arcs`: enough
/// private points that the triangle spans three distinct clusters with an
/// antipodal pair among them.
fn filler_arcs(arcs: &[usize]) -> Vec<usize> {
    match arcs {
        [] => vec![0, 1, 2],
        [a] => vec![(a + 2) % 4, (a + 1) % 4],
        [a, b] => {
            if (a + 2) % 4 == *b {
                vec![(a + 1) % 4]
            } else {
                vec![(a + 2) % 4]
            }
        }
        _ => vec![],
    }
}

/// Offset of the `l`-th of `m` points in a cluster of half-width `alpha`
/// degrees: `alpha (4l + 3 - 2m) / (2(m+1))`. The numerator is odd, so the
/// offsets are nonzero, strictly increasing, and strictly inside
/// `(-alpha, alpha)`.
fn cluster_offset(l: usize, m: usize, alpha: &Rational) -> Rational {
    let num = 4 * l as i64 + 3 - 2 * m as i64;
    alpha * rat(num, 2 * (m as i64 + 1))
}

fn cluster_parameter(arc: usize, eta: &Rational) -> Rational {
    let theta = rat_int(90 * arc as i64) + eta;
    let half_rad = rational_to_f64(&theta) * std::f64::consts::PI / 360.0;
    let exact = rational_from_f64(half_rad.tan()).expect("cluster tangent is finite");
    approximate_with_denominator(&exact, &BigInt::from(ROUND_DENOMINATOR))
}

/// Build the fat-triangle instance for a graph of maximum degree three and
/// a fatness budget `δ` in `(0, 10)` degrees.
pub fn build_fat_triangles(g: &Graph, delta: &Rational) -> Result<FatTriangleInstance, BuildError> {
    if !delta.is_positive() || delta >= &rat_int(10) {
        return Err(BuildError::DeltaOutOfRange);
    }
    g.require_max_degree(3)?;
    let coloring = edge_color(g)?;
    let alpha = delta / rat_int(4);

    let mut incident = vec![Vec::new(); g.n];
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        incident[u].push(e);
        incident[v].push(e);
    }

    let mut arc_members: [Vec<Member>; 4] = Default::default();
    for (e, &c) in coloring.colors.iter().enumerate() {
        arc_members[c].push(Member::Edge(e));
    }
    let mut filler_count = vec![0usize; g.n];
    for v in 0..g.n {
        let arcs: Vec<usize> = incident[v].iter().map(|&e| coloring.colors[e]).collect();
        for arc in filler_arcs(&arcs) {
            arc_members[arc].push(Member::Filler(v));
            filler_count[v] += 1;
        }
    }

    let mut points = Vec::new();
    let mut arc_of = Vec::new();
    let mut is_filler = Vec::new();
    let mut owner = Vec::new();
    let mut edge_point = vec![usize::MAX; g.edges.len()];
    let mut vertex_fillers = vec![Vec::new(); g.n];
    for (arc, members) in arc_members.iter().enumerate() {
        let m = members.len();
        for (l, member) in members.iter().enumerate() {
            let eta = cluster_offset(l, m, &alpha);
            let idx = points.len();
            points.push(unit_circle_point(cluster_parameter(arc, &eta)));
            arc_of.push(arc);
            match *member {
                Member::Edge(e) => {
                    edge_point[e] = idx;
                    is_filler.push(false);
                    owner.push(None);
                }
                Member::Filler(v) => {
                    vertex_fillers[v].push(idx);
                    is_filler.push(true);
                    owner.push(Some(v));
                }
            }
        }
    }

    for j in 0..points.len() {
        for i in 0..j {
            if points[i].point == points[j].point {
                return Err(BuildError::ConditionViolation(format!(
                    "cluster rounding collided points {i} and {j}"
                )));
            }
        }
    }

    let mut triangles = Vec::with_capacity(g.n);
    for v in 0..g.n {
        let mut ids: Vec<usize> = incident[v].iter().map(|&e| edge_point[e]).collect();
        ids.extend(&vertex_fillers[v]);
        ids.sort_unstable();
        debug_assert_eq!(ids.len(), 3);
        triangles.push(Triangle2::new(ids[0], ids[1], ids[2]));
    }

    let inst = FatTriangleInstance {
        points,
        arc_of,
        is_filler,
        owner,
        edge_point,
        triangles,
        delta: delta.clone(),
        alpha,
        source: g.clone(),
        coloring,
    };
    let report = verify_fat_triangles(&inst);
    if let Some(bad) = report.conditions.iter().find(|c| !c.pass) {
        return Err(BuildError::ConditionViolation(format!(
            "{}: {}",
            bad.id, bad.detail
        )));
    }
    Ok(inst)
}

fn axis_point(arc: usize) -> Point2 {
    let one = rat_int(1);
    let zero = Rational::zero();
    match arc {
        0 => Point2::new(one, zero),
        1 => Point2::new(zero, one),
        2 => Point2::new(-one, zero),
        _ => Point2::new(zero, -one),
    }
}

fn check_structure(inst: &FatTriangleInstance) -> Result<(), String> {
    if !inst.delta.is_positive() || inst.delta >= rat_int(10) {
        return Err("delta must lie in (0, 10) degrees".into());
    }
    if inst.alpha != &inst.delta / rat_int(4) {
        return Err("alpha is not delta/4".into());
    }
    match Graph::new(inst.source.n, inst.source.edges.clone()) {
        Ok(rebuilt) if rebuilt == inst.source => {}
        Ok(_) => return Err("source edges are not in canonical order".into()),
        Err(e) => return Err(format!("source graph invalid: {e}")),
    }
    if let Err(e) = inst.source.require_max_degree(3) {
        return Err(format!("source graph invalid: {e}"));
    }
    let np = inst.points.len();
    if inst.arc_of.len() != np || inst.is_filler.len() != np || inst.owner.len() != np {
        return Err("point annotation arrays have mismatched lengths".into());
    }
    if inst.edge_point.len() != inst.source.edges.len() {
        return Err("edge_point length does not match the edge count".into());
    }
    if inst.triangles.len() != inst.source.n {
        return Err("triangle count does not match the vertex count".into());
    }
    if !inst.coloring.is_proper(&inst.source) {
        return Err("edge coloring is not proper".into());
    }
    for (j, u) in inst.points.iter().enumerate() {
        if unit_circle_point(u.t.clone()).point != u.point {
            return Err(format!("point {j} does not match its parameter"));
        }
        if inst.arc_of[j] >= 4 {
            return Err(format!("point {j} names a cluster out of range"));
        }
        if inst.is_filler[j] != inst.owner[j].is_some() {
            return Err(format!("point {j} has inconsistent filler annotations"));
        }
        if let Some(v) = inst.owner[j] {
            if v >= inst.source.n {
                return Err(format!("point {j} is owned by a missing vertex"));
            }
        }
    }
    for j in 0..np {
        for i in 0..j {
            if inst.points[i].point == inst.points[j].point {
                return Err(format!("points {i} and {j} coincide"));
            }
        }
    }
    let mut seen = vec![false; np];
    for (e, &p) in inst.edge_point.iter().enumerate() {
        if p >= np {
            return Err(format!("edge {e} maps to a missing point"));
        }
        if inst.is_filler[p] {
            return Err(format!("edge {e} maps to a filler point"));
        }
        if seen[p] {
            return Err(format!("point {p} realizes two edges"));
        }
        seen[p] = true;
        if inst.arc_of[p] != inst.coloring.colors[e] {
            return Err(format!("edge {e} sits in the wrong cluster for its color"));
        }
    }
    for (v, tri) in inst.triangles.iter().enumerate() {
        let [a, b, c] = tri.vertices();
        if a >= np || b >= np || c >= np {
            return Err(format!("triangle {v} references a missing point"));
        }
        if a == b || b == c || a == c {
            return Err(format!("triangle {v} repeats a vertex"));
        }
    }
    Ok(())
}

fn check_vertex_sets(inst: &FatTriangleInstance) -> Result<(), String> {
    let mut expected = vec![Vec::new(); inst.source.n];
    for (e, &(u, v)) in inst.source.edges.iter().enumerate() {
        expected[u].push(inst.edge_point[e]);
        expected[v].push(inst.edge_point[e]);
    }
    for (j, own) in inst.owner.iter().enumerate() {
        if let Some(v) = own {
            expected[*v].push(j);
        }
    }
    for (v, mut want) in expected.into_iter().enumerate() {
        want.sort_unstable();
        let mut got = inst.triangles[v].vertices().to_vec();
        got.sort_unstable();
        if got != want {
            return Err(format!(
                "triangle {v} uses points {got:?} but its edges and fillers give {want:?}"
            ));
        }
    }
    Ok(())
}

fn check_clusters(inst: &FatTriangleInstance) -> Result<(), String> {
    let origin = Point2::origin();
    for (j, u) in inst.points.iter().enumerate() {
        let axis = axis_point(inst.arc_of[j]);
        if u.point == axis {
            continue;
        }
        match compare_angle_to_degrees(&u.point, &origin, &axis, &inst.alpha) {
            Ok(Ordering::Less) => {}
            Ok(_) => {
                return Err(format!(
                    "point {j} strays at least alpha from its cluster axis"
                ))
            }
            Err(e) => return Err(format!("point {j}: {e}")),
        }
    }
    Ok(())
}

fn check_min_angles(inst: &FatTriangleInstance, raw: &[Point2]) -> Result<(), String> {
    let floor = rat_int(45) - &inst.delta;
    for (v, tri) in inst.triangles.iter().enumerate() {
        let [a, b, c] = tri.vertices();
        for (vertex, r1, r2) in [(a, b, c), (b, c, a), (c, a, b)] {
            match compare_angle_to_degrees(&raw[r1], &raw[vertex], &raw[r2], &floor) {
                Ok(Ordering::Greater) => {}
                Ok(_) => {
                    return Err(format!(
                        "triangle {v} has an angle of at most 45 - delta degrees"
                    ))
                }
                Err(e) => return Err(format!("triangle {v}: {e}")),
            }
        }
    }
    Ok(())
}

fn check_shape_profile(inst: &FatTriangleInstance, raw: &[Point2]) -> Result<(), String> {
    let lo45 = rat_int(45) - &inst.delta;
    let hi45 = rat_int(45) + &inst.delta;
    let lo90 = rat_int(90) - &inst.delta;
    let hi90 = rat_int(90) + &inst.delta;
    for (v, tri) in inst.triangles.iter().enumerate() {
        let [a, b, c] = tri.vertices();
        let mut near45 = 0;
        let mut near90 = 0;
        for (vertex, r1, r2) in [(a, b, c), (b, c, a), (c, a, b)] {
            let is45 = angle_strictly_within(&raw[r1], &raw[vertex], &raw[r2], &lo45, &hi45)
                .map_err(|e| format!("triangle {v}: {e}"))?;
            let is90 = angle_strictly_within(&raw[r1], &raw[vertex], &raw[r2], &lo90, &hi90)
                .map_err(|e| format!("triangle {v}: {e}"))?;
            near45 += usize::from(is45);
            near90 += usize::from(is90);
        }
        if near45 != 2 || near90 != 1 {
            return Err(format!(
                "triangle {v} has {near45} angles near 45 and {near90} near 90"
            ));
        }
    }
    Ok(())
}

fn check_diameters(inst: &FatTriangleInstance, raw: &[Point2]) -> Result<(), String> {
    for (v, tri) in inst.triangles.iter().enumerate() {
        if !diameter_in_range(tri, raw, &inst.delta) {
            return Err(format!("triangle {v} has diameter outside (2 - delta, 2]"));
        }
    }
    Ok(())
}

fn check_convex_position(raw: &[Point2]) -> Result<(), String> {
    if raw.is_empty() {
        return Ok(());
    }
    let hull = convex_hull(raw);
    if hull.len() != raw.len() {
        return Err(format!(
            "only {} of {} points lie on the convex hull",
            hull.len(),
            raw.len()
        ));
    }
    Ok(())
}

fn check_depths(inst: &FatTriangleInstance, matrix: &[Vec<bool>]) -> Result<(), String> {
    for (j, row) in matrix.iter().enumerate() {
        let depth = row.iter().filter(|&&b| b).count();
        let want = if inst.is_filler[j] { 1 } else { 2 };
        if depth != want {
            return Err(format!(
                "point {j} lies in {depth} triangles but should lie in {want}"
            ));
        }
    }
    Ok(())
}

fn check_depth_bound(matrix: &[Vec<bool>]) -> Result<(), String> {
    for (j, row) in matrix.iter().enumerate() {
        let depth = row.iter().filter(|&&b| b).count();
        if depth > 2 {
            return Err(format!("point {j} is covered {depth} times"));
        }
    }
    Ok(())
}

const OPTIMUM_VERTEX_CAP: usize = 20;

fn check_optimum(inst: &FatTriangleInstance) -> Result<Option<String>, String> {
    if inst.source.n > OPTIMUM_VERTEX_CAP {
        return Ok(Some(format!(
            "skipped: {} vertices exceed the exhaustive cap of {OPTIMUM_VERTEX_CAP}",
            inst.source.n
        )));
    }
    let system = inst
        .cover_system()
        .map_err(|e| format!("geometric cover system invalid: {e}"))?;
    let cover = exact_min_set_cover(&system).map_err(|e| format!("cover solver: {e}"))?;
    let vc = exhaustive_min_vertex_cover(&inst.source).map_err(|e| format!("vc oracle: {e}"))?;
    if cover.size != vc.len() {
        return Err(format!(
            "geometric cover optimum {} differs from vertex cover optimum {}",
            cover.size,
            vc.len()
        ));
    }
    Ok(None)
}

/// Re-derive every claimed property of a fat-triangle instance.
///
/// Conditions: `structure` (well-formed labels, canonical source, proper
/// coloring, points on the unit circle), `A` (every angle exceeds
/// `45 - δ`), `B` (no point lies in more than two triangles), `C` (points
/// in convex position), `D` (every diameter in `(2 - δ, 2]`), `E` (angle
/// profile: two near 45, one near 90), `F` (each triangle's vertices are
/// exactly its edge points and fillers), `arcs` (each point within `α` of
/// its cluster axis), `depth` (edge points in exactly two triangles,
/// fillers in one), `optimum` (geometric cover optimum equals the vertex
/// cover optimum, at exhaustive scale).
pub fn verify_fat_triangles(inst: &FatTriangleInstance) -> VerificationReport {
    let mut rep = ReportBuilder::new();
    let structure = check_structure(inst);
    let structure_ok = structure.is_ok();
    rep.push_result("structure", structure, "instance layout is well formed");
    if !structure_ok {
        rep.skip_failed(
            &["A", "B", "C", "D", "E", "F", "arcs", "depth", "optimum"],
            "skipped: structural check failed",
        );
        return rep.finish();
    }

    let raw: Vec<Point2> = inst.points.iter().map(|u| u.point.clone()).collect();
    let matrix = inst.membership_matrix();
    rep.push_result(
        "A",
        check_min_angles(inst, &raw),
        "all angles exceed 45 - delta degrees",
    );
    rep.push_result(
        "B",
        check_depth_bound(&matrix),
        "no point lies in more than two triangles",
    );
    rep.push_result(
        "C",
        check_convex_position(&raw),
        "points are in convex position",
    );
    rep.push_result(
        "D",
        check_diameters(inst, &raw),
        "all diameters lie in (2 - delta, 2]",
    );
    rep.push_result(
        "E",
        check_shape_profile(inst, &raw),
        "each triangle has two angles near 45 and one near 90",
    );
    rep.push_result(
        "F",
        check_vertex_sets(inst),
        "triangles use exactly their edge points and fillers",
    );
    rep.push_result(
        "arcs",
        check_clusters(inst),
        "every point stays within alpha of its cluster axis",
    );
    rep.push_result(
        "depth",
        check_depths(inst, &matrix),
        "edge points lie in exactly two triangles, fillers in one",
    );
    match check_optimum(inst) {
        Ok(None) => rep.push(
            "optimum",
            true,
            "geometric cover optimum equals the vertex cover optimum",
        ),
        Ok(Some(skip)) => rep.push("optimum", true, skip),
        Err(msg) => rep.push("optimum", false, msg),
    }
    rep.finish()
}

impl CoverGeometry for FatTriangleInstance {
    fn membership_matrix(&self) -> Vec<Vec<bool>> {
        let raw: Vec<Point2> = self.points.iter().map(|u| u.point.clone()).collect();
        raw.iter()
            .map(|p| {
                self.triangles
                    .iter()
                    .map(|tri| point_in_triangle(p, tri, &raw))
                    .collect()
            })
            .collect()
    }

    fn ground_points(&self) -> Vec<usize> {
        self.edge_point.clone()
    }
}
