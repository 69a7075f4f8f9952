//! Set cover by halfspace boundaries through the standard lifting.
//!
//! Each planar point `(x, y)` rises to `(x, y, x² + y²)` on the
//! paraboloid; a circle becomes the plane cutting the paraboloid in the
//! circle's lift. A lifted point lies on the plane exactly when the
//! original point lies on the circle, so the circle instance's cover
//! structure transfers verbatim.

use crate::combinat::{exact_min_set_cover, exhaustive_min_vertex_cover};
use crate::error::BuildError;
use crate::geom3d::{lift, plane_of_lifted_circle, Plane, Point3};
use crate::reductions::{
    verify_circles, CircleInstance, CoverGeometry, ReportBuilder, VerificationReport,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneInstance {
    /// Lifted points, in source point order.
    pub points: Vec<Point3>,
    /// One plane per circle, in circle order.
    pub planes: Vec<Plane>,
    pub source: CircleInstance,
}

/// Lift a verified circle instance to points and planes in space.
pub fn build_planes(source: &CircleInstance) -> Result<PlaneInstance, BuildError> {
    let report = verify_circles(source);
    if let Some(bad) = report.conditions.iter().find(|c| !c.pass) {
        return Err(BuildError::ConditionViolation(format!(
            "circle precondition {}: {}",
            bad.id, bad.detail
        )));
    }
    let points: Vec<Point3> = source.points.iter().map(lift).collect();
    let planes: Vec<Plane> = source.circles.iter().map(plane_of_lifted_circle).collect();
    for (j, p) in points.iter().enumerate() {
        for (v, plane) in planes.iter().enumerate() {
            let declared = source.circles[v].contains_on_boundary(&source.points[j]);
            if plane.contains(p) != declared {
                return Err(BuildError::MembershipMismatch { point: j, shape: v });
            }
        }
    }
    Ok(PlaneInstance {
        points,
        planes,
        source: source.clone(),
    })
}

fn check_structure(inst: &PlaneInstance) -> Result<(), String> {
    if inst.points.len() != inst.source.points.len() {
        return Err("lifted point count does not match the source".into());
    }
    if inst.planes.len() != inst.source.circles.len() {
        return Err("plane count does not match the circle count".into());
    }
    let embedded = verify_circles(&inst.source);
    if let Some(bad) = embedded.conditions.iter().find(|c| !c.pass) {
        return Err(format!(
            "embedded circle instance fails {}: {}",
            bad.id, bad.detail
        ));
    }
    Ok(())
}

fn check_incidence(inst: &PlaneInstance) -> Result<(), String> {
    for (j, p) in inst.points.iter().enumerate() {
        if *p != lift(&inst.source.points[j]) {
            return Err(format!("point {j} is not the lift of its source point"));
        }
    }
    for (v, plane) in inst.planes.iter().enumerate() {
        for (j, p) in inst.points.iter().enumerate() {
            let on_circle = inst.source.circles[v].contains_on_boundary(&inst.source.points[j]);
            if plane.contains(p) != on_circle {
                return Err(format!("plane {v} and circle {v} disagree about point {j}"));
            }
        }
    }
    Ok(())
}

const OPTIMUM_VERTEX_CAP: usize = 20;

fn check_optimum(inst: &PlaneInstance) -> Result<Option<String>, String> {
    let graph = &inst.source.source;
    if graph.n > OPTIMUM_VERTEX_CAP {
        return Ok(Some(format!(
            "skipped: {} vertices exceed the exhaustive cap of {OPTIMUM_VERTEX_CAP}",
            graph.n
        )));
    }
    let system = inst
        .cover_system()
        .map_err(|e| format!("geometric cover system invalid: {e}"))?;
    let cover = exact_min_set_cover(&system).map_err(|e| format!("cover solver: {e}"))?;
    let vc = exhaustive_min_vertex_cover(graph).map_err(|e| format!("vc oracle: {e}"))?;
    if cover.size != vc.len() {
        return Err(format!(
            "plane cover optimum {} differs from vertex cover optimum {}",
            cover.size,
            vc.len()
        ));
    }
    Ok(None)
}

/// Re-derive every claimed property of a plane instance.
///
/// Conditions: `structure` (counts line up and the embedded circle
/// instance verifies), `incidence` (lifting maps each circle's incidences
/// to exactly its plane's incidences), `optimum` (plane cover optimum
/// equals the vertex cover optimum, at exhaustive scale).
pub fn verify_planes(inst: &PlaneInstance) -> VerificationReport {
    let mut rep = ReportBuilder::new();
    let structure = check_structure(inst);
    let structure_ok = structure.is_ok();
    rep.push_result("structure", structure, "instance layout is well formed");
    if !structure_ok {
        rep.skip_failed(
            &["incidence", "optimum"],
            "skipped: structural check failed",
        );
        return rep.finish();
    }
    rep.push_result(
        "incidence",
        check_incidence(inst),
        "each plane meets the lifted points exactly where its circle met the plane points",
    );
    match check_optimum(inst) {
        Ok(None) => rep.push(
            "optimum",
            true,
            "plane cover optimum equals the vertex cover optimum",
        ),
        Ok(Some(skip)) => rep.push("optimum", true, skip),
        Err(msg) => rep.push("optimum", false, msg),
    }
    rep.finish()
}

impl CoverGeometry for PlaneInstance {
    fn membership_matrix(&self) -> Vec<Vec<bool>> {
        self.points
            .iter()
            .map(|p| self.planes.iter().map(|h| h.contains(p)).collect())
            .collect()
    }

    fn ground_points(&self) -> Vec<usize> {
        self.source.edge_point.clone()
    }
}
