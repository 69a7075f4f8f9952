//! Acceptance sweep: one test per shipping criterion, each printing a
//! single pass/fail summary line (visible with `--nocapture`).
//!
//! Everything is oracle-based: geometric optima against brute-force
//! combinatorial ones, certified predicates against constructions, and
//! the binary's exit codes against deliberately corrupted files.

use hardcover_core::combinat::{
    edge_color, exact_max_independent_set, exact_min_set_cover, exhaustive_min_vertex_cover,
    vc_to_setcover, Graph,
};
use hardcover_core::gen::{random_cover_system, random_degree3_graph};
use hardcover_core::geom3d::tri_tri_intersect;
use hardcover_core::instance::{Instance, InstanceFile};
use hardcover_core::rational::{rat, rat_int};
use hardcover_core::reductions::{
    build_circles, build_fat_triangles, build_friendly, build_indep3d, build_planes,
    verify_fat_triangles, verify_friendly, CoverGeometry,
};
use num_traits::Signed;
use std::path::Path;
use std::process::{Command, Output};

fn finish(criterion: usize, label: &str, result: Result<(), String>) {
    match &result {
        Ok(()) => println!("criterion {criterion}: pass ({label})"),
        Err(e) => println!("criterion {criterion}: FAIL ({label}): {e}"),
    }
    if let Err(e) = result {
        panic!("criterion {criterion}: {e}");
    }
}

/// The shared graph suite for the cover criteria: 100 seeded graphs with
/// max degree 3 and n cycling through 4..=10.
fn cover_suite() -> Vec<Graph> {
    (0..100)
        .map(|i| random_degree3_graph(4 + (i % 7), 1000 + i as u64))
        .collect()
}

fn min_vertex_cover(g: &Graph) -> Result<usize, String> {
    Ok(exhaustive_min_vertex_cover(g)
        .map_err(|e| e.to_string())?
        .len())
}

fn min_geometric_cover<T: CoverGeometry>(inst: &T) -> Result<usize, String> {
    let system = inst.cover_system().map_err(|e| e.to_string())?;
    Ok(exact_min_set_cover(&system)
        .map_err(|e| e.to_string())?
        .size)
}

#[test]
fn criterion_1_fat_triangle_cover_optimum_preservation() {
    finish(
        1,
        "100 graphs n in 4..=10: min fat-triangle cover equals min vertex cover",
        (|| {
            for (i, g) in cover_suite().iter().enumerate() {
                let inst =
                    build_fat_triangles(g, &rat_int(1)).map_err(|e| format!("graph {i}: {e}"))?;
                let geometric =
                    min_geometric_cover(&inst).map_err(|e| format!("graph {i}: {e}"))?;
                let combinatorial = min_vertex_cover(g).map_err(|e| format!("graph {i}: {e}"))?;
                if geometric != combinatorial {
                    return Err(format!(
                        "graph {i}: geometric cover {geometric} != vertex cover {combinatorial}"
                    ));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_2_shape_conditions_at_two_deltas() {
    finish(
        2,
        "conditions A..F and exact depth hold at delta 1 and 5 across the suite",
        (|| {
            for delta in [rat_int(1), rat_int(5)] {
                for (i, g) in cover_suite().iter().enumerate() {
                    let inst = build_fat_triangles(g, &delta)
                        .map_err(|e| format!("graph {i} delta {delta}: {e}"))?;
                    let report = verify_fat_triangles(&inst);
                    if !report.pass {
                        return Err(format!(
                            "graph {i} delta {delta}: failing conditions {}",
                            report.failing_ids().join(", ")
                        ));
                    }
                    for id in ["A", "B", "C", "D", "E", "F", "depth"] {
                        if report.condition(id).is_none() {
                            return Err(format!("graph {i}: condition {id} missing"));
                        }
                    }
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_3_friendly_instances() {
    finish(
        3,
        "50 random 3-set-cover systems: membership identity, bounded depth, optimum",
        (|| {
            for i in 0..50usize {
                let n = 3 + (i % 10);
                let m = (n.div_ceil(3) + (i % 3)).min(8);
                let system = random_cover_system(n, m, 4000 + i as u64);
                let inst = build_friendly(&system).map_err(|e| format!("system {i}: {e}"))?;
                let report = verify_friendly(&inst);
                if !report.pass {
                    return Err(format!(
                        "system {i}: failing conditions {}",
                        report.failing_ids().join(", ")
                    ));
                }
                let derived = inst
                    .cover_system()
                    .map_err(|e| format!("system {i}: {e}"))?;
                if derived != system {
                    return Err(format!(
                        "system {i}: membership matrix deviates from source"
                    ));
                }
                for (j, row) in inst.membership_matrix().iter().enumerate() {
                    let depth = row.iter().filter(|&&b| b).count();
                    if depth > 4 {
                        return Err(format!("system {i}: point {j} has depth {depth}"));
                    }
                }
                let geometric = exact_min_set_cover(&derived)
                    .map_err(|e| e.to_string())?
                    .size;
                let source = exact_min_set_cover(&system)
                    .map_err(|e| e.to_string())?
                    .size;
                if geometric != source {
                    return Err(format!(
                        "system {i}: geometric cover {geometric} != set cover {source}"
                    ));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_4_circle_covers() {
    finish(
        4,
        "circle instances over the suite: no cocircular quadruple, optimum preserved",
        (|| {
            for (i, g) in cover_suite().iter().enumerate() {
                let inst = build_circles(g, &rat_int(1)).map_err(|e| format!("graph {i}: {e}"))?;
                let report = hardcover_core::reductions::verify_circles(&inst);
                if !report.pass {
                    return Err(format!(
                        "graph {i}: failing conditions {}",
                        report.failing_ids().join(", ")
                    ));
                }
                for id in ["cocircular", "optimum"] {
                    if report.condition(id).is_none() {
                        return Err(format!("graph {i}: condition {id} missing"));
                    }
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_5_plane_covers() {
    finish(
        5,
        "plane instances over the suite: incidence identity, optimum matches circles",
        (|| {
            for (i, g) in cover_suite().iter().enumerate() {
                let circles =
                    build_circles(g, &rat_int(1)).map_err(|e| format!("graph {i}: {e}"))?;
                let planes = build_planes(&circles).map_err(|e| format!("graph {i}: {e}"))?;
                let report = hardcover_core::reductions::verify_planes(&planes);
                if !report.pass {
                    return Err(format!(
                        "graph {i}: failing conditions {}",
                        report.failing_ids().join(", ")
                    ));
                }
                let on_planes = min_geometric_cover(&planes).map_err(|e| e.to_string())?;
                let on_circles = min_geometric_cover(&circles).map_err(|e| e.to_string())?;
                if on_planes != on_circles {
                    return Err(format!(
                        "graph {i}: plane cover {on_planes} != circle cover {on_circles}"
                    ));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_6_triangle_intersection_graphs() {
    finish(
        6,
        "100 graphs n in 3..=8: intersection graph matches edge-for-edge, MIS agrees",
        (|| {
            for i in 0..100usize {
                let g = random_degree3_graph(3 + (i % 6), 2000 + i as u64);
                let inst = build_indep3d(&g).map_err(|e| format!("graph {i}: {e}"))?;
                let mut edges = Vec::new();
                for u in 0..inst.triangles.len() {
                    for v in u + 1..inst.triangles.len() {
                        if tri_tri_intersect(&inst.triangles[u], &inst.triangles[v]) {
                            edges.push((u, v));
                        }
                    }
                }
                let realized = Graph::new(g.n, edges).map_err(|e| e.to_string())?;
                if realized != g {
                    return Err(format!("graph {i}: intersection graph deviates"));
                }
                let source_mis = exact_max_independent_set(&g)
                    .map_err(|e| e.to_string())?
                    .size;
                let realized_mis = exact_max_independent_set(&realized)
                    .map_err(|e| e.to_string())?
                    .size;
                if source_mis != realized_mis {
                    return Err(format!(
                        "graph {i}: MIS {source_mis} vs {realized_mis} on the realized side"
                    ));
                }
                for w in &inst.witnesses {
                    if !w.margin.is_positive() {
                        return Err(format!(
                            "graph {i}: witness ({},{}) has no margin",
                            w.i, w.j
                        ));
                    }
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_7_edge_coloring_bulk() {
    finish(
        7,
        "1000 random graphs n up to 50: proper edge colorings with at most 4 colors",
        (|| {
            for i in 0..1000usize {
                let g = random_degree3_graph(1 + (i % 50), 3000 + i as u64);
                let coloring = edge_color(&g).map_err(|e| format!("graph {i}: {e}"))?;
                if !coloring.is_proper(&g) {
                    return Err(format!("graph {i}: coloring is not proper"));
                }
                if coloring.color_count() > 4 {
                    return Err(format!("graph {i}: {} colors", coloring.color_count()));
                }
            }
            Ok(())
        })(),
    );
}

fn hardcover(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hardcover"))
        .args(args)
        .current_dir(dir)
        .env("HARDCOVER_OUT_DIR", dir)
        .output()
        .expect("binary runs")
}

/// The six canned corruptions, each expected to fail verification on its
/// targeted condition.
fn corruptions() -> Vec<(&'static str, &'static str, Instance)> {
    let k4 = Graph::complete(4);
    let mut out = Vec::new();

    let mut moved_tip = build_friendly(&vc_to_setcover(&k4).unwrap()).unwrap();
    let spare = (0..moved_tip.points.len())
        .find(|j| !moved_tip.regions[0].tooth_tips.contains(j))
        .unwrap();
    moved_tip.regions[0].tooth_tips[0] = spare;
    moved_tip.regions[0].tooth_tips.sort_unstable();
    out.push(("moved tip", "membership", Instance::Friendly(moved_tip)));

    let mut shrunk_delta = build_fat_triangles(&random_degree3_graph(5, 2), &rat_int(1)).unwrap();
    shrunk_delta.delta = rat(1, 1000);
    shrunk_delta.alpha = rat(1, 4000);
    out.push(("shrunk delta", "E", Instance::FatTri(shrunk_delta)));

    let mut swapped_color = build_fat_triangles(&k4, &rat_int(1)).unwrap();
    swapped_color.coloring.colors.swap(0, 1);
    out.push((
        "swapped color",
        "structure",
        Instance::FatTri(swapped_color),
    ));

    let mut duplicated_point = build_circles(&k4, &rat_int(1)).unwrap();
    duplicated_point.points[1] = duplicated_point.points[0].clone();
    out.push((
        "duplicated point",
        "cocircular",
        Instance::Circles(duplicated_point),
    ));

    let mut dropped_witness = build_indep3d(&random_degree3_graph(5, 4)).unwrap();
    assert!(dropped_witness.witnesses.pop().is_some());
    out.push((
        "dropped witness",
        "structure",
        Instance::Indep3d(dropped_witness),
    ));

    let mut unperturbed = build_circles(&k4, &rat_int(1)).unwrap();
    let flat = build_fat_triangles(&k4, &rat_int(1)).unwrap();
    for (p, u) in unperturbed.points.iter_mut().zip(&flat.points) {
        *p = u.point.clone();
    }
    out.push((
        "perturbation removed",
        "cocircular",
        Instance::Circles(unperturbed),
    ));

    out
}

#[test]
fn criterion_8_corruptions_are_detected() {
    finish(
        8,
        "all 6 canned corruptions exit 1 with their targeted condition id",
        (|| {
            let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
            for (name, target, instance) in corruptions() {
                let path = dir.path().join("corrupt.json");
                std::fs::write(&path, InstanceFile::new(instance, None).to_json())
                    .map_err(|e| e.to_string())?;
                let out = hardcover(dir.path(), &["verify", "corrupt.json"]);
                if out.status.code() != Some(1) {
                    return Err(format!("{name}: exit {:?}, expected 1", out.status.code()));
                }
                let stdout = String::from_utf8_lossy(&out.stdout);
                if !stdout.contains(&format!("FAIL {target}")) {
                    return Err(format!(
                        "{name}: condition {target} did not fail:\n{stdout}"
                    ));
                }
            }
            Ok(())
        })(),
    );
}

#[test]
fn criterion_9_roundtrip_determinism() {
    finish(
        9,
        "roundtrip per kind twice with one seed produces byte-identical files",
        (|| {
            let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
            for kind in ["friendly", "fat-tri", "circles", "planes", "indep3d"] {
                let artifact = dir.path().join(format!("roundtrip-{kind}-6-3.json"));
                let mut snapshots = Vec::new();
                for _ in 0..2 {
                    let out = hardcover(
                        dir.path(),
                        &["roundtrip", "--kind", kind, "--n", "6", "--seed", "3"],
                    );
                    if !out.status.success() {
                        return Err(format!(
                            "{kind}: roundtrip failed: {}",
                            String::from_utf8_lossy(&out.stderr)
                        ));
                    }
                    snapshots.push(std::fs::read(&artifact).map_err(|e| e.to_string())?);
                }
                if snapshots[0] != snapshots[1] {
                    return Err(format!("{kind}: artifacts differ between runs"));
                }
            }
            Ok(())
        })(),
    );
}
