//! Set cover with friendly gear-shaped regions.
//!
//! Ground elements become equally spaced points on the unit circle and each
//! input set becomes the convex hull of a slightly shrunk disk together
//! with the points of the set, so a point lies in a region exactly when the
//! element lies in the set.

use crate::combinat::SetSystem;
use crate::error::{BuildError, GeomError};
use crate::geom2d::{
    count_boundary_intersections, gear_boundary, point_in_gear, unit_circle_point, GearRegion,
    Point2, UnitCirclePoint,
};
use crate::rational::{approximate_with_denominator, rat, rational_from_f64, Rational};
use crate::reductions::{CoverGeometry, ReportBuilder, VerificationReport, ROUND_DENOMINATOR};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

const SET_SIZE_BOUND: usize = 3;
const FREQUENCY_BOUND: usize = 4;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FriendlyInstance {
    /// One point per ground element, in element order.
    pub points: Vec<UnitCirclePoint>,
    /// One region per input set, in set order.
    pub regions: Vec<GearRegion>,
    pub source: SetSystem,
}

/// Tangent half-angle parameter for the `j`-th of `n` slots.
///
/// Slot angles are `2πj/n + π/(2n)`; the offset keeps every slot away from
/// the parametrization's excluded point at angle `π`, since `tan(θ/2)`
/// there would need `(4j+1)/(4n) = 1/2` with an odd numerator.
fn slot_parameter(j: usize, n: usize) -> Rational {
    let half_angle = std::f64::consts::PI * (4 * j + 1) as f64 / (4 * n) as f64;
    let exact = rational_from_f64(half_angle.tan()).expect("slot tangent is finite");
    approximate_with_denominator(&exact, &BigInt::from(ROUND_DENOMINATOR))
}

/// Build the gear instance for a set system with sets of size at most
/// three and element frequency at most four.
pub fn build_friendly(source: &SetSystem) -> Result<FriendlyInstance, BuildError> {
    for (i, set) in source.sets.iter().enumerate() {
        if set.is_empty() {
            return Err(BuildError::EmptySet(i));
        }
        if set.len() > SET_SIZE_BOUND {
            return Err(BuildError::SetTooLarge {
                set: i,
                size: set.len(),
                bound: SET_SIZE_BOUND,
            });
        }
    }
    for e in 0..source.n {
        let count = source.covering_sets(e).len();
        if count > FREQUENCY_BOUND {
            return Err(BuildError::FrequencyExceeded {
                element: e,
                count,
                bound: FREQUENCY_BOUND,
            });
        }
    }

    let n = source.n;
    let m = source.sets.len();
    let points: Vec<UnitCirclePoint> = (0..n)
        .map(|j| unit_circle_point(slot_parameter(j, n)))
        .collect();
    for j in 0..n {
        for i in 0..j {
            if points[i].point == points[j].point {
                return Err(BuildError::ConditionViolation(format!(
                    "slot rounding collided points {i} and {j}"
                )));
            }
        }
    }
    let raw: Vec<Point2> = points.iter().map(|u| u.point.clone()).collect();

    let mut regions = Vec::with_capacity(m);
    for (i, set) in source.sets.iter().enumerate() {
        let radius = gear_radius(i, n, m);
        let tips: Vec<(usize, Point2)> = set.iter().map(|&e| (e, raw[e].clone())).collect();
        regions.push(gear_boundary(&radius, &tips).map_err(BuildError::Geom)?);
    }

    for (j, p) in raw.iter().enumerate() {
        for (i, region) in regions.iter().enumerate() {
            let declared = source.sets[i].binary_search(&j).is_ok();
            if point_in_gear(region, &raw, p) != declared {
                return Err(BuildError::MembershipMismatch { point: j, shape: i });
            }
        }
    }

    Ok(FriendlyInstance {
        points,
        regions,
        source: source.clone(),
    })
}

/// Inner radius of region `i`: `1 - (i+1) / (10 n² m)`, strictly
/// decreasing in `i` so no two boundaries share a circular arc.
fn gear_radius(i: usize, n: usize, m: usize) -> Rational {
    Rational::one() - rat((i + 1) as i64, (10 * n * n * m) as i64)
}

struct Structure {
    raw: Vec<Point2>,
}

fn check_structure(inst: &FriendlyInstance) -> Result<Structure, String> {
    let n = inst.points.len();
    // Deserialized sources skip constructor validation, so rebuild and
    // compare to catch unsorted or out-of-range sets.
    match SetSystem::new(inst.source.n, inst.source.sets.clone()) {
        Ok(rebuilt) if rebuilt == inst.source => {}
        Ok(_) => return Err("source sets are not in canonical order".into()),
        Err(e) => return Err(format!("source system invalid: {e}")),
    }
    if inst.source.n != n {
        return Err(format!(
            "source has {} elements but instance carries {} points",
            inst.source.n, n
        ));
    }
    if inst.source.sets.len() != inst.regions.len() {
        return Err(format!(
            "source has {} sets but instance carries {} regions",
            inst.source.sets.len(),
            inst.regions.len()
        ));
    }
    let mut raw = Vec::with_capacity(n);
    for (j, u) in inst.points.iter().enumerate() {
        if unit_circle_point(u.t.clone()).point != u.point {
            return Err(format!("point {j} does not match its parameter"));
        }
        raw.push(u.point.clone());
    }
    for j in 0..n {
        for i in 0..j {
            if raw[i] == raw[j] {
                return Err(format!("points {i} and {j} coincide"));
            }
        }
    }
    for (i, region) in inst.regions.iter().enumerate() {
        for &tip in &region.tooth_tips {
            if tip >= n {
                return Err(format!("region {i} references missing point {tip}"));
            }
        }
        let tips: Vec<(usize, Point2)> = region
            .tooth_tips
            .iter()
            .map(|&e| (e, raw[e].clone()))
            .collect();
        match gear_boundary(&region.inner_radius, &tips) {
            Ok(rebuilt) => {
                if rebuilt.tooth_tips != region.tooth_tips {
                    return Err(format!("region {i} lists its teeth out of order"));
                }
            }
            Err(e) => return Err(format!("region {i} is not a valid gear: {e}")),
        }
    }
    Ok(Structure { raw })
}

/// Re-derive every claimed property of a friendly instance from its
/// coordinates.
///
/// Conditions: `convex` (each region is a well-formed hull of disk and
/// teeth), `membership` (geometry matches the source sets exactly),
/// `≤6-intersections` (any two region boundaries meet at most six times),
/// `freq` (no point lies in more than four regions), `radii` (inner radii
/// stay within the prescribed band below one).
pub fn verify_friendly(inst: &FriendlyInstance) -> VerificationReport {
    let mut rep = ReportBuilder::new();
    let structure = check_structure(inst);
    match &structure {
        Ok(_) => rep.push(
            "convex",
            true,
            "regions are hulls of a shrunk disk and their unit-circle teeth",
        ),
        Err(msg) => rep.push("convex", false, msg.clone()),
    }

    let Ok(Structure { raw }) = structure else {
        rep.skip_failed(
            &["membership", "≤6-intersections", "freq", "radii"],
            "skipped: structural check failed",
        );
        return rep.finish();
    };

    rep.push_result(
        "membership",
        check_membership(inst, &raw),
        "every point lies in exactly the regions of its sets",
    );
    rep.push_result(
        "≤6-intersections",
        check_boundary_pairs(inst, &raw),
        "all region boundary pairs meet at most six times",
    );
    rep.push_result(
        "freq",
        check_depth(inst, &raw),
        "no point is covered more than four times",
    );
    rep.push_result("radii", check_radii(inst), "inner radii sit in the band");
    rep.finish()
}

fn check_membership(inst: &FriendlyInstance, raw: &[Point2]) -> Result<(), String> {
    for (j, p) in raw.iter().enumerate() {
        for (i, region) in inst.regions.iter().enumerate() {
            let declared = inst.source.sets[i].binary_search(&j).is_ok();
            let held = point_in_gear(region, raw, p);
            if held != declared {
                return Err(format!(
                    "point {j} is {} region {i} but the source says otherwise",
                    if held { "inside" } else { "outside" }
                ));
            }
        }
    }
    Ok(())
}

fn check_boundary_pairs(inst: &FriendlyInstance, raw: &[Point2]) -> Result<(), String> {
    for i in 0..inst.regions.len() {
        for j in i + 1..inst.regions.len() {
            match count_boundary_intersections(&inst.regions[i], &inst.regions[j], raw) {
                Ok(count) if count <= 6 => {}
                Ok(count) => {
                    return Err(format!(
                        "regions {i} and {j} intersect {count} times on the boundary"
                    ))
                }
                Err(GeomError::TangencyUnresolved(what)) => {
                    return Err(format!("regions {i} and {j}: unresolved tangency ({what})"))
                }
                Err(e) => return Err(format!("regions {i} and {j}: {e}")),
            }
        }
    }
    Ok(())
}

fn check_depth(inst: &FriendlyInstance, raw: &[Point2]) -> Result<(), String> {
    for (j, p) in raw.iter().enumerate() {
        let depth = inst
            .regions
            .iter()
            .filter(|r| point_in_gear(r, raw, p))
            .count();
        if depth > FREQUENCY_BOUND {
            return Err(format!("point {j} is covered {depth} times"));
        }
    }
    Ok(())
}

fn check_radii(inst: &FriendlyInstance) -> Result<(), String> {
    if inst.regions.is_empty() {
        return Ok(());
    }
    let n = inst.points.len();
    if n == 0 {
        return Err("regions present but no points to anchor the radius band".into());
    }
    let lower = Rational::one() - rat(1, (10 * n * n) as i64);
    for (i, region) in inst.regions.iter().enumerate() {
        if region.inner_radius < lower || region.inner_radius >= Rational::one() {
            return Err(format!("region {i} has inner radius outside the band"));
        }
    }
    Ok(())
}

impl CoverGeometry for FriendlyInstance {
    fn membership_matrix(&self) -> Vec<Vec<bool>> {
        let raw: Vec<Point2> = self.points.iter().map(|u| u.point.clone()).collect();
        raw.iter()
            .map(|p| {
                self.regions
                    .iter()
                    .map(|r| point_in_gear(r, &raw, p))
                    .collect()
            })
            .collect()
    }

    fn ground_points(&self) -> Vec<usize> {
        (0..self.points.len()).collect()
    }
}
