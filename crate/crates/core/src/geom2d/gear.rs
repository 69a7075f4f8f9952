//! Gear regions: convex hulls of a concentric disk and up to three unit
//! circle points, with certified boundary intersection counting.
//!
//! For a tooth tip P and inner radius r, the two tangency points are
//! T± = r²·P ± r·√d·P⊥ with d = 1 − r², so all tangency coordinates live
//! in Q(√d). The tooth triangle (P, T+, T−) is cut out by three lines:
//! the tangents {x·T± = r²} and the chord {x·P = r²}, which gives exact
//! membership and intersection predicates without leaving the extension.

use super::ext::{ext2_orientation, Ext1, Ext1Point, Ext2, ExtPoint2};
use super::{ccw_angle_cmp, Point2};
use crate::error::GeomError;
use crate::rational::{rat_int, Rational};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A disk-with-teeth region. The boundary is derived data: it is rebuilt
/// from the radius and tip coordinates and never serialized.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GearRegion {
    #[serde(with = "crate::rational::serde_rational")]
    pub inner_radius: Rational,
    /// Indices into the instance point set, in counterclockwise order.
    pub tooth_tips: Vec<usize>,
    #[serde(skip)]
    pub boundary: Vec<GearBoundaryElement>,
}

/// One element of the counterclockwise boundary cycle.
#[derive(Debug, Clone)]
pub enum GearBoundaryElement {
    /// Inner circle arc from `start` counterclockwise to `end`.
    Arc {
        start: Ext1Point,
        end: Ext1Point,
    },
    Segment {
        from: SegmentEnd,
        to: SegmentEnd,
    },
}

#[derive(Debug, Clone)]
pub enum SegmentEnd {
    Tangency(Ext1Point),
    Tip(usize),
}

/// Per-tooth derived geometry, shared by membership and intersection code.
struct Tooth {
    index: usize,
    tip: Point2,
    /// Clockwise-side tangency T−.
    minus: Ext1Point,
    /// Counterclockwise-side tangency T+.
    plus: Ext1Point,
}

fn radicand(r: &Rational) -> Rational {
    Rational::one() - r * r
}

fn tangency(tip: &Point2, r: &Rational, side: i8, d: &Rational) -> Ext1Point {
    // T = r²·P + side·r·√d·P⊥ with P⊥ = (−Py, Px).
    let r_sq = r * r;
    let s = if side >= 0 { r.clone() } else { -r.clone() };
    Ext1Point::new(
        Ext1::new(&r_sq * &tip.x, -(&s * &tip.y), d.clone()),
        Ext1::new(&r_sq * &tip.y, &s * &tip.x, d.clone()),
    )
}

fn teeth_of(region: &GearRegion, points: &[Point2]) -> Vec<Tooth> {
    let d = radicand(&region.inner_radius);
    region
        .tooth_tips
        .iter()
        .map(|&i| Tooth {
            index: i,
            tip: points[i].clone(),
            minus: tangency(&points[i], &region.inner_radius, -1, &d),
            plus: tangency(&points[i], &region.inner_radius, 1, &d),
        })
        .collect()
}

/// Build a gear region: validate the tips, order them counterclockwise,
/// reject overlapping teeth, and lay out the boundary cycle.
pub fn gear_boundary(
    inner_radius: &Rational,
    tips: &[(usize, Point2)],
) -> Result<GearRegion, GeomError> {
    if tips.is_empty() || tips.len() > 3 {
        return Err(GeomError::DegenerateInput(
            "a gear region carries between one and three teeth",
        ));
    }
    if !inner_radius.is_positive() || inner_radius >= &Rational::one() {
        return Err(GeomError::DegenerateInput(
            "inner radius must lie in (0, 1)",
        ));
    }
    for (_, p) in tips {
        if p.norm_sq() != Rational::one() {
            return Err(GeomError::DegenerateInput(
                "tooth tips must lie on the unit circle",
            ));
        }
    }
    let mut ordered: Vec<(usize, Point2)> = tips.to_vec();
    ordered.sort_by(|a, b| ccw_angle_cmp(&a.1, &b.1));
    for w in ordered.windows(2) {
        if w[0].1 == w[1].1 {
            return Err(GeomError::DegenerateInput("duplicate tooth tips"));
        }
    }
    // Tangency intervals around tips P, Q are disjoint iff P·Q < 2r² − 1;
    // touching or overlapping intervals would put a hull edge between tips.
    let threshold = rat_int(2) * inner_radius * inner_radius - Rational::one();
    for i in 0..ordered.len() {
        for j in i + 1..ordered.len() {
            if ordered[i].1.dot(&ordered[j].1) >= threshold {
                return Err(GeomError::TeethOverlap(ordered[i].0, ordered[j].0));
            }
        }
    }
    let mut region = GearRegion {
        inner_radius: inner_radius.clone(),
        tooth_tips: ordered.iter().map(|&(i, _)| i).collect(),
        boundary: Vec::new(),
    };
    let d = radicand(inner_radius);
    let teeth: Vec<(usize, Ext1Point, Ext1Point)> = ordered
        .iter()
        .map(|(i, p)| {
            (
                *i,
                tangency(p, inner_radius, -1, &d),
                tangency(p, inner_radius, 1, &d),
            )
        })
        .collect();
    for (k, (idx, minus, plus)) in teeth.iter().enumerate() {
        region.boundary.push(GearBoundaryElement::Segment {
            from: SegmentEnd::Tangency(minus.clone()),
            to: SegmentEnd::Tip(*idx),
        });
        region.boundary.push(GearBoundaryElement::Segment {
            from: SegmentEnd::Tip(*idx),
            to: SegmentEnd::Tangency(plus.clone()),
        });
        let next_minus = &teeth[(k + 1) % teeth.len()].1;
        region.boundary.push(GearBoundaryElement::Arc {
            start: plus.clone(),
            end: next_minus.clone(),
        });
    }
    Ok(region)
}

/// Exact closed-region membership: inside the inner disk, or inside one
/// tooth triangle (P, T+, T−).
pub fn point_in_gear(region: &GearRegion, points: &[Point2], p: &Point2) -> bool {
    let r_sq = &region.inner_radius * &region.inner_radius;
    if p.norm_sq() <= r_sq {
        return true;
    }
    let d = radicand(&region.inner_radius);
    let r = &region.inner_radius;
    for &i in &region.tooth_tips {
        let tip = &points[i];
        let u = p.dot(tip);
        // Chord side: x·P ≥ r².
        if u < r_sq {
            continue;
        }
        let w = &p.y * &tip.x - &p.x * &tip.y; // p · P⊥
                                               // Tangent sides: x·T± ≤ r², i.e. r²u ± r·w·√d ≤ r².
        let lhs_plus = Ext1::new(&r_sq * &u - &r_sq, r * &w, d.clone());
        let lhs_minus = Ext1::new(&r_sq * &u - &r_sq, -(r * &w), d.clone());
        if lhs_plus.sign() <= 0 && lhs_minus.sign() <= 0 {
            return true;
        }
    }
    false
}

/// Count the isolated intersection points of two gear boundaries.
///
/// A shared tooth tip contributes exactly one point. Tangential contact
/// anywhere else is reported as [`GeomError::TangencyUnresolved`].
pub fn count_boundary_intersections(
    r1: &GearRegion,
    r2: &GearRegion,
    points: &[Point2],
) -> Result<usize, GeomError> {
    let (small, big) = match r1.inner_radius.cmp(&r2.inner_radius) {
        Ordering::Less => (r1, r2),
        Ordering::Greater => (r2, r1),
        Ordering::Equal => {
            return Err(GeomError::DegenerateInput(
                "boundary counting requires distinct inner radii",
            ))
        }
    };
    let shared: Vec<usize> = small
        .tooth_tips
        .iter()
        .copied()
        .filter(|i| big.tooth_tips.contains(i))
        .collect();
    let mut count = shared.len();

    let r_s = &small.inner_radius;
    let r_b = &big.inner_radius;
    let rs_sq = r_s * r_s;
    let rb_sq = r_b * r_b;
    let d_s = radicand(r_s);
    let d_b = radicand(r_b);
    let e = &rb_sq - &rs_sq;

    let small_teeth = teeth_of(small, points);
    let big_teeth = teeth_of(big, points);

    // Every tangent segment of the smaller gear leaves its own circle at
    // the tangency point and climbs monotonically to distance 1, so it
    // crosses the bigger circle exactly once. That crossing X lies on the
    // bigger boundary iff it is not capped by one of the bigger teeth,
    // i.e. X·P_k < r_b² for every big tooth P_k. Substituting the crossing
    // parameter gives X·P_k − r_b² in Q(√d_s, √e) directly.
    for tooth in &small_teeth {
        for side in [-1i8, 1] {
            let mut capped = false;
            for big_tooth in &big_teeth {
                let u = tooth.tip.dot(&big_tooth.tip);
                let w = &big_tooth.tip.y * &tooth.tip.x - &big_tooth.tip.x * &tooth.tip.y;
                let eps = Rational::from_integer(side.into());
                let val = Ext2::new(
                    &rs_sq * &u - &rb_sq,
                    &eps * r_s * &w,
                    -(&eps * r_s * &w),
                    u.clone(),
                    d_s.clone(),
                    e.clone(),
                );
                match val.sign() {
                    1 => {
                        capped = true;
                        break;
                    }
                    0 => {
                        return Err(GeomError::TangencyUnresolved(
                            "segment meets the larger circle at a tangency vertex",
                        ))
                    }
                    _ => {}
                }
            }
            if !capped {
                count += 1;
            }
        }
    }

    // Tangent segments against tangent segments, in the compositum
    // Q(√d_s, √d_b). Segments of a shared tooth meet only at the tip,
    // which is already counted once.
    for ts in &small_teeth {
        for tb in &big_teeth {
            if ts.index == tb.index {
                continue;
            }
            for seg_s in segments(ts, &d_s, &d_b, true) {
                for seg_b in segments(tb, &d_s, &d_b, false) {
                    count += segment_crossing(&seg_s, &seg_b)?;
                }
            }
        }
    }
    Ok(count)
}

fn segments(tooth: &Tooth, d_s: &Rational, d_b: &Rational, first: bool) -> [[ExtPoint2; 2]; 2] {
    let lift1 = |p: &Ext1Point| {
        if first {
            ExtPoint2::from_first_point(p, d_b.clone())
        } else {
            ExtPoint2::from_second_point(p, d_s.clone())
        }
    };
    let tip = ExtPoint2::from_rational_point(&tooth.tip, d_s.clone(), d_b.clone());
    [
        [lift1(&tooth.minus), tip.clone()],
        [tip, lift1(&tooth.plus)],
    ]
}

/// 0 or 1 proper crossings of two closed segments; degenerate contact is
/// tangency, and degenerate non-contact counts zero.
fn segment_crossing(s1: &[ExtPoint2; 2], s2: &[ExtPoint2; 2]) -> Result<usize, GeomError> {
    let o1 = ext2_orientation(&s1[0], &s1[1], &s2[0]);
    let o2 = ext2_orientation(&s1[0], &s1[1], &s2[1]);
    let o3 = ext2_orientation(&s2[0], &s2[1], &s1[0]);
    let o4 = ext2_orientation(&s2[0], &s2[1], &s1[1]);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return Ok(1);
    }
    if o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0 {
        return Ok(0);
    }
    // A collinear endpoint: contact only if it falls inside the other
    // closed segment.
    let on_closed = |seg: &[ExtPoint2; 2], p: &ExtPoint2| -> bool {
        let dir = seg[1].sub(&seg[0]);
        let fwd = p.sub(&seg[0]).dot(&dir);
        if fwd.sign() < 0 {
            return false;
        }
        let back = p.sub(&seg[1]).dot(&dir);
        back.sign() <= 0
    };
    let touching = (o1 == 0 && on_closed(s1, &s2[0]))
        || (o2 == 0 && on_closed(s1, &s2[1]))
        || (o3 == 0 && on_closed(s2, &s1[0]))
        || (o4 == 0 && on_closed(s2, &s1[1]));
    if touching {
        return Err(GeomError::TangencyUnresolved(
            "tangent segments touch outside a shared tip",
        ));
    }
    Ok(0)
}
