//! Certified comparisons between coordinate-derived angles and rational
//! degree thresholds.
//!
//! An angle between rational vectors has an exactly known sign of cosine
//! and an exactly known rational cos². A rational-degree threshold θ has
//! rational cos² only when θ is a multiple of 30 or 45 (a consequence of
//! Niven's theorem applied to cos 2θ); those cases are compared exactly
//! from a table. Every other threshold has irrational cos², so interval
//! enclosures of cos²θ with doubling precision must eventually separate
//! the two values, and the comparison terminates with a strict answer.

use super::{rational_sign, Point2, Triangle2};
use crate::error::GeomError;
use crate::rational::{dyadic_ceil, dyadic_floor, format_rational, rat, rat_int, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::HashMap;

const START_BITS: u32 = 64;
const MAX_BITS: u32 = 4096;

/// Compare the interior angle ∠(a, vertex, b) ∈ [0°, 180°] with a rational
/// threshold in degrees. `Less` means the angle is smaller than the
/// threshold. Thresholds must lie in (0, 175]; rays must be nondegenerate.
pub fn compare_angle_to_degrees(
    a: &Point2,
    vertex: &Point2,
    b: &Point2,
    threshold_deg: &Rational,
) -> Result<Ordering, GeomError> {
    let u = a.sub(vertex);
    let v = b.sub(vertex);
    if (u.x.is_zero() && u.y.is_zero()) || (v.x.is_zero() && v.y.is_zero()) {
        return Err(GeomError::DegenerateInput(
            "angle comparison needs two nondegenerate rays",
        ));
    }
    if !threshold_deg.is_positive() || threshold_deg > &rat_int(175) {
        return Err(GeomError::DegenerateInput(
            "angle thresholds must lie in (0, 175] degrees",
        ));
    }
    let dot = u.dot(&v);
    let cos_sq_num = &dot * &dot;
    let cos_sq_den = u.norm_sq() * v.norm_sq();
    let cos_sq = cos_sq_num / cos_sq_den;
    compare_cos_profile(rational_sign(&dot), &cos_sq, threshold_deg)
}

/// Compare an angle given by sign(cos) and the exact rational cos² with a
/// degree threshold. Angles decrease as cosines increase on [0°, 180°].
fn compare_cos_profile(
    cos_sign: i8,
    cos_sq: &Rational,
    threshold_deg: &Rational,
) -> Result<Ordering, GeomError> {
    let ninety = rat_int(90);
    let thr_sign: i8 = match threshold_deg.cmp(&ninety) {
        Ordering::Less => 1,
        Ordering::Equal => 0,
        Ordering::Greater => -1,
    };
    if cos_sign != thr_sign {
        // Larger cosine sign class means smaller angle.
        return Ok(if cos_sign > thr_sign {
            Ordering::Less
        } else {
            Ordering::Greater
        });
    }
    if cos_sign == 0 {
        return Ok(Ordering::Equal);
    }
    // Same nonzero cosine sign s: for s>0 larger cos² means smaller angle,
    // for s<0 larger cos² means larger angle.
    let flip = |o: Ordering| if cos_sign > 0 { o.reverse() } else { o };
    if let Some(exact) = special_cos_sq(threshold_deg) {
        return Ok(flip(cos_sq.cmp(&exact)));
    }
    let mut bits = START_BITS;
    while bits <= MAX_BITS {
        let (lo, hi) = cos_sq_enclosure(threshold_deg, bits);
        if cos_sq > &hi {
            return Ok(flip(Ordering::Greater));
        }
        if cos_sq < &lo {
            return Ok(flip(Ordering::Less));
        }
        bits *= 2;
    }
    // Unreachable for thresholds with irrational cos²; kept as a guard.
    Err(GeomError::ThresholdCoincidence {
        threshold_deg: format_rational(threshold_deg),
    })
}

/// Rational cos²θ for the thresholds where it exists (multiples of 30/45).
fn special_cos_sq(threshold_deg: &Rational) -> Option<Rational> {
    let table = [
        (30, rat(3, 4)),
        (45, rat(1, 2)),
        (60, rat(1, 4)),
        (90, rat_int(0)),
        (120, rat(1, 4)),
        (135, rat(1, 2)),
        (150, rat(3, 4)),
    ];
    table
        .into_iter()
        .find(|(deg, _)| threshold_deg == &rat_int(*deg))
        .map(|(_, v)| v)
}

/// True iff every interior angle of the triangle lies strictly inside
/// (lo_deg, hi_deg). An exact tie with either bound is surfaced as
/// [`GeomError::ThresholdCoincidence`] rather than resolved either way.
pub fn min_angle_in_range(
    tri: &Triangle2,
    points: &[Point2],
    lo_deg: &Rational,
    hi_deg: &Rational,
) -> Result<bool, GeomError> {
    let [a, b, c] = tri.vertices();
    let (pa, pb, pc) = (&points[a], &points[b], &points[c]);
    if super::orientation(pa, pb, pc) == 0 {
        return Err(GeomError::DegenerateInput(
            "degenerate triangle has no interior angles",
        ));
    }
    for (vertex, r1, r2) in [(pa, pb, pc), (pb, pc, pa), (pc, pa, pb)] {
        if !angle_strictly_within(r1, vertex, r2, lo_deg, hi_deg)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strict open-range test for one angle, with ties reported as errors.
pub fn angle_strictly_within(
    a: &Point2,
    vertex: &Point2,
    b: &Point2,
    lo_deg: &Rational,
    hi_deg: &Rational,
) -> Result<bool, GeomError> {
    let tie = |thr: &Rational| GeomError::ThresholdCoincidence {
        threshold_deg: format_rational(thr),
    };
    match compare_angle_to_degrees(a, vertex, b, lo_deg)? {
        Ordering::Less => return Ok(false),
        Ordering::Equal => return Err(tie(lo_deg)),
        Ordering::Greater => {}
    }
    match compare_angle_to_degrees(a, vertex, b, hi_deg)? {
        Ordering::Greater => Ok(false),
        Ordering::Equal => Err(tie(hi_deg)),
        Ordering::Less => Ok(true),
    }
}

/// True iff the triangle's diameter (longest side) lies in (2−δ, 2],
/// compared through squared lengths. For δ ≥ 2 the lower bound is vacuous.
pub fn diameter_in_range(tri: &Triangle2, points: &[Point2], delta: &Rational) -> bool {
    let [a, b, c] = tri.vertices();
    let mut max_sq = points[a].dist_sq(&points[b]);
    for (i, j) in [(b, c), (c, a)] {
        let d = points[i].dist_sq(&points[j]);
        if d > max_sq {
            max_sq = d;
        }
    }
    if max_sq > rat_int(4) {
        return false;
    }
    let lower = rat_int(2) - delta;
    if !lower.is_positive() {
        return true;
    }
    max_sq > &lower * &lower
}

thread_local! {
    static PI_CACHE: RefCell<HashMap<u32, (Rational, Rational)>> = RefCell::new(HashMap::new());
    static COS_SQ_CACHE: RefCell<HashMap<(Rational, u32), (Rational, Rational)>> =
        RefCell::new(HashMap::new());
}

/// Enclosure of cos²θ for θ in degrees, 0 < θ ≤ 175, width about 2^−bits.
fn cos_sq_enclosure(threshold_deg: &Rational, bits: u32) -> (Rational, Rational) {
    let key = (threshold_deg.clone(), bits);
    if let Some(hit) = COS_SQ_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let (pi_lo, pi_hi) = pi_enclosure(bits + 8);
    let scale = threshold_deg / rat_int(180);
    // θ > 0, so the radian interval keeps its orientation.
    let x_lo = dyadic_floor(&(&scale * pi_lo), bits + 8);
    let x_hi = dyadic_ceil(&(&scale * pi_hi), bits + 8);
    // cos is decreasing on [0, π] and x_hi < π for θ ≤ 175.
    let (_, cos_hi) = cos_enclosure(&x_lo, bits + 4);
    let (cos_lo, _) = cos_enclosure(&x_hi, bits + 4);
    let clamp = |v: Rational| {
        let one = rat_int(1);
        if v > one {
            one
        } else if v < -one.clone() {
            -one
        } else {
            v
        }
    };
    let c_lo = clamp(cos_lo);
    let c_hi = clamp(cos_hi);
    let result = if !c_lo.is_negative() {
        (&c_lo * &c_lo, &c_hi * &c_hi)
    } else if !c_hi.is_positive() {
        (&c_hi * &c_hi, &c_lo * &c_lo)
    } else {
        let a = &c_lo * &c_lo;
        let b = &c_hi * &c_hi;
        (Rational::zero(), a.max(b))
    };
    COS_SQ_CACHE.with(|c| c.borrow_mut().insert(key, result.clone()));
    result
}

/// Machin's formula π = 16·arctan(1/5) − 4·arctan(1/239), with outward
/// rounding at every step.
fn pi_enclosure(bits: u32) -> (Rational, Rational) {
    if let Some(hit) = PI_CACHE.with(|c| c.borrow().get(&bits).cloned()) {
        return hit;
    }
    let (a_lo, a_hi) = arctan_inv_enclosure(5, bits + 6);
    let (b_lo, b_hi) = arctan_inv_enclosure(239, bits + 6);
    let sixteen = rat_int(16);
    let four = rat_int(4);
    let lo = dyadic_floor(&(&sixteen * &a_lo - &four * &b_hi), bits);
    let hi = dyadic_ceil(&(&sixteen * &a_hi - &four * &b_lo), bits);
    PI_CACHE.with(|c| c.borrow_mut().insert(bits, (lo.clone(), hi.clone())));
    (lo, hi)
}

/// Enclosure of arctan(1/q) by its alternating Taylor series.
fn arctan_inv_enclosure(q: i64, bits: u32) -> (Rational, Rational) {
    let x = rat(1, q);
    let x_sq = &x * &x;
    let eps = Rational::new(BigInt::one(), BigInt::one() << bits);
    let mut sum = Rational::zero();
    let mut power = x.clone();
    let mut k: i64 = 0;
    loop {
        let term = &power / rat_int(2 * k + 1);
        if term < eps {
            // Alternating with strictly decreasing terms: the tail is
            // bounded by the first omitted term.
            return (
                dyadic_floor(&(&sum - &term), bits),
                dyadic_ceil(&(&sum + &term), bits),
            );
        }
        if k % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        power = &power * &x_sq;
        k += 1;
    }
}

/// Enclosure of cos t for rational t ∈ [0, 3.2], by the alternating Taylor
/// series with the first omitted term as the tail bound.
fn cos_enclosure(t: &Rational, bits: u32) -> (Rational, Rational) {
    let t_sq = t * t;
    let eps = Rational::new(BigInt::one(), BigInt::one() << bits);
    let mut sum = Rational::one();
    let mut term = Rational::one();
    let mut k: i64 = 1;
    loop {
        // term_k = t^{2k} / (2k)!
        term = &term * &t_sq / rat_int((2 * k - 1) * 2 * k);
        // Terms decrease strictly once (2k−1)(2k) > t², i.e. from k = 2 on.
        if k >= 2 && term < eps {
            return (&sum - &term, &sum + &term);
        }
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(x: i64, y: i64) -> Point2 {
        Point2::new(rat_int(x), rat_int(y))
    }

    #[test]
    fn pi_enclosure_brackets_pi() {
        let (lo, hi) = pi_enclosure(80);
        // 3.14159265 < π < 3.14159266
        assert!(lo < rat(314159266, 100000000));
        assert!(hi > rat(314159265, 100000000));
        assert!(&hi - &lo < rat(1, 1 << 30));
        assert!(lo < hi);
    }

    #[test]
    fn cos_enclosure_known_points() {
        // cos(1) ≈ 0.5403023058681398
        let (lo, hi) = cos_enclosure(&rat_int(1), 64);
        assert!(lo < rat(5403023059, 10000000000));
        assert!(hi > rat(5403023058, 10000000000));
        let (lo, hi) = cos_enclosure(&rat_int(3), 64);
        // cos(3) ≈ -0.9899924966
        assert!(lo < rat(-98999249, 100000000));
        assert!(hi > rat(-98999250, 100000000));
    }

    #[test]
    fn right_isosceles_angles_hit_thresholds_exactly() {
        let a = p(1, 0);
        let b = p(0, 1);
        let c = p(-1, 0);
        // Angle at a between rays to b and c is exactly 45 degrees.
        assert_eq!(
            compare_angle_to_degrees(&b, &a, &c, &rat_int(45)).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            compare_angle_to_degrees(&b, &a, &c, &rat(449, 10)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare_angle_to_degrees(&b, &a, &c, &rat(451, 10)).unwrap(),
            Ordering::Less
        );
        // Angle at b is exactly 90 degrees.
        assert_eq!(
            compare_angle_to_degrees(&a, &b, &c, &rat_int(90)).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            compare_angle_to_degrees(&a, &b, &c, &rat(889, 10)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn min_angle_range_and_tie_reporting() {
        let pts = vec![p(1, 0), p(0, 1), p(-1, 0)];
        let tri = Triangle2::new(0, 1, 2);
        assert!(min_angle_in_range(&tri, &pts, &rat_int(40), &rat_int(95)).unwrap());
        assert!(!min_angle_in_range(&tri, &pts, &rat_int(50), &rat_int(95)).unwrap());
        // 45 is an exact angle of this triangle: must surface as a tie.
        let err = min_angle_in_range(&tri, &pts, &rat_int(45), &rat_int(95)).unwrap_err();
        assert!(matches!(err, GeomError::ThresholdCoincidence { .. }));
    }

    #[test]
    fn near_equilateral_min_angle() {
        // (0,0), (1,0), (1/2, 7/8): all angles within (59, 61) degrees.
        let pts = vec![p(0, 0), p(1, 0), Point2::new(rat(1, 2), rat(7, 8))];
        let tri = Triangle2::new(0, 1, 2);
        assert!(min_angle_in_range(&tri, &pts, &rat_int(40), &rat_int(90)).unwrap());
        assert!(min_angle_in_range(&tri, &pts, &rat_int(59), &rat_int(61)).unwrap());
        assert!(!min_angle_in_range(&tri, &pts, &rat_int(61), &rat_int(70)).unwrap());
    }

    #[test]
    fn degenerate_triangle_rejected() {
        let pts = vec![p(0, 0), p(1, 1), p(2, 2)];
        let tri = Triangle2::new(0, 1, 2);
        assert!(min_angle_in_range(&tri, &pts, &rat_int(10), &rat_int(50)).is_err());
    }

    #[test]
    fn escalation_separates_close_thresholds() {
        // Angle ≈ 60.2551° (cos = 4/√65); thresholds straddling it tightly.
        let a = p(1, 0);
        let v = p(0, 0);
        let b = Point2::new(rat(1, 2), rat(7, 8));
        assert_eq!(
            compare_angle_to_degrees(&a, &v, &b, &rat(602551, 10000)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            compare_angle_to_degrees(&a, &v, &b, &rat(602552, 10000)).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn diameter_examples() {
        let pts = vec![p(1, 0), p(-1, 0), p(0, 1), p(0, -1), p(0, 0)];
        let tri = Triangle2::new(0, 1, 2);
        assert!(diameter_in_range(&tri, &pts, &rat(1, 10)));
        let tri = Triangle2::new(0, 2, 3);
        assert!(diameter_in_range(&tri, &pts, &rat(1, 10)));
        // Legs 1, hypotenuse √2: diameter² = 2 ≤ (2 − 1/10)².
        let tri = Triangle2::new(4, 0, 2);
        assert!(!diameter_in_range(&tri, &pts, &rat(1, 10)));
        // Vacuous lower bound once δ ≥ 2.
        assert!(diameter_in_range(&tri, &pts, &rat_int(3)));
    }
}
