//! Exact rational planar geometry.
//!
//! Everything here decides signs with arbitrary-precision rational
//! arithmetic; there is no floating point on any certified path.

mod angle;
mod ext;
mod gear;

pub use angle::{
    angle_strictly_within, compare_angle_to_degrees, diameter_in_range, min_angle_in_range,
};
pub use ext::{ext2_orientation, Ext1, Ext1Point, Ext2, ExtPoint2};
pub use gear::{
    count_boundary_intersections, gear_boundary, point_in_gear, GearBoundaryElement, GearRegion,
    SegmentEnd,
};

use crate::error::GeomError;
use crate::rational::Rational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// A point with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point2 {
    #[serde(with = "crate::rational::serde_rational")]
    pub x: Rational,
    #[serde(with = "crate::rational::serde_rational")]
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn origin() -> Self {
        Point2::new(Rational::zero(), Rational::zero())
    }

    pub fn norm_sq(&self) -> Rational {
        &self.x * &self.x + &self.y * &self.y
    }

    pub fn dot(&self, other: &Point2) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn sub(&self, other: &Point2) -> Point2 {
        Point2::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn dist_sq(&self, other: &Point2) -> Rational {
        self.sub(other).norm_sq()
    }

    /// Counterclockwise quarter turn about the origin.
    pub fn perp(&self) -> Point2 {
        Point2::new(-self.y.clone(), self.x.clone())
    }

    pub fn scale(&self, s: &Rational) -> Point2 {
        Point2::new(&self.x * s, &self.y * s)
    }
}

/// A point on the unit circle, realized exactly through the tan-half-angle
/// parametrization `t -> ((1-t^2)/(1+t^2), 2t/(1+t^2))`.
///
/// The map is injective and covers every circle point except `(-1, 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitCirclePoint {
    #[serde(with = "crate::rational::serde_rational")]
    pub t: Rational,
    pub point: Point2,
}

/// Exact rational point on the unit circle for parameter `t`.
pub fn unit_circle_point(t: Rational) -> UnitCirclePoint {
    let t_sq = &t * &t;
    let den = &t_sq + Rational::one();
    let x = (Rational::one() - &t_sq) / &den;
    let y = (Rational::from_integer(2.into()) * &t) / &den;
    UnitCirclePoint {
        t,
        point: Point2::new(x, y),
    }
}

/// A circle stored by center and squared radius, so membership is a
/// polynomial identity in the coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point2,
    #[serde(with = "crate::rational::serde_rational")]
    pub radius_sq: Rational,
}

impl Circle {
    /// Exact on-circle test.
    pub fn contains_on_boundary(&self, p: &Point2) -> bool {
        p.dist_sq(&self.center) == self.radius_sq
    }

    /// Sign of `|p - center|^2 - radius_sq`: negative strictly inside.
    pub fn power_sign(&self, p: &Point2) -> i8 {
        rational_sign(&(p.dist_sq(&self.center) - &self.radius_sq))
    }
}

/// A triangle as vertex indices into some point set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangle2 {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Triangle2 {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        Triangle2 { a, b, c }
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.a, self.b, self.c]
    }
}

pub(crate) fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Orientation of the triple `(p, q, r)`: `+1` counterclockwise, `-1`
/// clockwise, `0` collinear.
pub fn orientation(p: &Point2, q: &Point2, r: &Point2) -> i8 {
    let u = q.sub(p);
    let v = r.sub(p);
    rational_sign(&(&u.x * &v.y - &u.y * &v.x))
}

/// InCircle sign of `s` against the circle through `p, q, r`.
///
/// With `p, q, r` counterclockwise the result is `+1` when `s` lies strictly
/// inside the circle, `-1` strictly outside, `0` on it. A clockwise triple is
/// reoriented first, so the convention is independent of input order up to the
/// collinear error case.
pub fn cocircular_sign(p: &Point2, q: &Point2, r: &Point2, s: &Point2) -> Result<i8, GeomError> {
    let orient = orientation(p, q, r);
    if orient == 0 {
        return Err(GeomError::DegenerateInput(
            "cocircular_sign requires a non-collinear base triple",
        ));
    }
    let raw = incircle_det(p, q, r, s);
    Ok(rational_sign(&raw) * orient)
}

fn incircle_det(p: &Point2, q: &Point2, r: &Point2, s: &Point2) -> Rational {
    let rows: Vec<[Rational; 3]> = [p, q, r]
        .iter()
        .map(|v| {
            let d = v.sub(s);
            let n = d.norm_sq();
            [d.x, d.y, n]
        })
        .collect();
    let det2 = |a: &Rational, b: &Rational, c: &Rational, d: &Rational| a * d - b * c;
    &rows[0][0] * det2(&rows[1][1], &rows[1][2], &rows[2][1], &rows[2][2])
        - &rows[0][1] * det2(&rows[1][0], &rows[1][2], &rows[2][0], &rows[2][2])
        + &rows[0][2] * det2(&rows[1][0], &rows[1][1], &rows[2][0], &rows[2][1])
}

/// Circumscribed circle of a non-collinear triple.
pub fn circle_through(p: &Point2, q: &Point2, r: &Point2) -> Result<Circle, GeomError> {
    if orientation(p, q, r) == 0 {
        return Err(GeomError::DegenerateInput(
            "circle_through requires a non-collinear triple",
        ));
    }
    // Perpendicular-bisector system:
    //   2(q - p) . c = |q|^2 - |p|^2
    //   2(r - p) . c = |r|^2 - |p|^2
    let two = Rational::from_integer(2.into());
    let a1 = &two * (&q.x - &p.x);
    let b1 = &two * (&q.y - &p.y);
    let c1 = q.norm_sq() - p.norm_sq();
    let a2 = &two * (&r.x - &p.x);
    let b2 = &two * (&r.y - &p.y);
    let c2 = r.norm_sq() - p.norm_sq();
    let det = &a1 * &b2 - &a2 * &b1;
    let cx = (&c1 * &b2 - &c2 * &b1) / &det;
    let cy = (&a1 * &c2 - &a2 * &c1) / &det;
    let center = Point2::new(cx, cy);
    let radius_sq = p.dist_sq(&center);
    Ok(Circle { center, radius_sq })
}

/// Counterclockwise convex hull (indices into `points`), collinear interior
/// points excluded, duplicates collapsed. Result starts at the lexicographic
/// minimum.
pub fn convex_hull(points: &[Point2]) -> Vec<usize> {
    assert!(!points.is_empty(), "convex_hull needs at least one point");
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| {
        points[i]
            .x
            .cmp(&points[j].x)
            .then_with(|| points[i].y.cmp(&points[j].y))
    });
    idx.dedup_by(|&mut i, &mut j| points[i] == points[j]);
    if idx.len() <= 2 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(idx.len() * 2);
    // Lower hull, then upper hull (monotone chain).
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(idx.iter())
        } else {
            Box::new(idx.iter().rev())
        };
        for &i in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if orientation(&points[a], &points[b], &points[i]) <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(i);
        }
        hull.pop(); // endpoint repeats as the next pass's start
    }
    hull
}

/// Closed point-in-triangle test over a point set.
pub fn point_in_triangle(p: &Point2, tri: &Triangle2, points: &[Point2]) -> bool {
    let a = &points[tri.a];
    let b = &points[tri.b];
    let c = &points[tri.c];
    let s1 = orientation(a, b, p);
    let s2 = orientation(b, c, p);
    let s3 = orientation(c, a, p);
    (s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)
}

/// Total counterclockwise order of directions from the origin, starting at
/// the positive x-axis. Both points must be nonzero.
pub fn ccw_angle_cmp(p: &Point2, q: &Point2) -> Ordering {
    let half = |v: &Point2| -> u8 {
        // 0: upper half plane including the positive x-axis; 1: rest.
        if v.y.is_positive() || (v.y.is_zero() && v.x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(p).cmp(&half(q)).then_with(|| {
        let cross = &p.x * &q.y - &p.y * &q.x;
        match rational_sign(&cross) {
            1 => Ordering::Less,
            -1 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    })
}
