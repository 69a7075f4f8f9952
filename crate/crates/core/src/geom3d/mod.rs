//! Exact 3D primitives: the paraboloid lifting map, moment-curve sites,
//! Voronoi facet witnesses, and closed-set simplex intersection.

mod lp;
mod tri_intersect;
mod witness;

pub use tri_intersect::tri_tri_intersect;
pub use witness::{facet_witness_valid, moment_sites, voronoi_facet_witness, FacetWitness};

use crate::error::GeomError;
use crate::geom2d::{rational_sign, Circle, Point2};
use crate::rational::{rat_int, serde_rational, Rational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Point (or displacement) in Q^3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point3 {
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub y: Rational,
    #[serde(with = "serde_rational")]
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Point3 { x, y, z }
    }

    pub fn origin() -> Self {
        Point3::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn sub(&self, other: &Point3) -> Point3 {
        Point3::new(&self.x - &other.x, &self.y - &other.y, &self.z - &other.z)
    }

    pub fn add(&self, other: &Point3) -> Point3 {
        Point3::new(&self.x + &other.x, &self.y + &other.y, &self.z + &other.z)
    }

    pub fn dot(&self, other: &Point3) -> Rational {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, other: &Point3) -> Point3 {
        Point3::new(
            &self.y * &other.z - &self.z * &other.y,
            &self.z * &other.x - &self.x * &other.z,
            &self.x * &other.y - &self.y * &other.x,
        )
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn dist_sq(&self, other: &Point3) -> Rational {
        self.sub(other).norm_sq()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn coord(&self, axis: usize) -> &Rational {
        match axis {
            0 => &self.x,
            1 => &self.y,
            _ => &self.z,
        }
    }
}

/// Plane `{ax + by + cz = d}`, scaled so the first nonzero normal coefficient
/// is 1. The scaling makes equal point sets compare equal as values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plane {
    #[serde(with = "serde_rational")]
    pub a: Rational,
    #[serde(with = "serde_rational")]
    pub b: Rational,
    #[serde(with = "serde_rational")]
    pub c: Rational,
    #[serde(with = "serde_rational")]
    pub d: Rational,
}

impl Plane {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Plane, GeomError> {
        let lead = [&a, &b, &c].iter().find(|v| !v.is_zero()).cloned().cloned();
        let lead = lead.ok_or(GeomError::DegenerateInput("plane normal is zero"))?;
        Ok(Plane {
            a: a / &lead,
            b: b / &lead,
            c: c / &lead,
            d: d / &lead,
        })
    }

    /// `a x + b y + c z - d`; zero exactly on the plane.
    pub fn eval(&self, p: &Point3) -> Rational {
        &self.a * &p.x + &self.b * &p.y + &self.c * &p.z - &self.d
    }

    pub fn contains(&self, p: &Point3) -> bool {
        self.eval(p).is_zero()
    }
}

/// Degeneracy level of a [`Triangle3`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TriangleKind {
    Point,
    Segment,
    Triangle,
}

/// Possibly degenerate triangle: the convex hull of one to three points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangle3 {
    vertices: Vec<Point3>,
    kind: TriangleKind,
}

impl Triangle3 {
    /// Convex hull of up to three points. Duplicates collapse and a collinear
    /// triple keeps only its two extremes, so `kind` always matches the
    /// stored vertices.
    pub fn hull_of(points: &[Point3]) -> Result<Triangle3, GeomError> {
        if points.is_empty() || points.len() > 3 {
            return Err(GeomError::DegenerateInput("simplex takes 1 to 3 points"));
        }
        let mut vs: Vec<Point3> = Vec::with_capacity(points.len());
        for p in points {
            if !vs.contains(p) {
                vs.push(p.clone());
            }
        }
        let kind = match vs.len() {
            1 => TriangleKind::Point,
            2 => TriangleKind::Segment,
            _ => {
                let u = vs[1].sub(&vs[0]);
                let v = vs[2].sub(&vs[0]);
                if u.cross(&v).is_zero() {
                    // Keep the farthest pair; the remaining point lies between.
                    let d01 = vs[0].dist_sq(&vs[1]);
                    let d02 = vs[0].dist_sq(&vs[2]);
                    let d12 = vs[1].dist_sq(&vs[2]);
                    if d01 >= d02 && d01 >= d12 {
                        vs.truncate(2);
                    } else if d02 >= d12 {
                        vs.remove(1);
                    } else {
                        vs.remove(0);
                    }
                    TriangleKind::Segment
                } else {
                    TriangleKind::Triangle
                }
            }
        };
        Ok(Triangle3 { vertices: vs, kind })
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Point3] {
        &self.vertices
    }

    /// Re-checks the kind/vertex invariant, e.g. after deserializing.
    pub fn validate(&self) -> Result<(), GeomError> {
        let rebuilt = Triangle3::hull_of(&self.vertices)?;
        if rebuilt.kind == self.kind && rebuilt.vertices.len() == self.vertices.len() {
            Ok(())
        } else {
            Err(GeomError::DegenerateInput(
                "simplex kind mismatches vertices",
            ))
        }
    }
}

/// Paraboloid lift `(x, y) -> (x, y, x^2 + y^2)`.
pub fn lift(p: &Point2) -> Point3 {
    let z = &p.x * &p.x + &p.y * &p.y;
    Point3::new(p.x.clone(), p.y.clone(), z)
}

/// Plane containing the lift of every point of the circle:
/// `z = 2 center . (x, y) - |center|^2 + radius_sq`.
pub fn plane_of_lifted_circle(c: &Circle) -> Plane {
    let two = rat_int(2);
    let a = -(&two * &c.center.x);
    let b = -(&two * &c.center.y);
    let d = &c.radius_sq - c.center.norm_sq();
    Plane::new(a, b, Rational::one(), d).expect("z coefficient is 1")
}

/// Point `(t, t^2, t^3)` on the positive branch of the moment curve.
pub fn moment_point(t: &Rational) -> Result<Point3, GeomError> {
    if !t.is_positive() {
        return Err(GeomError::NonpositiveParameter);
    }
    let t2 = t * t;
    let t3 = &t2 * t;
    Ok(Point3::new(t.clone(), t2, t3))
}

/// Sign of `det [q - p; r - p; s - p]`: `0` iff the four points are coplanar.
pub fn orient3d(p: &Point3, q: &Point3, r: &Point3, s: &Point3) -> i8 {
    let u = q.sub(p);
    let v = r.sub(p);
    let w = s.sub(p);
    rational_sign(&u.dot(&v.cross(&w)))
}
