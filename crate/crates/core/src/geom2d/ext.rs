//! Exact arithmetic in the quadratic extensions Q(√d) and Q(√d1, √d2).
//!
//! Gear tangency points have coordinates of the form a + b√d with rational
//! a, b and d = 1 - r². Tests against a second gear mix two radicands, so
//! products land in the compositum with basis {1, √d1, √d2, √(d1·d2)}.
//!
//! Signs are decided exactly by repeated squaring: for a + b√d with a, b of
//! opposite sign, sign(a + b√d) = sign(a) · sign(a² - b²d). The argument
//! only uses that √d denotes the nonnegative real root, so it stays valid
//! even when d is a rational square or the two radicands are dependent.

use super::rational_sign;
use crate::rational::Rational;
use num_traits::{Signed, Zero};

/// An element a + b√d of Q(√d), with d ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ext1 {
    pub a: Rational,
    pub b: Rational,
    pub d: Rational,
}

impl Ext1 {
    pub fn new(a: Rational, b: Rational, d: Rational) -> Self {
        assert!(!d.is_negative(), "radicand must be nonnegative");
        Ext1 { a, b, d }
    }

    pub fn from_rational(a: Rational, d: Rational) -> Self {
        Ext1::new(a, Rational::zero(), d)
    }

    fn check_compatible(&self, other: &Ext1) {
        assert_eq!(self.d, other.d, "mixed radicands in Ext1 arithmetic");
    }

    pub fn add(&self, other: &Ext1) -> Ext1 {
        self.check_compatible(other);
        Ext1::new(&self.a + &other.a, &self.b + &other.b, self.d.clone())
    }

    pub fn sub(&self, other: &Ext1) -> Ext1 {
        self.check_compatible(other);
        Ext1::new(&self.a - &other.a, &self.b - &other.b, self.d.clone())
    }

    pub fn mul(&self, other: &Ext1) -> Ext1 {
        self.check_compatible(other);
        Ext1::new(
            &self.a * &other.a + &self.b * &other.b * &self.d,
            &self.a * &other.b + &self.b * &other.a,
            self.d.clone(),
        )
    }

    pub fn sq(&self) -> Ext1 {
        self.mul(self)
    }

    pub fn scale(&self, s: &Rational) -> Ext1 {
        Ext1::new(&self.a * s, &self.b * s, self.d.clone())
    }

    pub fn neg(&self) -> Ext1 {
        Ext1::new(-self.a.clone(), -self.b.clone(), self.d.clone())
    }

    /// Exact sign of the real number a + b√d.
    pub fn sign(&self) -> i8 {
        let sa = rational_sign(&self.a);
        let sb = if self.d.is_zero() {
            0
        } else {
            rational_sign(&self.b)
        };
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        let discr = &self.a * &self.a - &self.b * &self.b * &self.d;
        sa * rational_sign(&discr)
    }

    pub fn is_zero_value(&self) -> bool {
        self.sign() == 0
    }

    /// Float approximation, for display paths only.
    pub fn to_f64(&self) -> f64 {
        let a = crate::rational::rational_to_f64(&self.a);
        let b = crate::rational::rational_to_f64(&self.b);
        let d = crate::rational::rational_to_f64(&self.d);
        a + b * d.sqrt()
    }
}

/// A planar point with coordinates in a common Q(√d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ext1Point {
    pub x: Ext1,
    pub y: Ext1,
}

impl Ext1Point {
    pub fn new(x: Ext1, y: Ext1) -> Self {
        assert_eq!(x.d, y.d, "coordinates must share a radicand");
        Ext1Point { x, y }
    }

    pub fn norm_sq(&self) -> Ext1 {
        self.x.sq().add(&self.y.sq())
    }

    pub fn sub(&self, other: &Ext1Point) -> Ext1Point {
        Ext1Point::new(self.x.sub(&other.x), self.y.sub(&other.y))
    }

    pub fn dot(&self, other: &Ext1Point) -> Ext1 {
        self.x.mul(&other.x).add(&self.y.mul(&other.y))
    }
}

/// An element a + b√d1 + c√d2 + e√(d1·d2) of the compositum Q(√d1, √d2),
/// with d1, d2 ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ext2 {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub e: Rational,
    pub d1: Rational,
    pub d2: Rational,
}

impl Ext2 {
    pub fn new(
        a: Rational,
        b: Rational,
        c: Rational,
        e: Rational,
        d1: Rational,
        d2: Rational,
    ) -> Self {
        assert!(
            !d1.is_negative() && !d2.is_negative(),
            "radicands must be nonnegative"
        );
        Ext2 { a, b, c, e, d1, d2 }
    }

    pub fn from_rational(a: Rational, d1: Rational, d2: Rational) -> Self {
        let z = Rational::zero;
        Ext2::new(a, z(), z(), z(), d1, d2)
    }

    /// Embed an element of Q(√d1) (the first radicand).
    pub fn from_first(x: &Ext1, d2: Rational) -> Self {
        let z = Rational::zero;
        Ext2::new(x.a.clone(), x.b.clone(), z(), z(), x.d.clone(), d2)
    }

    /// Embed an element of Q(√d2) (the second radicand).
    pub fn from_second(x: &Ext1, d1: Rational) -> Self {
        let z = Rational::zero;
        Ext2::new(x.a.clone(), z(), x.b.clone(), z(), d1, x.d.clone())
    }

    fn check_compatible(&self, other: &Ext2) {
        assert_eq!(self.d1, other.d1, "mixed radicands in Ext2 arithmetic");
        assert_eq!(self.d2, other.d2, "mixed radicands in Ext2 arithmetic");
    }

    pub fn add(&self, other: &Ext2) -> Ext2 {
        self.check_compatible(other);
        Ext2::new(
            &self.a + &other.a,
            &self.b + &other.b,
            &self.c + &other.c,
            &self.e + &other.e,
            self.d1.clone(),
            self.d2.clone(),
        )
    }

    pub fn sub(&self, other: &Ext2) -> Ext2 {
        self.check_compatible(other);
        Ext2::new(
            &self.a - &other.a,
            &self.b - &other.b,
            &self.c - &other.c,
            &self.e - &other.e,
            self.d1.clone(),
            self.d2.clone(),
        )
    }

    pub fn mul(&self, other: &Ext2) -> Ext2 {
        self.check_compatible(other);
        let (a1, b1, c1, e1) = (&self.a, &self.b, &self.c, &self.e);
        let (a2, b2, c2, e2) = (&other.a, &other.b, &other.c, &other.e);
        let (d1, d2) = (&self.d1, &self.d2);
        let a = a1 * a2 + b1 * b2 * d1 + c1 * c2 * d2 + e1 * e2 * d1 * d2;
        let b = a1 * b2 + b1 * a2 + (c1 * e2 + e1 * c2) * d2;
        let c = a1 * c2 + c1 * a2 + (b1 * e2 + e1 * b2) * d1;
        let e = a1 * e2 + e1 * a2 + b1 * c2 + c1 * b2;
        Ext2::new(a, b, c, e, d1.clone(), d2.clone())
    }

    /// Exact sign, by writing the value as A + B√d2 with A, B ∈ Q(√d1).
    pub fn sign(&self) -> i8 {
        let part_a = Ext1::new(self.a.clone(), self.b.clone(), self.d1.clone());
        let part_b = Ext1::new(self.c.clone(), self.e.clone(), self.d1.clone());
        let sa = part_a.sign();
        let sb = if self.d2.is_zero() { 0 } else { part_b.sign() };
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        let discr = part_a.sq().sub(&part_b.sq().scale(&self.d2));
        sa * discr.sign()
    }
}

/// A planar point with coordinates in a common compositum.
#[derive(Debug, Clone)]
pub struct ExtPoint2 {
    pub x: Ext2,
    pub y: Ext2,
}

impl ExtPoint2 {
    pub fn new(x: Ext2, y: Ext2) -> Self {
        ExtPoint2 { x, y }
    }

    pub fn from_rational_point(p: &super::Point2, d1: Rational, d2: Rational) -> Self {
        ExtPoint2::new(
            Ext2::from_rational(p.x.clone(), d1.clone(), d2.clone()),
            Ext2::from_rational(p.y.clone(), d1, d2),
        )
    }

    pub fn from_first_point(p: &Ext1Point, d2: Rational) -> Self {
        ExtPoint2::new(
            Ext2::from_first(&p.x, d2.clone()),
            Ext2::from_first(&p.y, d2),
        )
    }

    pub fn from_second_point(p: &Ext1Point, d1: Rational) -> Self {
        ExtPoint2::new(
            Ext2::from_second(&p.x, d1.clone()),
            Ext2::from_second(&p.y, d1),
        )
    }

    pub fn sub(&self, other: &ExtPoint2) -> ExtPoint2 {
        ExtPoint2::new(self.x.sub(&other.x), self.y.sub(&other.y))
    }

    pub fn dot(&self, other: &ExtPoint2) -> Ext2 {
        self.x.mul(&other.x).add(&self.y.mul(&other.y))
    }
}

/// Orientation sign of the triple (p, q, r) with compositum coordinates.
pub fn ext2_orientation(p: &ExtPoint2, q: &ExtPoint2, r: &ExtPoint2) -> i8 {
    let u = q.sub(p);
    let v = r.sub(p);
    u.x.mul(&v.y).sub(&u.y.mul(&v.x)).sign()
}
