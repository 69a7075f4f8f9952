//! Exact rational scalars and their canonical text form.
//!
//! All certified geometry in this crate runs on [`Rational`] (arbitrary
//! precision, always reduced, positive denominator). Values cross process
//! boundaries as `"p/q"` strings; parsing is strict so that an instance file
//! can never smuggle in an unreduced or ill-formed value.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rational = num_rational::BigRational;

/// Shorthand for small literal rationals.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from_integer(BigInt::from(num))
}

/// Canonical text form: `"p"` when the denominator is 1, else `"p/q"`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Strict parser for the canonical form. Rejects zero denominators,
/// non-reduced fractions, negative denominators, and `-0` style numerators.
pub fn parse_rational(s: &str) -> Result<Rational, RationalParseError> {
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = parse_int(num_s)?;
    let den = parse_int(den_s)?;
    if den.sign() != Sign::Plus {
        return Err(RationalParseError::NonPositiveDenominator(s.to_string()));
    }
    if !den.is_one() && !num.gcd(&den).is_one() {
        return Err(RationalParseError::NotReduced(s.to_string()));
    }
    Ok(Rational::new_raw(num, den))
}

fn parse_int(s: &str) -> Result<BigInt, RationalParseError> {
    if s.is_empty() || s == "-" || s.starts_with('+') || s == "-0" {
        return Err(RationalParseError::Malformed(s.to_string()));
    }
    // Leading zeros would break canonical round-trips.
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.len() > 1 && digits.starts_with('0') {
        return Err(RationalParseError::Malformed(s.to_string()));
    }
    BigInt::from_str(s).map_err(|_| RationalParseError::Malformed(s.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("malformed integer in rational: {0:?}")]
    Malformed(String),
    #[error("rational {0:?} does not have a positive denominator")]
    NonPositiveDenominator(String),
    #[error("rational {0:?} is not reduced")]
    NotReduced(String),
}

/// Exact value of an `f64` as a rational. `None` for non-finite inputs.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Nearest `f64`, for display paths only; never feeds a certified predicate.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// via continued-fraction convergents and semiconvergents.
pub fn approximate_with_denominator(x: &Rational, max_den: &BigInt) -> Rational {
    assert!(max_den >= &BigInt::one());
    if x.denom() <= max_den {
        return x.clone();
    }
    // Convergents p/q of the continued fraction of x.
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p_cur, mut q_cur) = (x.numer().div_floor(x.denom()), BigInt::one());
    let mut frac = x - Rational::from_integer(p_cur.clone());
    while !frac.is_zero() {
        let inv = frac.recip();
        let a = inv.numer().div_floor(inv.denom());
        frac = inv - Rational::from_integer(a.clone());
        let p_next = &a * &p_cur + &p_prev;
        let q_next = &a * &q_cur + &q_prev;
        if q_next > *max_den {
            // Largest semiconvergent still within the bound.
            let t = (max_den - &q_prev).div_floor(&q_cur);
            let p_semi = &t * &p_cur + &p_prev;
            let q_semi = &t * &q_cur + &q_prev;
            let cand_a = Rational::new(p_cur, q_cur);
            if q_semi.is_zero() {
                return cand_a;
            }
            let cand_b = Rational::new(p_semi, q_semi);
            return if (x - &cand_b).abs() < (x - &cand_a).abs() {
                cand_b
            } else {
                cand_a
            };
        }
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);
    }
    Rational::new(p_cur, q_cur)
}

/// Round down to a dyadic rational with denominator `2^bits`.
pub fn dyadic_floor(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = x * Rational::from_integer(scale.clone());
    let floored = scaled.numer().div_floor(scaled.denom());
    Rational::new(floored, scale)
}

/// Round up to a dyadic rational with denominator `2^bits`.
pub fn dyadic_ceil(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = x * Rational::from_integer(scale.clone());
    let ceiled = scaled.numer().div_ceil(scaled.denom());
    Rational::new(ceiled, scale)
}

/// serde adapter: a `Rational` as its canonical `"p/q"` string.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        format_rational(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(serde::de::Error::custom)
    }
}

/// serde adapter for `Vec<Rational>`.
pub mod serde_rational_vec {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
