//! Exact rational scalars.
//!
//! [`ExactScalar`] is an arbitrary-precision rational that is always kept in
//! lowest terms with a positive denominator. Reports carry scalars as
//! decimal-free `"p/q"` strings (integers print without the `/1`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

pub type ExactScalar = BigRational;

pub fn int(v: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> ExactScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn format_scalar(x: &ExactScalar) -> String {
    x.to_string()
}

/// Parses `"p"`, `"-p"`, `"p/q"`; rejects decimals and zero denominators.
pub fn parse_scalar(s: &str) -> Result<ExactScalar, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("not an exact rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn lcm_of_denominators<'a>(xs: impl IntoIterator<Item = &'a ExactScalar>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn gcd_of_numerators<'a>(xs: impl IntoIterator<Item = &'a ExactScalar>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x.numer()))
}

/// The rational with the smallest denominator strictly inside `(lo, hi)`.
///
/// `hi = None` stands for `+∞`. Requires `lo < hi`.
pub fn simplest_between(lo: &ExactScalar, hi: Option<&ExactScalar>) -> ExactScalar {
    if let Some(h) = hi {
        debug_assert!(lo < h);
        if !h.is_positive() {
            // mirror into the positive half line
            return -simplest_between(&-h, Some(&-lo));
        }
    }
    if lo.is_negative() {
        return ExactScalar::zero();
    }
    let fl = lo.floor();
    let next = &fl + ExactScalar::one();
    match hi {
        None => return next,
        Some(h) if &next < h => return next,
        _ => {}
    }
    let h = hi.expect("bounded case");
    // (lo, hi) lies inside [fl, fl+1]; recurse on reciprocals of the fractional parts
    let lo_frac = lo - &fl;
    let hi_frac = h - &fl;
    let inner_lo = hi_frac.recip();
    let inner = if lo_frac.is_zero() {
        simplest_between(&inner_lo, None)
    } else {
        simplest_between(&inner_lo, Some(&lo_frac.recip()))
    };
    fl + inner.recip()
}

pub fn is_integer(x: &ExactScalar) -> bool {
    x.denom().is_one()
}

pub fn abs(x: &ExactScalar) -> ExactScalar {
    x.abs()
}
