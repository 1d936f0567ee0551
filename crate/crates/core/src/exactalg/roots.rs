//! Exact real root isolation and rational root extraction.
//!
//! Rational roots are found without divisor enumeration: each isolating
//! interval of the square-free part is shrunk below `1/L²` (`L` the leading
//! coefficient of its primitive integer form) and the simplest rational in
//! it is tested. Any rational root has denominator dividing `L`, and two
//! such rationals are at least `1/L²` apart, so that candidate is the only
//! possible one.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::scalar::{simplest_between, ExactScalar};
use super::upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    /// Distinct rational roots, ascending, with multiplicity.
    pub rational_roots: Vec<(ExactScalar, u32)>,
    /// The input divided by its rational linear factors, made monic. Has no
    /// rational roots. Constant when every root is rational.
    pub residual: UPoly,
    /// Disjoint open isolating intervals for the real roots of `residual`,
    /// ascending. Endpoints are never roots.
    pub intervals: Vec<(ExactScalar, ExactScalar)>,
}

fn positive_normalize(p: &UPoly) -> UPoly {
    if p.is_zero() {
        return p.clone();
    }
    let (_, k) = p.primitive_integer();
    p.scale(&k.abs().recip())
}

/// Sturm sequence of a square-free polynomial, each member scaled by a
/// positive constant to keep coefficients small.
pub fn sturm_sequence(p: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![positive_normalize(p)];
    let d = positive_normalize(&p.derivative());
    if d.is_zero() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1]);
        if r.is_zero() {
            return seq;
        }
        seq.push(positive_normalize(&-&r));
    }
}

fn sign_changes(seq: &[UPoly], x: &ExactScalar) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in seq {
        let v = s.eval(x);
        let sg = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if sg != 0 {
            if last != 0 && sg != last {
                changes += 1;
            }
            last = sg;
        }
    }
    changes
}

/// Number of distinct real roots in `(a, b]`.
pub fn sturm_count(seq: &[UPoly], a: &ExactScalar, b: &ExactScalar) -> usize {
    sign_changes(seq, a) - sign_changes(seq, b)
}

/// Strict bound on the absolute value of every root.
pub fn cauchy_bound(p: &UPoly) -> ExactScalar {
    let lc = p.lc().abs();
    let m = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(ExactScalar::zero(), |a, b| if b > a { b } else { a });
    (m + ExactScalar::one()).ceil()
}

/// Isolating intervals `(a, b]` for the distinct real roots of a
/// square-free `p`, each containing exactly one root.
fn isolate(p: &UPoly, seq: &[UPoly]) -> Vec<(ExactScalar, ExactScalar)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let b = cauchy_bound(p);
    let mut stack = vec![(-b.clone(), b.clone(), sturm_count(seq, &-b.clone(), &b))];
    let mut out = Vec::new();
    let two = ExactScalar::from_integer(BigInt::from(2));
    while let Some((lo, hi, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                let left = sturm_count(seq, &lo, &mid);
                stack.push((mid.clone(), hi, n - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort();
    out
}

/// Shrinks an interval `(lo, hi]` holding exactly one root of square-free
/// `p` until `hi - lo < width` or the root is hit exactly.
pub fn refine(
    seq: &[UPoly],
    mut lo: ExactScalar,
    mut hi: ExactScalar,
    width: &ExactScalar,
) -> Result<ExactScalar, (ExactScalar, ExactScalar)> {
    let two = ExactScalar::from_integer(BigInt::from(2));
    let p = &seq[0];
    loop {
        if p.eval(&hi).is_zero() {
            return Ok(hi);
        }
        if &(&hi - &lo) < width {
            return Err((lo, hi));
        }
        let mid = (&lo + &hi) / &two;
        if sturm_count(seq, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

/// Rational roots with multiplicities, plus isolating intervals of the
/// remaining real roots.
///
/// # Panics
/// On the zero polynomial.
pub fn find_roots(p: &UPoly) -> RootReport {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let sf = p.square_free_part();
    let seq = sturm_sequence(&sf);
    let (ints, _) = sf.primitive_integer();
    let l = ExactScalar::from_integer(ints.last().expect("nonzero").abs());
    let width = (&l * &l).recip();
    let mut rational = Vec::new();
    for (lo, hi) in isolate(&sf, &seq) {
        let cand = match refine(&seq, lo, hi, &width) {
            Ok(r) => r,
            Err((lo, hi)) => simplest_between(&lo, Some(&hi)),
        };
        if sf.eval(&cand).is_zero() {
            rational.push(cand);
        }
    }
    let mut residual = p.monic();
    let mut with_mult = Vec::new();
    for r in rational {
        let lin = UPoly::linear_root(&r);
        let mut m = 0;
        while let Some(q) = residual.exact_div(&lin) {
            residual = q;
            m += 1;
        }
        with_mult.push((r, m));
    }
    let rsf = residual.square_free_part();
    let rseq = sturm_sequence(&rsf);
    // residual has no rational roots, so the right endpoints are not roots
    // and the half-open intervals are open
    let intervals = isolate(&rsf, &rseq);
    RootReport {
        rational_roots: with_mult,
        residual,
        intervals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::{int, ratio};

    #[test]
    fn mixed_roots() {
        // (x - 1)^2 (3x + 2)(x^2 - 2)(x^2 + 1)
        let p = &(&UPoly::from_roots(&[int(1), int(1)]) * &UPoly::from_ints(&[2, 3]))
            * &(&UPoly::from_ints(&[-2, 0, 1]) * &UPoly::from_ints(&[1, 0, 1]));
        let r = find_roots(&p);
        assert_eq!(r.rational_roots, vec![(ratio(-2, 3), 1), (int(1), 2)]);
        assert_eq!(r.residual, UPoly::from_ints(&[-2, 0, -1, 0, 1]));
        assert_eq!(r.intervals.len(), 2);
        for (lo, hi) in &r.intervals {
            assert!(lo < hi);
            assert!(!r.residual.eval(lo).is_zero());
            assert!(!r.residual.eval(hi).is_zero());
        }
    }

    #[test]
    fn close_rational_roots() {
        let roots = [ratio(100, 101), ratio(99, 100), ratio(-7, 1000), int(0)];
        let p = UPoly::from_roots(&roots).scale(&int(17));
        let r = find_roots(&p);
        let mut expect: Vec<_> = roots.iter().cloned().map(|x| (x, 1)).collect();
        expect.sort();
        assert_eq!(r.rational_roots, expect);
        assert!(r.residual.is_constant());
    }

    #[test]
    fn no_real_roots() {
        let r = find_roots(&UPoly::from_ints(&[22, 20, 7]));
        assert!(r.rational_roots.is_empty());
        assert!(r.intervals.is_empty());
        assert_eq!(r.residual.degree(), Some(2));
    }

    #[test]
    fn constant() {
        let r = find_roots(&UPoly::constant(int(5)));
        assert!(r.rational_roots.is_empty());
        assert!(r.residual.is_constant());
    }
}
