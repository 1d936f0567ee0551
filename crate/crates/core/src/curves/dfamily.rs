//! The coset family D(n): explicit central charge and coupling in the level.

use num_traits::Zero;

use super::{CurveError, Family, TruncationCurve};
use crate::exactalg::expr::parse_poly;
use crate::exactalg::scalar::int;
use crate::exactalg::{ExactScalar, MPoly, RatFunc};

/// The three auxiliary polynomials of λₙ(k), as expressions in `k` and `n`.
/// Kept as text so a single copy serves every n and can be audited against
/// the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transcription {
    pub p: String,
    pub q: String,
    pub r: String,
}

impl Default for Transcription {
    fn default() -> Self {
        Transcription {
            p: "-112 + 188*k - 62*k^2 - 26*k^3 + 12*k^4 + 744*n - 1336*k*n + 857*k^2*n \
                - 252*k^3*n + 36*k^4*n - 1720*n^2 + 2534*k*n^2 - 1198*k^2*n^2 \
                + 188*k^3*n^2 + 1632*n^3 - 1544*k*n^3 + 304*k^2*n^3 - 544*n^4 + 152*k*n^4"
                .into(),
            q: "20 - 19*k + 6*k^2 - 42*n + 28*k*n + 28*n^2".into(),
            r: "44 - 66*k + 22*k^2 - 132*n + 73*k*n + 10*k^2*n + 88*n^2 + 10*k*n^2".into(),
        }
    }
}

struct Parsed {
    p: MPoly,
    q: MPoly,
    r: MPoly,
}

impl Transcription {
    fn parse(&self) -> Result<Parsed, CurveError> {
        let vars = ["k", "n"];
        Ok(Parsed {
            p: parse_poly(&self.p, &vars)?,
            q: parse_poly(&self.q, &vars)?,
            r: parse_poly(&self.r, &vars)?,
        })
    }
}

fn check_n(n: i64) -> Result<(), CurveError> {
    if n < 1 {
        return Err(CurveError::Domain(format!("D(n) needs n >= 1, got {n}")));
    }
    Ok(())
}

/// Critical levels −2n+2 and −2n+1.
pub fn critical_levels(n: i64) -> [ExactScalar; 2] {
    [int(-2 * n + 2), int(-2 * n + 1)]
}

pub fn d_curve(n: i64) -> Result<TruncationCurve, CurveError> {
    d_curve_with(n, &Transcription::default())
}

/// D(n) built from an explicit transcription of the auxiliary polynomials.
pub fn d_curve_with(n: i64, tr: &Transcription) -> Result<TruncationCurve, CurveError> {
    check_n(n)?;
    let nn = [("n", int(n))];
    let c = RatFunc::parse(
        "k*n*(2*k + 2*n - 3)/((k + 2*n - 2)*(k + 2*n - 1))",
        "k",
        &nn,
    )?;
    let parsed = tr.parse()?;
    let spec = |p: &MPoly| {
        p.substitute(1, &int(n))
            .to_upoly(0)
            .expect("univariate in k")
    };
    let (p, q, r) = (spec(&parsed.p), spec(&parsed.q), spec(&parsed.r));
    let front = RatFunc::parse(
        "(k + 2*n - 2)*(k + 2*n - 1)/(7*(k - 2)*(k + n - 1)*(2*n - 1))",
        "k",
        &nn,
    )?;
    let tail = RatFunc::new("k", p, &q * &r)?;
    let lambda = front.mul(&tail);
    Ok(TruncationCurve::new(
        &format!("D({n})"),
        Family::D(n as u32),
        vec![("n".into(), n)],
        c,
        lambda,
        &critical_levels(n),
    ))
}

/// λₙ(k) by direct substitution into the unsimplified formula, with no
/// polynomial normalization. `None` where the formula's denominator
/// vanishes.
pub fn lambda_direct(n: i64, k: &ExactScalar) -> Result<Option<ExactScalar>, CurveError> {
    lambda_direct_with(n, k, &Transcription::default())
}

pub fn lambda_direct_with(
    n: i64,
    k: &ExactScalar,
    tr: &Transcription,
) -> Result<Option<ExactScalar>, CurveError> {
    check_n(n)?;
    let parsed = tr.parse()?;
    let nq = int(n);
    let at = [k.clone(), nq.clone()];
    let (p, q, r) = (parsed.p.eval(&at), parsed.q.eval(&at), parsed.r.eval(&at));
    let two = int(2);
    let num = (k + &two * &nq - &two) * (k + &two * &nq - int(1)) * p;
    let den = int(7) * (k - &two) * (k + &nq - int(1)) * (&two * &nq - int(1)) * q * r;
    if den.is_zero() {
        return Ok(None);
    }
    Ok(Some(num / den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::ExclusionReason;
    use crate::exactalg::scalar::ratio;

    #[test]
    fn n1_normal_form() {
        let d1 = d_curve(1).unwrap();
        assert_eq!(d1.c, RatFunc::parse("(2*k - 1)/(k + 1)", "k", &[]).unwrap());
        let expect = RatFunc::parse(
            "3*(k + 1)*(16*k^3 - 30*k^2 - 33*k - 2)/(7*(k - 2)*(6*k^2 + 9*k + 6)*(32*k + 17))",
            "k",
            &[],
        )
        .unwrap();
        assert_eq!(d1.lambda, expect);
        let ex: Vec<_> = d1
            .excluded
            .iter()
            .map(|e| (e.value.clone(), e.reason))
            .collect();
        assert_eq!(
            ex,
            vec![
                (int(-1), ExclusionReason::Critical),
                (ratio(-17, 32), ExclusionReason::PoleOfLambda),
                (int(0), ExclusionReason::Critical),
                (int(2), ExclusionReason::PoleOfLambda),
            ]
        );
        // 6k^2 + 9k + 6 has no real roots
        assert_eq!(d1.irrational_pole_factor.degree(), Some(2));
    }

    #[test]
    fn n2_central_charge() {
        let d2 = d_curve(2).unwrap();
        assert_eq!(
            d2.c,
            RatFunc::parse("2*k*(2*k + 1)/((k + 2)*(k + 3))", "k", &[]).unwrap()
        );
    }

    #[test]
    fn excluded_sets_small_n() {
        let vals = |n| -> Vec<ExactScalar> {
            d_curve(n)
                .unwrap()
                .excluded
                .into_iter()
                .map(|e| e.value)
                .collect()
        };
        assert_eq!(vals(2), vec![int(-3), int(-2), int(-1), int(2)]);
        assert_eq!(vals(3), vec![int(-5), int(-4), int(-2), int(2)]);
        assert_eq!(vals(4), vec![int(-7), int(-6), int(-3), int(2)]);
    }

    #[test]
    fn two_code_paths_agree() {
        assert_eq!(lambda_direct(1, &int(4)).unwrap(), Some(ratio(205, 9338)));
        for n in 1..=4 {
            let d = d_curve(n).unwrap();
            for k in [ratio(7, 3), int(11), ratio(-9, 5)] {
                assert_eq!(lambda_direct(n, &k).unwrap(), d.lambda.eval(&k));
            }
        }
        assert!(d_curve(0).is_err());
    }
}
