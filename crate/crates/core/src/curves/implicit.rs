//! Implicit equation of a parametrized curve.

use num_traits::Zero;

use super::{eval_curve, CurveError, TruncationCurve};
use crate::exactalg::elim::{content_in, gcd};
use crate::exactalg::scalar::int;
use crate::exactalg::{resultant, ExactScalar, MPoly};

const SAMPLES: usize = 20;

/// Variables of every implicit equation, in this order.
pub const IMPLICIT_VARS: [&str; 2] = ["c", "lambda"];

/// `den(t)·X − num(t)` over `[t, c, lambda]` with `X` at position `slot`.
fn graph_equation(f: &crate::exactalg::RatFunc, slot: usize) -> MPoly {
    let vars = ["t", "c", "lambda"];
    let num = MPoly::from_upoly(&vars, 0, f.num());
    let den = MPoly::from_upoly(&vars, 0, f.den());
    let x = MPoly::var(&vars, vars[slot]);
    &(&den * &x) - &num
}

/// Distinct sample points, taken at small non-excluded integers and
/// reciprocals.
fn sample_points(curve: &TruncationCurve) -> Vec<(ExactScalar, ExactScalar)> {
    let mut out = Vec::new();
    let mut i: i64 = 1;
    while out.len() < SAMPLES {
        for t in [int(i), int(-i), int(1) / int(i + 1), int(-1) / int(i + 1)] {
            if let Ok(p) = eval_curve(curve, &t) {
                if !out.contains(&p) {
                    out.push(p);
                }
            }
        }
        i += 1;
    }
    out.truncate(SAMPLES);
    out
}

/// Keeps, discards or rejects a candidate factor by its behaviour on the
/// sampled points.
fn vanishes_on_samples(
    factor: &MPoly,
    samples: &[(ExactScalar, ExactScalar)],
) -> Result<bool, CurveError> {
    let hits = samples
        .iter()
        .filter(|(c, l)| factor.eval(&[c.clone(), l.clone()]).is_zero())
        .count();
    match hits {
        0 => Ok(false),
        h if h == samples.len() => Ok(true),
        _ => Err(CurveError::MixedFactor(factor.to_string())),
    }
}

/// Square-free defining polynomial of the curve in `(c, lambda)`, integer
/// primitive with positive lex-leading coefficient.
pub fn implicitize(curve: &TruncationCurve) -> Result<MPoly, CurveError> {
    if curve.c.num().is_constant() && curve.c.den().is_constant()
        || curve.lambda.num().is_constant() && curve.lambda.den().is_constant()
    {
        return Err(CurveError::Constant);
    }
    let e1 = graph_equation(&curve.c, 1);
    let e2 = graph_equation(&curve.lambda, 2);
    let r = resultant(&e1, &e2, "t")?.with_vars(&IMPLICIT_VARS);
    let samples = sample_points(curve);
    let mut kept = MPoly::one(&IMPLICIT_VARS);
    // split off the pieces depending on one coordinate only
    let cont_l = content_in(&r, 1);
    let rest = r.exact_div(&cont_l).expect("content divides");
    let cont_c = content_in(&rest, 0);
    let core = rest.exact_div(&cont_c).expect("content divides");
    for piece in [cont_l, cont_c] {
        if !piece.is_constant() && vanishes_on_samples(&piece, &samples)? {
            kept = &kept * &piece;
        }
    }
    // square-free part of the mixed factor
    let d = core.derivative(1);
    let core = if d.is_zero() {
        core
    } else {
        core.exact_div(&gcd(&core, &d)).expect("gcd divides")
    };
    if !core.is_constant() {
        if !vanishes_on_samples(&core, &samples)? {
            return Err(CurveError::MixedFactor(core.to_string()));
        }
        kept = &kept * &core;
    }
    Ok(kept.primitive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{d_curve, Family};
    use crate::exactalg::expr::parse_poly;
    use crate::exactalg::RatFunc;

    fn toy(c: &str, l: &str) -> TruncationCurve {
        TruncationCurve::new(
            "toy",
            Family::External { tag: "toy".into() },
            vec![],
            RatFunc::parse(c, "t", &[]).unwrap(),
            RatFunc::parse(l, "t", &[]).unwrap(),
            &[],
        )
    }

    #[test]
    fn toy_curves() {
        let p = implicitize(&toy("t", "t")).unwrap();
        assert_eq!(
            p,
            parse_poly("c - lambda", &IMPLICIT_VARS)
                .unwrap()
                .primitive()
        );
        let p = implicitize(&toy("t^2", "t^3")).unwrap();
        assert_eq!(
            p,
            parse_poly("lambda^2 - c^3", &IMPLICIT_VARS)
                .unwrap()
                .primitive()
        );
        assert_eq!(implicitize(&toy("3", "t")), Err(CurveError::Constant));
    }

    #[test]
    fn d1_vanishes_on_curve() {
        let d1 = d_curve(1).unwrap();
        let p = implicitize(&d1).unwrap();
        let (c, l) = eval_curve(&d1, &int(4)).unwrap();
        assert!(p.eval(&[c, l]).is_zero());
        for i in 5..55 {
            if let Ok((c, l)) = eval_curve(&d1, &(int(i) / int(3))) {
                assert!(p.eval(&[c, l]).is_zero());
            }
        }
        assert!(!p.eval(&[int(1), int(1)]).is_zero());
    }
}
