//! Reconstructing a curve from sample points.

use super::{CurveError, Family, TruncationCurve};
use crate::exactalg::{interpolate_ratfunc, ExactScalar};

/// Interpolates `c` and `lambda` as rational functions of the sample
/// parameter, with degree bounds `(num, den)` for each coordinate.
pub fn fit_curve(
    name: &str,
    param: &str,
    points: &[(ExactScalar, ExactScalar, ExactScalar)],
    c_bounds: (usize, usize),
    lambda_bounds: (usize, usize),
) -> Result<TruncationCurve, CurveError> {
    let cs: Vec<_> = points
        .iter()
        .map(|(t, c, _)| (t.clone(), c.clone()))
        .collect();
    let ls: Vec<_> = points
        .iter()
        .map(|(t, _, l)| (t.clone(), l.clone()))
        .collect();
    let c = interpolate_ratfunc(param, &cs, c_bounds.0, c_bounds.1)?;
    let lambda = interpolate_ratfunc(param, &ls, lambda_bounds.0, lambda_bounds.1)?;
    Ok(TruncationCurve::new(
        name,
        Family::External {
            tag: "fitted".into(),
        },
        vec![],
        c,
        lambda,
        &[],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{d_curve, eval_curve};
    use crate::exactalg::scalar::int;
    use crate::exactalg::AlgebraError;

    #[test]
    fn round_trip_d1() {
        let d1 = d_curve(1).unwrap();
        let pts: Vec<_> = (3..20)
            .filter_map(|i| {
                let t = int(i);
                eval_curve(&d1, &t).ok().map(|(c, l)| (t, c, l))
            })
            .collect();
        let f = fit_curve("fit", "k", &pts, (2, 2), (5, 5)).unwrap();
        assert_eq!(f.c, d1.c);
        assert_eq!(f.lambda, d1.lambda);
    }

    #[test]
    fn too_few_points() {
        let pts = vec![(int(1), int(1), int(1)); 3];
        assert!(matches!(
            fit_curve("fit", "k", &pts, (2, 2), (5, 5)),
            Err(CurveError::Algebra(AlgebraError::InsufficientPoints { .. }))
        ));
    }
}
