//! Rational interpolation through exact points.

use super::linalg::nullspace;
use super::ratfunc::RatFunc;
use super::scalar::ExactScalar;
use super::upoly::UPoly;
use super::AlgebraError;

/// Finds `f = p/q` with `deg p ≤ num_deg`, `deg q ≤ den_deg` and
/// `f(x) = y` for every point.
///
/// The denominator degree is raised from zero, so the result is the
/// interpolant with the smallest denominator degree that attains every
/// point. With more than `num_deg + den_deg` points any two solutions of
/// the linearized system agree as rational functions.
pub fn interpolate_ratfunc(
    var: &str,
    points: &[(ExactScalar, ExactScalar)],
    num_deg: usize,
    den_deg: usize,
) -> Result<RatFunc, AlgebraError> {
    let needed = num_deg + den_deg + 2;
    if points.len() < needed {
        return Err(AlgebraError::InsufficientPoints {
            needed,
            got: points.len(),
        });
    }
    for (i, (x, y)) in points.iter().enumerate() {
        if points[..i].iter().any(|(x2, y2)| x2 == x && y2 != y) {
            return Err(AlgebraError::InconsistentData);
        }
    }
    let mut any_solution = false;
    for d in 0..=den_deg {
        let ncols = num_deg + 1 + d + 1;
        let rows: Vec<Vec<ExactScalar>> = points
            .iter()
            .map(|(x, y)| {
                let mut row = Vec::with_capacity(ncols);
                let mut xp = ExactScalar::from_integer(1.into());
                for _ in 0..=num_deg {
                    row.push(xp.clone());
                    xp *= x;
                }
                let mut xp = ExactScalar::from_integer(1.into());
                for _ in 0..=d {
                    row.push(-(y * &xp));
                    xp *= x;
                }
                row
            })
            .collect();
        let ns = nullspace(&rows, ncols);
        let Some(v) = ns.first() else { continue };
        any_solution = true;
        let num = UPoly::from_coeffs(v[..=num_deg].to_vec());
        let den = UPoly::from_coeffs(v[num_deg + 1..].to_vec());
        if den.is_zero() {
            continue;
        }
        let f = RatFunc::new(var, num, den)?;
        if points.iter().all(|(x, y)| f.eval(x).as_ref() == Some(y)) {
            return Ok(f);
        }
    }
    if any_solution {
        Err(AlgebraError::DegreeBoundsTooSmall)
    } else {
        Err(AlgebraError::InconsistentData)
    }
}
