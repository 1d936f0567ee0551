//! Elimination: subresultant resultants and multivariate gcd.
//!
//! A polynomial in the elimination variable is handled as its dense
//! coefficient vector, each coefficient an [`MPoly`] over the same variable
//! list with exponent zero in that variable.

use num_traits::One;

use super::mpoly::MPoly;
use super::scalar::ExactScalar;
use super::upoly::UPoly;
use super::AlgebraError;

type Dense = Vec<MPoly>;

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn deg(p: &Dense) -> usize {
    p.len().saturating_sub(1)
}

fn lc(p: &Dense) -> &MPoly {
    p.last().expect("nonzero")
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b`.
fn prem(a: &Dense, b: &Dense) -> Dense {
    let db = deg(b);
    let mut r = a.clone();
    if r.len() <= db {
        return r;
    }
    let lb = lc(b);
    let mut steps = r.len() - db;
    while r.len() > db && !r.is_empty() {
        let dr = deg(&r);
        let lr = lc(&r).clone();
        // r <- lb·r - lr·x^(dr-db)·b
        for c in r.iter_mut() {
            *c = &*c * lb;
        }
        for (j, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[dr - db + j] = &r[dr - db + j] - &t;
        }
        r = trim(r);
        steps -= 1;
    }
    // account for skipped degrees so the multiplier is exactly lc(b)^(da-db+1)
    if steps > 0 {
        let m = lb.pow(steps as u32);
        for c in r.iter_mut() {
            *c = &*c * &m;
        }
    }
    r
}

fn exact_div_all(p: &Dense, d: &MPoly) -> Dense {
    p.iter()
        .map(|c| c.exact_div(d).expect("subresultant division is exact"))
        .collect()
}

/// Sylvester resultant of `p` and `q` with respect to `var`, computed by the
/// subresultant polynomial remainder sequence.
pub fn resultant(p: &MPoly, q: &MPoly, var: &str) -> Result<MPoly, AlgebraError> {
    assert_eq!(p.vars(), q.vars(), "variable lists differ");
    let idx = p
        .var_index(var)
        .ok_or_else(|| AlgebraError::NoEliminationVariable(var.to_string()))?;
    if p.is_zero() || q.is_zero() {
        return Err(AlgebraError::IdenticallyZero);
    }
    let (dp, dq) = (p.degree_in(idx), q.degree_in(idx));
    if dp == 0 && dq == 0 {
        return Err(AlgebraError::NoEliminationVariable(var.to_string()));
    }
    if dq == 0 {
        return Ok(q.pow(dp));
    }
    if dp == 0 {
        return Ok(p.pow(dq));
    }
    let vars = p.vars().to_vec();
    let one = MPoly::one(&vars);
    let mut a: Dense = p.coeffs_in(idx);
    let mut b: Dense = q.coeffs_in(idx);
    let mut sign = ExactScalar::one();
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -sign;
        }
    }
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let delta = deg(&a) - deg(&b);
        if deg(&a) % 2 == 1 && deg(&b) % 2 == 1 {
            sign = -sign;
        }
        let r = trim(prem(&a, &b));
        if r.is_empty() {
            return Ok(MPoly::zero(&vars));
        }
        a = b;
        let divisor = &g * &h.pow(delta as u32);
        b = exact_div_all(&r, &divisor);
        g = lc(&a).clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta as u32)
                .exact_div(&h.pow(delta as u32 - 1))
                .expect("exact"),
        };
        if deg(&b) == 0 {
            break;
        }
    }
    let da = deg(&a) as u32;
    let last = lc(&b).pow(da);
    let res = if da == 0 {
        one
    } else {
        last.exact_div(&h.pow(da - 1)).expect("exact")
    };
    Ok(res.scale(&sign))
}

/// Univariate resultant convenience wrapper.
pub fn resultant_upoly(p: &UPoly, q: &UPoly) -> Result<ExactScalar, AlgebraError> {
    let vars = ["x"];
    let r = resultant(
        &MPoly::from_upoly(&vars, 0, p),
        &MPoly::from_upoly(&vars, 0, q),
        "x",
    )?;
    Ok(r.constant_value()
        .expect("univariate resultant is constant"))
}

/// Content with respect to `vars[idx]`: gcd of the coefficients.
pub fn content_in(p: &MPoly, idx: usize) -> MPoly {
    p.coeffs_in(idx)
        .iter()
        .fold(MPoly::zero(p.vars()), |acc, c| gcd(&acc, c))
}

/// Greatest common divisor over ℚ, normalized to integer content one and a
/// positive lex-leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    assert_eq!(a.vars(), b.vars());
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let mut occ: Vec<usize> = a.occurring_vars();
    for i in b.occurring_vars() {
        if !occ.contains(&i) {
            occ.push(i);
        }
    }
    occ.sort_unstable();
    let vars = a.vars().to_vec();
    match occ.as_slice() {
        [] => return MPoly::one(&vars),
        [i] => {
            let g = a.to_upoly(*i).unwrap().gcd(&b.to_upoly(*i).unwrap());
            return MPoly::from_upoly(&vars, *i, &g).primitive();
        }
        _ => {}
    }
    let main = *occ.last().unwrap();
    let ca = content_in(a, main);
    let cb = content_in(b, main);
    let c = gcd(&ca, &cb);
    let mut pa = a.exact_div(&ca).expect("content divides");
    let mut pb = b.exact_div(&cb).expect("content divides");
    if pa.degree_in(main) < pb.degree_in(main) {
        std::mem::swap(&mut pa, &mut pb);
    }
    let mut x: Dense = pa.coeffs_in(main);
    let mut y: Dense = pb.coeffs_in(main);
    // primitive PRS
    let g = loop {
        if y.is_empty() {
            break MPoly::from_coeffs_in(&vars, main, &x);
        }
        if deg(&y) == 0 {
            break MPoly::one(&vars);
        }
        let r = trim(prem(&x, &y));
        x = y;
        if r.is_empty() {
            y = Vec::new();
            continue;
        }
        let rp = MPoly::from_coeffs_in(&vars, main, &r);
        let rc = content_in(&rp, main);
        y = rp.exact_div(&rc).expect("content divides").coeffs_in(main);
    };
    let gp = if g.is_constant() {
        g
    } else {
        let gc = content_in(&g, main);
        g.exact_div(&gc).expect("content divides")
    };
    (&c * &gp).primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::int;

    fn vars() -> [&'static str; 2] {
        ["x", "y"]
    }

    fn p(s: &str) -> MPoly {
        crate::exactalg::expr::parse_poly(s, &vars()).unwrap()
    }

    #[test]
    fn substitution_cases() {
        // resultant(x - y, y - 1, y) = x - 1 up to sign
        let r = resultant(&p("x - y"), &p("y - 1"), "y").unwrap();
        assert!(r == p("x - 1") || r == p("1 - x"));
        let r = resultant(&p("y^2 - x"), &p("y - 2"), "y").unwrap();
        assert!(r == p("4 - x") || r == p("x - 4"));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            resultant(&p("x + 1"), &p("x^2"), "y"),
            Err(AlgebraError::NoEliminationVariable(_))
        ));
    }

    #[test]
    fn constant_in_variable() {
        // Res(a, b) with b free of y is b^deg a
        let r = resultant(&p("y^3 + x"), &p("x + 2"), "y").unwrap();
        assert_eq!(r, p("x + 2").pow(3));
    }

    #[test]
    fn univariate_matches_roots() {
        // Res(f, g) = lc(f)^deg g · ∏ g(roots of f)
        let f = UPoly::from_roots(&[int(1), int(2), int(-3)]).scale(&int(2));
        let g = UPoly::from_ints(&[5, 0, 1]);
        let expect = int(4) * g.eval(&int(1)) * g.eval(&int(2)) * g.eval(&int(-3));
        assert_eq!(resultant_upoly(&f, &g).unwrap(), expect);
        assert_eq!(resultant_upoly(&g, &f).unwrap(), expect);
    }

    #[test]
    fn multivariate_gcd() {
        let common = p("x*y + 3*x - y^2");
        let a = &common * &p("x - y + 1");
        let b = &common * &p("x^2 + y");
        let g = gcd(&a, &b);
        assert_eq!(g, common.primitive());
        assert_eq!(gcd(&p("x + 1"), &p("y + 1")), MPoly::one(&vars()));
        // content-only common factor
        let a = &p("x + 2") * &p("y^2 + 1");
        let b = &p("x + 2") * &p("y - 5");
        assert_eq!(gcd(&a, &b), p("x + 2"));
    }
}
