//! Generators and checkers shared by the property suites and the acceptance
//! runner. Checkers return `Err` with a readable witness instead of
//! panicking, so the runner can count failures.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::Rng;
use wtrunc::curves::{eval_curve, implicitize, TruncationCurve};
use wtrunc::exactalg::roots::{cauchy_bound, find_roots, sturm_count, sturm_sequence};
use wtrunc::exactalg::scalar::{int, ratio};
use wtrunc::exactalg::{interpolate_ratfunc, resultant, ExactScalar, MPoly, RatFunc, UPoly};
use wtrunc::intersect::{intersect_curves, Preimage};

pub const XY: [&str; 2] = ["x", "y"];

/// Polynomial in x, y from a coefficient grid `c[i][j]` of x^i y^j.
pub fn mpoly_xy(c: &[Vec<i64>]) -> MPoly {
    MPoly::from_terms(
        &XY,
        c.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, &v)| (vec![i as u32, j as u32], int(v)))
        }),
    )
}

pub fn upoly(c: &[i64]) -> UPoly {
    UPoly::from_ints(c)
}

/// One resultant/gcd instance: two polynomials in x, y and the y-values to
/// specialize at.
pub struct ElimCase {
    pub p: MPoly,
    pub q: MPoly,
    pub ys: Vec<i64>,
}

fn grid(rng: &mut impl Rng, dx: usize, dy: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..=dx)
        .map(|_| (0..=dy).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

fn random_grid(
    rng: &mut impl Rng,
    dx: std::ops::RangeInclusive<usize>,
    dy: std::ops::RangeInclusive<usize>,
    bound: i64,
) -> MPoly {
    let (dx, dy) = (rng.gen_range(dx), rng.gen_range(dy));
    mpoly_xy(&grid(rng, dx, dy, bound))
}

/// Random instance of one of three kinds: unrelated, two lines crossing
/// over an integer y, or a shared factor.
pub fn random_elim_case(rng: &mut impl Rng) -> ElimCase {
    let ys: Vec<i64> = (-4..=4).collect();
    let a = random_grid(rng, 0..=2, 0..=2, 4);
    let b = random_grid(rng, 0..=2, 0..=2, 4);
    let a = if a.is_zero() { MPoly::one(&XY) } else { a };
    let b = if b.is_zero() { MPoly::one(&XY) } else { b };
    match rng.gen_range(0..3) {
        0 => {
            let p = random_grid(rng, 1..=3, 0..=2, 6);
            let q = random_grid(rng, 1..=3, 0..=2, 6);
            let p = if p.degree_in(0) == 0 {
                &p + &MPoly::var(&XY, "x")
            } else {
                p
            };
            let q = if q.degree_in(0) == 0 {
                &q + &MPoly::var(&XY, "x")
            } else {
                q
            };
            ElimCase { p, q, ys }
        }
        1 => {
            // x = y + u and x = -y + v meet at y = (v - u)/2
            let y0 = rng.gen_range(-4..=4);
            let u = rng.gen_range(-5..=5);
            let v = 2 * y0 + u;
            let l1 = mpoly_xy(&[vec![-u, -1], vec![1]]);
            let l2 = mpoly_xy(&[vec![-v, 1], vec![1]]);
            ElimCase {
                p: &l1 * &a,
                q: &l2 * &b,
                ys,
            }
        }
        _ => {
            let h = mpoly_xy(&[vec![rng.gen_range(-5..=5), rng.gen_range(-3..=3)], vec![1]]);
            ElimCase {
                p: &h * &a,
                q: &h * &b,
                ys,
            }
        }
    }
}

fn lc_x(p: &MPoly) -> MPoly {
    p.coeffs_in(0).last().cloned().expect("nonzero")
}

/// res(p, q; x)(y0) = 0 exactly when p(x, y0) and q(x, y0) share a root,
/// at every y0 where neither leading coefficient in x vanishes.
pub fn check_resultant_gcd(case: &ElimCase) -> Result<(), String> {
    let (p, q) = (&case.p, &case.q);
    if p.degree_in(0) == 0 && q.degree_in(0) == 0 {
        return Ok(());
    }
    let r = resultant(p, q, "x").map_err(|e| e.to_string())?;
    for &y in &case.ys {
        let y = int(y);
        let (lp, lq) = (lc_x(p).substitute(1, &y), lc_x(q).substitute(1, &y));
        if lp.is_zero() || lq.is_zero() {
            continue;
        }
        let ps = p.substitute(1, &y).to_upoly(0).expect("in x");
        let qs = q.substitute(1, &y).to_upoly(0).expect("in x");
        let common = !ps.gcd(&qs).is_constant();
        let vanishes = r.substitute(1, &y).is_zero();
        if common != vanishes {
            return Err(format!(
                "p = {p}, q = {q}, y = {y}: resultant vanishes {vanishes}, common root {common}"
            ));
        }
    }
    Ok(())
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(1);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

/// Rational roots by the rational root theorem, for small integer
/// polynomials. Independent of the isolation-based search.
pub fn rational_roots_by_divisors(p: &UPoly) -> Vec<ExactScalar> {
    let (ints, _) = p.primitive_integer();
    let mut ints = ints;
    let mut out = Vec::new();
    while ints.first().is_some_and(|c| c.is_zero()) {
        ints.remove(0);
        if !out.contains(&int(0)) {
            out.push(int(0));
        }
    }
    let (a0, an) = (ints[0].clone(), ints.last().unwrap().clone());
    for num in divisors(&a0) {
        for den in divisors(&an) {
            for s in [1, -1] {
                let r = ExactScalar::new(&num * s, den.clone());
                if !out.contains(&r) && p.eval(&r).is_zero() {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    out
}

pub fn check_find_roots(p: &UPoly) -> Result<(), String> {
    if p.is_zero() || p.is_constant() {
        return Ok(());
    }
    let rep = find_roots(p);
    let mut rebuilt = rep.residual.clone();
    for (r, m) in &rep.rational_roots {
        if !p.eval(r).is_zero() {
            return Err(format!("{p}: reported root {r} is not a root"));
        }
        rebuilt = &rebuilt * &UPoly::linear_root(r).pow(*m);
    }
    if rebuilt.monic() != p.monic() {
        return Err(format!("{p}: roots times residual give {rebuilt}"));
    }
    let found: Vec<ExactScalar> = rep.rational_roots.iter().map(|(r, _)| r.clone()).collect();
    let expect = rational_roots_by_divisors(p);
    if found != expect {
        return Err(format!(
            "{p}: rational roots {found:?}, divisor search {expect:?}"
        ));
    }
    if !rep.residual.is_constant() {
        let sf = rep.residual.square_free_part();
        let seq = sturm_sequence(&sf);
        let b = cauchy_bound(&sf);
        let total = sturm_count(&seq, &-&b, &b);
        if total != rep.intervals.len() {
            return Err(format!(
                "{p}: {} intervals, Sturm count {total}",
                rep.intervals.len()
            ));
        }
        for (i, (lo, hi)) in rep.intervals.iter().enumerate() {
            if sturm_count(&seq, lo, hi) != 1 {
                return Err(format!("{p}: interval {i} does not isolate one root"));
            }
            if i > 0 && rep.intervals[i - 1].1 > *lo {
                return Err(format!("{p}: intervals overlap"));
            }
        }
    } else if !rep.intervals.is_empty() {
        return Err(format!("{p}: intervals for a constant residual"));
    }
    Ok(())
}

/// A product of rational linear factors and a random cofactor.
pub fn random_root_poly(rng: &mut impl Rng) -> UPoly {
    let mut p = upoly(
        &(0..=rng.gen_range(0..=3))
            .map(|_| rng.gen_range(-6..=6))
            .collect::<Vec<_>>(),
    );
    if p.is_zero() {
        p = UPoly::one();
    }
    for _ in 0..rng.gen_range(0..=3) {
        let r = ratio(rng.gen_range(-6..=6), rng.gen_range(1..=4));
        p = &p * &UPoly::linear_root(&r).pow(rng.gen_range(1..=2));
    }
    p
}

/// A random rational function with the given degree bounds.
pub fn random_ratfunc(rng: &mut impl Rng, num_deg: usize, den_deg: usize) -> RatFunc {
    loop {
        let num = upoly(
            &(0..=num_deg)
                .map(|_| rng.gen_range(-9..=9))
                .collect::<Vec<_>>(),
        );
        let den = upoly(
            &(0..=den_deg)
                .map(|_| rng.gen_range(-9..=9))
                .collect::<Vec<_>>(),
        );
        if den.is_zero() {
            continue;
        }
        if let Ok(f) = RatFunc::new("t", num, den) {
            return f;
        }
    }
}

/// Samples `f` at `extra` more points than the bounds need and checks the
/// interpolant is `f` again.
pub fn check_interpolation(
    f: &RatFunc,
    num_deg: usize,
    den_deg: usize,
    extra: usize,
) -> Result<(), String> {
    let needed = num_deg + den_deg + 2 + extra;
    let mut points = Vec::new();
    let mut x = -7i64;
    while points.len() < needed {
        let xs = ratio(x, 2);
        if let Some(y) = f.eval(&xs) {
            points.push((xs, y));
        }
        x += 1;
    }
    let g = interpolate_ratfunc("t", &points, num_deg, den_deg).map_err(|e| format!("{f}: {e}"))?;
    if &g != f {
        return Err(format!("interpolated {g}, expected {f}"));
    }
    Ok(())
}

/// (a/b + c/d)·b·d = a·d + c·b as integers.
pub fn check_scalar_identity(a: i64, b: i64, c: i64, d: i64) -> Result<(), String> {
    let lhs = (ratio(a, b) + ratio(c, d)) * int(b) * int(d);
    let rhs = BigInt::from(a) * d + BigInt::from(c) * b;
    if !lhs.is_integer() || lhs.to_integer() != rhs {
        return Err(format!(
            "({a}/{b} + {c}/{d})·{b}·{d} = {lhs}, expected {rhs}"
        ));
    }
    let r = ratio(a, b);
    if r.numer().gcd(r.denom()) != BigInt::from(1) && !r.is_zero() || !r.denom().is_positive() {
        return Err(format!("{a}/{b} stored as {r}"));
    }
    Ok(())
}

/// The implicit equation vanishes at the curve point over each level.
pub fn check_implicit_vanishes(
    curve: &TruncationCurve,
    f: &MPoly,
    levels: &[ExactScalar],
) -> Result<usize, String> {
    let mut used = 0;
    for k in levels {
        let Ok((c, l)) = eval_curve(curve, k) else {
            continue;
        };
        let v = f.eval(&[c.clone(), l.clone()]);
        if !v.is_zero() {
            return Err(format!("{} at k = {k}: F({c}, {l}) = {v}", curve.name));
        }
        used += 1;
    }
    Ok(used)
}

pub fn implicit(curve: &TruncationCurve) -> MPoly {
    implicitize(curve).expect("implicitizes")
}

/// Random non-excluded rational levels with small height.
pub fn random_levels(
    rng: &mut impl Rng,
    curve: &TruncationCurve,
    count: usize,
) -> Vec<ExactScalar> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let k = ratio(rng.gen_range(-200..=200), rng.gen_range(1..=30));
        if curve.exclusion(&k).is_none() {
            out.push(k);
        }
    }
    out
}

/// Swapping the curves swaps the preimages and keeps the point set.
pub fn check_symmetry(a: &TruncationCurve, b: &TruncationCurve) -> Result<(), String> {
    let ab = intersect_curves(a, b).map_err(|e| e.to_string())?;
    let ba = intersect_curves(b, a).map_err(|e| e.to_string())?;
    let key = |p: &Preimage, q: &Preimage, c: &Option<ExactScalar>, l: &Option<ExactScalar>| {
        (p.clone(), q.clone(), c.clone(), l.clone())
    };
    let mut x: Vec<_> = ab
        .points
        .iter()
        .filter(|p| p.preimage_a.as_rational().is_some() && p.preimage_b.as_rational().is_some())
        .map(|p| key(&p.preimage_a, &p.preimage_b, &p.c, &p.lambda))
        .collect();
    let mut y: Vec<_> = ba
        .points
        .iter()
        .filter(|p| p.preimage_a.as_rational().is_some() && p.preimage_b.as_rational().is_some())
        .map(|p| key(&p.preimage_b, &p.preimage_a, &p.c, &p.lambda))
        .collect();
    x.sort();
    y.sort();
    if x != y {
        return Err(format!(
            "{} x {}: {} points one way, {} the other",
            a.name,
            b.name,
            x.len(),
            y.len()
        ));
    }
    let cs = |pts: &[wtrunc::intersect::IntersectionPoint]| {
        let mut v: Vec<_> = pts
            .iter()
            .map(|p| (p.c.clone(), p.lambda.clone()))
            .collect();
        v.sort();
        v.dedup();
        v
    };
    if cs(&ab.points) != cs(&ba.points) {
        return Err(format!("{} x {}: coordinate sets differ", a.name, b.name));
    }
    Ok(())
}

/// Certified rational points evaluate to the same (c, λ) on both curves.
pub fn check_certified(a: &TruncationCurve, b: &TruncationCurve) -> Result<usize, String> {
    let x = intersect_curves(a, b).map_err(|e| e.to_string())?;
    let mut n = 0;
    for p in x.points.iter().filter(|p| p.certified) {
        let (Some(s), Some(t)) = (p.preimage_a.as_rational(), p.preimage_b.as_rational()) else {
            continue;
        };
        let pa = eval_curve(a, s).map_err(|e| e.to_string())?;
        let pb = eval_curve(b, t).map_err(|e| e.to_string())?;
        let want = (p.c.clone().unwrap(), p.lambda.clone().unwrap());
        if pa != want || pb != want {
            return Err(format!(
                "{} x {} at ({s}, {t}): {pa:?} vs {pb:?}",
                a.name, b.name
            ));
        }
        n += 1;
    }
    Ok(n)
}
