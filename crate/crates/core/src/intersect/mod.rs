//! Intersections of truncation curves and the classification tables.

mod filter;
mod report;
mod tables;
mod verify;

use std::fmt;

use num_traits::Zero;

use crate::curves::{CurveError, TruncationCurve};
use crate::exactalg::roots::find_roots;
use crate::exactalg::{format_scalar, resultant, AlgebraError, ExactScalar, MPoly, RatFunc, UPoly};

pub use filter::{
    classify_self, filter, is_degenerate_c, status_of, CoincidenceRecord, SelfClassification,
    Status, DEGENERATE_C,
};
pub use report::{
    CheckResult, CheckStatus, LambdaComparison, ReconciliationReport, VerificationReport,
};
pub use tables::{
    eval_mn, theorem_table, Item, PrintedLambda, PrintedLambdaValue, Theorem, TheoremTable,
    LAMBDA1_F_REPAIR,
};
pub use verify::{reconcile_lambda, verify_theorem, verify_theorem_with, Registry};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntersectError {
    #[error("curves {0} and {1} overlap: the elimination polynomial vanishes identically")]
    DegenerateOverlap(String, String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A parameter value: rational, or an unspecified root of a square-free
/// primitive polynomial without rational roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Preimage {
    Rational(ExactScalar),
    Algebraic(UPoly),
}

impl Preimage {
    pub fn as_rational(&self) -> Option<&ExactScalar> {
        match self {
            Preimage::Rational(r) => Some(r),
            Preimage::Algebraic(_) => None,
        }
    }

    pub fn describe(&self, var: &str) -> String {
        match self {
            Preimage::Rational(r) => format_scalar(r),
            Preimage::Algebraic(p) => format!("root of {}", p.display_with(var)),
        }
    }
}

impl fmt::Display for Preimage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe("x"))
    }
}

/// One common point of two curves. `c` or `lambda` is `None` where the
/// point lies at a pole of both parametrizations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionPoint {
    pub preimage_a: Preimage,
    pub preimage_b: Preimage,
    pub c: Option<ExactScalar>,
    pub lambda: Option<ExactScalar>,
    /// Both coordinates verified equal on both curves by exact
    /// substitution, with no preimage excluded.
    pub certified: bool,
}

/// Accounts for every root of the elimination polynomial that is not a
/// rational root. All polynomials are in the parameter of curve A,
/// square-free and primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualCertificate {
    pub resultant_degree: usize,
    /// Square-free part of the rational-root-free factor of the resultant.
    pub residual: UPoly,
    /// Roots that are poles of curve A (artifacts of clearing denominators).
    pub pole_factor: UPoly,
    /// Roots where both eliminated equations drop degree: the partner
    /// parameter is at infinity.
    pub infinity_factor: UPoly,
    /// Roots resolved into intersection points with rational coordinates.
    pub resolved_factor: UPoly,
    /// Whatever is left. Constant iff no intersection point escaped.
    pub unresolved: UPoly,
    /// Rational roots for which neither a common partner root nor a
    /// degree drop was found. Always empty unless something is broken.
    pub unexplained_rational_roots: Vec<ExactScalar>,
}

impl ResidualCertificate {
    pub fn is_complete(&self) -> bool {
        self.unresolved.is_constant() && self.unexplained_rational_roots.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intersection {
    pub a: String,
    pub b: String,
    pub param_a: String,
    pub param_b: String,
    pub points: Vec<IntersectionPoint>,
    pub certificate: ResidualCertificate,
}

const ST: [&str; 2] = ["s", "t"];

fn in_s(p: &UPoly) -> MPoly {
    MPoly::from_upoly(&ST, 0, p)
}

fn in_t(p: &UPoly) -> MPoly {
    MPoly::from_upoly(&ST, 1, p)
}

/// `f_A(s) − f_B(t)` with denominators cleared.
fn cleared_difference(fa: &RatFunc, fb: &RatFunc) -> MPoly {
    &(&in_s(fa.num()) * &in_t(fb.den())) - &(&in_t(fb.num()) * &in_s(fa.den()))
}

/// `num − v·den`, the polynomial whose roots are where `f = v`.
fn level_set(f: &RatFunc, v: &ExactScalar) -> UPoly {
    f.level_numerator(v)
}

fn sf_primitive(p: &UPoly) -> UPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.square_free_part().primitive()
}

/// Removes from `u` every factor it shares with `d`; returns (shared, rest).
fn split_off(u: &UPoly, d: &UPoly) -> (UPoly, UPoly) {
    let mut shared = UPoly::one();
    let mut rest = u.clone();
    loop {
        let g = rest.gcd(d);
        if g.is_constant() {
            break;
        }
        rest = rest.exact_div(&g).expect("gcd divides");
        shared = &shared * &g;
    }
    (sf_primitive(&shared), rest)
}

/// `f(x) ≡ v (mod g)` with `den(x)` invertible mod `g`.
fn attains_mod(f: &RatFunc, v: &ExactScalar, g: &UPoly) -> bool {
    f.den().gcd(g).is_constant() && level_set(f, v).rem(g).is_zero()
}

/// Rational values `v` such that `num − v·den` shares a root with `u`.
fn rational_values_on(f: &RatFunc, u: &UPoly) -> Result<Vec<ExactScalar>, AlgebraError> {
    let vars = ["s", "v"];
    let p = &MPoly::from_upoly(&vars, 0, f.num())
        - &(&MPoly::var(&vars, "v") * &MPoly::from_upoly(&vars, 0, f.den()));
    let norm = resultant(&p, &MPoly::from_upoly(&vars, 0, u), "s")?;
    if norm.is_zero() {
        return Err(AlgebraError::IdenticallyZero);
    }
    let nu = norm.to_upoly(1).expect("univariate in v");
    if nu.is_constant() {
        return Ok(Vec::new());
    }
    Ok(find_roots(&nu)
        .rational_roots
        .into_iter()
        .map(|r| r.0)
        .collect())
}

fn point_value(fa: &RatFunc, sa: &Preimage, fb: &RatFunc, sb: &Preimage) -> Option<ExactScalar> {
    if let Some(v) = sa.as_rational().and_then(|s| fa.eval(s)) {
        return Some(v);
    }
    sb.as_rational().and_then(|t| fb.eval(t))
}

fn certify(
    curve: &TruncationCurve,
    pre: &Preimage,
    c: &Option<ExactScalar>,
    l: &Option<ExactScalar>,
) -> bool {
    let (Some(c), Some(l)) = (c, l) else {
        return false;
    };
    match pre {
        Preimage::Rational(r) => {
            curve.exclusion(r).is_none()
                && curve.c.eval(r).as_ref() == Some(c)
                && curve.lambda.eval(r).as_ref() == Some(l)
        }
        Preimage::Algebraic(g) => attains_mod(&curve.c, c, g) && attains_mod(&curve.lambda, l, g),
    }
}

/// `known` supplies the coordinates when neither preimage is rational.
fn make_point(
    a: &TruncationCurve,
    b: &TruncationCurve,
    pa: Preimage,
    pb: Preimage,
    known: Option<(Option<ExactScalar>, Option<ExactScalar>)>,
) -> IntersectionPoint {
    let (c, lambda) = match known {
        Some(cl) => cl,
        None => (
            point_value(&a.c, &pa, &b.c, &pb),
            point_value(&a.lambda, &pa, &b.lambda, &pb),
        ),
    };
    let certified = certify(a, &pa, &c, &lambda) && certify(b, &pb, &c, &lambda);
    IntersectionPoint {
        preimage_a: pa,
        preimage_b: pb,
        c,
        lambda,
        certified,
    }
}

/// Partner preimages on `b` of the point `(c, λ)`.
fn partners(b: &TruncationCurve, c: &ExactScalar, l: &ExactScalar) -> Vec<Preimage> {
    roots_of(&level_set(&b.c, c).gcd(&level_set(&b.lambda, l)))
}

/// Distinct roots of `g`: rational ones singly, the rest as one factor.
fn roots_of(g: &UPoly) -> Vec<Preimage> {
    if g.is_zero() || g.is_constant() {
        return Vec::new();
    }
    let rr = find_roots(g);
    let mut out: Vec<Preimage> = rr
        .rational_roots
        .into_iter()
        .map(|(t, _)| Preimage::Rational(t))
        .collect();
    if !rr.residual.is_constant() {
        out.push(Preimage::Algebraic(sf_primitive(&rr.residual)));
    }
    out
}

/// Common zeros of the cleared equations over irrational poles of `a`.
/// Their partners sit at poles of `b`; the rational-root branch lists the
/// same artifacts when the roles are swapped.
fn pole_points(
    a: &TruncationCurve,
    b: &TruncationCurve,
    pole_factor: &UPoly,
    points: &mut Vec<IntersectionPoint>,
) -> Result<(), AlgebraError> {
    if pole_factor.is_constant() {
        return Ok(());
    }
    let mut push =
        |piece: &UPoly, partners: Vec<Preimage>, c: Option<ExactScalar>, l: Option<ExactScalar>| {
            if piece.is_constant() {
                return;
            }
            let piece = sf_primitive(piece);
            for pb in partners {
                points.push(make_point(
                    a,
                    b,
                    Preimage::Algebraic(piece.clone()),
                    pb,
                    Some((c.clone(), l.clone())),
                ));
            }
        };
    let c_poles = pole_factor.gcd(a.c.den());
    let l_poles = pole_factor.gcd(a.lambda.den());
    for c0 in rational_values_on(&a.c, &l_poles)? {
        let piece = l_poles.gcd(&level_set(&a.c, &c0));
        push(
            &piece,
            roots_of(&level_set(&b.c, &c0).gcd(b.lambda.den())),
            Some(c0),
            None,
        );
    }
    for l0 in rational_values_on(&a.lambda, &c_poles)? {
        let piece = c_poles.gcd(&level_set(&a.lambda, &l0));
        push(
            &piece,
            roots_of(&level_set(&b.lambda, &l0).gcd(b.c.den())),
            None,
            Some(l0),
        );
    }
    let both = c_poles.gcd(&l_poles);
    push(&both, roots_of(&b.c.den().gcd(b.lambda.den())), None, None);
    Ok(())
}

/// All common points of `a` and `b`.
///
/// The parameter `t` of `b` is eliminated from the two cleared coordinate
/// differences. Rational roots `s` of the resultant are back-solved for `t`
/// by exact gcd; the remaining factor is split into poles of `a`, partner
/// points at infinity, and pieces on which `c` and `λ` take rational values.
pub fn intersect_curves(
    a: &TruncationCurve,
    b: &TruncationCurve,
) -> Result<Intersection, IntersectError> {
    let e1 = cleared_difference(&a.c, &b.c);
    let e2 = cleared_difference(&a.lambda, &b.lambda);
    let r = resultant(&e1, &e2, "t")?;
    if r.is_zero() {
        return Err(IntersectError::DegenerateOverlap(
            a.name.clone(),
            b.name.clone(),
        ));
    }
    let r = r.to_upoly(0).expect("t eliminated");
    let lc1 = e1
        .coeffs_in(1)
        .last()
        .cloned()
        .expect("nonzero")
        .to_upoly(0)
        .expect("in s");
    let lc2 = e2
        .coeffs_in(1)
        .last()
        .cloned()
        .expect("nonzero")
        .to_upoly(0)
        .expect("in s");
    let at_infinity = lc1.gcd(&lc2);

    let mut points = Vec::new();
    let mut unexplained = Vec::new();
    let roots = if r.is_constant() {
        None
    } else {
        Some(find_roots(&r))
    };
    for (s0, _) in roots.iter().flat_map(|rr| rr.rational_roots.iter()) {
        let f1 = e1.substitute(0, s0).to_upoly(1).expect("in t");
        let f2 = e2.substitute(0, s0).to_upoly(1).expect("in t");
        let g = f1.gcd(&f2);
        if g.is_zero() {
            return Err(IntersectError::DegenerateOverlap(
                a.name.clone(),
                b.name.clone(),
            ));
        }
        if g.is_constant() {
            if !at_infinity.eval(s0).is_zero() {
                unexplained.push(s0.clone());
            }
            continue;
        }
        let gr = find_roots(&g);
        for (t0, _) in gr.rational_roots {
            points.push(make_point(
                a,
                b,
                Preimage::Rational(s0.clone()),
                Preimage::Rational(t0),
                None,
            ));
        }
        if !gr.residual.is_constant() {
            let alg = Preimage::Algebraic(sf_primitive(&gr.residual));
            points.push(make_point(a, b, Preimage::Rational(s0.clone()), alg, None));
        }
    }

    let residual = match &roots {
        Some(rr) => sf_primitive(&rr.residual),
        None => UPoly::one(),
    };
    let poles = &(a.c.den() * a.lambda.den());
    let (pole_factor, rest) = split_off(&residual, poles);
    let (infinity_factor, mut rest) = if at_infinity.is_zero() {
        (UPoly::one(), rest)
    } else {
        split_off(&rest, &at_infinity)
    };
    pole_points(a, b, &pole_factor, &mut points)?;
    let mut resolved = UPoly::one();
    if !rest.is_constant() {
        for c0 in rational_values_on(&a.c, &rest)? {
            let piece = rest.gcd(&level_set(&a.c, &c0));
            if piece.is_constant() {
                continue;
            }
            for l0 in rational_values_on(&a.lambda, &piece)? {
                let sub = piece.gcd(&level_set(&a.lambda, &l0));
                if sub.is_constant() {
                    continue;
                }
                let ps = partners(b, &c0, &l0);
                if ps.is_empty() {
                    continue;
                }
                let sub = sf_primitive(&sub);
                for pb in ps {
                    points.push(make_point(
                        a,
                        b,
                        Preimage::Algebraic(sub.clone()),
                        pb,
                        Some((Some(c0.clone()), Some(l0.clone()))),
                    ));
                }
                resolved = &resolved * &sub;
                rest = rest.exact_div(&sub).expect("piece divides");
            }
        }
    }
    points.sort();
    points.dedup();
    Ok(Intersection {
        a: a.name.clone(),
        b: b.name.clone(),
        param_a: a.param.clone(),
        param_b: b.param.clone(),
        points,
        certificate: ResidualCertificate {
            resultant_degree: r.degree().unwrap_or(0),
            residual,
            pole_factor,
            infinity_factor,
            resolved_factor: sf_primitive(&resolved),
            unresolved: sf_primitive(&rest),
            unexplained_rational_roots: unexplained,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{d_curve, Family};
    use crate::exactalg::scalar::{int, ratio};

    fn toy(name: &str, c: &str, l: &str) -> TruncationCurve {
        TruncationCurve::new(
            name,
            Family::External { tag: "toy".into() },
            vec![],
            RatFunc::parse(c, "t", &[]).unwrap(),
            RatFunc::parse(l, "t", &[]).unwrap(),
            &[],
        )
    }

    #[test]
    fn identical_curves_overlap() {
        let d1 = d_curve(1).unwrap();
        assert!(matches!(
            intersect_curves(&d1, &d1),
            Err(IntersectError::DegenerateOverlap(..))
        ));
    }

    #[test]
    fn parallel_lines() {
        let x = intersect_curves(&toy("a", "t", "t"), &toy("b", "t", "t + 1")).unwrap();
        assert!(x.points.is_empty());
        assert!(x.certificate.is_complete());
    }

    #[test]
    fn crossing_parabola() {
        // (t, t^2) meets (t, 2t - 1) once, tangentially at t = 1
        let x = intersect_curves(&toy("a", "t", "t^2"), &toy("b", "t", "2*t - 1")).unwrap();
        assert_eq!(x.points.len(), 1);
        assert_eq!(x.points[0].c, Some(int(1)));
        assert!(x.points[0].certified);
    }

    #[test]
    fn algebraic_preimage_rational_point() {
        // (s^2, s^4) meets (t, 2t) at (0, 0) and at (2, 4), the latter from s = ±√2
        let a = toy("a", "t^2", "t^4");
        let b = toy("b", "t", "2*t");
        let x = intersect_curves(&a, &b).unwrap();
        assert!(x.certificate.is_complete(), "{:?}", x.certificate);
        for p in &x.points {
            assert!(p.certified, "{p:?}");
        }
        assert_eq!(x.points.len(), 2);
        let alg = x
            .points
            .iter()
            .find(|p| matches!(p.preimage_a, Preimage::Algebraic(_)))
            .unwrap();
        assert_eq!(
            alg.preimage_a,
            Preimage::Algebraic(UPoly::from_ints(&[-2, 0, 1]))
        );
        assert_eq!(alg.preimage_b, Preimage::Rational(int(2)));
        assert_eq!(
            (alg.c.clone(), alg.lambda.clone()),
            (Some(int(2)), Some(int(4)))
        );
    }

    #[test]
    fn d2_d1_contains_theorem_point() {
        let x = intersect_curves(&d_curve(2).unwrap(), &d_curve(1).unwrap()).unwrap();
        let p = x
            .points
            .iter()
            .find(|p| p.preimage_a == Preimage::Rational(ratio(-4, 3)))
            .unwrap();
        assert_eq!(p.preimage_b, Preimage::Rational(ratio(-5, 2)));
        assert_eq!(p.c, Some(int(4)));
        assert!(p.certified);
        assert_eq!(x.certificate.resultant_degree, 14);
        assert!(x.certificate.is_complete(), "{:?}", x.certificate);
    }
}
