mod common;

use std::sync::OnceLock;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wtrunc::curves::{
    d_curve, eval_curve, lambda_direct, load_curves, serialize_curves, ExclusionReason, Family,
    TruncationCurve,
};
use wtrunc::exactalg::scalar::{int, ratio};
use wtrunc::exactalg::{MPoly, RatFunc};

fn implicit_d(n: i64) -> &'static (TruncationCurve, MPoly) {
    static CACHE: OnceLock<Vec<(TruncationCurve, MPoly)>> = OnceLock::new();
    &CACHE.get_or_init(|| {
        (1..=6)
            .map(|n| {
                let c = d_curve(n).unwrap();
                let f = implicit(&c);
                (c, f)
            })
            .collect()
    })[(n - 1) as usize]
}

#[test]
fn implicit_equation_vanishes_on_200_points_per_n() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in 1..=6 {
        let (curve, f) = implicit_d(n);
        let levels = random_levels(&mut rng, curve, 200);
        assert_eq!(
            check_implicit_vanishes(curve, f, &levels),
            Ok(200),
            "n = {n}"
        );
    }
}

#[test]
fn central_charge_tends_to_boson_count() {
    for n in 1..=8 {
        let c = &d_curve(n).unwrap().c;
        // a factor k cancels at n = 1
        let d = if n == 1 { 1 } else { 2 };
        assert_eq!(c.degrees(), (d, d));
        assert_eq!(c.num().lc() / c.den().lc(), int(2 * n));
    }
}

#[test]
fn central_charge_matches_coset_formula() {
    // c(so_{2n+1}, k) - c(so_{2n}, k) written out independently
    for n in 1..=6 {
        let c = &d_curve(n).unwrap().c;
        for k in [ratio(7, 3), int(11), ratio(-31, 5)] {
            let (kk, nn) = (k.clone(), int(n));
            let dim_b = &nn * (int(2) * &nn + int(1));
            let dim_d = &nn * (int(2) * &nn - int(1));
            let hb = int(2) * &nn - int(1);
            let hd = int(2) * &nn - int(2);
            let coset = &kk * &dim_b / (&kk + &hb) - &kk * &dim_d / (&kk + &hd);
            assert_eq!(c.eval(&k).unwrap(), coset, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn critical_levels_are_excluded() {
    for n in 1..=6 {
        let curve = d_curve(n).unwrap();
        for k in [int(-2 * n + 2), int(-2 * n + 1)] {
            assert_eq!(curve.exclusion(&k), Some(ExclusionReason::Critical));
        }
        for e in &curve.excluded {
            if e.reason != ExclusionReason::Critical {
                let pole =
                    curve.c.eval(&e.value).is_none() || curve.lambda.eval(&e.value).is_none();
                assert!(pole, "n = {n}: {} is not a pole", e.value);
            }
        }
    }
}

#[test]
fn lambda_regression_two_routes() {
    let k = int(4);
    let normalized = d_curve(1).unwrap().lambda.eval(&k).unwrap();
    assert_eq!(normalized, ratio(205, 9338));
    assert_eq!(lambda_direct(1, &k).unwrap(), Some(normalized));
}

#[test]
fn builtin_curves_round_trip() {
    let curves: Vec<_> = (1..=6).map(|n| d_curve(n).unwrap()).collect();
    let text = serialize_curves(&curves);
    let back = load_curves(&text).unwrap();
    assert_eq!(back, curves);
    assert_eq!(serialize_curves(&back), text);
}

#[test]
fn config_errors_name_the_field() {
    let bad = r#"{"curves": [{"name": "A", "param": "t",
        "c": {"num": [[1, 1]], "den": [[0, 1], [1, 1]]},
        "lambda": {"num": [[1, 1]], "den": [[1, 1]]}, "excluded": []}]}"#;
    let e = load_curves(bad).unwrap_err();
    assert_eq!(e.path, "curves[0].excluded");
    assert!(e.msg.contains("missing rational pole 0"), "{}", e.msg);
    let e = load_curves(r#"{"curves": [{"name": "A"}]}"#).unwrap_err();
    assert_eq!(e.path, "curves[0].param");
    let e = load_curves("{\n  \"curves\": [,]}").unwrap_err();
    assert!(e.path.starts_with("line 2"), "{}", e.path);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_curves_round_trip(seed in any::<u64>(), nd in 1usize..4, dd in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_ratfunc(&mut rng, nd, dd);
        let l = random_ratfunc(&mut rng, dd + 1, nd);
        let crit = [ratio(seed as i64 % 17, 3)];
        let curve = TruncationCurve::new(
            "X",
            Family::External { tag: "so_even".into() },
            vec![("m".into(), 3)],
            c,
            l,
            &crit,
        );
        let text = serialize_curves(std::slice::from_ref(&curve));
        let back = load_curves(&text).unwrap();
        prop_assert_eq!(&back[0], &curve);
        prop_assert_eq!(serialize_curves(&back), text);
    }

    #[test]
    fn non_excluded_levels_are_finite(n in 1i64..=6, num in -500i64..500, den in 1i64..40) {
        let curve = d_curve(n).unwrap();
        let k = ratio(num, den);
        match eval_curve(&curve, &k) {
            Ok(_) => prop_assert!(curve.exclusion(&k).is_none()),
            Err(_) => prop_assert!(curve.exclusion(&k).is_some()),
        }
    }

    #[test]
    fn normalized_lambda_matches_direct_substitution(n in 1i64..=6, num in -500i64..500, den in 1i64..40) {
        let curve = d_curve(n).unwrap();
        let k = ratio(num, den);
        prop_assume!(curve.exclusion(&k).is_none());
        prop_assert_eq!(curve.lambda.eval(&k), lambda_direct(n, &k).unwrap());
    }

    #[test]
    fn implicit_equation_vanishes(n in 1i64..=6, num in -300i64..300, den in 1i64..25) {
        let (curve, f) = implicit_d(n);
        let k = ratio(num, den);
        prop_assume!(curve.exclusion(&k).is_none());
        prop_assert_eq!(check_implicit_vanishes(curve, f, &[k]), Ok(1));
    }
}

#[test]
fn central_charge_is_a_ratfunc_in_normal_form() {
    let c = &d_curve(3).unwrap().c;
    let expect = RatFunc::parse("3*k*(2*k + 3)/((k + 4)*(k + 5))", "k", &[]).unwrap();
    assert_eq!(c, &expect);
}
