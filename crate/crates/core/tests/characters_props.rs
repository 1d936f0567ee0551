use proptest::prelude::*;
use wtrunc::characters::{
    brute_force_dim, first_discrepancy, fock_character, free_character, orbifold_character,
    GeneratorProfile,
};

#[test]
fn orbifold_matches_brute_force_through_weight_8() {
    for n in 1..=3 {
        let orb = orbifold_character(n, 8).unwrap();
        for d in 0..=8 {
            assert_eq!(
                orb.coefficient(d),
                brute_force_dim(n, d).unwrap() as i64,
                "n = {n}, weight {d}"
            );
        }
    }
    let n1 = orbifold_character(1, 4).unwrap();
    assert_eq!(n1.coefficients(), [1, 0, 1, 1, 3]);
}

#[test]
fn orbifold_agrees_with_free_even_through_13() {
    let free = free_character(&GeneratorProfile::AllEven, 13).unwrap();
    for n in 2..=3 {
        let orb = orbifold_character(n, 13).unwrap();
        assert_eq!(first_discrepancy(&orb, &free).unwrap(), None, "n = {n}");
    }
    // one boson pair: a relation appears at weight 12
    let orb = orbifold_character(1, 13).unwrap();
    assert_eq!(first_discrepancy(&orb, &free).unwrap(), Some(12));
}

#[test]
fn orbifold_is_a_vacuum_character_below_fock() {
    for n in 1..=3 {
        let orb = orbifold_character(n, 12).unwrap();
        let fock = fock_character(2 * n, 12).unwrap();
        assert_eq!(orb.coefficient(0), 1);
        for d in 0..=12 {
            assert!(orb.coefficient(d) >= 0);
            assert!(
                orb.coefficient(d) <= fock.coefficient(d),
                "n = {n}, weight {d}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn finite_profile_agrees_below_its_cutoff(m in 1usize..8, n in 0usize..30) {
        let finite = free_character(&GeneratorProfile::even_up_to(2 * m), n).unwrap();
        let all = free_character(&GeneratorProfile::AllEven, n).unwrap();
        for d in 0..=n {
            if d <= 2 * m + 1 {
                prop_assert_eq!(finite.coefficient(d), all.coefficient(d));
            }
            prop_assert!(finite.coefficient(d) <= all.coefficient(d));
        }
    }

    #[test]
    fn free_characters_are_nonnegative(ws in proptest::collection::vec(1usize..9, 0..5), n in 0usize..25) {
        let s = free_character(&GeneratorProfile::finite(ws).unwrap(), n).unwrap();
        prop_assert_eq!(s.coefficient(0), 1);
        prop_assert!(s.coefficients().iter().all(|&c| c >= 0));
    }
}
