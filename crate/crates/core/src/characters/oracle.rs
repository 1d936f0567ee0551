//! Invariant dimensions by exact linear algebra on monomials.
//!
//! Modes `b_{i,-j}` (boson i, depth j) span the Fock space. The weight-d
//! subspace is spanned by monomials of total depth d; O(2n)-invariants are
//! the joint kernel of the infinitesimal rotations `E_ab` intersected with
//! the fixed space of the reflection `b_1 ↦ -b_1`.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::{fock_character, CharError};
use crate::exactalg::linalg::{SparseRank, SparseRow};

/// Largest weight space the oracle will build.
pub const BRUTE_FORCE_GUARD: u128 = 100_000;

/// Number of monomials of weight `d` in `2n` bosons.
pub fn monomial_count(n: usize, d: usize) -> Result<u128, CharError> {
    Ok(fock_character(2 * n, d)?.coefficient(d) as u128)
}

/// A mode `(boson, depth)` packed as `(depth - 1)·2n + boson`.
type Monomial = Vec<usize>;

fn enumerate(bosons: usize, d: usize) -> Vec<Monomial> {
    fn rec(
        bosons: usize,
        left: usize,
        min_mode: usize,
        cur: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for mode in min_mode..left * bosons {
            let depth = mode / bosons + 1;
            if depth > left {
                break;
            }
            cur.push(mode);
            rec(bosons, left - depth, mode, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(bosons, d, 0, &mut Vec::new(), &mut out);
    out
}

/// Dimension of the O(2n)-invariant subspace in weight `d`.
pub fn brute_force_dim(n: usize, d: usize) -> Result<usize, CharError> {
    if n == 0 {
        return Err(CharError::Domain("brute_force_dim needs n >= 1".into()));
    }
    let needed = monomial_count(n, d)?;
    if needed > BRUTE_FORCE_GUARD {
        return Err(CharError::ResourceGuard {
            what: format!("weight-{d} monomial basis of {} bosons", 2 * n),
            needed,
            budget: BRUTE_FORCE_GUARD,
        });
    }
    let bosons = 2 * n;
    let basis = enumerate(bosons, d);
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let dim = basis.len();
    let generators: Vec<(usize, usize)> = (0..bosons)
        .flat_map(|a| (a + 1..bosons).map(move |b| (a, b)))
        .collect();

    // Reflection-fixed monomials carry an even number of boson-0 modes.
    let even: Vec<&Monomial> = basis
        .iter()
        .filter(|m| m.iter().filter(|&&mode| mode % bosons == 0).count() % 2 == 0)
        .collect();

    let mut rank = SparseRank::new();
    for mono in &even {
        // Column of the stacked operator [E_ab] at this monomial.
        let mut col = SparseRow::new();
        for (g, &(a, b)) in generators.iter().enumerate() {
            // E_ab: b_b ↦ b_a, b_a ↦ -b_b, extended as a derivation.
            for (pos, &mode) in mono.iter().enumerate() {
                if pos > 0 && mono[pos - 1] == mode {
                    continue;
                }
                let boson = mode % bosons;
                let (target, sign) = if boson == b {
                    (a, 1)
                } else if boson == a {
                    (b, -1)
                } else {
                    continue;
                };
                let mult = mono.iter().filter(|&&x| x == mode).count() as i64;
                let mut image = (*mono).clone();
                image[pos] = mode - boson + target;
                image.sort_unstable();
                let row = g * dim + index[&image];
                *col.entry(row).or_insert_with(|| BigInt::from(0)) += BigInt::from(sign * mult);
            }
        }
        rank.insert(col);
    }
    Ok(even.len() - rank.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_weights() {
        assert_eq!(brute_force_dim(1, 1), Ok(0));
        assert_eq!(brute_force_dim(1, 4), Ok(3));
        assert_eq!(brute_force_dim(2, 2), Ok(1));
        assert_eq!(brute_force_dim(1, 0), Ok(1));
    }

    #[test]
    fn enumeration_matches_fock_count() {
        for d in 0..7 {
            assert_eq!(enumerate(4, d).len() as u128, monomial_count(2, d).unwrap());
        }
    }

    #[test]
    fn guard() {
        assert!(matches!(
            brute_force_dim(3, 20),
            Err(CharError::ResourceGuard { .. })
        ));
    }
}
