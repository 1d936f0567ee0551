//! Exact linear algebra: fraction-free nullspaces and sparse integer rank.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::scalar::{lcm_of_denominators, ExactScalar};

/// Basis of the right nullspace of a rational matrix, computed by Bareiss
/// fraction-free elimination on the integer-scaled rows.
pub fn nullspace(rows: &[Vec<ExactScalar>], ncols: usize) -> Vec<Vec<ExactScalar>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = lcm_of_denominators(r);
            r.iter()
                .map(|c| (c * ExactScalar::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i == r {
                continue;
            }
            // Bareiss step below the pivot, plain integer elimination above
            let (a, b) = (m[r][col].clone(), m[i][col].clone());
            if i > r {
                for j in 0..ncols {
                    let v = (&a * &m[i][j] - &b * &m[r][j]) / &prev;
                    m[i][j] = v;
                }
            } else if !b.is_zero() {
                for j in 0..ncols {
                    let v = &a * &m[i][j] - &b * &m[r][j];
                    m[i][j] = v;
                }
            }
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    // back-substituted rows are now diagonal on pivots up to row scaling
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![ExactScalar::zero(); ncols];
        v[free] = ExactScalar::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -ExactScalar::new(m[row][free].clone(), m[row][pc].clone());
        }
        basis.push(v);
    }
    basis
}

/// A sparse integer vector keyed by column.
pub type SparseRow = BTreeMap<usize, BigInt>;

fn normalize(row: &mut SparseRow) {
    let g = row.values().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
}

/// Incremental exact rank of integer row vectors.
///
/// Rows are reduced against stored pivot rows keyed by their leading column;
/// every stored row is content-normalized to keep entries small.
#[derive(Default, Debug)]
pub struct SparseRank {
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseRank {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        normalize(&mut row);
        while let Some((&lead, lv)) = row.iter().next() {
            let Some(p) = self.pivots.get(&lead) else {
                if lv.is_negative() {
                    for v in row.values_mut() {
                        *v = -&*v;
                    }
                }
                self.pivots.insert(lead, row);
                return true;
            };
            let pv = &p[&lead];
            let g = lv.gcd(pv);
            let (a, b) = (pv / &g, lv / &g);
            // row <- a·row - b·p
            let mut out = SparseRow::new();
            for (k, v) in &row {
                out.insert(*k, &a * v);
            }
            for (k, v) in p {
                let e = out.entry(*k).or_insert_with(BigInt::zero);
                *e -= &b * v;
            }
            out.retain(|_, v| !v.is_zero());
            normalize(&mut out);
            row = out;
        }
        false
    }
}
