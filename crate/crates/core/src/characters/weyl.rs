//! O(2n)-invariants of 2n free bosons by Weyl integration.
//!
//! The symmetric algebra on `V q ⊕ V q² ⊕ …` has torus character
//! `∏_d ∏_i 1/((1 - z_i q^d)(1 - z_i⁻¹ q^d))`. Its invariant part is a
//! constant term against the Weyl density, taken separately on the two
//! components of O(2n) and averaged:
//!
//! * SO(2n): rank n torus, density `∏_{α>0} (1 - z^α)` over the D_n roots.
//! * O⁻(2n): eigenvalues `{+1, -1}` plus a rank n-1 torus, density over
//!   the C_{n-1} roots. The `±1` pair contributes `∏_d 1/(1 - q^{2d})`.

use std::collections::BTreeMap;

use super::{CharError, QSeries, TERM_BUDGET_ENV};

/// Dense intermediate cells allowed by default.
pub const DEFAULT_TERM_BUDGET: u128 = 50_000_000;

/// [`DEFAULT_TERM_BUDGET`], unless the environment overrides it.
pub fn default_term_budget() -> u128 {
    std::env::var(TERM_BUDGET_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_TERM_BUDGET)
}

/// Truncated Laurent series in `z_1..z_r` and `q`, dense in exponents
/// `-N..=N` (a monomial of q-degree d never has |exponent| > d).
struct Laurent {
    n: usize,
    width: usize,
    /// Cells per q-degree.
    slab: usize,
    data: Vec<i128>,
}

impl Laurent {
    fn one(rank: usize, n: usize, budget: u128) -> Result<Self, CharError> {
        let width = 2 * n + 1;
        let slab = (width as u128).pow(rank as u32);
        let needed = slab * (n as u128 + 1);
        if needed > budget {
            return Err(CharError::ResourceGuard {
                what: format!("torus series of rank {rank} to weight {n}"),
                needed,
                budget,
            });
        }
        let slab = slab as usize;
        let mut data = vec![0; slab * (n + 1)];
        let mut l = Laurent {
            n,
            width,
            slab,
            data: Vec::new(),
        };
        data[l.exponent_offset(&vec![0; rank]).expect("origin")] = 1;
        l.data = data;
        Ok(l)
    }

    fn exponent_offset(&self, e: &[i64]) -> Option<usize> {
        let mut off = 0;
        for &x in e.iter().rev() {
            let s = x + self.n as i64;
            if s < 0 || s >= self.width as i64 {
                return None;
            }
            off = off * self.width + s as usize;
        }
        Some(off)
    }

    /// Multiplies by `1/(1 - z_i^sign q^d)`, or by `1/(1 - q^d)` when
    /// `var` is `None`.
    fn divide_geometric(&mut self, var: Option<(usize, i64)>, d: usize) {
        let shift = match var {
            Some((i, sign)) => sign * (self.width as i64).pow(i as u32),
            None => 0,
        };
        let (width, n) = (self.width as i64, self.n as i64);
        for q in d..=self.n {
            for cell in 0..self.slab {
                if let Some((i, sign)) = var {
                    let digit = (cell as i64 / width.pow(i as u32)) % width - n;
                    let src = digit - sign;
                    if src < -n || src > n {
                        continue;
                    }
                }
                let from = (q - d) * self.slab + (cell as i64 - shift) as usize;
                let v = self.data[from];
                if v != 0 {
                    self.data[q * self.slab + cell] += v;
                }
            }
        }
    }

    /// Coefficient of `q^d` in the constant term of `self · density`.
    fn constant_term(&self, density: &BTreeMap<Vec<i64>, i128>) -> Vec<i128> {
        (0..=self.n)
            .map(|q| {
                density
                    .iter()
                    .filter_map(|(beta, c)| {
                        let neg: Vec<i64> = beta.iter().map(|b| -b).collect();
                        self.exponent_offset(&neg)
                            .map(|off| c * self.data[q * self.slab + off])
                    })
                    .sum()
            })
            .collect()
    }
}

/// Expands `∏ (1 - z^α)` over the given roots.
fn expand_density(rank: usize, roots: &[Vec<i64>]) -> BTreeMap<Vec<i64>, i128> {
    let mut p = BTreeMap::from([(vec![0; rank], 1i128)]);
    for alpha in roots {
        let mut next = p.clone();
        for (e, c) in &p {
            let shifted: Vec<i64> = e.iter().zip(alpha).map(|(a, b)| a + b).collect();
            *next.entry(shifted).or_insert(0) -= c;
        }
        next.retain(|_, c| *c != 0);
        p = next;
    }
    p
}

fn unit(rank: usize, i: usize, j: usize, sj: i64) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] += 1;
    v[j] += sj;
    v
}

/// Positive roots `e_i ± e_j` (i < j), plus `2e_i` when `long` is set.
fn positive_roots(rank: usize, long: bool) -> Vec<Vec<i64>> {
    let mut roots = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            roots.push(unit(rank, i, j, -1));
            roots.push(unit(rank, i, j, 1));
        }
        if long {
            roots.push(unit(rank, i, i, 1));
        }
    }
    roots
}

fn component(
    rank: usize,
    n: usize,
    reflection: bool,
    budget: u128,
) -> Result<Vec<i128>, CharError> {
    let mut f = Laurent::one(rank, n, budget)?;
    for d in 1..=n {
        for i in 0..rank {
            f.divide_geometric(Some((i, 1)), d);
            f.divide_geometric(Some((i, -1)), d);
        }
        if reflection && 2 * d <= n {
            f.divide_geometric(None, 2 * d);
        }
    }
    Ok(f.constant_term(&expand_density(rank, &positive_roots(rank, reflection))))
}

/// Graded dimensions of the O(2n)-invariants in the Fock space of 2n free
/// bosons, through weight `weight`.
pub fn orbifold_character(n: usize, weight: usize) -> Result<QSeries, CharError> {
    orbifold_character_with_budget(n, weight, default_term_budget())
}

pub fn orbifold_character_with_budget(
    n: usize,
    weight: usize,
    budget: u128,
) -> Result<QSeries, CharError> {
    if n == 0 {
        return Err(CharError::Domain("orbifold_character needs n >= 1".into()));
    }
    let so = component(n, weight, false, budget)?;
    let minus = component(n - 1, weight, true, budget)?;
    let coefficients = so
        .iter()
        .zip(&minus)
        .enumerate()
        .map(|(d, (a, b))| {
            let s = a + b;
            debug_assert!(s % 2 == 0, "odd component sum at weight {d}");
            i64::try_from(s / 2).map_err(|_| CharError::Overflow(d))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QSeries::new(coefficients))
}
