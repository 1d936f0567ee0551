//! Truncated graded characters: free generators, orthogonal invariants of
//! free bosons, and a brute-force oracle for the latter.

mod oracle;
mod weyl;

use std::fmt;
use std::io;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use oracle::{brute_force_dim, monomial_count, BRUTE_FORCE_GUARD};
pub use weyl::{
    default_term_budget, orbifold_character, orbifold_character_with_budget, DEFAULT_TERM_BUDGET,
};

/// Environment variable overriding [`DEFAULT_TERM_BUDGET`].
pub const TERM_BUDGET_ENV: &str = "WTRUNC_TERM_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharError {
    #[error("series truncated at different weights ({0} vs {1})")]
    TruncationMismatch(usize, usize),
    #[error("resource guard: {what} needs {needed} terms, budget is {budget}")]
    ResourceGuard {
        what: String,
        needed: u128,
        budget: u128,
    },
    #[error("{0}")]
    Domain(String),
    #[error("coefficient overflow at weight {0}")]
    Overflow(usize),
}

/// A power series in q known through weight `truncation()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QSeries {
    coefficients: Vec<i64>,
}

impl QSeries {
    pub fn new(coefficients: Vec<i64>) -> Self {
        assert!(
            !coefficients.is_empty(),
            "a series carries at least weight 0"
        );
        QSeries { coefficients }
    }

    /// 1 + O(q^{N+1}).
    pub fn one(n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = 1;
        QSeries { coefficients: c }
    }

    pub fn truncation(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, weight: usize) -> i64 {
        self.coefficients[weight]
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn truncate(&self, n: usize) -> QSeries {
        QSeries::new(self.coefficients[..=n.min(self.truncation())].to_vec())
    }

    /// Multiplies in place by `1/(1 - q^w)`.
    fn divide_by_one_minus(&mut self, w: usize) -> Result<(), CharError> {
        for d in w..self.coefficients.len() {
            let v = self.coefficients[d]
                .checked_add(self.coefficients[d - w])
                .ok_or(CharError::Overflow(d))?;
            self.coefficients[d] = v;
        }
        Ok(())
    }

    /// `(weight, coefficient)` rows.
    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["weight", "coefficient"])?;
        for (d, c) in self.coefficients.iter().enumerate() {
            w.write_record([d.to_string(), c.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Weights of a set of strong generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorProfile {
    Finite(Vec<usize>),
    /// One generator in every even weight ≥ 2.
    AllEven,
}

impl GeneratorProfile {
    pub fn finite(mut weights: Vec<usize>) -> Result<Self, CharError> {
        if weights.contains(&0) {
            return Err(CharError::Domain(
                "generator weights must be positive".into(),
            ));
        }
        weights.sort_unstable();
        Ok(GeneratorProfile::Finite(weights))
    }

    /// `{2, 4, …, 2m}`.
    pub fn even_up_to(m: usize) -> Self {
        GeneratorProfile::Finite((1..=m).map(|i| 2 * i).collect())
    }

    /// Generator weights that matter through weight `n`.
    pub fn weights_through(&self, n: usize) -> Vec<usize> {
        match self {
            GeneratorProfile::Finite(w) => w.iter().copied().filter(|&w| w <= n).collect(),
            GeneratorProfile::AllEven => (2..=n).step_by(2).collect(),
        }
    }
}

impl fmt::Display for GeneratorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorProfile::AllEven => f.write_str("all-even"),
            GeneratorProfile::Finite(w) => {
                let parts: Vec<String> = w.iter().map(usize::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
        }
    }
}

impl FromStr for GeneratorProfile {
    type Err = CharError;
    /// `all-even`, or comma-separated weights (braces optional).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "all-even" {
            return Ok(GeneratorProfile::AllEven);
        }
        let inner = s.trim_start_matches('{').trim_end_matches('}').trim();
        if inner.is_empty() {
            return Ok(GeneratorProfile::Finite(Vec::new()));
        }
        let weights = inner
            .split(',')
            .map(|w| {
                w.trim()
                    .parse::<usize>()
                    .map_err(|_| CharError::Domain(format!("bad generator weight {w:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        GeneratorProfile::finite(weights)
    }
}

/// Character of the algebra freely generated by fields of the given
/// weights: a field of weight w contributes one mode in every weight ≥ w.
pub fn free_character(profile: &GeneratorProfile, n: usize) -> Result<QSeries, CharError> {
    let mut s = QSeries::one(n);
    for w in profile.weights_through(n) {
        for j in w..=n {
            s.divide_by_one_minus(j)?;
        }
    }
    Ok(s)
}

/// Character of the Fock space of `bosons` free bosons, `∏ (1 - q^j)^{-bosons}`.
pub fn fock_character(bosons: usize, n: usize) -> Result<QSeries, CharError> {
    let mut s = QSeries::one(n);
    for _ in 0..bosons {
        for j in 1..=n {
            s.divide_by_one_minus(j)?;
        }
    }
    Ok(s)
}

/// Smallest weight where the two series differ.
pub fn first_discrepancy(a: &QSeries, b: &QSeries) -> Result<Option<usize>, CharError> {
    if a.truncation() != b.truncation() {
        return Err(CharError::TruncationMismatch(
            a.truncation(),
            b.truncation(),
        ));
    }
    Ok(a.coefficients
        .iter()
        .zip(&b.coefficients)
        .position(|(x, y)| x != y))
}

/// One row of a character comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub weight: usize,
    pub orbifold: Option<i64>,
    pub free_even: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<i64>,
}

/// Orbifold character against the free all-even character. `partial`
/// marks a table where a resource guard left columns empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    pub weight: usize,
    pub rows: Vec<CharacterRow>,
    pub first_discrepancy: Option<usize>,
    pub partial: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CharacterTable {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> csv::Result<()> {
        let opt = |v: Option<i64>| v.map(|v| v.to_string()).unwrap_or_default();
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["weight", "orbifold", "free_even", "oracle"])?;
        for r in &self.rows {
            w.write_record([
                r.weight.to_string(),
                opt(r.orbifold),
                r.free_even.to_string(),
                opt(r.oracle),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_characters() {
        let two = GeneratorProfile::finite(vec![2]).unwrap();
        assert_eq!(
            free_character(&two, 6).unwrap().coefficients(),
            &[1, 0, 1, 1, 2, 2, 4]
        );
        let even = free_character(&GeneratorProfile::AllEven, 6).unwrap();
        assert_eq!(even.coefficient(6), 7);
        let empty = GeneratorProfile::finite(vec![]).unwrap();
        assert_eq!(
            free_character(&empty, 3).unwrap().coefficients(),
            &[1, 0, 0, 0]
        );
    }

    #[test]
    fn discrepancy() {
        let a = free_character(&"2".parse().unwrap(), 6).unwrap();
        let b = free_character(&"{2,4}".parse().unwrap(), 6).unwrap();
        assert_eq!(first_discrepancy(&a, &b), Ok(Some(4)));
        assert_eq!(first_discrepancy(&a, &a), Ok(None));
        assert_eq!(
            first_discrepancy(&a, &b.truncate(5)),
            Err(CharError::TruncationMismatch(6, 5))
        );
    }

    #[test]
    fn fock_one_boson_is_partitions() {
        assert_eq!(
            fock_character(1, 7).unwrap().coefficients(),
            &[1, 1, 2, 3, 5, 7, 11, 15]
        );
    }

    #[test]
    fn profile_parsing() {
        assert_eq!(
            "all-even".parse::<GeneratorProfile>().unwrap(),
            GeneratorProfile::AllEven
        );
        assert_eq!(
            "4, 2".parse::<GeneratorProfile>().unwrap(),
            GeneratorProfile::Finite(vec![2, 4])
        );
        assert!("2,x".parse::<GeneratorProfile>().is_err());
        assert!("0".parse::<GeneratorProfile>().is_err());
        assert_eq!(GeneratorProfile::even_up_to(2).to_string(), "{2,4}");
    }

    #[test]
    fn csv_output() {
        let mut buf = Vec::new();
        QSeries::new(vec![1, 0, 1]).write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "weight,coefficient\n0,1\n1,0\n2,1\n"
        );
    }
}
