//! Sparse multivariate polynomials with an explicit variable list.
//!
//! Terms are keyed by exponent vectors in a `BTreeMap`, so the map order is
//! the lexicographic monomial order and the last entry is the lex-leading
//! term. Binary operations require identical variable lists.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::scalar::{gcd_of_numerators, lcm_of_denominators, ExactScalar};
use super::upoly::UPoly;

pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, ExactScalar>,
}

impl MPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        MPoly {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: ExactScalar) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, ExactScalar::one())
    }

    /// The polynomial consisting of the single variable `name`.
    ///
    /// Panics if `name` is not in `vars`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Self {
        let mut p = Self::zero(vars);
        let i = p
            .var_index(name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; p.vars.len()];
        e[i] = 1;
        p.terms.insert(e, ExactScalar::one());
        p
    }

    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Exponents, ExactScalar)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    /// Embeds a univariate polynomial as a polynomial in `vars[idx]`.
    pub fn from_upoly<S: AsRef<str>>(vars: &[S], idx: usize, u: &UPoly) -> Self {
        let n = vars.len();
        Self::from_terms(
            vars,
            u.coeffs().iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; n];
                e[idx] = i as u32;
                (e, c.clone())
            }),
        )
    }

    fn add_term(&mut self, e: Exponents, c: ExactScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &ExactScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<ExactScalar> {
        if !self.is_constant() {
            return None;
        }
        Some(
            self.terms
                .values()
                .next()
                .cloned()
                .unwrap_or_else(ExactScalar::zero),
        )
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|e| e[idx]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Indices of variables that actually occur.
    pub fn occurring_vars(&self) -> Vec<usize> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(&Exponents, &ExactScalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        if s.is_zero() {
            return Self::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[ExactScalar]) -> ExactScalar {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = ExactScalar::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitutes `vars[idx] = value`; the variable stays in the list with
    /// exponent zero everywhere.
    pub fn substitute(&self, idx: usize, value: &ExactScalar) -> Self {
        let mut out = Self::zero(&self.vars);
        let mut powers: Vec<ExactScalar> = vec![ExactScalar::one()];
        for (e, c) in &self.terms {
            while powers.len() <= e[idx] as usize {
                let next = powers.last().unwrap() * value;
                powers.push(next);
            }
            let mut e2 = e.clone();
            e2[idx] = 0;
            out.add_term(e2, c * &powers[e[idx] as usize]);
        }
        out
    }

    /// Coefficients with respect to `vars[idx]`, ascending. Each coefficient
    /// keeps the full variable list with exponent zero in `idx`.
    pub fn coeffs_in(&self, idx: usize) -> Vec<MPoly> {
        let mut out = vec![Self::zero(&self.vars); self.degree_in(idx) as usize + 1];
        if self.is_zero() {
            return Vec::new();
        }
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[idx], 0) as usize;
            out[k].terms.insert(e2, c.clone());
        }
        out
    }

    pub fn from_coeffs_in(vars: &[String], idx: usize, coeffs: &[MPoly]) -> Self {
        let mut out = Self::zero(vars);
        for (k, c) in coeffs.iter().enumerate() {
            for (e, v) in &c.terms {
                debug_assert_eq!(e[idx], 0);
                let mut e2 = e.clone();
                e2[idx] = k as u32;
                out.add_term(e2, v.clone());
            }
        }
        out
    }

    /// Converts to a dense univariate polynomial in `vars[idx]`, if no other
    /// variable occurs.
    pub fn to_upoly(&self, idx: usize) -> Option<UPoly> {
        let mut coeffs = vec![ExactScalar::zero(); self.degree_in(idx) as usize + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(i, &k)| i != idx && k > 0) {
                return None;
            }
            coeffs[e[idx] as usize] = c.clone();
        }
        Some(UPoly::from_coeffs(coeffs))
    }

    /// The univariate polynomial when at most one variable occurs.
    pub fn as_univariate(&self) -> Option<(Option<usize>, UPoly)> {
        let occ = self.occurring_vars();
        match occ.as_slice() {
            [] => Some((None, UPoly::constant(self.constant_value().unwrap()))),
            [i] => Some((Some(*i), self.to_upoly(*i).unwrap())),
            _ => None,
        }
    }

    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[idx] -= 1;
            out.add_term(e2, c * ExactScalar::from_integer(BigInt::from(e[idx])));
        }
        out
    }

    /// Same polynomial over a different variable list. `map[i]` gives the
    /// position of `self.vars[i]` in `new_vars`; variables mapped to `None`
    /// must not occur.
    pub fn remap<S: AsRef<str>>(&self, new_vars: &[S], map: &[Option<usize>]) -> Self {
        let mut out = Self::zero(new_vars);
        let n = out.vars.len();
        for (e, c) in &self.terms {
            let mut e2 = vec![0; n];
            for (i, &k) in e.iter().enumerate() {
                match map[i] {
                    Some(j) => e2[j] += k,
                    None => assert_eq!(k, 0, "dropped variable {} occurs", self.vars[i]),
                }
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// Re-expresses over `new_vars` by name; every occurring variable must be
    /// present in `new_vars`.
    pub fn with_vars<S: AsRef<str>>(&self, new_vars: &[S]) -> Self {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| new_vars.iter().position(|w| w.as_ref() == v))
            .collect();
        self.remap(new_vars, &map)
    }

    /// Exact division by lex-leading terms; `None` if `d` does not divide.
    pub fn exact_div(&self, d: &MPoly) -> Option<MPoly> {
        assert_eq!(self.vars, d.vars, "variable lists differ");
        let (dlm, dlc) = d.leading_term().expect("division by zero polynomial");
        let (dlm, dlc_inv) = (dlm.clone(), dlc.recip());
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((rlm, rlc)) = rem.leading_term() {
            if rlm.iter().zip(&dlm).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponents = rlm.iter().zip(&dlm).map(|(a, b)| a - b).collect();
            let qc = rlc * &dlc_inv;
            for (e, c) in &d.terms {
                let e2: Exponents = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(e2, -(c * &qc));
            }
            quot.add_term(qe, qc);
        }
        Some(quot)
    }

    /// Integer-coefficient representative with content one and a positive
    /// lex-leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = lcm_of_denominators(self.terms.values());
        let scaled: Vec<ExactScalar> = self
            .terms
            .values()
            .map(|c| c * ExactScalar::from_integer(l.clone()))
            .collect();
        let mut g = gcd_of_numerators(&scaled);
        if self.leading_term().unwrap().1.is_negative() {
            g = -g;
        }
        self.scale(&ExactScalar::new(l, g))
    }

    /// Lex-leading coefficient one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], k)
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", mag, mono.join("*")));
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.vars, rhs.vars, "variable lists differ");
        let mut out = MPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponents = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}
