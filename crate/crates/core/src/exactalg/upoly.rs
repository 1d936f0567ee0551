//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::scalar::{gcd_of_numerators, lcm_of_denominators, ExactScalar};

/// Coefficients in ascending degree order, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct UPoly {
    coeffs: Vec<ExactScalar>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(ExactScalar::one())
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_coeffs(vec![ExactScalar::zero(), ExactScalar::one()])
    }

    /// `x - r`
    pub fn linear_root(r: &ExactScalar) -> Self {
        Self::from_coeffs(vec![-r.clone(), ExactScalar::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| super::scalar::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> ExactScalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> ExactScalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(ExactScalar::zero)
    }

    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        let mut acc = ExactScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        UPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * ExactScalar::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc_inv = d.lc().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut quot = vec![ExactScalar::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let f = &rem[i] * &lc_inv;
            if f.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &f * dc;
                rem[i - dd + j] -= t;
            }
            quot[i - dd] = f;
        }
        rem.truncate(dd);
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.div_rem(d).1
    }

    /// `self / d` when the division is exact.
    pub fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &UPoly) -> (UPoly, UPoly, UPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UPoly::one(), UPoly::zero());
        let (mut t0, mut t1) = (UPoly::zero(), UPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().recip();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse of `self` modulo `m`, if it exists.
    pub fn inverse_mod(&self, m: &UPoly) -> Option<UPoly> {
        let (g, s, _) = self.rem(m).ext_gcd(m);
        (g.degree() == Some(0)).then(|| s.rem(m))
    }

    /// `self / gcd(self, self')`, monic. Constants map to one.
    pub fn square_free_part(&self) -> UPoly {
        if self.is_constant() {
            return UPoly::one();
        }
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    /// Integer coefficients with gcd one and positive leading coefficient,
    /// together with the rational factor `k` such that `self = k · result`.
    pub fn primitive_integer(&self) -> (Vec<BigInt>, ExactScalar) {
        if self.is_zero() {
            return (Vec::new(), ExactScalar::zero());
        }
        let l = lcm_of_denominators(&self.coeffs);
        let scaled: Vec<ExactScalar> = self
            .coeffs
            .iter()
            .map(|c| c * ExactScalar::from_integer(l.clone()))
            .collect();
        let mut g = gcd_of_numerators(&scaled);
        if self.lc().is_negative() {
            g = -g;
        }
        let ints = scaled.iter().map(|c| c.numer() / &g).collect();
        (ints, ExactScalar::new(g, l))
    }

    /// The normalized representative: integer content one, positive leading
    /// coefficient.
    pub fn primitive(&self) -> UPoly {
        let (ints, _) = self.primitive_integer();
        UPoly::from_coeffs(ints.into_iter().map(ExactScalar::from_integer).collect())
    }

    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a ExactScalar>) -> UPoly {
        roots
            .into_iter()
            .fold(UPoly::one(), |acc, r| &acc * &UPoly::linear_root(r))
    }

    /// Renders with the given variable name, highest degree first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![ExactScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::{int, ratio};

    #[test]
    fn division_identity() {
        let a = UPoly::from_ints(&[5, -3, 0, 2, 7]);
        let b = UPoly::from_ints(&[1, 0, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_of_products() {
        let common = UPoly::from_ints(&[-2, 0, 1]);
        let a = &common * &UPoly::from_ints(&[3, 1]);
        let b = &common * &UPoly::from_ints(&[1, 0, 1]);
        assert_eq!(a.gcd(&b), common);
        assert_eq!(UPoly::zero().gcd(&UPoly::zero()), UPoly::zero());
    }

    #[test]
    fn square_free() {
        let p = &UPoly::from_ints(&[-1, 1]).pow(3) * &UPoly::from_ints(&[2, 1]);
        assert_eq!(p.square_free_part(), UPoly::from_ints(&[-2, 1, 1]));
    }

    #[test]
    fn primitive_form() {
        let p = UPoly::from_coeffs(vec![ratio(-3, 2), ratio(-3, 4)]);
        let (ints, k) = p.primitive_integer();
        assert_eq!(ints, vec![BigInt::from(2), BigInt::from(1)]);
        assert_eq!(k, ratio(-3, 4));
    }

    #[test]
    fn modular_inverse() {
        let m = UPoly::from_ints(&[2, 0, 1]);
        let a = UPoly::from_ints(&[1, 1]);
        let inv = a.inverse_mod(&m).unwrap();
        assert_eq!((&a * &inv).rem(&m), UPoly::one());
        assert!(UPoly::from_ints(&[0, 0, 1])
            .inverse_mod(&UPoly::from_ints(&[0, 1]))
            .is_none());
    }

    #[test]
    fn display() {
        assert_eq!(
            UPoly::from_ints(&[6, 9, 6]).display_with("k"),
            "6*k^2 + 9*k + 6"
        );
        assert_eq!(UPoly::from_ints(&[-1, 0, -1]).to_string(), "-x^2 - 1");
        assert_eq!(
            UPoly::from_roots(&[int(1), int(-1)]),
            UPoly::from_ints(&[-1, 0, 1])
        );
    }
}
