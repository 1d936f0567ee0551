//! Univariate rational functions in normal form.

use std::fmt;

use num_traits::Zero;

use super::expr::parse_with_symbols;
use super::scalar::ExactScalar;
use super::upoly::UPoly;
use super::AlgebraError;

/// `num / den` with `gcd(num, den) = 1` and `den` a primitive integer
/// polynomial with positive leading coefficient. Two rational functions are
/// equal iff their normal forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    pub var: String,
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(var: &str, num: UPoly, den: UPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::IdenticallyZero);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_zero() || g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g).unwrap(), den.exact_div(&g).unwrap())
        };
        if num.is_zero() {
            den = UPoly::one();
        }
        let (_, k) = den.primitive_integer();
        let inv = k.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
        Ok(RatFunc {
            var: var.to_string(),
            num,
            den,
        })
    }

    pub fn from_poly(var: &str, p: UPoly) -> Self {
        Self::new(var, p, UPoly::one()).expect("nonzero denominator")
    }

    pub fn constant(var: &str, c: ExactScalar) -> Self {
        Self::from_poly(var, UPoly::constant(c))
    }

    /// Parses an expression in `var`, with the given symbols replaced by
    /// their values first.
    pub fn parse(
        s: &str,
        var: &str,
        symbols: &[(&str, ExactScalar)],
    ) -> Result<Self, AlgebraError> {
        let e = parse_with_symbols(s, &[var], symbols)?;
        let num = e.num.to_upoly(0).expect("single variable");
        let den = e.den.to_upoly(0).expect("single variable");
        Self::new(var, num, den)
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &ExactScalar) -> Option<ExactScalar> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn recip(&self) -> Result<Self, AlgebraError> {
        Self::new(&self.var, self.den.clone(), self.num.clone())
    }

    /// `(deg num, deg den)`; the zero function counts as degree 0.
    pub fn degrees(&self) -> (usize, usize) {
        (
            self.num.degree().unwrap_or(0),
            self.den.degree().unwrap_or(0),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(
            &self.var,
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .unwrap()
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(
            &self.var,
            &(&self.num * &o.den) - &(&o.num * &self.den),
            &self.den * &o.den,
        )
        .unwrap()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.var, &self.num * &o.num, &self.den * &o.den).unwrap()
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgebraError> {
        Self::new(&self.var, &self.num * &o.den, &self.den * &o.num)
    }

    /// Numerator of `self - c`, i.e. `num - c·den`.
    pub fn level_numerator(&self, c: &ExactScalar) -> UPoly {
        &self.num - &self.den.scale(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.display_with(&self.var);
        if self.den.is_constant() {
            return f.write_str(&n);
        }
        write!(f, "({n})/({})", self.den.display_with(&self.var))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::{int, ratio};

    #[test]
    fn normal_form() {
        // (2k - 2)/(4k^2 - 4) = 1/(2k + 2)
        let f = RatFunc::new(
            "k",
            UPoly::from_ints(&[-2, 2]),
            UPoly::from_ints(&[-4, 0, 4]),
        )
        .unwrap();
        assert_eq!(f.num(), &UPoly::constant(ratio(1, 2)));
        assert_eq!(f.den(), &UPoly::from_ints(&[1, 1]));
        assert_eq!(f.to_string(), "(1/2)/(k + 1)");
        let g = RatFunc::parse("(k - 1)/(2*k^2 - 2)", "k", &[]).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn denominator_sign_and_content() {
        let f = RatFunc::parse("3/(-6*k - 3)", "k", &[]).unwrap();
        assert_eq!(f.den(), &UPoly::from_ints(&[1, 2]));
        assert_eq!(f.num(), &UPoly::constant(int(-1)));
        assert_eq!(f.eval(&ratio(-1, 2)), None);
        assert_eq!(f.eval(&int(1)), Some(ratio(-1, 3)));
    }

    #[test]
    fn arithmetic() {
        let a = RatFunc::parse("(2*k - 1)/(k + 1)", "k", &[]).unwrap();
        let b = RatFunc::parse("1/(k + 1)", "k", &[]).unwrap();
        assert_eq!(a.add(&b), RatFunc::parse("2*k/(k + 1)", "k", &[]).unwrap());
        assert_eq!(a.sub(&a), RatFunc::constant("k", int(0)));
        assert_eq!(a.mul(&b).div(&b).unwrap(), a);
        assert!(RatFunc::parse("1/(k - k)", "k", &[]).is_err());
    }
}
