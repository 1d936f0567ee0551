//! Parser for polynomial and rational expressions.
//!
//! Grammar: `+ - * / ^`, parentheses, integer literals and identifiers from a
//! fixed variable list. Exponents must be non-negative integer literals.
//! Implicit multiplication is not accepted.

use num_bigint::BigInt;

use super::mpoly::MPoly;
use super::scalar::ExactScalar;
use super::AlgebraError;

/// A quotient of two polynomials over the same variables, not reduced.
#[derive(Clone, Debug)]
pub struct RatExpr {
    pub num: MPoly,
    pub den: MPoly,
}

impl RatExpr {
    fn poly(p: MPoly) -> Self {
        let den = MPoly::one(p.vars());
        RatExpr { num: p, den }
    }

    fn add(&self, o: &RatExpr, sign: bool) -> RatExpr {
        let a = &self.num * &o.den;
        let b = &o.num * &self.den;
        RatExpr {
            num: if sign { &a + &b } else { &a - &b },
            den: &self.den * &o.den,
        }
    }

    fn mul(&self, o: &RatExpr) -> RatExpr {
        RatExpr {
            num: &self.num * &o.num,
            den: &self.den * &o.den,
        }
    }

    fn div(&self, o: &RatExpr) -> Result<RatExpr, AlgebraError> {
        if o.num.is_zero() {
            return Err(AlgebraError::Parse("division by zero".into()));
        }
        Ok(RatExpr {
            num: &self.num * &o.den,
            den: &self.den * &o.num,
        })
    }

    fn pow(&self, e: u32) -> RatExpr {
        RatExpr {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Returns the polynomial when the denominator is a nonzero constant.
    pub fn into_poly(self) -> Option<MPoly> {
        let d = self.den.constant_value()?;
        Some(self.num.scale(&d.recip()))
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>, AlgebraError> {
    let mut out = Vec::new();
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            if i < cs.len() && cs[i] == '.' {
                return Err(AlgebraError::Parse(format!(
                    "decimal literal in {s:?}; use p/q"
                )));
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().expect("digits")));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(AlgebraError::Parse(format!("unexpected {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{msg} at token {}", self.pos))
    }

    fn expr(&mut self) -> Result<RatExpr, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?, true);
            } else if self.eat('-') {
                acc = acc.add(&self.term()?, false);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatExpr, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                acc = acc.div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatExpr, AlgebraError> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(RatExpr {
                num: -&v.num,
                den: v.den,
            });
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatExpr, AlgebraError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RatExpr, AlgebraError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(RatExpr::poly(MPoly::constant(
                    self.vars,
                    ExactScalar::from_integer(n),
                )))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if !self.vars.iter().any(|v| v == &name) {
                    return Err(AlgebraError::Parse(format!("unknown symbol {name:?}")));
                }
                Ok(RatExpr::poly(MPoly::var(self.vars, &name)))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            _ => Err(self.err("expected operand")),
        }
    }
}

/// Parses a rational expression over `vars`.
pub fn parse_rational<S: AsRef<str>>(s: &str, vars: &[S]) -> Result<RatExpr, AlgebraError> {
    let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
    let mut p = Parser {
        toks: lex(s)?,
        pos: 0,
        vars: &vars,
    };
    if p.toks.is_empty() {
        return Err(AlgebraError::Parse("empty expression".into()));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    if e.den.is_zero() {
        return Err(AlgebraError::Parse("division by zero".into()));
    }
    Ok(e)
}

/// Parses a polynomial; division is allowed only by nonzero constants.
pub fn parse_poly<S: AsRef<str>>(s: &str, vars: &[S]) -> Result<MPoly, AlgebraError> {
    parse_rational(s, vars)?
        .into_poly()
        .ok_or_else(|| AlgebraError::Parse(format!("not a polynomial: {s:?}")))
}

/// Parses over `vars ∪ symbols`, then substitutes the symbol values.
/// The result lives over `vars` only.
pub fn parse_with_symbols<S: AsRef<str>>(
    s: &str,
    vars: &[S],
    symbols: &[(&str, ExactScalar)],
) -> Result<RatExpr, AlgebraError> {
    let mut all: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
    let nv = all.len();
    all.extend(symbols.iter().map(|(n, _)| n.to_string()));
    let e = parse_rational(s, &all)?;
    let sub = |p: &MPoly| {
        let mut q = p.clone();
        for (i, (_, v)) in symbols.iter().enumerate() {
            q = q.substitute(nv + i, v);
        }
        q.with_vars(&all[..nv])
    };
    let (num, den) = (sub(&e.num), sub(&e.den));
    if den.is_zero() {
        return Err(AlgebraError::Parse(format!(
            "denominator of {s:?} vanishes at the given symbol values"
        )));
    }
    Ok(RatExpr { num, den })
}
