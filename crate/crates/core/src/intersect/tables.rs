//! The classification lists as closed-form expressions in (m, n).
//!
//! Every expression is kept as text exactly as printed, so the tables can be
//! audited line by line against the source.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::exactalg::expr::parse_rational;
use crate::exactalg::scalar::int;
use crate::exactalg::{AlgebraError, ExactScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// D(n) against the Z2-orbifold of the so(2m) principal W-algebra.
    T41,
    /// D(n) against the so(2m+1) principal W-algebra.
    T42,
    /// D(m) against D(n).
    T43,
}

impl Theorem {
    pub fn as_str(&self) -> &'static str {
        match self {
            Theorem::T41 => "T41",
            Theorem::T42 => "T42",
            Theorem::T43 => "T43",
        }
    }

    /// Whether the theorem is stated at (m, n).
    pub fn covers(&self, m: i64, n: i64) -> bool {
        match self {
            Theorem::T41 => m >= 2 && n >= 1,
            Theorem::T42 => m >= 1 && n >= 1,
            Theorem::T43 => m >= 1 && n >= 1 && m != n,
        }
    }

    /// Family tag of the curve carrying ℓ. The k side is always D.
    pub fn partner_tag(&self) -> &'static str {
        match self {
            Theorem::T41 => "so_even",
            Theorem::T42 => "so_odd",
            Theorem::T43 => "D",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "T41" => Ok(Theorem::T41),
            "T42" => Ok(Theorem::T42),
            "T43" => Ok(Theorem::T43),
            other => Err(format!(
                "unknown theorem {other:?} (expected T41, T42 or T43)"
            )),
        }
    }
}

/// A printed coupling expression in `m, n, f, g, h` with its auxiliary
/// polynomials in `m, n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedLambda {
    pub expr: &'static str,
    pub f: &'static str,
    pub g: &'static str,
    pub h: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub number: u32,
    pub k: &'static str,
    pub l: &'static str,
    pub c: Option<&'static str>,
    pub lambda: Option<PrintedLambda>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremTable {
    pub theorem: Theorem,
    pub items: Vec<Item>,
}

/// Value of an expression in `m, n` (and optionally more symbols), or
/// `None` where its denominator vanishes.
pub fn eval_mn(expr: &str, m: i64, n: i64) -> Result<Option<ExactScalar>, AlgebraError> {
    eval_with(expr, &[("m", int(m)), ("n", int(n))])
}

pub fn eval_with(
    expr: &str,
    symbols: &[(&str, ExactScalar)],
) -> Result<Option<ExactScalar>, AlgebraError> {
    let names: Vec<&str> = symbols.iter().map(|(s, _)| *s).collect();
    let e = parse_rational(expr, &names)?;
    let point: Vec<ExactScalar> = symbols.iter().map(|(_, v)| v.clone()).collect();
    let den = e.den.eval(&point);
    if den.is_zero() {
        return Ok(None);
    }
    Ok(Some(e.num.eval(&point) / den))
}

/// f, g, h and the printed value at (m, n). `None` entries are where the
/// printed expression's denominator vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedLambdaValue {
    pub f: ExactScalar,
    pub g: ExactScalar,
    pub h: ExactScalar,
    pub value: Option<ExactScalar>,
}

impl PrintedLambda {
    pub fn eval(&self, m: i64, n: i64) -> Result<PrintedLambdaValue, AlgebraError> {
        self.eval_expr(self.expr, m, n)
    }

    /// Evaluates an alternative expression over the same f, g, h.
    pub fn eval_expr(
        &self,
        expr: &str,
        m: i64,
        n: i64,
    ) -> Result<PrintedLambdaValue, AlgebraError> {
        let poly = |s: &str| eval_mn(s, m, n).map(|v| v.expect("polynomial"));
        let (f, g, h) = (poly(self.f)?, poly(self.g)?, poly(self.h)?);
        let value = eval_with(
            expr,
            &[
                ("m", int(m)),
                ("n", int(n)),
                ("f", f.clone()),
                ("g", g.clone()),
                ("h", h.clone()),
            ],
        )?;
        Ok(PrintedLambdaValue { f, g, h, value })
    }
}

const LAMBDA1: PrintedLambda = PrintedLambda {
    expr: "(m + n - 1)*(2*m + 2*n - 1)*g/(7*(m - 1)*(2*m + n - 1)*(2*n - 1)*g*h)",
    f: "-28 + 94*m - 62*m^2 - 52*m^3 + 48*m^4 + 186*n - 668*m*n + 857*m^2*n - 504*m^3*n \
        + 144*m^4*n - 430*n^2 + 1267*m*n^2 - 1198*m^2*n^2 + 376*m^3*n^2 + 408*n^3 - 772*m*n^3 \
        + 304*m^2*n^3 - 136*n^4 + 76*m*n^4",
    g: "10 - 19*m + 12*m^2 - 21*n + 28*m*n + 14*n^2",
    h: "22 - 66*m + 44*m^2 - 66*n + 73*m*n + 20*m^2*n + 44*n^2 + 10*m*n^2",
};

/// The printed first coupling with `f` in place of the numerator `g`.
pub const LAMBDA1_F_REPAIR: &str =
    "(m + n - 1)*(2*m + 2*n - 1)*f/(7*(m - 1)*(2*m + n - 1)*(2*n - 1)*g*h)";

const LAMBDA2: PrintedLambda = PrintedLambda {
    expr: "(1 - 2*m + 2*n)*f/(7*(1 - 2*m + 2*m*n)*(-1 - 2*n + 4*m*n)*g*h)",
    f:
        "14 - 33*m - 2*m^2 + 24*m^3 + 74*n - 404*m*n + 873*m^2*n - 696*m^3*n + 144*m^4*n \
        + 80*n^2 - 178*m*n^2 - 260*m^2*n^2 + 452*m^3*n^2 - 112*m^4*n^2 - 24*n^3 + 264*m*n^3 \
        - 348*m^2*n^3 + 256*m^3*n^3 - 64*m^4*n^3 + 72*m*n^4 - 128*m^2*n^4 - 48*m^3*n^4 + 32*m^4*n^4",
    g: "-10 + 19*m - 12*m^2 - 2*n + 22*m*n - 8*m^2*n - 12*n^2 - 8*m*n^2 + 8*m^2*n^2",
    h: "11 - 22*m + 22*n + 15*m*n - 20*m^2*n - 10*m*n^2 + 20*m^2*n^2",
};

const LAMBDA3: PrintedLambda = PrintedLambda {
    expr: "(n - m)*f/(7*(m - 1)*(2*n - 1)*(m - n + 2*m*n)*g*h)",
    f: "-34*m^3 + 19*m^4 + 68*m^2*n - 38*m^3*n - 22*m*n^2 - 185*m^2*n^2 + 302*m^3*n^2 \
        - 80*m^4*n^2 - 12*n^3 + 204*m*n^3 - 302*m^2*n^3 + 80*m^3*n^3 - 36*n^4 + 100*m*n^4 \
        - 40*m^2*n^4 - 40*m^3*n^4 + 16*m^4*n^4",
    g: "-7*m^2 + 7*m*n - 6*n^2 - 4*m*n^2 + 4*m^2*n^2",
    h: "-22*m - 5*m^2 + 22*n + 5*m*n + 10*n^2 - 30*m*n^2 + 20*m^2*n^2",
};

pub fn theorem_table(theorem: Theorem) -> TheoremTable {
    let items = match theorem {
        Theorem::T41 => vec![
            Item {
                number: 1,
                k: "2*m",
                l: "-(2*m - 2) + (2*n + 2*m - 2)/(2*n + 2*m - 1)",
                c: Some("m*n*(4*m + 2*n - 3)/((m + n - 1)*(2*m + 2*n - 1))"),
                lambda: Some(LAMBDA1),
            },
            Item {
                number: 2,
                k: "-(2*n - 2) - (2*n - 1)/(2*(m - 1))",
                l: "-(2*m - 2) + (2*m - 2*n - 1)/(2*(m - 1))",
                c: Some("-2*m*n*(3 - 4*m - 2*n + 4*m*n)/(2*m - 2*n - 1)"),
                lambda: Some(LAMBDA2),
            },
            Item {
                number: 3,
                k: "-(2*n - 2) + (n - m)/m",
                l: "-(2*m - 2) + (m - n)/m",
                c: Some("-(2*m*n + m - 2*n)*(2*m*n - m - n)/(m - n)"),
                lambda: Some(LAMBDA3),
            },
        ],
        Theorem::T42 => {
            let item = |number, k, l| Item {
                number,
                k,
                l,
                c: None,
                lambda: None,
            };
            vec![
                item(
                    1,
                    "-(2*n - 2) + (2*n + 2*m - 1)/2",
                    "-(2*m - 1) + (2*m + 2*n - 1)/(2*m + 2*n + 1)",
                ),
                item(
                    2,
                    "-(2*n - 2) + (2*n - 2*m - 1)/(2*m + 2)",
                    "-(2*m - 1) + (2*m - 2*n + 1)/(2*m + 2)",
                ),
                item(3, "-(2*n - 2) - n/m", "-(2*m - 1) + (m - n)/m"),
                item(
                    4,
                    "-(2*n - 2) - 2*(n - 1)/(2*m - 1)",
                    "-(2*m - 1) + (2*m - 1)/(2*m - 2*n + 1)",
                ),
                item(
                    5,
                    "-(2*n - 2) + 2*(n - m - 1)/(2*m + 1)",
                    "-(2*m - 1) + (2*m + 1)/(2*(m - n + 1))",
                ),
            ]
        }
        Theorem::T43 => vec![
            Item {
                number: 1,
                k: "-(2*m - 2) + 2*(m - 1)/(1 + 2*n)",
                l: "-(2*n - 2) - (2*m + 2*n - 1)/(2*(m - 1))",
                c: None,
                lambda: None,
            },
            Item {
                number: 2,
                k: "-(2*m - 2) - (2*m + 2*n - 1)/(2*(n - 1))",
                l: "-(2*n - 2) + 2*(n - 1)/(1 + 2*m)",
                c: None,
                lambda: None,
            },
        ],
    };
    TheoremTable { theorem, items }
}
