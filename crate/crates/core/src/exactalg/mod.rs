//! Exact algebra over ℚ: scalars, polynomials, resultants, root finding,
//! rational functions and interpolation.

pub mod elim;
pub mod expr;
pub mod interp;
pub mod linalg;
pub mod mpoly;
pub mod ratfunc;
pub mod roots;
pub mod scalar;
pub mod upoly;

pub use elim::{gcd, resultant};
pub use expr::{parse_poly, parse_rational, RatExpr};
pub use interp::interpolate_ratfunc;
pub use mpoly::MPoly;
pub use ratfunc::RatFunc;
pub use roots::{find_roots, RootReport};
pub use scalar::{format_scalar, parse_scalar, ExactScalar};
pub use upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no elimination variable {0:?}")]
    NoEliminationVariable(String),
    #[error("polynomial is identically zero")]
    IdenticallyZero,
    #[error("inconsistent data")]
    InconsistentData,
    #[error("degree bounds too small")]
    DegreeBoundsTooSmall,
    #[error("need at least {needed} points, got {got}")]
    InsufficientPoints { needed: usize, got: usize },
}
