//! Exact computations on truncation curves of orthogonal W-algebras.

pub mod characters;
pub mod curves;
pub mod exactalg;
pub mod intersect;
