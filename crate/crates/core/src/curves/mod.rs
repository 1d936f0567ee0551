//! Truncation curves: rational parametrizations `t ↦ (c(t), λ(t))`.

mod config;
mod dfamily;
mod fit;
mod implicit;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::roots::find_roots;
use crate::exactalg::{AlgebraError, ExactScalar, RatFunc, UPoly};

pub use config::{load_curves, serialize_curves, ConfigError};
pub use dfamily::{
    critical_levels, d_curve, d_curve_with, lambda_direct, lambda_direct_with, Transcription,
};
pub use fit::fit_curve;
pub use implicit::implicitize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// The coset family, indexed by n ≥ 1.
    D(u32),
    /// Curve data supplied from outside, e.g. `so_even` with index m.
    External { tag: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExclusionReason {
    Critical,
    PoleOfC,
    PoleOfLambda,
}

impl ExclusionReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Critical => "critical",
            Self::PoleOfC => "pole_of_c",
            Self::PoleOfLambda => "pole_of_lambda",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "critical" => Some(Self::Critical),
            "pole_of_c" => Some(Self::PoleOfC),
            "pole_of_lambda" => Some(Self::PoleOfLambda),
            _ => None,
        }
    }
}

impl fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exclusion {
    pub value: ExactScalar,
    pub reason: ExclusionReason,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("{0}")]
    Domain(String),
    #[error("parameter {value} is excluded ({reason})")]
    Pole {
        value: ExactScalar,
        reason: ExclusionReason,
    },
    #[error("curve has a constant coordinate")]
    Constant,
    #[error(
        "extraneous-factor test is inconclusive: factor {0} vanishes on some sampled points only"
    )]
    MixedFactor(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A rationally parametrized truncation curve.
///
/// `excluded` holds every rational pole of `c` and `lambda` plus any
/// critical levels, sorted by value, one reason per value. Irrational poles
/// are carried as `irrational_pole_factor`, which has no rational roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationCurve {
    pub name: String,
    pub family: Family,
    /// Named integer indices, e.g. `[("n", 2)]`, sorted by name.
    pub indices: Vec<(String, i64)>,
    pub param: String,
    pub c: RatFunc,
    pub lambda: RatFunc,
    pub excluded: Vec<Exclusion>,
    pub irrational_pole_factor: UPoly,
}

/// Rational poles of `c` and `lambda` with their reasons, and the
/// rational-root-free part of the pole locus.
pub(crate) fn pole_data(c: &RatFunc, lambda: &RatFunc) -> (Vec<Exclusion>, UPoly) {
    let mut out = Vec::new();
    for r in find_roots(c.den()).rational_roots {
        out.push(Exclusion {
            value: r.0,
            reason: ExclusionReason::PoleOfC,
        });
    }
    let lr = find_roots(lambda.den());
    for r in lr.rational_roots {
        out.push(Exclusion {
            value: r.0,
            reason: ExclusionReason::PoleOfLambda,
        });
    }
    let cr = find_roots(c.den()).residual;
    let irr = (&cr * &lr.residual).square_free_part();
    (out, irr)
}

/// Merges exclusions keeping one entry per value; earlier reasons in the
/// order critical, pole_of_c, pole_of_lambda win.
pub(crate) fn merge_exclusions(mut xs: Vec<Exclusion>) -> Vec<Exclusion> {
    xs.sort_by(|a, b| a.value.cmp(&b.value).then(a.reason.cmp(&b.reason)));
    xs.dedup_by(|b, a| a.value == b.value);
    xs
}

impl TruncationCurve {
    /// Builds a curve, computing its pole exclusions. `critical` values are
    /// added with reason critical.
    pub fn new(
        name: &str,
        family: Family,
        indices: Vec<(String, i64)>,
        c: RatFunc,
        lambda: RatFunc,
        critical: &[ExactScalar],
    ) -> Self {
        let (mut ex, irr) = pole_data(&c, &lambda);
        ex.extend(critical.iter().map(|v| Exclusion {
            value: v.clone(),
            reason: ExclusionReason::Critical,
        }));
        let mut indices = indices;
        indices.sort();
        TruncationCurve {
            name: name.to_string(),
            family,
            indices,
            param: c.var.clone(),
            c,
            lambda,
            excluded: merge_exclusions(ex),
            irrational_pole_factor: irr,
        }
    }

    pub fn index(&self, name: &str) -> Option<i64> {
        self.indices
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| *v)
    }

    pub fn exclusion(&self, t: &ExactScalar) -> Option<ExclusionReason> {
        self.excluded
            .iter()
            .find(|e| &e.value == t)
            .map(|e| e.reason)
    }

    /// Family tag used for partner lookup: `"D"` or the external tag.
    pub fn family_tag(&self) -> &str {
        match &self.family {
            Family::D(_) => "D",
            Family::External { tag } => tag,
        }
    }
}

/// Exact point of `curve` at parameter `t`.
pub fn eval_curve(
    curve: &TruncationCurve,
    t: &ExactScalar,
) -> Result<(ExactScalar, ExactScalar), CurveError> {
    if let Some(reason) = curve.exclusion(t) {
        return Err(CurveError::Pole {
            value: t.clone(),
            reason,
        });
    }
    // a rational t never hits an irrational pole; these are belt and braces
    let c = curve.c.eval(t).ok_or(CurveError::Pole {
        value: t.clone(),
        reason: ExclusionReason::PoleOfC,
    })?;
    let l = curve.lambda.eval(t).ok_or(CurveError::Pole {
        value: t.clone(),
        reason: ExclusionReason::PoleOfLambda,
    })?;
    Ok((c, l))
}
