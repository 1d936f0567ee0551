//! Labelling intersection points by the exclusion rules.

use std::fmt;

use super::{
    intersect_curves, IntersectError, Intersection, IntersectionPoint, Preimage,
    ResidualCertificate,
};
use crate::curves::{d_curve, ExclusionReason, TruncationCurve};
use crate::exactalg::scalar::ratio;
use crate::exactalg::ExactScalar;

/// Central charges at which curve intersections do not certify
/// isomorphisms.
pub const DEGENERATE_C: [(i64, i64); 2] = [(1, 2), (-24, 1)];

pub fn is_degenerate_c(c: &ExactScalar) -> bool {
    DEGENERATE_C.iter().any(|&(p, q)| c == &ratio(p, q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Nontrivial,
    DegenerateC,
    ExcludedPole,
    CriticalLevel,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Nontrivial => "nontrivial",
            Status::DegenerateC => "degenerate_c",
            Status::ExcludedPole => "excluded_pole",
            Status::CriticalLevel => "critical_level",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoincidenceRecord {
    pub a: String,
    pub b: String,
    pub point: IntersectionPoint,
    pub status: Status,
}

impl CoincidenceRecord {
    /// The pair of levels when both are rational.
    pub fn levels(&self) -> Option<(&ExactScalar, &ExactScalar)> {
        Some((
            self.point.preimage_a.as_rational()?,
            self.point.preimage_b.as_rational()?,
        ))
    }
}

fn exclusion_of(curve: &TruncationCurve, p: &Preimage) -> Option<ExclusionReason> {
    p.as_rational().and_then(|t| curve.exclusion(t))
}

/// Status of a point: critical level first, then poles (an excluded
/// preimage, or a coordinate at infinity), then degenerate central charge.
pub fn status_of(p: &IntersectionPoint, a: &TruncationCurve, b: &TruncationCurve) -> Status {
    let ex = [
        exclusion_of(a, &p.preimage_a),
        exclusion_of(b, &p.preimage_b),
    ];
    if ex.contains(&Some(ExclusionReason::Critical)) {
        return Status::CriticalLevel;
    }
    if ex.iter().any(Option::is_some) || p.c.is_none() || p.lambda.is_none() {
        return Status::ExcludedPole;
    }
    if p.c.as_ref().is_some_and(is_degenerate_c) {
        return Status::DegenerateC;
    }
    Status::Nontrivial
}

pub fn filter(
    points: &[IntersectionPoint],
    a: &TruncationCurve,
    b: &TruncationCurve,
) -> Vec<CoincidenceRecord> {
    points
        .iter()
        .map(|p| CoincidenceRecord {
            a: a.name.clone(),
            b: b.name.clone(),
            point: p.clone(),
            status: status_of(p, a, b),
        })
        .collect()
}

/// Every labelled intersection point of D(m) and D(n), with the residual
/// certificate.
#[derive(Clone, Debug)]
pub struct SelfClassification {
    pub m: i64,
    pub n: i64,
    pub records: Vec<CoincidenceRecord>,
    pub certificate: ResidualCertificate,
}

impl SelfClassification {
    pub fn nontrivial(&self) -> impl Iterator<Item = &CoincidenceRecord> {
        self.records
            .iter()
            .filter(|r| r.status == Status::Nontrivial)
    }
}

pub fn classify_self(m: i64, n: i64) -> Result<SelfClassification, IntersectError> {
    if m == n {
        return Err(IntersectError::Domain(format!(
            "classify_self needs m != n, got m = n = {m}"
        )));
    }
    let (a, b) = (d_curve(m)?, d_curve(n)?);
    let Intersection {
        points,
        certificate,
        ..
    } = intersect_curves(&a, &b)?;
    Ok(SelfClassification {
        m,
        n,
        records: filter(&points, &a, &b),
        certificate,
    })
}
