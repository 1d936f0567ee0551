//! Verification and reconciliation reports, serialized as JSON and CSV.
//!
//! Rationals are always carried as `"p/q"` strings.

use std::io;

use serde::{Deserialize, Serialize};

use crate::exactalg::{format_scalar, ExactScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// `"inf"` for a value at a pole.
pub(crate) fn show(v: &Option<ExactScalar>) -> String {
    v.as_ref().map_or_else(|| "inf".to_string(), format_scalar)
}

impl CheckResult {
    pub fn new(
        name: &str,
        status: CheckStatus,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> Self {
        CheckResult {
            name: name.into(),
            status,
            lhs: lhs.into(),
            rhs: rhs.into(),
            note: None,
        }
    }

    /// Pass iff both sides exist and are equal.
    pub fn compare(name: &str, lhs: &Option<ExactScalar>, rhs: &Option<ExactScalar>) -> Self {
        let status = match (lhs, rhs) {
            (Some(a), Some(b)) if a == b => CheckStatus::Pass,
            _ => CheckStatus::Fail,
        };
        Self::new(name, status, show(lhs), show(rhs))
    }

    pub fn skipped(name: &str, note: impl Into<String>) -> Self {
        Self::new(name, CheckStatus::Skipped, "", "").with_note(note)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub item: u32,
    pub m: i64,
    pub n: i64,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn key(&self) -> (&str, u32, i64, i64) {
        (&self.theorem, self.item, self.m, self.n)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn has_failure(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Sorts by (theorem, item, m, n) so that merged grids serialize
    /// identically regardless of evaluation order.
    pub fn sort(reports: &mut [VerificationReport]) {
        reports.sort_by(|a, b| a.key().cmp(&b.key()));
    }

    pub fn to_json(reports: &[VerificationReport]) -> String {
        let mut s = serde_json::to_string_pretty(reports).expect("serializable");
        s.push('\n');
        s
    }

    pub fn write_csv<W: io::Write>(reports: &[VerificationReport], out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "theorem", "item", "m", "n", "check", "status", "lhs", "rhs", "note",
        ])?;
        for r in reports {
            for c in &r.checks {
                w.write_record([
                    r.theorem.as_str(),
                    &r.item.to_string(),
                    &r.m.to_string(),
                    &r.n.to_string(),
                    &c.name,
                    c.status.as_str(),
                    &c.lhs,
                    &c.rhs,
                    c.note.as_deref().unwrap_or(""),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

/// One λ block compared against the curve value at the item's k.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaComparison {
    pub item: u32,
    pub k: String,
    /// λₙ(k) from the curve, `"inf"` at a pole, empty when k is excluded.
    pub curve: String,
    pub f: String,
    pub g: String,
    pub h: String,
    pub printed: String,
    /// printed / curve, empty when either side is missing or zero.
    pub printed_ratio: String,
    pub printed_agrees: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repair: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repair_ratio: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repair_agrees: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconciliationReport {
    pub m: i64,
    pub n: i64,
    pub items: Vec<LambdaComparison>,
}

impl ReconciliationReport {
    pub fn item(&self, number: u32) -> Option<&LambdaComparison> {
        self.items.iter().find(|i| i.item == number)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn write_csv<W: io::Write>(reports: &[ReconciliationReport], out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "m",
            "n",
            "item",
            "k",
            "curve",
            "f",
            "g",
            "h",
            "printed",
            "printed_ratio",
            "repair",
            "repair_ratio",
            "note",
        ])?;
        for r in reports {
            for i in &r.items {
                w.write_record([
                    r.m.to_string().as_str(),
                    &r.n.to_string(),
                    &i.item.to_string(),
                    &i.k,
                    &i.curve,
                    &i.f,
                    &i.g,
                    &i.h,
                    &i.printed,
                    &i.printed_ratio,
                    i.repair.as_deref().unwrap_or(""),
                    i.repair_ratio.as_deref().unwrap_or(""),
                    i.note.as_deref().unwrap_or(""),
                ])?;
            }
        }
        w.flush()?;
        Ok(())
    }
}
