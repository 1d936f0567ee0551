//! Checking the classification tables against the curves.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::filter::{filter, CoincidenceRecord, SelfClassification, Status};
use super::report::{
    show, CheckResult, CheckStatus, LambdaComparison, ReconciliationReport, VerificationReport,
};
use super::tables::{eval_mn, theorem_table, Theorem, TheoremTable, LAMBDA1_F_REPAIR};
use super::{intersect_curves, IntersectError};
use crate::curves::{d_curve, d_curve_with, ExclusionReason, Transcription, TruncationCurve};
use crate::exactalg::{format_scalar, ExactScalar};

/// Curves available to the verifier: the built-in D family (from a
/// transcription that tests may corrupt) plus whatever a config supplied.
#[derive(Clone, Debug, Default)]
pub struct Registry {
    transcription: Transcription,
    external: Vec<TruncationCurve>,
}

impl Registry {
    pub fn builtin() -> Self {
        Self::default()
    }

    pub fn with_transcription(transcription: Transcription) -> Self {
        Registry {
            transcription,
            external: Vec::new(),
        }
    }

    pub fn add_curves(&mut self, curves: impl IntoIterator<Item = TruncationCurve>) {
        self.external.extend(curves);
    }

    pub fn external(&self) -> &[TruncationCurve] {
        &self.external
    }

    pub fn d(&self, n: i64) -> Result<TruncationCurve, IntersectError> {
        Ok(d_curve_with(n, &self.transcription)?)
    }

    /// A curve by family tag and its first index. Config curves win over
    /// the built-in D family.
    pub fn lookup(&self, tag: &str, index: i64) -> Result<Option<TruncationCurve>, IntersectError> {
        let found = self
            .external
            .iter()
            .find(|c| c.family_tag() == tag && c.indices.first().map(|i| i.1) == Some(index));
        match found {
            Some(c) => Ok(Some(c.clone())),
            None if tag == "D" => self.d(index).map(Some),
            None => Ok(None),
        }
    }

    pub fn transcription(&self) -> &Transcription {
        &self.transcription
    }

    /// Labelled intersection of D(m) and D(n) from this registry.
    pub fn classify(&self, m: i64, n: i64) -> Result<SelfClassification, IntersectError> {
        check_range(Theorem::T43, m, n)?;
        let a = self.d(m)?;
        let b = self.lookup("D", n)?.expect("D is built in");
        classify_curves(m, n, &a, &b)
    }

    /// `D(n)` names the built-in curve unless a config curve has that name.
    pub fn by_name(&self, name: &str) -> Result<Option<TruncationCurve>, IntersectError> {
        if let Some(c) = self.external.iter().find(|c| c.name == name) {
            return Ok(Some(c.clone()));
        }
        let index = name
            .strip_prefix("D(")
            .and_then(|s| s.strip_suffix(')'))
            .and_then(|s| s.trim().parse::<i64>().ok());
        match index {
            Some(n) if n >= 1 => self.d(n).map(Some),
            _ => Ok(None),
        }
    }
}

fn check_range(theorem: Theorem, m: i64, n: i64) -> Result<(), IntersectError> {
    let ok = theorem.covers(m, n);
    if ok {
        Ok(())
    } else {
        Err(IntersectError::Domain(format!(
            "{theorem} is not stated for (m, n) = ({m}, {n})"
        )))
    }
}

/// Critical levels are excluded by the theorem statements; any pole hit by
/// a listed level is a failure.
fn exclusion_check(name: &str, curve: &TruncationCurve, t: &ExactScalar) -> CheckResult {
    match curve.exclusion(t) {
        None => CheckResult::new(name, CheckStatus::Pass, format_scalar(t), "none"),
        Some(ExclusionReason::Critical) => {
            CheckResult::new(name, CheckStatus::Skipped, format_scalar(t), "critical").with_note(
                format!("critical level of {}, excluded by the theorem", curve.name),
            )
        }
        Some(r) => CheckResult::new(name, CheckStatus::Fail, format_scalar(t), r.as_str())
            .with_note(format!("excluded on {}", curve.name)),
    }
}

fn classify_curves(
    m: i64,
    n: i64,
    a: &TruncationCurve,
    b: &TruncationCurve,
) -> Result<SelfClassification, IntersectError> {
    let x = intersect_curves(a, b)?;
    Ok(SelfClassification {
        m,
        n,
        records: filter(&x.points, a, b),
        certificate: x.certificate,
    })
}

fn levels_of(rec: &CoincidenceRecord) -> (String, String) {
    (
        rec.point.preimage_a.describe("k"),
        rec.point.preimage_b.describe("l"),
    )
}

/// One report per item at (m, n). For T43 an extra item 0 carries the
/// completeness checks of the whole classification.
///
/// k lives on D(n) for T41 and T42 and on D(m) for T43; ℓ lives on the
/// partner curve found in `registry`.
pub fn verify_theorem(
    table: &TheoremTable,
    m: i64,
    n: i64,
    registry: &Registry,
) -> Result<Vec<VerificationReport>, IntersectError> {
    verify_theorem_with(table, m, n, registry, None)
}

/// As [`verify_theorem`], reusing a T43 classification of (m, n) computed
/// by [`Registry::classify`].
pub fn verify_theorem_with(
    table: &TheoremTable,
    m: i64,
    n: i64,
    registry: &Registry,
    classification: Option<&SelfClassification>,
) -> Result<Vec<VerificationReport>, IntersectError> {
    let theorem = table.theorem;
    check_range(theorem, m, n)?;
    let (k_curve, partner_index) = match theorem {
        Theorem::T43 => (registry.d(m)?, n),
        _ => (registry.d(n)?, m),
    };
    let partner = registry.lookup(theorem.partner_tag(), partner_index)?;
    let partner_label = format!("{}({partner_index})", theorem.partner_tag());
    let computed;
    let classification = match (theorem, &partner, classification) {
        (Theorem::T43, Some(_), Some(given)) => Some(given),
        (Theorem::T43, Some(p), None) => {
            computed = classify_curves(m, n, &k_curve, p)?;
            Some(&computed)
        }
        _ => None,
    };

    let mut reports = Vec::new();
    let mut listed = BTreeSet::new();
    for item in &table.items {
        let mut checks = Vec::new();
        let (k, l) = (eval_mn(item.k, m, n)?, eval_mn(item.l, m, n)?);
        let (Some(k), Some(l)) = (k, l) else {
            checks.push(CheckResult::skipped(
                "levels",
                "item expression degenerates at this (m, n)",
            ));
            reports.push(VerificationReport {
                theorem: theorem.to_string(),
                item: item.number,
                m,
                n,
                checks,
            });
            continue;
        };
        checks.push(CheckResult::new(
            "levels",
            CheckStatus::Pass,
            format_scalar(&k),
            format_scalar(&l),
        ));
        let k_check = exclusion_check("exclusion_k", &k_curve, &k);
        let k_usable = k_check.status == CheckStatus::Pass;
        checks.push(k_check);

        if let Some(expr) = item.c {
            checks.push(match eval_mn(expr, m, n)? {
                None => CheckResult::skipped("c_printed", "printed c degenerates at this (m, n)"),
                Some(_) if !k_usable => CheckResult::skipped("c_printed", "k is excluded"),
                printed => CheckResult::compare("c_printed", &k_curve.c.eval(&k), &printed),
            });
        }

        match &partner {
            None => {
                for name in ["exclusion_l", "partner_c", "partner_lambda"] {
                    checks.push(CheckResult::skipped(
                        name,
                        format!("no {partner_label} curve loaded"),
                    ));
                }
            }
            Some(p) => {
                let l_check = exclusion_check("exclusion_l", p, &l);
                let l_usable = l_check.status == CheckStatus::Pass;
                checks.push(l_check);
                if k_usable && l_usable {
                    checks.push(CheckResult::compare(
                        "partner_c",
                        &k_curve.c.eval(&k),
                        &p.c.eval(&l),
                    ));
                    checks.push(CheckResult::compare(
                        "partner_lambda",
                        &k_curve.lambda.eval(&k),
                        &p.lambda.eval(&l),
                    ));
                } else {
                    checks.push(CheckResult::skipped("partner_c", "a level is excluded"));
                    checks.push(CheckResult::skipped(
                        "partner_lambda",
                        "a level is excluded",
                    ));
                }
            }
        }

        if let Some(cls) = &classification {
            let rec = cls.records.iter().find(|r| r.levels() == Some((&k, &l)));
            listed.insert((k.clone(), l.clone()));
            checks.push(match rec {
                Some(r) if r.status == Status::Nontrivial => CheckResult::new(
                    "classified",
                    CheckStatus::Pass,
                    format_scalar(&k),
                    format_scalar(&l),
                ),
                Some(r) => CheckResult::new(
                    "classified",
                    CheckStatus::Skipped,
                    format_scalar(&k),
                    format_scalar(&l),
                )
                .with_note(format!("found with status {}", r.status)),
                None => CheckResult::new(
                    "classified",
                    CheckStatus::Fail,
                    format_scalar(&k),
                    format_scalar(&l),
                )
                .with_note("not an intersection point"),
            });
        }
        reports.push(VerificationReport {
            theorem: theorem.to_string(),
            item: item.number,
            m,
            n,
            checks,
        });
    }

    if let Some(cls) = classification {
        let complete = cls.certificate.is_complete();
        let unresolved_degree = cls.certificate.unresolved.degree().unwrap_or(0);
        let nontrivial: Vec<_> = cls
            .records
            .iter()
            .filter(|r| r.status == Status::Nontrivial)
            .collect();
        let unlisted: Vec<_> = nontrivial
            .iter()
            .filter(|r| match r.levels() {
                Some((k, l)) => !listed.contains(&(k.clone(), l.clone())),
                None => true,
            })
            .collect();
        let mut checks = vec![
            CheckResult::new(
                "residual_certificate",
                if complete {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                unresolved_degree.to_string(),
                "0",
            ),
            CheckResult::new(
                "classification_complete",
                if unlisted.is_empty() {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                nontrivial.len().to_string(),
                (nontrivial.len() - unlisted.len()).to_string(),
            )
            .with_note("nontrivial intersection points vs. those on the list"),
        ];
        for r in unlisted {
            let (k, l) = levels_of(r);
            checks.push(
                CheckResult::new("unlisted_record", CheckStatus::Fail, k, l).with_note(format!(
                    "c = {}, lambda = {}",
                    show(&r.point.c),
                    show(&r.point.lambda)
                )),
            );
        }
        reports.push(VerificationReport {
            theorem: theorem.to_string(),
            item: 0,
            m,
            n,
            checks,
        });
    }
    Ok(reports)
}

fn ratio_of(a: &Option<ExactScalar>, b: &Option<ExactScalar>) -> String {
    match (a, b) {
        (Some(a), Some(b)) if !b.is_zero() => format_scalar(&(a / b)),
        _ => String::new(),
    }
}

/// Compares the printed λ blocks with the curve at each item's k.
/// Disagreement is reported, never corrected.
pub fn reconcile_lambda(m: i64, n: i64) -> Result<ReconciliationReport, IntersectError> {
    check_range(Theorem::T41, m, n)?;
    let curve = d_curve(n)?;
    let mut items = Vec::new();
    for item in theorem_table(Theorem::T41).items {
        let block = item.lambda.as_ref().expect("every item prints a coupling");
        let printed = block.eval(m, n)?;
        let k = eval_mn(item.k, m, n)?;
        let (value, note) = match &k {
            None => (None, Some("k expression degenerates".to_string())),
            Some(k) => match curve.exclusion(k) {
                Some(r) => (
                    None,
                    Some(format!("k is excluded on {} ({})", curve.name, r.as_str())),
                ),
                None => (curve.lambda.eval(k), None),
            },
        };
        let curve_str = if note.is_some() {
            String::new()
        } else {
            show(&value)
        };
        let repair = (item.number == 1)
            .then(|| block.eval_expr(LAMBDA1_F_REPAIR, m, n))
            .transpose()?
            .map(|r| r.value);
        items.push(LambdaComparison {
            item: item.number,
            k: k.as_ref().map(format_scalar).unwrap_or_default(),
            curve: curve_str,
            f: format_scalar(&printed.f),
            g: format_scalar(&printed.g),
            h: format_scalar(&printed.h),
            printed: show(&printed.value),
            printed_ratio: ratio_of(&printed.value, &value),
            printed_agrees: value.is_some() && printed.value == value,
            repair_ratio: repair.as_ref().map(|r| ratio_of(r, &value)),
            repair_agrees: repair.as_ref().map(|r| value.is_some() && *r == value),
            repair: repair.as_ref().map(show),
            note,
        });
    }
    Ok(ReconciliationReport { m, n, items })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::scalar::ratio;

    fn statuses(r: &VerificationReport) -> Vec<(&str, CheckStatus)> {
        r.checks
            .iter()
            .map(|c| (c.name.as_str(), c.status))
            .collect()
    }

    #[test]
    fn t41_item1_c_check() {
        let reports =
            verify_theorem(&theorem_table(Theorem::T41), 2, 1, &Registry::builtin()).unwrap();
        let c = reports[0].check("c_printed").unwrap();
        assert_eq!(
            (c.status, c.lhs.as_str(), c.rhs.as_str()),
            (CheckStatus::Pass, "7/5", "7/5")
        );
        assert_eq!(
            reports[0].check("partner_lambda").unwrap().status,
            CheckStatus::Skipped
        );
        assert!(!reports.iter().any(VerificationReport::has_failure));
    }

    #[test]
    fn t43_at_2_1() {
        let reports =
            verify_theorem(&theorem_table(Theorem::T43), 2, 1, &Registry::builtin()).unwrap();
        let item1 = reports.iter().find(|r| r.item == 1).unwrap();
        assert_eq!(
            statuses(item1),
            vec![
                ("levels", CheckStatus::Pass),
                ("exclusion_k", CheckStatus::Pass),
                ("exclusion_l", CheckStatus::Pass),
                ("partner_c", CheckStatus::Pass),
                ("partner_lambda", CheckStatus::Pass),
                ("classified", CheckStatus::Pass),
            ]
        );
        let item2 = reports.iter().find(|r| r.item == 2).unwrap();
        assert_eq!(statuses(item2), vec![("levels", CheckStatus::Skipped)]);
        let summary = reports.iter().find(|r| r.item == 0).unwrap();
        assert_eq!(
            summary.check("residual_certificate").unwrap().status,
            CheckStatus::Pass
        );
    }

    #[test]
    fn out_of_range() {
        assert!(verify_theorem(&theorem_table(Theorem::T43), 2, 2, &Registry::builtin()).is_err());
        assert!(verify_theorem(&theorem_table(Theorem::T41), 1, 1, &Registry::builtin()).is_err());
    }

    #[test]
    fn reconcile_2_1() {
        let r = reconcile_lambda(2, 1).unwrap();
        let i1 = r.item(1).unwrap();
        assert_eq!(
            (i1.f.as_str(), i1.g.as_str(), i1.h.as_str()),
            ("1230", "69", "290")
        );
        assert_eq!(i1.curve, "205/9338");
        assert_eq!(i1.printed, "1/812");
        assert!(!i1.printed_agrees);
        assert_eq!(i1.printed_ratio, format_scalar(&ratio(23, 410)));
        assert_eq!(i1.repair_agrees, Some(true));
    }

    #[test]
    fn registry_lookup() {
        let reg = Registry::builtin();
        assert_eq!(reg.by_name("D(2)").unwrap().unwrap().name, "D(2)");
        assert!(reg.by_name("nope").unwrap().is_none());
        assert!(reg.lookup("so_even", 2).unwrap().is_none());
        assert!(reg.lookup("D", 3).unwrap().is_some());
    }
}
