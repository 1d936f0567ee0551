use std::collections::BTreeSet;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use wtrunc::curves::lambda_direct_with;
use wtrunc::exactalg::{format_scalar, ExactScalar};
use wtrunc::intersect::{
    reconcile_lambda, theorem_table, verify_theorem_with, CheckStatus, ReconciliationReport,
    Registry, SelfClassification, Theorem, VerificationReport,
};

use crate::output::{csv_string, ensure_dir, json_string, parse_range, IntRange};
use crate::{CurveArgs, Format, Outcome};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Comma-separated theorem ids.
    #[arg(long, value_delimiter = ',', default_value = "T41,T42,T43")]
    theorems: Vec<Theorem>,
    /// Inclusive range such as `2..5`.
    #[arg(long, value_parser = parse_range)]
    m: IntRange,
    #[arg(long, value_parser = parse_range)]
    n: IntRange,
    /// Keep only cells with n < m.
    #[arg(long)]
    n_below_m: bool,
    #[command(flatten)]
    curves: CurveArgs,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Seed for the randomized normalization spot checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random levels per D curve in the spot checks.
    #[arg(long, default_value_t = 8)]
    spot_checks: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Serialize)]
struct RecordOut {
    k: String,
    l: String,
    c: Option<String>,
    lambda: Option<String>,
    status: String,
    certified: bool,
}

#[derive(Serialize)]
struct ClassificationOut {
    m: i64,
    n: i64,
    certificate_complete: bool,
    records: Vec<RecordOut>,
}

impl From<&SelfClassification> for ClassificationOut {
    fn from(c: &SelfClassification) -> Self {
        ClassificationOut {
            m: c.m,
            n: c.n,
            certificate_complete: c.certificate.is_complete(),
            records: c
                .records
                .iter()
                .map(|r| RecordOut {
                    k: r.point.preimage_a.describe("k"),
                    l: r.point.preimage_b.describe("l"),
                    c: r.point.c.as_ref().map(format_scalar),
                    lambda: r.point.lambda.as_ref().map(format_scalar),
                    status: r.status.to_string(),
                    certified: r.point.certified,
                })
                .collect(),
        }
    }
}

/// λ from the normalized curve against direct substitution.
#[derive(Serialize)]
struct SpotCheck {
    n: i64,
    k: String,
    normalized: String,
    direct: String,
    status: CheckStatus,
}

#[derive(Serialize)]
struct Manifest<'a> {
    command: &'a str,
    theorems: Vec<String>,
    m: &'a [i64],
    n: &'a [i64],
    n_below_m: bool,
    curves: Option<String>,
    format: &'a str,
    seed: u64,
    spot_checks: usize,
    cells: usize,
    failures: usize,
}

fn random_level(rng: &mut ChaCha8Rng) -> ExactScalar {
    let num: i64 = rng.gen_range(-60..=60);
    let den: i64 = rng.gen_range(1..=12);
    ExactScalar::new(num.into(), den.into())
}

fn spot_checks(
    reg: &Registry,
    indices: &BTreeSet<i64>,
    seed: u64,
    count: usize,
) -> Result<Vec<SpotCheck>> {
    let mut out = Vec::new();
    for &n in indices {
        let curve = reg.d(n)?;
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let mut done = 0;
        while done < count {
            let k = random_level(&mut rng);
            if curve.exclusion(&k).is_some() {
                continue;
            }
            let normalized = curve.lambda.eval(&k);
            let direct = lambda_direct_with(n, &k, reg.transcription())?;
            let show =
                |v: &Option<ExactScalar>| v.as_ref().map_or("inf".to_string(), format_scalar);
            out.push(SpotCheck {
                n,
                k: format_scalar(&k),
                status: if normalized == direct && normalized.is_some() {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                normalized: show(&normalized),
                direct: show(&direct),
            });
            done += 1;
        }
    }
    Ok(out)
}

fn text_report(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        for c in &r.checks {
            s.push_str(&format!(
                "{} item {} (m={}, n={}) {:<24} {:<7} {} | {}{}\n",
                r.theorem,
                r.item,
                r.m,
                r.n,
                c.name,
                c.status.as_str(),
                c.lhs,
                c.rhs,
                c.note
                    .as_ref()
                    .map(|n| format!("  # {n}"))
                    .unwrap_or_default()
            ));
        }
    }
    s
}

struct Cell {
    reports: Vec<VerificationReport>,
    classification: Option<SelfClassification>,
    reconciliation: Option<ReconciliationReport>,
}

fn run_cell(reg: &Registry, theorem: Theorem, m: i64, n: i64) -> Result<Cell> {
    let table = theorem_table(theorem);
    let classification = match theorem {
        Theorem::T43 => Some(reg.classify(m, n)?),
        _ => None,
    };
    let reports = verify_theorem_with(&table, m, n, reg, classification.as_ref())
        .with_context(|| format!("{theorem} at (m, n) = ({m}, {n})"))?;
    let reconciliation = match theorem {
        Theorem::T41 => Some(reconcile_lambda(m, n)?),
        _ => None,
    };
    Ok(Cell {
        reports,
        classification,
        reconciliation,
    })
}

pub fn run(args: VerifyArgs) -> Result<Outcome> {
    let reg = args.curves.registry()?;
    let dir = ensure_dir(&args.out)?;
    let theorems: BTreeSet<Theorem> = args.theorems.iter().copied().collect();
    let mut cells = Vec::new();
    for &t in &theorems {
        for &m in &args.m.0 {
            for &n in &args.n.0 {
                if args.n_below_m && n >= m {
                    continue;
                }
                if !t.covers(m, n) {
                    log::info!("{t} not stated at (m, n) = ({m}, {n}); skipped");
                    continue;
                }
                cells.push((t, m, n));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.workers.max(1))
        .build()?;
    let results: Vec<Cell> = pool.install(|| {
        cells
            .par_iter()
            .map(|&(t, m, n)| run_cell(&reg, t, m, n))
            .collect::<Result<_>>()
    })?;

    let mut reports = Vec::new();
    let mut classifications = Vec::new();
    let mut reconciliations = Vec::new();
    for c in results {
        reports.extend(c.reports);
        classifications.extend(c.classification.as_ref().map(ClassificationOut::from));
        reconciliations.extend(c.reconciliation);
    }
    VerificationReport::sort(&mut reports);
    classifications.sort_by_key(|c| (c.m, c.n));
    reconciliations.sort_by_key(|r| (r.m, r.n));

    let mut indices = BTreeSet::new();
    for &(t, m, n) in &cells {
        indices.insert(if t == Theorem::T43 { m } else { n });
        if t == Theorem::T43 {
            indices.insert(n);
        }
    }
    let spots = spot_checks(&reg, &indices, args.seed, args.spot_checks)?;

    let report_text = match args.format {
        Format::Json => VerificationReport::to_json(&reports),
        Format::Csv => csv_string(|b| VerificationReport::write_csv(&reports, b))?,
        Format::Text => text_report(&reports),
    };
    let write = |name: &str, text: &str| {
        let p = dir.join(name);
        std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))
    };
    write(&format!("report.{}", args.format.extension()), &report_text)?;
    if !classifications.is_empty() {
        write("classification.json", &json_string(&classifications))?;
    }
    if !reconciliations.is_empty() {
        match args.format {
            Format::Csv => write(
                "reconcile.csv",
                &csv_string(|b| ReconciliationReport::write_csv(&reconciliations, b))?,
            )?,
            _ => write("reconcile.json", &json_string(&reconciliations))?,
        }
    }
    write("spot_checks.json", &json_string(&spots))?;

    let failures = reports.iter().flat_map(|r| r.failures()).count()
        + spots
            .iter()
            .filter(|s| s.status == CheckStatus::Fail)
            .count();
    let manifest = Manifest {
        command: "verify",
        theorems: theorems.iter().map(|t| t.to_string()).collect(),
        m: &args.m.0,
        n: &args.n.0,
        n_below_m: args.n_below_m,
        curves: args.curves_path(),
        format: args.format.extension(),
        seed: args.seed,
        spot_checks: args.spot_checks,
        cells: cells.len(),
        failures,
    };
    write("manifest.json", &json_string(&manifest))?;
    for r in &reports {
        for c in r.failures() {
            log::warn!(
                "FAIL {} item {} (m={}, n={}) {}: {} vs {}",
                r.theorem,
                r.item,
                r.m,
                r.n,
                c.name,
                c.lhs,
                c.rhs
            );
        }
    }
    println!(
        "{} cells, {} checks, {} failures; reports in {}",
        cells.len(),
        reports.iter().map(|r| r.checks.len()).sum::<usize>() + spots.len(),
        failures,
        dir.display()
    );
    Ok(if failures == 0 {
        Outcome::Ok
    } else {
        Outcome::Fail
    })
}

impl VerifyArgs {
    fn curves_path(&self) -> Option<String> {
        self.curves.path().map(|p| p.display().to_string())
    }
}
