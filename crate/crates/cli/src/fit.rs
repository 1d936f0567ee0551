use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use wtrunc::curves::{fit_curve, serialize_curves};
use wtrunc::exactalg::{parse_scalar, ExactScalar};

use crate::output::emit;
use crate::Outcome;

#[derive(Args, Debug)]
pub struct FitArgs {
    /// CSV with header `t,c,lambda` and exact rationals `p/q`.
    #[arg(long)]
    points: PathBuf,
    #[arg(long)]
    num_deg: usize,
    #[arg(long)]
    den_deg: usize,
    /// Bounds for lambda when they differ from those for c.
    #[arg(long)]
    lambda_num_deg: Option<usize>,
    #[arg(long)]
    lambda_den_deg: Option<usize>,
    #[arg(long, default_value = "fitted")]
    name: String,
    #[arg(long, default_value = "t")]
    param: String,
    /// Curve config output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

type Sample = (ExactScalar, ExactScalar, ExactScalar);

fn read_points(text: &str) -> Result<Vec<Sample>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = rdr.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["t", "c", "lambda"] {
        bail!(
            "expected header t,c,lambda, got {:?}",
            headers.iter().collect::<Vec<_>>()
        );
    }
    let mut out = Vec::new();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let field = |j: usize| {
            parse_scalar(&rec[j]).with_context(|| format!("line {}, column {}", i + 2, &headers[j]))
        };
        out.push((field(0)?, field(1)?, field(2)?));
    }
    Ok(out)
}

pub fn run(args: FitArgs) -> Result<Outcome> {
    let text = fs::read_to_string(&args.points)
        .with_context(|| format!("reading {}", args.points.display()))?;
    let points = read_points(&text).with_context(|| format!("in {}", args.points.display()))?;
    let lambda_bounds = (
        args.lambda_num_deg.unwrap_or(args.num_deg),
        args.lambda_den_deg.unwrap_or(args.den_deg),
    );
    let curve = fit_curve(
        &args.name,
        &args.param,
        &points,
        (args.num_deg, args.den_deg),
        lambda_bounds,
    )?;
    emit(args.out.as_deref(), &serialize_curves(&[curve]))?;
    Ok(Outcome::Ok)
}
