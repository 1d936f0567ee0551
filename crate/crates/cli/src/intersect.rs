use std::path::PathBuf;

use anyhow::{anyhow, Result};
use clap::Args;
use serde::Serialize;
use wtrunc::exactalg::{format_scalar, UPoly};
use wtrunc::intersect::{filter, intersect_curves, ResidualCertificate, Status};

use crate::output::{emit, json_string};
use crate::{CurveArgs, Format, Outcome};

#[derive(Args, Debug)]
pub struct IntersectArgs {
    /// Curve name, e.g. `D(2)` or a name from the config.
    #[arg(long)]
    a: String,
    #[arg(long)]
    b: String,
    #[command(flatten)]
    curves: CurveArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct PointOut {
    preimage_a: String,
    preimage_b: String,
    c: Option<String>,
    lambda: Option<String>,
    certified: bool,
    status: String,
}

#[derive(Serialize)]
struct CertificateOut {
    complete: bool,
    resultant_degree: usize,
    residual: String,
    pole_factor: String,
    infinity_factor: String,
    resolved_factor: String,
    unresolved: String,
    unexplained_rational_roots: Vec<String>,
}

impl CertificateOut {
    fn new(c: &ResidualCertificate, var: &str) -> Self {
        let p = |u: &UPoly| u.display_with(var);
        CertificateOut {
            complete: c.is_complete(),
            resultant_degree: c.resultant_degree,
            residual: p(&c.residual),
            pole_factor: p(&c.pole_factor),
            infinity_factor: p(&c.infinity_factor),
            resolved_factor: p(&c.resolved_factor),
            unresolved: p(&c.unresolved),
            unexplained_rational_roots: c
                .unexplained_rational_roots
                .iter()
                .map(format_scalar)
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct IntersectionOut {
    a: String,
    b: String,
    param_a: String,
    param_b: String,
    nontrivial: usize,
    points: Vec<PointOut>,
    certificate: CertificateOut,
}

fn text(o: &IntersectionOut) -> String {
    let mut s = format!("{} x {} ({} vs {})\n", o.a, o.b, o.param_a, o.param_b);
    for p in &o.points {
        s.push_str(&format!(
            "  {:<15} {} = {:<24} {} = {:<24} c = {:<12} lambda = {:<16} certified = {}\n",
            p.status,
            o.param_a,
            p.preimage_a,
            o.param_b,
            p.preimage_b,
            p.c.as_deref().unwrap_or("inf"),
            p.lambda.as_deref().unwrap_or("inf"),
            p.certified
        ));
    }
    let c = &o.certificate;
    s.push_str(&format!(
        "resultant degree {}; residual {}; poles {}; at infinity {}; resolved {}; unresolved {}; complete {}\n",
        c.resultant_degree, c.residual, c.pole_factor, c.infinity_factor, c.resolved_factor, c.unresolved, c.complete
    ));
    s
}

pub fn run(args: IntersectArgs) -> Result<Outcome> {
    let reg = args.curves.registry()?;
    let find = |name: &str| {
        reg.by_name(name)?
            .ok_or_else(|| anyhow!("unknown curve {name:?}"))
    };
    let (a, b) = (find(&args.a)?, find(&args.b)?);
    // DegenerateOverlap surfaces as an input error
    let x = intersect_curves(&a, &b)?;
    let records = filter(&x.points, &a, &b);
    let out = IntersectionOut {
        nontrivial: records
            .iter()
            .filter(|r| r.status == Status::Nontrivial)
            .count(),
        points: records
            .iter()
            .map(|r| PointOut {
                preimage_a: r.point.preimage_a.describe(&a.param),
                preimage_b: r.point.preimage_b.describe(&b.param),
                c: r.point.c.as_ref().map(format_scalar),
                lambda: r.point.lambda.as_ref().map(format_scalar),
                certified: r.point.certified,
                status: r.status.to_string(),
            })
            .collect(),
        certificate: CertificateOut::new(&x.certificate, &a.param),
        a: x.a,
        b: x.b,
        param_a: x.param_a,
        param_b: x.param_b,
    };
    let rendered = match args.format {
        Format::Text => text(&out),
        _ => json_string(&out),
    };
    emit(args.out.as_deref(), &rendered)?;
    Ok(if out.certificate.complete {
        Outcome::Ok
    } else {
        Outcome::Fail
    })
}
