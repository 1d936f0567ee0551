use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod chars;
mod fit;
mod intersect;
mod output;
mod verify;

/// Exact verification of truncation-curve coincidences and orbifold
/// characters.
#[derive(Parser, Debug)]
#[command(name = "wtrunc", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the classification tables over an (m, n) grid.
    Verify(verify::VerifyArgs),
    /// Intersect two curves and label every common point.
    Intersect(intersect::IntersectArgs),
    /// Orbifold character against the free even character.
    Char(chars::CharArgs),
    /// Interpolate a curve through sample points.
    Fit(fit::FitArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

/// Shared by commands that accept curve configs.
#[derive(Args, Debug, Clone, Default)]
pub struct CurveArgs {
    /// Curve config (JSON) adding external curves to the registry.
    #[arg(long)]
    curves: Option<PathBuf>,
    /// Replacement for the built-in p polynomial in (k, n).
    #[arg(long, hide = true)]
    p_override: Option<String>,
}

/// How a command finished, mapped onto the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Fail,
    Guard,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify::run(a),
        Command::Intersect(a) => intersect::run(a),
        Command::Char(a) => chars::run(a),
        Command::Fit(a) => fit::run(a),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Ok(Outcome::Guard) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
