use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use rayon::prelude::*;
use wtrunc::characters::{
    brute_force_dim, default_term_budget, first_discrepancy, free_character,
    orbifold_character_with_budget, CharError, CharacterRow, CharacterTable, GeneratorProfile,
};

use crate::output::{csv_string, emit};
use crate::{Format, Outcome};

#[derive(Args, Debug)]
pub struct CharArgs {
    /// Rank: 2n free bosons, O(2n) symmetry.
    #[arg(long)]
    n: usize,
    /// Truncation weight.
    #[arg(long)]
    weight: usize,
    /// Add the brute-force invariant dimension per weight.
    #[arg(long)]
    oracle: bool,
    /// Torus-series cell budget; defaults to the environment override or
    /// the built-in limit.
    #[arg(long)]
    term_budget: Option<u128>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn opt(v: Option<i64>) -> String {
    v.map_or("-".to_string(), |v| v.to_string())
}

fn text(t: &CharacterTable) -> String {
    let mut s = format!(
        "O({})-invariants of {} bosons through weight {}\n",
        2 * t.n,
        2 * t.n,
        t.weight
    );
    s.push_str(&format!(
        "{:>6} {:>12} {:>12} {:>12}\n",
        "weight", "orbifold", "free_even", "oracle"
    ));
    for r in &t.rows {
        s.push_str(&format!(
            "{:>6} {:>12} {:>12} {:>12}\n",
            r.weight,
            opt(r.orbifold),
            r.free_even,
            opt(r.oracle)
        ));
    }
    let disc = match (t.partial, t.first_discrepancy) {
        (true, _) if t.rows.iter().all(|r| r.orbifold.is_none()) => "unknown".to_string(),
        (_, Some(d)) => d.to_string(),
        (_, None) => "none".to_string(),
    };
    s.push_str(&format!("first discrepancy: {disc}\n"));
    for n in &t.notes {
        s.push_str(&format!("note: {n}\n"));
    }
    if t.partial {
        s.push_str("PARTIAL: a resource guard stopped part of the computation\n");
    }
    s
}

pub fn run(args: CharArgs) -> Result<Outcome> {
    if args.n == 0 {
        bail!("--n must be at least 1");
    }
    let budget = args.term_budget.unwrap_or_else(default_term_budget);
    let free = free_character(&GeneratorProfile::AllEven, args.weight)?;
    let mut notes = Vec::new();
    let mut partial = false;
    let orbifold = match orbifold_character_with_budget(args.n, args.weight, budget) {
        Ok(s) => Some(s),
        Err(e @ CharError::ResourceGuard { .. }) => {
            notes.push(format!("orbifold character: {e}"));
            partial = true;
            None
        }
        Err(e) => return Err(e.into()),
    };
    let oracle: Vec<Option<i64>> = if args.oracle {
        let dims: Vec<Result<usize, CharError>> = (0..=args.weight)
            .into_par_iter()
            .map(|d| brute_force_dim(args.n, d))
            .collect();
        let mut out = Vec::new();
        for (d, r) in dims.into_iter().enumerate() {
            match r {
                Ok(v) => out.push(Some(v as i64)),
                Err(e @ CharError::ResourceGuard { .. }) => {
                    if out.iter().all(Option::is_some) {
                        notes.push(format!("oracle stops at weight {d}: {e}"));
                    }
                    out.push(None);
                }
                Err(e) => return Err(e.into()),
            }
        }
        out
    } else {
        vec![None; args.weight + 1]
    };
    let first = match &orbifold {
        Some(o) => first_discrepancy(o, &free)?,
        None => None,
    };
    let rows: Vec<CharacterRow> = (0..=args.weight)
        .map(|d| CharacterRow {
            weight: d,
            orbifold: orbifold.as_ref().map(|o| o.coefficient(d)),
            free_even: free.coefficient(d),
            oracle: oracle[d],
        })
        .collect();
    let mismatch = rows
        .iter()
        .any(|r| matches!((r.orbifold, r.oracle), (Some(a), Some(b)) if a != b));
    if mismatch {
        notes.push("oracle disagrees with the orbifold character".into());
    }
    let table = CharacterTable {
        n: args.n,
        weight: args.weight,
        rows,
        first_discrepancy: first,
        partial,
        notes,
    };
    let rendered = match args.format {
        Format::Json => table.to_json(),
        Format::Csv => csv_string(|b| table.write_csv(b))?,
        Format::Text => text(&table),
    };
    emit(args.out.as_deref(), &rendered)?;
    Ok(if mismatch {
        Outcome::Fail
    } else if partial {
        Outcome::Guard
    } else {
        Outcome::Ok
    })
}
