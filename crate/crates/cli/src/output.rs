use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use wtrunc::curves::{load_curves, Transcription};
use wtrunc::intersect::Registry;

use crate::CurveArgs;

impl CurveArgs {
    pub fn path(&self) -> Option<&Path> {
        self.curves.as_deref()
    }

    pub fn registry(&self) -> Result<Registry> {
        let mut tr = Transcription::default();
        if let Some(p) = &self.p_override {
            log::warn!("built-in p polynomial replaced by {p:?}");
            tr.p = p.clone();
        }
        let mut reg = Registry::with_transcription(tr);
        if let Some(path) = &self.curves {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let curves = load_curves(&text).with_context(|| format!("in {}", path.display()))?;
            log::info!("loaded {} curves from {}", curves.len(), path.display());
            reg.add_curves(curves);
        }
        Ok(reg)
    }
}

/// Writes `text` to `path`, or to stdout when `path` is `None`.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

pub fn ensure_dir(dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    if !dir.is_dir() {
        bail!("{} is not a directory", dir.display());
    }
    Ok(dir.to_path_buf())
}

pub fn csv_string(f: impl FnOnce(&mut Vec<u8>) -> csv::Result<()>) -> Result<String> {
    let mut buf = Vec::new();
    f(&mut buf)?;
    Ok(String::from_utf8(buf)?)
}

pub fn json_string<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Inclusive integer range from the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRange(pub Vec<i64>);

/// Parses `a..b` or `a..=b` (both inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<IntRange, String> {
    let s = s.trim();
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo.trim(), hi.trim().trim_start_matches('=').trim()),
        None => (s, s),
    };
    let lo: i64 = lo
        .parse()
        .map_err(|_| format!("bad range start in {s:?}"))?;
    let hi: i64 = hi.parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if hi < lo {
        return Err(format!("empty range {s:?}"));
    }
    Ok(IntRange((lo..=hi).collect()))
}
