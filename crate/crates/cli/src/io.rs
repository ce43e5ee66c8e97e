//! Input resolution and CSV/JSON serialization.
//!
//! CSV schemas: sequences are `n,re,im` with one row per sample; profiles
//! are `shift,re,im,mag` with one row per shift. Floats are printed with
//! 17 significant digits so a written value reparses to the identical
//! double.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use zcseq_core::{ComplexSequence, CorrelationProfile, CorrelationStats, PresetId};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] zcseq_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{0}")]
    Parse(String),

    #[error("{0}")]
    Usage(String),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// 17 significant digits: enough for an exact f64 round trip.
pub fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

/// Resolves `preset:<name>:<root>[:<shift>]` inline specs or reads a
/// sequence CSV file.
pub fn resolve_sequence_input(input: &str) -> CliResult<ComplexSequence> {
    if input.starts_with("preset:") {
        let id: PresetId = input.parse()?;
        Ok(zcseq_core::preset_sequence(&id))
    } else {
        read_sequence_csv(Path::new(input))
    }
}

pub fn read_sequence_csv(path: &Path) -> CliResult<ComplexSequence> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| CliError::Parse(format!("{}: file is empty", path.display())))?;
    if header.trim() != "n,re,im" {
        return Err(CliError::Parse(format!(
            "{}: expected header `n,re,im`, found `{header}`",
            path.display()
        )));
    }
    let mut samples = Vec::new();
    for (lineno, line) in lines.enumerate() {
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 3 {
            return Err(CliError::Parse(format!(
                "{}: row {} has {} fields, expected 3",
                path.display(),
                lineno + 2,
                fields.len()
            )));
        }
        let re: f64 = fields[1].trim().parse().map_err(|_| {
            CliError::Parse(format!("{}: bad re value `{}`", path.display(), fields[1]))
        })?;
        let im: f64 = fields[2].trim().parse().map_err(|_| {
            CliError::Parse(format!("{}: bad im value `{}`", path.display(), fields[2]))
        })?;
        samples.push(Complex64::new(re, im));
    }
    Ok(ComplexSequence::new(samples)?)
}

pub fn sequence_to_csv(seq: &ComplexSequence) -> String {
    let mut out = String::from("n,re,im\n");
    for (n, v) in seq.iter().enumerate() {
        let _ = writeln!(out, "{n},{},{}", fmt_f64(v.re), fmt_f64(v.im));
    }
    out
}

#[derive(Serialize)]
struct SampleRow {
    n: usize,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct SequenceDoc {
    length: usize,
    samples: Vec<SampleRow>,
}

pub fn sequence_to_json(seq: &ComplexSequence) -> String {
    let doc = SequenceDoc {
        length: seq.len(),
        samples: seq
            .iter()
            .enumerate()
            .map(|(n, v)| SampleRow {
                n,
                re: v.re,
                im: v.im,
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn profile_to_csv(profile: &CorrelationProfile) -> String {
    let mut out = String::from("shift,re,im,mag\n");
    for (tau, v) in profile.values().iter().enumerate() {
        let _ = writeln!(
            out,
            "{tau},{},{},{}",
            fmt_f64(v.re),
            fmt_f64(v.im),
            fmt_f64(v.norm())
        );
    }
    out
}

#[derive(Serialize)]
struct ProfileRow {
    shift: usize,
    re: f64,
    im: f64,
    mag: f64,
}

#[derive(Serialize)]
struct ProfileDoc {
    length: usize,
    normalized: bool,
    engine: String,
    values: Vec<ProfileRow>,
}

pub fn profile_to_json(profile: &CorrelationProfile, engine: &str) -> String {
    let doc = ProfileDoc {
        length: profile.len(),
        normalized: profile.normalized(),
        engine: engine.to_string(),
        values: profile
            .values()
            .iter()
            .enumerate()
            .map(|(shift, v)| ProfileRow {
                shift,
                re: v.re,
                im: v.im,
                mag: v.norm(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

#[derive(Serialize)]
pub struct ComparisonRow {
    pub family: String,
    pub mode: String,
    #[serde(flatten)]
    pub stats: CorrelationStats,
}

#[derive(Serialize)]
pub struct ComparisonDoc {
    pub length: usize,
    pub trials: usize,
    pub seed: u64,
    pub families: Vec<ComparisonRow>,
}

pub fn comparison_to_csv(doc: &ComparisonDoc) -> String {
    let mut out = String::from("family,mode,mean_abs,mean_square,max_abs,sample_count\n");
    for row in &doc.families {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            row.family,
            row.mode,
            fmt_f64(row.stats.mean_abs),
            fmt_f64(row.stats.mean_square),
            fmt_f64(row.stats.max_abs),
            row.stats.sample_count
        );
    }
    out
}

pub fn comparison_to_json(doc: &ComparisonDoc) -> String {
    serde_json::to_string_pretty(doc).expect("serializable")
}
