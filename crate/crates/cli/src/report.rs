//! Report documents and their on-disk formats.
//!
//! JSON output uses struct field order, so identical inputs serialize to
//! identical bytes. Timings never enter a document; they go to stderr.

use std::io::Write;
use std::path::Path;

use compsearch::refutation::{GroverComparison, OracleVerdict, SweepReport};
use compsearch::{Backend, DyadicReal};
use serde::Serialize;

use crate::error::CliError;

pub const CSV_HEADER: [&str; 4] = ["oracle_id", "exact_match", "max_dev", "tv_to_first"];

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub command: &'static str,
    pub parameters: Parameters,
    pub results: Results,
    pub tool_version: &'static str,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Parameters {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub backend: Option<Backend>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_f: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marked: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Results {
    Verify(VerifyResults),
    Trace(TraceResults),
    Sweep(SweepReport),
    GroverCompare(GroverResults),
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyResults {
    pub mode: &'static str,
    pub oracles_checked: usize,
    pub oracles_matched: usize,
    pub max_deviation: f64,
    pub max_norm_drift: f64,
    pub passed: bool,
    pub verdicts: Vec<OracleVerdict>,
}

/// An amplitude as written in reports: exact values carry both the
/// `(a+b√2)/2^h` string and the `[a, b, h]` triple.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum AmplitudeValue {
    Exact {
        value: String,
        triple: (i128, i128, u32),
    },
    Float {
        re: f64,
        im: f64,
    },
}

impl AmplitudeValue {
    pub fn exact(d: &DyadicReal) -> Self {
        AmplitudeValue::Exact {
            value: d.to_string(),
            triple: (d.a(), d.b(), d.h()),
        }
    }
}

impl std::fmt::Display for AmplitudeValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AmplitudeValue::Exact { value, .. } => f.write_str(value),
            AmplitudeValue::Float { re, im } if *im == 0.0 => write!(f, "{re}"),
            AmplitudeValue::Float { re, im } => write!(f, "{re}{im:+}i"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AmplitudeEntry {
    pub basis: String,
    pub amplitude: AmplitudeValue,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckpointReport {
    pub label: String,
    pub simulated: Vec<AmplitudeEntry>,
    pub analytic: Vec<AmplitudeEntry>,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceResults {
    pub checkpoints: Vec<CheckpointReport>,
    pub output_matches_target: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GroverResults {
    #[serde(flatten)]
    pub comparison: GroverComparison,
    pub devries_prob_exact: AmplitudeValue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl ReportDocument {
    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(self)
            .map_err(|e| CliError::Internal(format!("serializing report: {e}")))?;
        s.push('\n');
        Ok(s)
    }

    /// Verdict table; only sweeps and verifications have one.
    pub fn verdicts(&self) -> Option<&[OracleVerdict]> {
        match &self.results {
            Results::Verify(v) => Some(&v.verdicts),
            Results::Sweep(s) => Some(&s.verdicts),
            _ => None,
        }
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let verdicts = self.verdicts().ok_or_else(|| {
            CliError::Usage(format!(
                "csv output is not available for `{}`",
                self.command
            ))
        })?;
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Internal(format!("writing csv: {e}"));
        w.write_record(CSV_HEADER).map_err(io)?;
        for v in verdicts {
            w.write_record([
                v.oracle_id.clone(),
                v.exact_match.to_string(),
                v.max_dev.to_string(),
                v.tv_to_first.to_string(),
            ])
            .map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::Internal(format!("writing csv: {e}")))?;
        String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

/// Writes `contents` to a temporary file next to `path`, then renames it
/// into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(contents.as_bytes()).map_err(io)?;
    tmp.flush().map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}

/// `|b₁…b_m⟩` for basis index `x` of an `m`-qubit state.
pub fn basis_label(x: usize, num_qubits: usize) -> String {
    format!("|{x:0num_qubits$b}⟩")
}
