//! Machine-readable output: JSON reports for `topk`/`core`/`bench` and the
//! bench CSV. Every JSON report carries the probing-policy identifier because
//! probe counts depend on source/destination ordering choices; two runs agree
//! only under the same policy.

use std::path::Path;

use hiddengraph::{CoreOutcome, StopReason};
use serde::Serialize;

use crate::CliError;

#[derive(Serialize)]
pub struct GraphMeta {
    pub name: String,
    pub n: u32,
    pub m: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorMeta>,
}

/// Parameters of a synthetic source, echoed so a report is reproducible.
#[derive(Clone, Serialize)]
#[serde(tag = "kind")]
pub enum GeneratorMeta {
    #[serde(rename = "gnp")]
    Gnp { n: u32, p: f64, seed: u64 },
    #[serde(rename = "powerlaw")]
    PowerLaw { n: u32, dmin: u32, dmax: u32, alpha: f64, seed: u64 },
}

#[derive(Serialize)]
pub struct PolicyMeta {
    pub source_order: &'static str,
    pub destination: &'static str,
}

/// The ordering policy this binary implements: sources cycle 1..n and wrap
/// between rounds; each probe targets the smallest still-unprobed partner.
pub const POLICY: PolicyMeta = PolicyMeta {
    source_order: "ascending-wrap",
    destination: "left-endpoint",
};

#[derive(Serialize)]
pub struct BaselineMeta {
    pub agreement: bool,
    pub probes: u64,
}

#[derive(Serialize)]
pub struct TopkReport {
    pub graph: GraphMeta,
    pub policy: PolicyMeta,
    pub k: u32,
    pub probes: u64,
    pub max_probes: u64,
    pub gain: f64,
    pub rounds: u32,
    pub entries: Vec<TopkEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub baseline: Option<BaselineMeta>,
}

#[derive(Serialize)]
pub struct TopkEntry {
    pub vertex: u64,
    pub degree: u32,
}

#[derive(Serialize)]
pub struct CoreReport {
    pub graph: GraphMeta,
    pub policy: PolicyMeta,
    #[serde(rename = "K")]
    pub k: u32,
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<[u64; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core_numbers: Option<Vec<CoreNumberEntry>>,
    pub probes: u64,
    pub max_probes: u64,
    pub gain: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub baseline: Option<BaselineMeta>,
}

#[derive(Serialize)]
pub struct CoreNumberEntry {
    pub vertex: u64,
    pub core: u32,
}

#[derive(Serialize)]
pub struct BenchReport {
    pub graph: GraphMeta,
    pub policy: PolicyMeta,
    pub rows: Vec<BenchRow>,
}

#[derive(Clone, Serialize)]
pub struct BenchRow {
    #[serde(rename = "K")]
    pub k: u32,
    pub probes: u64,
    pub max_probes: u64,
    pub gain: f64,
    pub outcome: String,
    pub seconds: f64,
}

pub const CSV_HEADER: &str = "K,probes,max_probes,gain,outcome,seconds";

pub fn bench_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.k, r.probes, r.max_probes, r.gain, r.outcome, r.seconds
        ));
    }
    out
}

/// One compact token per verdict, safe inside unquoted CSV.
pub fn outcome_token(outcome: &CoreOutcome) -> String {
    match outcome {
        CoreOutcome::Exists { .. } => "exists".to_string(),
        CoreOutcome::NotExists { reason } => format!("not-exists({})", reason_token(*reason)),
    }
}

pub fn reason_token(reason: StopReason) -> &'static str {
    match reason {
        StopReason::CandidateCount => "candidate-count",
        StopReason::ProbeBudget => "probe-budget",
        StopReason::CoreCheckFailed => "core-check-failed",
    }
}

pub fn to_json_string<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize infallibly");
    s.push('\n');
    s
}

/// Write `content` to `path`, with `-` meaning stdout.
pub fn write_output(path: &Path, content: &str) -> Result<(), CliError> {
    if path.as_os_str() == "-" {
        print!("{content}");
        Ok(())
    } else {
        std::fs::write(path, content)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

/// True when this output target would collide with human text on stdout.
pub fn targets_stdout(path: &Option<std::path::PathBuf>) -> bool {
    path.as_deref().is_some_and(|p| p.as_os_str() == "-")
}
