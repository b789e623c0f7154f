//! `hiddengraph` — probe-efficient discovery over hidden graphs.
//!
//! A hidden graph reveals its edges only through pairwise probes. `topk`
//! finds the k highest-degree vertices and `core` decides whether a K-core
//! exists, both spending as few probes as the round schedule allows; `bench`
//! sweeps `core` over several K values and reports the probe gain per row;
//! `decompose` runs the classic (fully revealed) core decomposition.
//!
//! Exit codes: 0 success, 2 usage error, 3 input error, 4 internal
//! invariant violation (including `--baseline` disagreement).

mod report;
mod source;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use hiddengraph::{
    core_decomposition, gsoe_top_k, hidden_core, peel_oracle, AdjacencyOracle, CoreOutcome,
    Error, Graph, StopReason, TopKResult, VertexId,
};

use report::{
    bench_csv, outcome_token, reason_token, targets_stdout, to_json_string, write_output,
    BaselineMeta, BenchReport, BenchRow, CoreNumberEntry, CoreReport, GraphMeta, TopkEntry,
    TopkReport, POLICY,
};
use source::{Source, SourceArgs};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or parameters (exit 2).
    Usage(String),
    /// Unreadable or malformed graph input (exit 3).
    Input(String),
    /// An invariant the algorithms promise was violated (exit 4).
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Internal(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidK { .. } => CliError::Usage(e.to_string()),
            Error::Io(_) | Error::MalformedLine { .. } | Error::EmptyInput | Error::Ungraphable => {
                CliError::Input(e.to_string())
            }
            // Probe-once violations, exhausted interval sets, and the like
            // can only come from a bug in the algorithms.
            other => CliError::Internal(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "hiddengraph",
    version,
    about = "Probe-efficient top-k degree and K-core discovery in hidden graphs",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the k highest-degree vertices (with ties) by adaptive probing
    Topk {
        #[command(flatten)]
        source: SourceArgs,
        /// How many top-degree vertices to discover
        #[arg(short = 'k', long = "k", value_name = "K")]
        k: u32,
        /// Also rank by full revelation and fail (exit 4) on any mismatch
        #[arg(long)]
        baseline: bool,
        /// Write a JSON report to PATH (`-` for stdout)
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Decide whether a K-core exists, probing as few pairs as possible
    Core {
        #[command(flatten)]
        source: SourceArgs,
        /// Minimum induced degree of the subgraph to look for
        #[arg(short = 'K', long = "K", value_name = "K")]
        k: u32,
        /// Also decide by full revelation and fail (exit 4) on any mismatch
        #[arg(long)]
        baseline: bool,
        /// Write a JSON report to PATH (`-` for stdout)
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
    },
    /// Compute every vertex's core number on a fully known graph
    Decompose {
        #[command(flatten)]
        source: SourceArgs,
        /// Write `vertex,core_number` rows to PATH instead of stdout
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
    /// Run the K-core query across several K values and report probe gains
    Bench {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated K values, e.g. `100,500,1000,2000`
        #[arg(
            short = 'K',
            long = "K",
            value_name = "LIST",
            value_delimiter = ',',
            required = true
        )]
        k: Vec<u32>,
        /// Re-decide every row by full revelation and fail (exit 4) on mismatch
        #[arg(long)]
        baseline: bool,
        /// Write the JSON report to PATH (`-` for stdout)
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write the CSV report to PATH (`-` for stdout)
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Topk { source, k, baseline, json } => cmd_topk(&source, k, baseline, json),
        Command::Core { source, k, baseline, json } => cmd_core(&source, k, baseline, json),
        Command::Decompose { source, csv } => cmd_decompose(&source, csv),
        Command::Bench { source, k, baseline, json, csv } => {
            cmd_bench(&source, k, baseline, json, csv)
        }
    }
}

fn graph_meta(src: &Source) -> GraphMeta {
    GraphMeta {
        name: src.name.clone(),
        n: src.graph.n(),
        m: src.graph.m(),
        generator: src.generator.clone(),
    }
}

fn full_budget(g: &Graph) -> u64 {
    g.n() as u64 * (g.n() as u64 - 1) / 2
}

fn percent(gain: f64) -> String {
    format!("{:.2}%", gain * 100.0)
}

fn cmd_topk(
    source: &SourceArgs,
    k: u32,
    baseline: bool,
    json: Option<PathBuf>,
) -> Result<(), CliError> {
    let src = Source::load(source)?;
    let oracle = AdjacencyOracle::from_graph(&src.graph);
    let result = gsoe_top_k(&oracle, k)?;

    let base = if baseline {
        Some(check_topk_baseline(&src.graph, k, &result)?)
    } else {
        None
    };

    if !targets_stdout(&json) {
        println!("{}", src.describe());
        println!(
            "top-{} by degree: {} vertices, {}/{} probes, gain {}, {} rounds",
            k,
            result.entries.len(),
            result.probes,
            result.max_probes,
            percent(result.gain()),
            result.rounds
        );
        for &(v, d) in &result.entries {
            println!("  vertex {}  degree {}", src.label(v), d);
        }
    }
    if let Some(b) = &base {
        eprintln!("baseline: agreement with full revelation ({} probes)", b.probes);
    }

    if let Some(path) = json {
        let entries = result
            .entries
            .iter()
            .map(|&(v, d)| TopkEntry { vertex: src.label(v), degree: d })
            .collect();
        let report = TopkReport {
            graph: graph_meta(&src),
            policy: POLICY,
            k,
            probes: result.probes,
            max_probes: result.max_probes,
            gain: result.gain(),
            rounds: result.rounds,
            entries,
            baseline: base,
        };
        write_output(&path, &to_json_string(&report))?;
    }
    Ok(())
}

/// Full-revelation reference: every vertex whose degree reaches the k-th
/// largest (so ties are included), compared order-insensitively.
fn check_topk_baseline(g: &Graph, k: u32, got: &TopKResult) -> Result<BaselineMeta, CliError> {
    let mut degrees: Vec<u32> = (1..=g.n()).map(|u| g.degree(u)).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let threshold = degrees[(k - 1) as usize];
    let mut want: Vec<(VertexId, u32)> = (1..=g.n())
        .filter(|&u| g.degree(u) >= threshold)
        .map(|u| (u, g.degree(u)))
        .collect();
    let mut have = got.entries.clone();
    let key = |&(v, d): &(VertexId, u32)| (std::cmp::Reverse(d), v);
    want.sort_unstable_by_key(key);
    have.sort_unstable_by_key(key);
    if want != have {
        return Err(CliError::Internal(format!(
            "baseline mismatch: probing found {have:?}, full revelation says {want:?}"
        )));
    }
    Ok(BaselineMeta { agreement: true, probes: full_budget(g) })
}

fn cmd_core(
    source: &SourceArgs,
    k: u32,
    baseline: bool,
    json: Option<PathBuf>,
) -> Result<(), CliError> {
    let src = Source::load(source)?;
    let oracle = AdjacencyOracle::from_graph(&src.graph);
    let result = hidden_core(&oracle, k)?;

    let base = if baseline {
        Some(check_core_baseline(&src.graph, k, &result.outcome)?)
    } else {
        None
    };

    if !targets_stdout(&json) {
        println!("{}", src.describe());
        match &result.outcome {
            CoreOutcome::Exists { vertices, edges, core_numbers } => {
                println!(
                    "{k}-core: exists with {} vertices and {} edges, {}/{} probes, gain {}",
                    vertices.len(),
                    edges.len(),
                    result.probes,
                    result.max_probes,
                    percent(result.gain)
                );
                let members: Vec<String> =
                    vertices.iter().map(|&v| src.label(v).to_string()).collect();
                println!("  vertices: {}", members.join(" "));
                let cores: Vec<String> = core_numbers
                    .iter()
                    .map(|&(v, c)| format!("{}={c}", src.label(v)))
                    .collect();
                println!("  core numbers: {}", cores.join(" "));
            }
            CoreOutcome::NotExists { reason } => {
                println!(
                    "{k}-core: none exists ({}), {}/{} probes, gain {}",
                    reason_text(*reason, k),
                    result.probes,
                    result.max_probes,
                    percent(result.gain)
                );
            }
        }
    }
    if let Some(b) = &base {
        eprintln!("baseline: agreement with full revelation ({} probes)", b.probes);
    }

    if let Some(path) = json {
        let report = match &result.outcome {
            CoreOutcome::Exists { vertices, edges, core_numbers } => CoreReport {
                graph: graph_meta(&src),
                policy: POLICY,
                k,
                outcome: "exists".into(),
                reason: None,
                vertices: Some(vertices.iter().map(|&v| src.label(v)).collect()),
                edges: Some(
                    edges.iter().map(|&(u, v)| [src.label(u), src.label(v)]).collect(),
                ),
                core_numbers: Some(
                    core_numbers
                        .iter()
                        .map(|&(v, c)| CoreNumberEntry { vertex: src.label(v), core: c })
                        .collect(),
                ),
                probes: result.probes,
                max_probes: result.max_probes,
                gain: result.gain,
                baseline: base,
            },
            CoreOutcome::NotExists { reason } => CoreReport {
                graph: graph_meta(&src),
                policy: POLICY,
                k,
                outcome: "not-exists".into(),
                reason: Some(reason_token(*reason)),
                vertices: None,
                edges: None,
                core_numbers: None,
                probes: result.probes,
                max_probes: result.max_probes,
                gain: result.gain,
                baseline: base,
            },
        };
        write_output(&path, &to_json_string(&report))?;
    }
    Ok(())
}

fn reason_text(reason: StopReason, k: u32) -> String {
    match reason {
        StopReason::CandidateCount => format!("fewer than {} candidates survived", k + 1),
        StopReason::ProbeBudget => {
            "the remaining probe budget cannot complete any candidate set".to_string()
        }
        StopReason::CoreCheckFailed => {
            "every candidate resolved and the revealed subgraph has no such core".to_string()
        }
    }
}

fn check_core_baseline(
    g: &Graph,
    k: u32,
    outcome: &CoreOutcome,
) -> Result<BaselineMeta, CliError> {
    let want = peel_oracle(g, k);
    let agree = match outcome {
        CoreOutcome::Exists { vertices, .. } => *vertices == want,
        CoreOutcome::NotExists { .. } => want.is_empty(),
    };
    if !agree {
        return Err(CliError::Internal(format!(
            "baseline mismatch at K={k}: probing said {}, full revelation says {}",
            outcome_token(outcome),
            if want.is_empty() { "not-exists".to_string() } else { format!("exists {want:?}") }
        )));
    }
    Ok(BaselineMeta { agreement: true, probes: full_budget(g) })
}

fn cmd_decompose(source: &SourceArgs, csv: Option<PathBuf>) -> Result<(), CliError> {
    let src = Source::load(source)?;
    let core = core_decomposition(&src.graph);

    let mut rows: Vec<(u64, u32)> = (1..=src.graph.n())
        .map(|v| (src.label(v), core[(v - 1) as usize]))
        .collect();
    rows.sort_unstable();

    let mut out = String::from("vertex,core_number\n");
    for (label, c) in &rows {
        out.push_str(&format!("{label},{c}\n"));
    }
    let max_core = core.iter().copied().max().unwrap_or(0);
    eprintln!("{}; max core number {}", src.describe(), max_core);

    match csv {
        Some(path) => write_output(&path, &out),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn cmd_bench(
    source: &SourceArgs,
    mut ks: Vec<u32>,
    baseline: bool,
    json: Option<PathBuf>,
    csv: Option<PathBuf>,
) -> Result<(), CliError> {
    let src = Source::load(source)?;
    ks.sort_unstable();
    ks.dedup();
    let oracle = AdjacencyOracle::from_graph(&src.graph);

    // Rows are independent queries over the same oracle, each with a fresh
    // ledger, so they can run concurrently; assembly stays ordered by K.
    let row_results: Vec<Result<(BenchRow, CoreOutcome), Error>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ks
            .iter()
            .map(|&k| {
                let oracle = &oracle;
                scope.spawn(move || {
                    let started = Instant::now();
                    let result = hidden_core(oracle, k)?;
                    let seconds = started.elapsed().as_secs_f64();
                    let row = BenchRow {
                        k,
                        probes: result.probes,
                        max_probes: result.max_probes,
                        gain: result.gain,
                        outcome: outcome_token(&result.outcome),
                        seconds,
                    };
                    Ok((row, result.outcome))
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("bench row panicked")).collect()
    });

    let mut rows = Vec::with_capacity(ks.len());
    for result in row_results {
        let (row, outcome) = result?;
        if baseline {
            check_core_baseline(&src.graph, row.k, &outcome)?;
        }
        rows.push(row);
    }

    if !targets_stdout(&json) && !targets_stdout(&csv) {
        println!("{}", src.describe());
        println!("{:>6}  {:>12}  {:>12}  {:>8}  outcome", "K", "probes", "max_probes", "gain");
        for r in &rows {
            println!(
                "{:>6}  {:>12}  {:>12}  {:>8}  {}",
                r.k,
                r.probes,
                r.max_probes,
                percent(r.gain),
                r.outcome
            );
        }
    }
    if baseline {
        eprintln!("baseline: all {} row(s) agree with full revelation", rows.len());
    }

    if let Some(path) = &json {
        let report =
            BenchReport { graph: graph_meta(&src), policy: POLICY, rows: rows.clone() };
        write_output(path, &to_json_string(&report))?;
    }
    if let Some(path) = &csv {
        write_output(path, &bench_csv(&rows))?;
    }
    Ok(())
}
