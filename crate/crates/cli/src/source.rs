//! Graph input resolution: every subcommand takes exactly one of
//! `--edges PATH`, `--gnp n=..,p=..,seed=..`, or
//! `--powerlaw n=..,dmin=..,dmax=..,alpha=..,seed=..`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::Args;
use hiddengraph::{gen_gnp, gen_power_law, load_edge_list_path, DegreeSequenceSpec, Graph, VertexId};

use crate::report::GeneratorMeta;
use crate::CliError;

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct SourceArgs {
    /// Edge-list file: one `u v` pair per line; `#` starts a comment
    #[arg(long, value_name = "PATH")]
    pub edges: Option<PathBuf>,

    /// Seeded Erdős–Rényi graph, e.g. `n=30,p=0.3,seed=7`
    #[arg(long, value_name = "n=N,p=P,seed=S")]
    pub gnp: Option<GnpSpec>,

    /// Seeded power-law graph, e.g. `n=1000,dmin=34,dmax=400,alpha=1.8,seed=7`
    #[arg(long, value_name = "n=N,dmin=L,dmax=H,alpha=A,seed=S")]
    pub powerlaw: Option<PowerLawSpec>,
}

#[derive(Clone, Debug)]
pub struct GnpSpec {
    pub n: u32,
    pub p: f64,
    pub seed: u64,
}

impl FromStr for GnpSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let kv = parse_kv(s, &["n", "p", "seed"])?;
        Ok(GnpSpec {
            n: field(&kv, "n")?,
            p: field(&kv, "p")?,
            seed: field(&kv, "seed")?,
        })
    }
}

#[derive(Clone, Debug)]
pub struct PowerLawSpec {
    pub n: u32,
    pub dmin: u32,
    pub dmax: u32,
    pub alpha: f64,
    pub seed: u64,
}

impl FromStr for PowerLawSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let kv = parse_kv(s, &["n", "dmin", "dmax", "alpha", "seed"])?;
        Ok(PowerLawSpec {
            n: field(&kv, "n")?,
            dmin: field(&kv, "dmin")?,
            dmax: field(&kv, "dmax")?,
            alpha: field(&kv, "alpha")?,
            seed: field(&kv, "seed")?,
        })
    }
}

/// Split `k=v,k=v,...`, requiring every key in `keys` exactly once.
fn parse_kv<'a>(s: &'a str, keys: &[&str]) -> Result<Vec<(&'a str, &'a str)>, String> {
    let mut out: Vec<(&str, &str)> = Vec::new();
    for part in s.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        let (k, v) = (k.trim(), v.trim());
        if !keys.contains(&k) {
            return Err(format!("unknown key {k:?} (expected {})", keys.join(", ")));
        }
        if out.iter().any(|&(seen, _)| seen == k) {
            return Err(format!("duplicate key {k:?}"));
        }
        out.push((k, v));
    }
    for required in keys {
        if !out.iter().any(|&(k, _)| k == *required) {
            return Err(format!("missing key {required:?}"));
        }
    }
    Ok(out)
}

fn field<T: FromStr>(kv: &[(&str, &str)], key: &str) -> Result<T, String>
where
    T::Err: fmt::Display,
{
    let raw = kv.iter().find(|&&(k, _)| k == key).expect("presence checked").1;
    raw.parse().map_err(|e| format!("bad value for {key}: {e}"))
}

/// A resolved graph plus everything reports need to describe it.
pub struct Source {
    pub graph: Graph,
    /// Original file labels when loaded from disk; generated graphs use their
    /// internal ids directly.
    labels: Option<Vec<u64>>,
    pub name: String,
    pub generator: Option<GeneratorMeta>,
}

impl Source {
    pub fn load(args: &SourceArgs) -> Result<Source, CliError> {
        if let Some(path) = &args.edges {
            let loaded = load_edge_list_path(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            if loaded.duplicate_edges + loaded.self_loops > 0 {
                eprintln!(
                    "note: {}: dropped {} duplicate edge(s) and {} self-loop(s)",
                    path.display(),
                    loaded.duplicate_edges,
                    loaded.self_loops
                );
            }
            Ok(Source {
                graph: loaded.graph,
                labels: Some(loaded.labels),
                name: path.display().to_string(),
                generator: None,
            })
        } else if let Some(spec) = &args.gnp {
            if !(0.0..=1.0).contains(&spec.p) {
                return Err(CliError::Usage(format!("--gnp p={} outside [0, 1]", spec.p)));
            }
            Ok(Source {
                graph: gen_gnp(spec.n, spec.p, spec.seed),
                labels: None,
                name: format!("gnp(n={},p={},seed={})", spec.n, spec.p, spec.seed),
                generator: Some(GeneratorMeta::Gnp {
                    n: spec.n,
                    p: spec.p,
                    seed: spec.seed,
                }),
            })
        } else if let Some(spec) = &args.powerlaw {
            let ds = DegreeSequenceSpec {
                n: spec.n,
                d_min: spec.dmin,
                d_max: spec.dmax,
                alpha: spec.alpha,
                seed: spec.seed,
            };
            let graph = gen_power_law(&ds)
                .map_err(|e| CliError::Input(format!("--powerlaw {spec:?}: {e}")))?;
            Ok(Source {
                graph,
                labels: None,
                name: format!(
                    "powerlaw(n={},dmin={},dmax={},alpha={},seed={})",
                    spec.n, spec.dmin, spec.dmax, spec.alpha, spec.seed
                ),
                generator: Some(GeneratorMeta::PowerLaw {
                    n: spec.n,
                    dmin: spec.dmin,
                    dmax: spec.dmax,
                    alpha: spec.alpha,
                    seed: spec.seed,
                }),
            })
        } else {
            unreachable!("clap group guarantees exactly one source")
        }
    }

    pub fn label(&self, v: VertexId) -> u64 {
        match &self.labels {
            Some(labels) => labels[(v - 1) as usize],
            None => v as u64,
        }
    }

    pub fn describe(&self) -> String {
        format!("graph: {} (n={}, m={})", self.name, self.graph.n(), self.graph.m())
    }
}
