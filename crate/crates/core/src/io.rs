//! Whitespace-separated edge-list reading and writing.
//!
//! Input labels are arbitrary u64s (SNAP-style files are 0-based and often
//! sparse); they are densified to 1..=n in order of first appearance so the
//! rest of the crate can work with contiguous ids. Blank lines and `#`
//! comments are skipped; duplicate edges and self-loops are dropped but
//! counted so callers can report them.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::{Error, Graph, VertexId};

/// A graph read from disk together with its original vertex labels.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// `labels[v - 1]` is the file label of internal vertex `v`.
    pub labels: Vec<u64>,
    pub duplicate_edges: u64,
    pub self_loops: u64,
}

impl LabeledGraph {
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[(v - 1) as usize]
    }
}

/// Parse an edge list from any buffered reader.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<LabeledGraph, Error> {
    let mut ids: HashMap<u64, VertexId> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut intern = |label: u64, labels: &mut Vec<u64>| -> VertexId {
        *ids.entry(label).or_insert_with(|| {
            labels.push(label);
            labels.len() as VertexId
        })
    };

    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut seen: std::collections::HashSet<(VertexId, VertexId)> = std::collections::HashSet::new();
    let mut duplicate_edges = 0u64;
    let mut self_loops = 0u64;

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tok = trimmed.split_whitespace();
        let (a, b) = match (tok.next(), tok.next(), tok.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::MalformedLine {
                    line: idx + 1,
                    content: trimmed.to_string(),
                })
            }
        };
        let parse = |s: &str| -> Result<u64, Error> {
            s.parse().map_err(|_| Error::MalformedLine {
                line: idx + 1,
                content: trimmed.to_string(),
            })
        };
        let (la, lb) = (parse(a)?, parse(b)?);
        let u = intern(la, &mut labels);
        let v = intern(lb, &mut labels);
        if u == v {
            self_loops += 1;
            continue;
        }
        let key = if u < v { (u, v) } else { (v, u) };
        if seen.insert(key) {
            edges.push(key);
        } else {
            duplicate_edges += 1;
        }
    }

    if edges.is_empty() {
        return Err(Error::EmptyInput);
    }
    let graph = Graph::from_edges(labels.len() as u32, &edges)?;
    Ok(LabeledGraph {
        graph,
        labels,
        duplicate_edges,
        self_loops,
    })
}

/// Parse an edge list from a file path.
pub fn load_edge_list_path<P: AsRef<Path>>(path: P) -> Result<LabeledGraph, Error> {
    load_edge_list(BufReader::new(File::open(path)?))
}

/// Write a graph as `u v` lines using internal 1-based ids, sorted.
pub fn write_edge_list<P: AsRef<Path>>(path: P, g: &Graph) -> Result<(), Error> {
    let mut out = std::io::BufWriter::new(File::create(path)?);
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()?;
    Ok(())
}
