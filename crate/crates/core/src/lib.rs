//! Probe-efficient discovery in hidden graphs.
//!
//! A hidden graph exposes its vertex set but not its edges; the only way to
//! learn whether a pair is connected is to pay for a probe. This crate
//! answers two questions while trying to leave as much of the n·(n−1)/2
//! probe budget unspent as possible:
//!
//! * [`gsoe_top_k`] — which k vertices have the highest degrees (ties
//!   included)?
//! * [`hidden_core`] — does the graph contain a k-core, and if so, which
//!   vertices and edges form it?
//!
//! Both run a round-based schedule over per-vertex interval sets of
//! unprobed partners ([`IntervalSet`]), account every paid probe through a
//! duplicate-rejecting [`ProbeLedger`], and take an [`EdgeOracle`] so the
//! hidden graph can be an adjacency structure, a predicate over items, or
//! anything else that can answer pair queries. Fully known graphs get an
//! O(n + m) core decomposition ([`core_decomposition`]), and seeded
//! generators ([`gen_gnp`], [`gen_power_law`]) plus edge-list IO round out
//! experiment plumbing.

mod book;
mod decomp;
mod error;
mod gen;
mod graph;
mod gsoe;
mod hidden_core;
mod interval;
mod io;
mod oracle;

pub use book::{VertexBook, VertexState};
pub use decomp::{core_decomposition, core_decomposition_instrumented, k_core, peel_oracle};
pub use error::Error;
pub use gen::{gen_gnp, gen_power_law, sample_degrees, DegreeSequenceSpec};
pub use graph::{Graph, Subgraph, VertexId};
pub use gsoe::{gsoe_top_k, gsoe_top_k_observed, GsoeObserver, TopKResult};
pub use hidden_core::{
    finalize_core, hidden_core, hidden_core_observed, reset_tkey_comparison_count,
    tkey_comparison_count, CandidateStatus, CoreObserver, CoreOutcome, CoreQueryResult,
    RunSnapshot, StopReason, TopCandidates, VertexStatus,
};
pub use interval::{comparison_count, reset_comparison_count, IntervalSet};
pub use io::{load_edge_list, load_edge_list_path, write_edge_list, LabeledGraph};
pub use oracle::{AdjacencyOracle, EdgeOracle, PredicateOracle, ProbeLedger, ProbeResult};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::{Graph, VertexId};

    /// The five-vertex graph used across the crate's worked examples:
    /// vertices 2–5 form a 4-clique (the graph's 3-core) and vertex 1 hangs
    /// off vertex 2.
    pub(crate) fn example5_edges() -> Vec<(VertexId, VertexId)> {
        vec![(1, 2), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
    }

    pub(crate) fn example5() -> Graph {
        Graph::from_edges(5, &example5_edges()).unwrap()
    }

    /// Brute-force reference: every vertex whose degree reaches the k-th
    /// largest degree, as `(vertex, degree)` ascending by vertex id.
    pub(crate) fn top_k_with_ties(g: &Graph, k: u32) -> Vec<(VertexId, u32)> {
        let mut degrees: Vec<u32> = (1..=g.n()).map(|v| g.degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let threshold = degrees[(k - 1) as usize];
        (1..=g.n())
            .filter(|&v| g.degree(v) >= threshold)
            .map(|v| (v, g.degree(v)))
            .collect()
    }
}
