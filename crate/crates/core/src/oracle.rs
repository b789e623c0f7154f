//! The hidden-graph probe model: edge existence is only learnable by paying
//! for a pairwise probe, and every probe is routed through a ledger that
//! enforces probe-once semantics and keeps the budget auditable.

use crate::{Error, Graph, VertexId};

/// Answer of a single pairwise probe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProbeResult {
    /// The pair is an edge.
    Solid,
    /// The pair is a non-edge.
    Empty,
}

/// A hidden graph: a vertex count and a symmetric, irreflexive edge
/// predicate. Implementations answer point queries; callers never get bulk
/// access, so the only way to learn structure is to spend probes.
pub trait EdgeOracle {
    fn vertex_count(&self) -> u32;

    /// Evaluate the pair `{u, v}`. Callers guarantee `u != v` and both ids in
    /// range; go through [`ProbeLedger::probe`] so the call is counted.
    fn probe_pair(&self, u: VertexId, v: VertexId) -> ProbeResult;
}

/// Oracle backed by an explicit adjacency structure (the usual case for
/// experiments: the graph is known to the harness, hidden from the search).
#[derive(Clone, Debug)]
pub struct AdjacencyOracle {
    n: u32,
    adj: Vec<Vec<VertexId>>,
}

impl AdjacencyOracle {
    pub fn from_edges(n: u32, edges: &[(VertexId, VertexId)]) -> Result<Self, Error> {
        let g = Graph::from_edges(n, edges)?;
        Ok(Self::from_graph(&g))
    }

    pub fn from_graph(g: &Graph) -> Self {
        let adj = (1..=g.n()).map(|u| g.neighbors(u).to_vec()).collect();
        AdjacencyOracle { n: g.n(), adj }
    }
}

impl EdgeOracle for AdjacencyOracle {
    fn vertex_count(&self) -> u32 {
        self.n
    }

    fn probe_pair(&self, u: VertexId, v: VertexId) -> ProbeResult {
        if self.adj[(u - 1) as usize].binary_search(&v).is_ok() {
            ProbeResult::Solid
        } else {
            ProbeResult::Empty
        }
    }
}

/// Oracle over arbitrary items with a pairwise predicate (e.g. similarity
/// above a threshold). Item `i` is vertex `i+1`. The predicate must be
/// symmetric; construction spot-checks a few pairs in debug builds.
pub struct PredicateOracle<T, F> {
    items: Vec<T>,
    pred: F,
}

impl<T, F: Fn(&T, &T) -> bool> PredicateOracle<T, F> {
    pub fn new(items: Vec<T>, pred: F) -> Self {
        #[cfg(debug_assertions)]
        {
            let n = items.len();
            for step in 1..=3usize {
                for i in (0..n.saturating_sub(step)).step_by(n / 4 + 1) {
                    let (a, b) = (&items[i], &items[i + step]);
                    debug_assert_eq!(pred(a, b), pred(b, a), "asymmetric predicate");
                }
            }
        }
        PredicateOracle { items, pred }
    }
}

impl<T, F: Fn(&T, &T) -> bool> EdgeOracle for PredicateOracle<T, F> {
    fn vertex_count(&self) -> u32 {
        self.items.len() as u32
    }

    fn probe_pair(&self, u: VertexId, v: VertexId) -> ProbeResult {
        let a = &self.items[(u - 1) as usize];
        let b = &self.items[(v - 1) as usize];
        if (self.pred)(a, b) {
            ProbeResult::Solid
        } else {
            ProbeResult::Empty
        }
    }
}

/// Index of the unordered pair `{u, v}` (`u < v`) in the triangular layout
/// used by the ledger's seen-bitmap.
fn pair_index(n: u64, u: u64, v: u64) -> u64 {
    debug_assert!(u < v);
    (u - 1) * (2 * n - u) / 2 + (v - u - 1)
}

/// Counts probes and enforces probe-once semantics. A repeated pair is a bug
/// in the caller (the probing structures already guarantee freshness), so it
/// surfaces as an error rather than a cache hit. The seen-set is a triangular
/// bitmap: one bit per pair, O(1) per probe.
#[derive(Clone, Debug)]
pub struct ProbeLedger {
    n: u32,
    probes: u64,
    seen: Vec<u64>,
}

impl ProbeLedger {
    pub fn new(n: u32) -> Self {
        let pairs = n as u64 * (n as u64 - 1) / 2;
        let words = pairs.div_ceil(64) as usize;
        ProbeLedger { n, probes: 0, seen: vec![0; words] }
    }

    /// Probes spent so far.
    pub fn probes(&self) -> u64 {
        self.probes
    }

    /// The exhaustive budget `n(n-1)/2`.
    pub fn max_probes(&self) -> u64 {
        self.n as u64 * (self.n as u64 - 1) / 2
    }

    pub fn was_probed(&self, u: VertexId, v: VertexId) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let idx = pair_index(self.n as u64, a as u64, b as u64);
        self.seen[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    /// The single paid entry point: evaluates `{u, v}` against the oracle,
    /// records the pair, and bumps the count.
    pub fn probe<O: EdgeOracle>(
        &mut self,
        oracle: &O,
        u: VertexId,
        v: VertexId,
    ) -> Result<ProbeResult, Error> {
        debug_assert_eq!(oracle.vertex_count(), self.n);
        if u == v {
            return Err(Error::SelfProbe(u));
        }
        for w in [u, v] {
            if w < 1 || w > self.n {
                return Err(Error::OutOfRange { v: w, n: self.n });
            }
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let idx = pair_index(self.n as u64, a as u64, b as u64);
        let (word, bit) = ((idx / 64) as usize, idx % 64);
        if self.seen[word] >> bit & 1 == 1 {
            return Err(Error::DuplicateProbe(a, b));
        }
        self.seen[word] |= 1 << bit;
        self.probes += 1;
        Ok(oracle.probe_pair(u, v))
    }
}
