//! Plain revealed graphs: the ground truth behind an oracle, the output of
//! generators, and the input to core decomposition.

use crate::Error;

/// Vertices are dense 1-based ids. External labels (from edge-list files) are
/// mapped onto this range by the loader.
pub type VertexId = u32;

/// Undirected simple graph on vertices `1..=n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    m: u64,
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Build from unordered unique edges. Rejects out-of-range endpoints,
    /// self-loops, and duplicate edges.
    pub fn from_edges(n: u32, edges: &[(VertexId, VertexId)]) -> Result<Self, Error> {
        let mut adj = vec![Vec::new(); n as usize];
        for &(u, v) in edges {
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(Error::OutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[(u - 1) as usize].push(v);
            adj[(v - 1) as usize].push(u);
        }
        for (i, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(i as u32 + 1, w[0]));
            }
        }
        Ok(Graph { n, m: edges.len() as u64, adj })
    }

    /// Empty graph on `n` vertices.
    pub fn empty(n: u32) -> Self {
        Graph { n, m: 0, adj: vec![Vec::new(); n as usize] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn degree(&self, u: VertexId) -> u32 {
        self.adj[(u - 1) as usize].len() as u32
    }

    pub fn max_degree(&self) -> u32 {
        self.adj.iter().map(|a| a.len() as u32).max().unwrap_or(0)
    }

    /// Neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: VertexId) -> &[VertexId] {
        &self.adj[(u - 1) as usize]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m as usize);
        for u in 1..=self.n {
            for &v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// A vertex subset plus the edges known on it — either revealed by probing or
/// induced from a full graph. Vertices keep their original ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    /// Ascending vertex ids.
    pub vertices: Vec<VertexId>,
    /// Edges `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Subgraph {
    /// Normalizes order so equal subgraphs compare equal.
    pub fn new(mut vertices: Vec<VertexId>, edges: Vec<(VertexId, VertexId)>) -> Self {
        vertices.sort_unstable();
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        edges.sort_unstable();
        Subgraph { vertices, edges }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}
