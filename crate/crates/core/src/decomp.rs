//! Core decomposition of revealed graphs.
//!
//! `core_decomposition` is the linear-time bucket peeling: vertices sorted by
//! degree with a counting sort, processed in non-decreasing order, each
//! processed vertex fixes its core number at its current degree and larger
//! neighbors slide one bucket down. `peel_oracle` answers the single-k
//! question by literal repeated deletion and exists as an independent
//! cross-check — neither routine calls the other.

use crate::{Graph, Subgraph, VertexId};

/// Core number of every vertex (index `v-1`), plus a count of elementary
/// steps (vertex pops, neighbor visits, bucket moves) so tests can pin the
/// O(n + m) contract with real numbers.
pub fn core_decomposition_instrumented(g: &Graph) -> (Vec<u32>, u64) {
    let n = g.n() as usize;
    let mut ops: u64 = 0;
    if n == 0 {
        return (Vec::new(), 0);
    }
    let mut deg: Vec<u32> = (1..=g.n()).map(|u| g.degree(u)).collect();
    let md = *deg.iter().max().unwrap() as usize;

    // Counting sort of vertices by degree; bin[d] = start of bucket d.
    let mut bin = vec![0u32; md + 1];
    for &d in &deg {
        bin[d as usize] += 1;
    }
    let mut start = 0u32;
    for b in bin.iter_mut() {
        let count = *b;
        *b = start;
        start += count;
    }
    let mut vert = vec![0u32; n];
    let mut pos = vec![0u32; n];
    for v in 0..n {
        pos[v] = bin[deg[v] as usize];
        vert[pos[v] as usize] = v as u32;
        bin[deg[v] as usize] += 1;
    }
    for d in (1..=md).rev() {
        bin[d] = bin[d - 1];
    }
    bin[0] = 0;

    let mut core = vec![0u32; n];
    for i in 0..n {
        let v = vert[i] as usize;
        core[v] = deg[v];
        ops += 1;
        for &w1 in g.neighbors(v as u32 + 1) {
            ops += 1;
            let w = (w1 - 1) as usize;
            if deg[w] > deg[v] {
                // Swap w with the first vertex of its bucket, then shrink
                // the bucket from the left and drop w's degree by one.
                let dw = deg[w] as usize;
                let pw = pos[w] as usize;
                let pf = bin[dw] as usize;
                let f = vert[pf] as usize;
                if f != w {
                    vert[pw] = f as u32;
                    vert[pf] = w as u32;
                    pos[w] = pf as u32;
                    pos[f] = pw as u32;
                }
                bin[dw] += 1;
                deg[w] -= 1;
                ops += 1;
            }
        }
    }
    (core, ops)
}

/// Core number of every vertex (index `v-1`). Isolated vertices get 0.
pub fn core_decomposition(g: &Graph) -> Vec<u32> {
    core_decomposition_instrumented(g).0
}

/// The k-core: the maximal induced subgraph with minimum degree ≥ k,
/// possibly empty. Vertices keep their original ids.
pub fn k_core(g: &Graph, k: u32) -> Subgraph {
    let core = core_decomposition(g);
    let vertices: Vec<VertexId> = (1..=g.n()).filter(|&v| core[(v - 1) as usize] >= k).collect();
    let edges = induced_edges(g, &vertices);
    Subgraph::new(vertices, edges)
}

/// Edges of `g` with both endpoints in the ascending-sorted `vertices` list.
pub(crate) fn induced_edges(g: &Graph, vertices: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut member = vec![false; (g.n() + 1) as usize];
    for &v in vertices {
        member[v as usize] = true;
    }
    let mut edges = Vec::new();
    for &u in vertices {
        for &v in g.neighbors(u) {
            if u < v && member[v as usize] {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Reference answer for "which vertices survive at threshold k": repeatedly
/// delete any vertex whose remaining degree is below k until none is left.
/// Returns the ascending survivor list (the k-core's vertex set).
pub fn peel_oracle(g: &Graph, k: u32) -> Vec<VertexId> {
    let n = g.n() as usize;
    let mut deg: Vec<u32> = (1..=g.n()).map(|u| g.degree(u)).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<u32> = (0..n as u32).filter(|&v| deg[v as usize] < k).collect();
    while let Some(v) = queue.pop() {
        let v = v as usize;
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w1 in g.neighbors(v as u32 + 1) {
            let w = (w1 - 1) as usize;
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    queue.push(w as u32);
                }
            }
        }
    }
    (1..=g.n()).filter(|&v| alive[(v - 1) as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::example5;

    #[test]
    fn example_graph_core_numbers() {
        let g = example5();
        assert_eq!(core_decomposition(&g), vec![1, 3, 3, 3, 3]);
    }

    #[test]
    fn example_graph_three_core_is_a_clique() {
        let g = example5();
        let core = k_core(&g, 3);
        assert_eq!(core.vertices, vec![2, 3, 4, 5]);
        assert_eq!(
            core.edges,
            vec![(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]
        );
        assert!(k_core(&g, 4).is_empty());
    }

    #[test]
    fn one_core_drops_only_isolated_vertices() {
        // Vertices 5 and 6 are isolated.
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        let core = k_core(&g, 1);
        assert_eq!(core.vertices, vec![1, 2, 3, 4]);
        assert_eq!(core_decomposition(&g), vec![1, 1, 1, 1, 0, 0]);
    }

    #[test]
    fn cycle_is_its_own_two_core() {
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]).unwrap();
        assert_eq!(core_decomposition(&g), vec![2; 6]);
        assert_eq!(k_core(&g, 2).vertices, vec![1, 2, 3, 4, 5, 6]);
        assert!(k_core(&g, 3).is_empty());
    }

    #[test]
    fn complete_graph_cores() {
        let mut edges = Vec::new();
        for u in 1..=5u32 {
            for v in (u + 1)..=5 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edges(5, &edges).unwrap();
        assert_eq!(core_decomposition(&g), vec![4; 5]);
    }

    #[test]
    fn empty_graph_and_no_vertices() {
        assert_eq!(core_decomposition(&Graph::empty(0)), Vec::<u32>::new());
        assert_eq!(core_decomposition(&Graph::empty(3)), vec![0, 0, 0]);
        assert_eq!(peel_oracle(&Graph::empty(3), 1), Vec::<VertexId>::new());
        assert_eq!(peel_oracle(&Graph::empty(3), 0), vec![1, 2, 3]);
    }

    #[test]
    fn peel_matches_decomposition_on_seeded_graphs() {
        use crate::gen::gen_gnp;
        for seed in 0..20 {
            let g = gen_gnp(24, 0.25, seed);
            let core = core_decomposition(&g);
            for k in 0..=(g.max_degree() + 1) {
                let want: Vec<VertexId> =
                    (1..=g.n()).filter(|&v| core[(v - 1) as usize] >= k).collect();
                assert_eq!(peel_oracle(&g, k), want, "seed {seed} k {k}");
            }
        }
    }

    #[test]
    fn peel_is_deletion_order_independent() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = crate::gen::gen_gnp(30, 0.2, 99);
        let k = 3;
        let reference = peel_oracle(&g, k);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            // Shuffled-order peeling must reach the same fixpoint.
            let mut deg: Vec<u32> = (1..=g.n()).map(|u| g.degree(u)).collect();
            let mut alive = vec![true; g.n() as usize];
            loop {
                let mut doomed: Vec<u32> = (0..g.n())
                    .filter(|&v| alive[v as usize] && deg[v as usize] < k)
                    .collect();
                if doomed.is_empty() {
                    break;
                }
                doomed.shuffle(&mut rng);
                for &v in &doomed {
                    if !alive[v as usize] {
                        continue;
                    }
                    alive[v as usize] = false;
                    for &w1 in g.neighbors(v + 1) {
                        if alive[(w1 - 1) as usize] {
                            deg[(w1 - 1) as usize] -= 1;
                        }
                    }
                }
            }
            let got: Vec<VertexId> =
                (1..=g.n()).filter(|&v| alive[(v - 1) as usize]).collect();
            assert_eq!(got, reference);
        }
    }

    #[test]
    fn operation_count_is_linear_shaped() {
        let g = crate::gen::gen_gnp(2000, 0.005, 11);
        let (_, ops) = core_decomposition_instrumented(&g);
        // One pop per vertex, one visit per directed edge, at most one move
        // per visit.
        assert!(ops <= g.n() as u64 + 4 * g.m());
    }
}
