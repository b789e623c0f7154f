//! Deciding whether a hidden graph contains a k-core — a subgraph in which
//! every vertex has at least k neighbours — while spending as few probes as
//! possible.
//!
//! The run keeps three early-exit levers besides the round/cooldown probing
//! schedule shared with top-k discovery:
//!
//! * **Elimination.** A vertex whose potential degree (n − 1 − empty count)
//!   sinks below k can never sit in a k-core. It is never probed again;
//!   pairs pointing at it are consumed from the interval sets for free.
//! * **Candidate counting.** A k-core needs at least k + 1 members, so the
//!   query is settled the moment fewer than k + 1 candidates survive.
//! * **Budget forecasting.** The k + 1 best candidates by solid count still
//!   need ⌈Σ max(0, k − s) / 2⌉ solid probes between them before a k-core
//!   can exist. If that exceeds the probes that remain, no order of answers
//!   can produce a k-core, and the query is settled.
//!
//! A vertex whose pair list empties out is *resolved*: everything knowable
//! about it is known, and it joins the revealed subgraph S. Once no
//! unresolved candidate survives, S is final and a standard core
//! decomposition of S settles the query exactly.

use std::cell::Cell;
use std::collections::BTreeSet;

use crate::book::VertexBook;
use crate::decomp::core_decomposition;
use crate::oracle::{EdgeOracle, ProbeLedger, ProbeResult};
use crate::{Error, Graph, Subgraph, VertexId};

/// Why a run concluded no k-core exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StopReason {
    /// Fewer than k + 1 candidates survived elimination.
    CandidateCount,
    /// The forecast solid-probe need exceeded the remaining budget.
    ProbeBudget,
    /// Every candidate resolved, and the revealed subgraph has no k-core.
    CoreCheckFailed,
}

/// Verdict of a k-core query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoreOutcome {
    Exists {
        /// Members of the k-core, ascending.
        vertices: Vec<VertexId>,
        /// Edges among members, `(u, v)` with `u < v`, sorted.
        edges: Vec<(VertexId, VertexId)>,
        /// `(vertex, core number)` per member, core numbers taken in the
        /// revealed subgraph (they agree with the hidden graph's for
        /// members).
        core_numbers: Vec<(VertexId, u32)>,
    },
    NotExists {
        reason: StopReason,
    },
}

/// A k-core verdict together with its probe bill.
#[derive(Clone, Debug, PartialEq)]
pub struct CoreQueryResult {
    pub outcome: CoreOutcome,
    pub probes: u64,
    pub max_probes: u64,
    /// Fraction of the full pairwise budget left unspent (0 when the budget
    /// itself is zero).
    pub gain: f64,
}

impl CoreQueryResult {
    pub fn exists(&self) -> bool {
        matches!(self.outcome, CoreOutcome::Exists { .. })
    }
}

/// Where a vertex stands mid-run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CandidateStatus {
    /// Potential degree fell below k; it cannot be in any k-core.
    Eliminated,
    /// Resolved into the revealed subgraph.
    InSubgraph,
    /// Still in play.
    Candidate,
}

/// One row of a run's status table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexStatus {
    pub s: u32,
    pub e: u32,
    pub state: i32,
    /// Potential degree: solid count once resolved, n − 1 − e before that.
    pub pd: u32,
    pub status: CandidateStatus,
}

/// Read-only view of a run handed to observers.
pub struct RunSnapshot<'a> {
    book: &'a VertexBook,
    blacklisted: &'a [bool],
    in_s: &'a [bool],
}

impl RunSnapshot<'_> {
    pub fn n(&self) -> u32 {
        self.book.n()
    }

    pub fn book(&self) -> &VertexBook {
        self.book
    }

    pub fn is_eliminated(&self, u: VertexId) -> bool {
        self.blacklisted[u as usize]
    }

    pub fn in_subgraph(&self, u: VertexId) -> bool {
        self.in_s[u as usize]
    }

    /// Per-vertex counters and standing, indexed by vertex id minus one.
    pub fn status_table(&self) -> Vec<VertexStatus> {
        let n = self.book.n();
        (1..=n)
            .map(|u| {
                let st = self.book.vertex(u);
                let status = if self.blacklisted[u as usize] {
                    CandidateStatus::Eliminated
                } else if self.in_s[u as usize] {
                    CandidateStatus::InSubgraph
                } else {
                    CandidateStatus::Candidate
                };
                let pd = if status == CandidateStatus::InSubgraph {
                    st.s
                } else {
                    n - 1 - st.e
                };
                VertexStatus {
                    s: st.s,
                    e: st.e,
                    state: st.state,
                    pd,
                    status,
                }
            })
            .collect()
    }
}

/// Hooks into a k-core run; all methods default to no-ops.
pub trait CoreObserver {
    fn on_probe(&mut self, _u: VertexId, _v: VertexId, _result: ProbeResult) {}
    fn on_source(&mut self, _u: VertexId) {}
    /// The pair `{u, v}` was consumed without probing (v is eliminated).
    fn on_skip(&mut self, _u: VertexId, _v: VertexId) {}
    fn on_resolve(&mut self, _u: VertexId, _round: u32) {}
    fn on_blacklist(&mut self, _u: VertexId, _round: u32) {}
    fn on_round_end(&mut self, _round: u32, _snap: &RunSnapshot) {}
    fn on_finish(&mut self, _snap: &RunSnapshot) {}
}

impl CoreObserver for () {}

thread_local! {
    static TKEY_CMP: Cell<u64> = const { Cell::new(0) };
}

/// Comparisons spent ordering candidate-tracker keys on this thread.
pub fn tkey_comparison_count() -> u64 {
    TKEY_CMP.with(|c| c.get())
}

pub fn reset_tkey_comparison_count() {
    TKEY_CMP.with(|c| c.set(0));
}

/// Ordered by solid count, then vertex id. Comparisons are counted so tests
/// can pin the tracker's logarithmic behaviour.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct TKey(u32, VertexId);

impl Ord for TKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        TKEY_CMP.with(|c| c.set(c.get() + 1));
        (self.0, self.1).cmp(&(other.0, other.1))
    }
}

impl PartialOrd for TKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Tracks the k + 1 candidates with the most confirmed solid edges and the
/// total solid shortfall those candidates still have against k. `raise` is
/// O(log k); `exclude` rescans for a replacement, which happens at most once
/// per vertex over a whole run.
pub struct TopCandidates {
    k: u32,
    svals: Vec<u32>,
    excluded: Vec<bool>,
    in_top: Vec<bool>,
    top: BTreeSet<TKey>,
    deficit: u64,
}

impl TopCandidates {
    /// Requires k < n so that k + 1 candidates exist to seed with.
    pub fn new(n: u32, k: u32) -> Self {
        assert!(k < n, "tracker needs k + 1 <= n");
        let mut top = BTreeSet::new();
        let mut in_top = vec![false; (n + 1) as usize];
        for v in 1..=k + 1 {
            top.insert(TKey(0, v));
            in_top[v as usize] = true;
        }
        TopCandidates {
            k,
            svals: vec![0; (n + 1) as usize],
            excluded: vec![false; (n + 1) as usize],
            in_top,
            top,
            deficit: (k as u64 + 1) * k as u64,
        }
    }

    fn shortfall(&self, s: u32) -> u64 {
        self.k.saturating_sub(s) as u64
    }

    /// One more solid edge confirmed at `u`.
    pub fn raise(&mut self, u: VertexId) {
        debug_assert!(!self.excluded[u as usize]);
        let s = self.svals[u as usize];
        self.svals[u as usize] = s + 1;
        if self.in_top[u as usize] {
            let removed = self.top.remove(&TKey(s, u));
            debug_assert!(removed);
            self.top.insert(TKey(s + 1, u));
            if s < self.k {
                self.deficit -= 1;
            }
        } else if let Some(&min) = self.top.iter().next() {
            // Membership only changes on a strict improvement; with ties the
            // shortfall sum is the same either way.
            if s + 1 > min.0 {
                self.top.remove(&min);
                self.in_top[min.1 as usize] = false;
                self.deficit -= self.shortfall(min.0);
                self.top.insert(TKey(s + 1, u));
                self.in_top[u as usize] = true;
                self.deficit += self.shortfall(s + 1);
            }
        }
    }

    /// `u` left the candidate pool; promote the best remaining outsider if
    /// one exists (when none does the tracker runs short, but the caller
    /// settles the query on candidate count before consulting it again).
    pub fn exclude(&mut self, u: VertexId) {
        let ui = u as usize;
        if self.excluded[ui] {
            return;
        }
        self.excluded[ui] = true;
        if !self.in_top[ui] {
            return;
        }
        let s = self.svals[ui];
        self.top.remove(&TKey(s, u));
        self.in_top[ui] = false;
        self.deficit -= self.shortfall(s);
        let mut best: Option<TKey> = None;
        for v in 1..self.svals.len() as u32 {
            let vi = v as usize;
            if self.excluded[vi] || self.in_top[vi] {
                continue;
            }
            let key = TKey(self.svals[vi], v);
            if best.map_or(true, |b| key.0 > b.0) {
                best = Some(key);
            }
        }
        if let Some(key) = best {
            self.top.insert(key);
            self.in_top[key.1 as usize] = true;
            self.deficit += self.shortfall(key.0);
        }
    }

    /// Solid probes still needed before the k + 1 best candidates could all
    /// reach k solids — each probe can help two of them at once.
    pub fn required_probes(&self) -> u64 {
        self.deficit.div_ceil(2)
    }

    /// Current tracked set as `(vertex, solid count)`, ascending by count.
    pub fn members(&self) -> Vec<(VertexId, u32)> {
        self.top.iter().map(|k| (k.1, k.0)).collect()
    }

    #[cfg(test)]
    fn assert_consistent(&self) {
        let sum: u64 = self.top.iter().map(|t| self.shortfall(t.0)).sum();
        assert_eq!(sum, self.deficit);
        for t in &self.top {
            assert!(self.in_top[t.1 as usize]);
            assert!(!self.excluded[t.1 as usize]);
            assert_eq!(self.svals[t.1 as usize], t.0);
        }
    }
}

fn make_result(outcome: CoreOutcome, ledger: &ProbeLedger) -> CoreQueryResult {
    let probes = ledger.probes();
    let max_probes = ledger.max_probes();
    let gain = if max_probes == 0 {
        0.0
    } else {
        1.0 - probes as f64 / max_probes as f64
    };
    CoreQueryResult {
        outcome,
        probes,
        max_probes,
        gain,
    }
}

fn revealed_subgraph(book: &VertexBook, in_s: &[bool]) -> Subgraph {
    let n = book.n();
    let vertices: Vec<VertexId> = (1..=n).filter(|&u| in_s[u as usize]).collect();
    let mut edges = Vec::new();
    for &u in &vertices {
        for &w in book.vertex(u).solid_partners() {
            if w > u && in_s[w as usize] {
                edges.push((u, w));
            }
        }
    }
    Subgraph::new(vertices, edges)
}

/// Decide the k-core question from a fully revealed subgraph: peel it, keep
/// vertices whose core number reaches k, and demand at least k + 1 of them.
pub fn finalize_core(s: &Subgraph, k: u32) -> CoreOutcome {
    if (s.vertices.len() as u64) < k as u64 + 1 {
        return CoreOutcome::NotExists {
            reason: StopReason::CoreCheckFailed,
        };
    }
    let index: std::collections::HashMap<VertexId, u32> = s
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32 + 1))
        .collect();
    let dense: Vec<(u32, u32)> = s
        .edges
        .iter()
        .map(|&(u, v)| (index[&u], index[&v]))
        .collect();
    let g = Graph::from_edges(s.vertices.len() as u32, &dense)
        .expect("revealed subgraph is simple");
    let cores = core_decomposition(&g);
    let mut vertices = Vec::new();
    let mut core_numbers = Vec::new();
    for (i, &orig) in s.vertices.iter().enumerate() {
        if cores[i] >= k {
            vertices.push(orig);
            core_numbers.push((orig, cores[i]));
        }
    }
    if (vertices.len() as u64) < k as u64 + 1 {
        return CoreOutcome::NotExists {
            reason: StopReason::CoreCheckFailed,
        };
    }
    let member: std::collections::HashSet<VertexId> = vertices.iter().copied().collect();
    let edges: Vec<(VertexId, VertexId)> = s
        .edges
        .iter()
        .filter(|(u, v)| member.contains(u) && member.contains(v))
        .copied()
        .collect();
    CoreOutcome::Exists {
        vertices,
        edges,
        core_numbers,
    }
}

/// Decide whether the hidden graph behind `oracle` contains a k-core.
pub fn hidden_core<O: EdgeOracle>(oracle: &O, k: u32) -> Result<CoreQueryResult, Error> {
    hidden_core_observed(oracle, k, &mut ())
}

/// As [`hidden_core`], reporting events to `obs`.
pub fn hidden_core_observed<O: EdgeOracle, B: CoreObserver>(
    oracle: &O,
    k: u32,
    obs: &mut B,
) -> Result<CoreQueryResult, Error> {
    let n = oracle.vertex_count();
    if k < 1 {
        return Err(Error::InvalidK { k, n });
    }
    let mut ledger = ProbeLedger::new(n);
    let book = VertexBook::new(n);
    let mut blacklisted = vec![false; (n + 1) as usize];
    let mut in_s = vec![false; (n + 1) as usize];

    if k >= n {
        // Even the full graph is too small to hold k + 1 members.
        obs.on_finish(&RunSnapshot {
            book: &book,
            blacklisted: &blacklisted,
            in_s: &in_s,
        });
        return Ok(make_result(
            CoreOutcome::NotExists {
                reason: StopReason::CandidateCount,
            },
            &ledger,
        ));
    }

    let mut book = book;
    let mut candidates = n;
    let mut tset = TopCandidates::new(n, k);
    let mut round: u32 = 1;

    macro_rules! finish {
        ($outcome:expr) => {{
            obs.on_finish(&RunSnapshot {
                book: &book,
                blacklisted: &blacklisted,
                in_s: &in_s,
            });
            return Ok(make_result($outcome, &ledger));
        }};
    }

    loop {
        // Round boundary: when no unresolved vertex can still join a k-core,
        // the revealed subgraph is final and decides the query.
        let mpd = (1..=n)
            .filter(|&u| !in_s[u as usize])
            .map(|u| book.potential_degree(u))
            .max();
        if mpd.map_or(true, |d| d < k) {
            let s = revealed_subgraph(&book, &in_s);
            finish!(finalize_core(&s, k));
        }

        for u in 1..=n {
            let ui = u as usize;
            if in_s[ui] || blacklisted[ui] || book.vertex(u).state < 0 {
                continue;
            }
            if book.exhausted(u) {
                in_s[ui] = true;
                obs.on_resolve(u, round);
                continue;
            }
            obs.on_source(u);
            loop {
                let v = match book.vertex(u).pms().select_destination() {
                    Some(v) => v,
                    None => {
                        // Consuming pairs emptied the list mid-turn.
                        in_s[ui] = true;
                        obs.on_resolve(u, round);
                        break;
                    }
                };
                if blacklisted[v as usize] {
                    book.consume_pair(u, v)?;
                    obs.on_skip(u, v);
                    continue;
                }
                let res = ledger.probe(oracle, u, v)?;
                obs.on_probe(u, v, res);
                book.apply_probe_result(u, v, res)?;
                match res {
                    ProbeResult::Empty => {
                        for w in [u, v] {
                            let wi = w as usize;
                            if blacklisted[wi] || in_s[wi] {
                                continue;
                            }
                            if book.potential_degree(w) < k {
                                blacklisted[wi] = true;
                                candidates -= 1;
                                tset.exclude(w);
                                obs.on_blacklist(w, round);
                            } else if book.exhausted(w) {
                                in_s[wi] = true;
                                obs.on_resolve(w, round);
                            }
                        }
                        if candidates < k + 1 {
                            finish!(CoreOutcome::NotExists {
                                reason: StopReason::CandidateCount,
                            });
                        }
                        if tset.required_probes() > ledger.max_probes() - ledger.probes() {
                            finish!(CoreOutcome::NotExists {
                                reason: StopReason::ProbeBudget,
                            });
                        }
                        break;
                    }
                    ProbeResult::Solid => {
                        tset.raise(u);
                        tset.raise(v);
                        if book.exhausted(v) && !in_s[v as usize] {
                            in_s[v as usize] = true;
                            obs.on_resolve(v, round);
                        }
                        let u_resolved = book.exhausted(u);
                        if u_resolved {
                            in_s[ui] = true;
                            obs.on_resolve(u, round);
                        }
                        if tset.required_probes() > ledger.max_probes() - ledger.probes() {
                            finish!(CoreOutcome::NotExists {
                                reason: StopReason::ProbeBudget,
                            });
                        }
                        if u_resolved {
                            break;
                        }
                    }
                }
            }
        }
        obs.on_round_end(
            round,
            &RunSnapshot {
                book: &book,
                blacklisted: &blacklisted,
                in_s: &in_s,
            },
        );
        book.end_round();
        round += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::peel_oracle;
    use crate::oracle::AdjacencyOracle;
    use crate::testutil::example5;

    #[derive(Default)]
    struct Recorder {
        probes: Vec<(VertexId, VertexId, ProbeResult)>,
        skips: Vec<(VertexId, VertexId)>,
        resolves: Vec<(VertexId, u32)>,
        blacklists: Vec<(VertexId, u32)>,
        tables: Vec<(u32, Vec<VertexStatus>)>,
    }

    impl CoreObserver for Recorder {
        fn on_probe(&mut self, u: VertexId, v: VertexId, result: ProbeResult) {
            self.probes.push((u, v, result));
        }
        fn on_skip(&mut self, u: VertexId, v: VertexId) {
            self.skips.push((u, v));
        }
        fn on_resolve(&mut self, u: VertexId, round: u32) {
            self.resolves.push((u, round));
        }
        fn on_blacklist(&mut self, u: VertexId, round: u32) {
            self.blacklists.push((u, round));
        }
        fn on_round_end(&mut self, round: u32, snap: &RunSnapshot) {
            self.tables.push((round, snap.status_table()));
        }
    }

    #[test]
    fn five_vertex_k4_settles_after_two_probes() {
        use ProbeResult::{Empty, Solid};
        let oracle = AdjacencyOracle::from_graph(&example5());
        let mut rec = Recorder::default();
        let res = hidden_core_observed(&oracle, 4, &mut rec).unwrap();
        assert_eq!(
            res.outcome,
            CoreOutcome::NotExists {
                reason: StopReason::CandidateCount
            }
        );
        assert_eq!(res.probes, 2);
        assert_eq!(res.max_probes, 10);
        assert!((res.gain - 0.8).abs() < 1e-12);
        assert_eq!(rec.probes, vec![(1, 2, Solid), (1, 3, Empty)]);
        // One empty answer sinks both endpoints below a potential degree of
        // 4, leaving only three candidates — short of the five needed.
        assert_eq!(rec.blacklists, vec![(1, 1), (3, 1)]);
    }

    #[test]
    fn five_vertex_k3_reveals_the_clique() {
        use ProbeResult::{Empty, Solid};
        let oracle = AdjacencyOracle::from_graph(&example5());
        let mut rec = Recorder::default();
        let res = hidden_core_observed(&oracle, 3, &mut rec).unwrap();
        assert_eq!(res.probes, 9);
        assert!((res.gain - 0.1).abs() < 1e-12);
        assert_eq!(
            res.outcome,
            CoreOutcome::Exists {
                vertices: vec![2, 3, 4, 5],
                edges: vec![(2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
                core_numbers: vec![(2, 3), (3, 3), (4, 3), (5, 3)],
            }
        );
        assert_eq!(
            rec.probes,
            vec![
                (1, 2, Solid),
                (1, 3, Empty),
                (2, 3, Solid),
                (2, 4, Solid),
                (2, 5, Solid),
                (4, 1, Empty),
                (5, 3, Solid),
                (5, 4, Solid),
                (3, 4, Solid),
            ]
        );
        // Vertex 1 is eliminated by the (4,1) answer, so 5 skips the pair
        // {5,1} without paying for it.
        assert_eq!(rec.skips, vec![(5, 1)]);
        assert_eq!(rec.blacklists, vec![(1, 1)]);
        assert_eq!(rec.resolves, vec![(2, 1), (5, 1), (4, 2), (3, 2)]);
    }

    #[test]
    fn five_vertex_k3_round_one_status_table() {
        use CandidateStatus::{Candidate, Eliminated, InSubgraph};
        let oracle = AdjacencyOracle::from_graph(&example5());
        let mut rec = Recorder::default();
        hidden_core_observed(&oracle, 3, &mut rec).unwrap();
        let (round, table) = &rec.tables[0];
        assert_eq!(*round, 1);
        let expect = [
            // (s, e, state, pd, status)
            (1, 2, -2, 2, Eliminated),
            (4, 0, 0, 4, InSubgraph),
            (2, 1, -1, 3, Candidate),
            (2, 1, -1, 3, Candidate),
            (3, 0, 0, 3, InSubgraph),
        ];
        assert_eq!(table.len(), 5);
        for (row, (s, e, state, pd, status)) in table.iter().zip(expect) {
            assert_eq!((row.s, row.e, row.state, row.pd, row.status), (s, e, state, pd, status));
        }
    }

    #[test]
    fn five_vertex_low_k_resolves_everything() {
        let oracle = AdjacencyOracle::from_graph(&example5());
        let res = hidden_core(&oracle, 1).unwrap();
        assert_eq!(res.probes, 10);
        assert_eq!(res.gain, 0.0);
        match res.outcome {
            CoreOutcome::Exists {
                vertices,
                edges,
                core_numbers,
            } => {
                assert_eq!(vertices, vec![1, 2, 3, 4, 5]);
                assert_eq!(edges.len(), 7);
                assert_eq!(
                    core_numbers,
                    vec![(1, 1), (2, 3), (3, 3), (4, 3), (5, 3)]
                );
            }
            other => panic!("expected a 1-core, got {other:?}"),
        }
    }

    #[test]
    fn k_at_or_above_n_needs_no_probes() {
        let oracle = AdjacencyOracle::from_graph(&example5());
        for k in [5, 6, 100] {
            let res = hidden_core(&oracle, k).unwrap();
            assert_eq!(res.probes, 0);
            assert_eq!(
                res.outcome,
                CoreOutcome::NotExists {
                    reason: StopReason::CandidateCount
                }
            );
        }
        assert_eq!(
            hidden_core(&oracle, 0),
            Err(Error::InvalidK { k: 0, n: 5 })
        );
    }

    #[test]
    fn complete_graph_core_costs_the_full_budget() {
        let g = crate::gen::gen_gnp(5, 1.0, 0);
        let oracle = AdjacencyOracle::from_graph(&g);
        let res = hidden_core(&oracle, 4).unwrap();
        assert!(res.exists());
        assert_eq!(res.probes, 10);
        assert_eq!(res.gain, 0.0);
    }

    #[test]
    fn matches_peeling_on_random_graphs() {
        for seed in 0..30u64 {
            let n = 4 + (seed % 13) as u32;
            let p = [0.15, 0.3, 0.5, 0.75][(seed % 4) as usize];
            let g = crate::gen::gen_gnp(n, p, 7000 + seed);
            let oracle = AdjacencyOracle::from_graph(&g);
            for k in 1..n {
                let res = hidden_core(&oracle, k).unwrap();
                let expect = peel_oracle(&g, k);
                assert!(res.probes <= res.max_probes);
                match res.outcome {
                    CoreOutcome::Exists {
                        vertices,
                        core_numbers,
                        edges,
                    } => {
                        assert_eq!(vertices, expect, "n={n} p={p} seed={seed} k={k}");
                        let cores = crate::decomp::core_decomposition(&g);
                        for (v, c) in core_numbers {
                            assert_eq!(
                                c,
                                cores[(v - 1) as usize],
                                "core number of {v} (n={n} seed={seed} k={k})"
                            );
                        }
                        for (a, b) in edges {
                            assert!(g.has_edge(a, b));
                        }
                    }
                    CoreOutcome::NotExists { .. } => {
                        assert!(expect.is_empty(), "n={n} p={p} seed={seed} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn star_has_no_core_at_any_k() {
        let edges: Vec<(u32, u32)> = (2..=8).map(|v| (1, v)).collect();
        let oracle = AdjacencyOracle::from_edges(8, &edges).unwrap();
        // k=2 can't prune: a leaf is only eliminated once all six of its
        // empty pairs are answered, so the whole budget is spent.
        let res = hidden_core(&oracle, 2).unwrap();
        assert!(!res.exists());
        assert_eq!(res.probes, res.max_probes);
        // k=7 prunes on the first empty answer: both endpoints drop below a
        // potential degree of 7, leaving six of the required eight.
        let res = hidden_core(&oracle, 7).unwrap();
        assert_eq!(
            res.outcome,
            CoreOutcome::NotExists {
                reason: StopReason::CandidateCount
            }
        );
        assert_eq!(res.probes, 8);
    }

    #[test]
    fn finalize_handles_small_and_empty_subgraphs() {
        let empty = Subgraph::new(vec![], vec![]);
        assert_eq!(
            finalize_core(&empty, 3),
            CoreOutcome::NotExists {
                reason: StopReason::CoreCheckFailed
            }
        );
        let triangle = Subgraph::new(vec![4, 7, 9], vec![(4, 7), (7, 9), (4, 9)]);
        assert_eq!(
            finalize_core(&triangle, 2),
            CoreOutcome::Exists {
                vertices: vec![4, 7, 9],
                edges: vec![(4, 7), (4, 9), (7, 9)],
                core_numbers: vec![(4, 2), (7, 2), (9, 2)],
            }
        );
        assert_eq!(
            finalize_core(&triangle, 3),
            CoreOutcome::NotExists {
                reason: StopReason::CoreCheckFailed
            }
        );
    }

    #[test]
    fn tracker_seeds_and_counts() {
        let t = TopCandidates::new(5, 3);
        assert_eq!(t.members(), vec![(1, 0), (2, 0), (3, 0), (4, 0)]);
        assert_eq!(t.required_probes(), 6);
        t.assert_consistent();
    }

    #[test]
    fn tracker_raise_swaps_in_strictly_better_outsiders() {
        let mut t = TopCandidates::new(6, 2);
        t.raise(5);
        // 5 at one solid beats a seeded zero; the smallest key leaves.
        assert_eq!(t.members(), vec![(2, 0), (3, 0), (5, 1)]);
        t.raise(6);
        t.raise(4);
        assert_eq!(t.members(), vec![(4, 1), (5, 1), (6, 1)]);
        // A tie with the current minimum does not churn membership.
        t.raise(2);
        assert_eq!(t.members(), vec![(4, 1), (5, 1), (6, 1)]);
        assert_eq!(t.required_probes(), 2); // shortfalls 1 + 1 + 1, halved up
        t.assert_consistent();
    }

    #[test]
    fn tracker_exclude_promotes_best_outsider() {
        let mut t = TopCandidates::new(6, 2);
        t.raise(5);
        t.raise(5);
        t.raise(6);
        // Raising 5 twice displaced seed 1; raising 6 displaced seed 2.
        assert_eq!(t.members(), vec![(3, 0), (6, 1), (5, 2)]);
        t.exclude(5);
        // The zero-solid outsiders tie; the smallest id is promoted back.
        assert_eq!(t.members(), vec![(1, 0), (3, 0), (6, 1)]);
        t.assert_consistent();
    }

    #[test]
    fn tracker_deficit_matches_brute_force_under_random_ops() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let n = rng.gen_range(4..20u32);
            let k = rng.gen_range(1..n);
            let mut t = TopCandidates::new(n, k);
            let mut svals = vec![0u32; (n + 1) as usize];
            let mut excluded = vec![false; (n + 1) as usize];
            for _ in 0..100 {
                let live: Vec<u32> = (1..=n).filter(|&v| !excluded[v as usize]).collect();
                if (live.len() as u32) < k + 2 {
                    break;
                }
                let v = live[rng.gen_range(0..live.len())];
                if rng.gen_bool(0.8) {
                    t.raise(v);
                    svals[v as usize] += 1;
                } else {
                    t.exclude(v);
                    excluded[v as usize] = true;
                }
                t.assert_consistent();
                let mut best: Vec<u32> = (1..=n)
                    .filter(|&w| !excluded[w as usize])
                    .map(|w| svals[w as usize])
                    .collect();
                best.sort_unstable_by(|a, b| b.cmp(a));
                let deficit: u64 = best
                    .iter()
                    .take((k + 1) as usize)
                    .map(|&s| k.saturating_sub(s) as u64)
                    .sum();
                assert_eq!(t.required_probes(), deficit.div_ceil(2));
            }
        }
    }

    #[test]
    fn tracker_raise_is_logarithmic() {
        use rand::{Rng, SeedableRng};
        for k in [15u32, 255, 4095] {
            let n = 2 * (k + 1);
            let mut t = TopCandidates::new(n, k);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(k as u64);
            // Warm the tracker, then measure raises alone.
            for _ in 0..1000 {
                t.raise(rng.gen_range(1..=n));
            }
            reset_tkey_comparison_count();
            let rounds = 2000u64;
            for _ in 0..rounds {
                t.raise(rng.gen_range(1..=n));
            }
            let per_op = tkey_comparison_count() as f64 / rounds as f64;
            let bound = 16.0 * ((k + 2) as f64).log2() + 40.0;
            assert!(
                per_op <= bound,
                "k={k}: {per_op:.1} comparisons per raise exceeds {bound:.1}"
            );
        }
    }
}
