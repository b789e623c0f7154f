//! Round-based discovery of the k highest-degree vertices of a hidden graph.
//!
//! Probing runs in rounds. Within a round an ascending cursor visits every
//! vertex; a visited vertex keeps probing its smallest unprobed partner
//! until it hits an empty pair (its turn ends), exhausts its pairs, or the
//! round ends. Empty results cool a vertex one step below zero per result;
//! cooled vertices neither probe nor finish, and recover one step at each
//! round boundary. A vertex whose every pair is known and whose cooldown has
//! recovered is done: its degree is final, and it joins the result set. The
//! schedule guarantees a vertex of degree d is admitted in round n - d
//! exactly, so checking the result set only at round boundaries returns the
//! full top-k including every vertex tied with the k-th degree — hence
//! `entries` may be longer than k.

use crate::book::VertexBook;
use crate::oracle::{EdgeOracle, ProbeLedger, ProbeResult};
use crate::{Error, VertexId};

/// Outcome of a top-k degree discovery run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopKResult {
    /// `(vertex, degree)` in non-increasing degree order; includes ties with
    /// the k-th entry, so its length is at least `k`.
    pub entries: Vec<(VertexId, u32)>,
    pub probes: u64,
    pub max_probes: u64,
    pub rounds: u32,
}

impl TopKResult {
    /// Fraction of the full pairwise budget left unspent.
    pub fn gain(&self) -> f64 {
        if self.max_probes == 0 {
            0.0
        } else {
            1.0 - self.probes as f64 / self.max_probes as f64
        }
    }
}

/// Hooks into a run's probe-by-probe behaviour; all methods default to no-ops.
pub trait GsoeObserver {
    fn on_probe(&mut self, _u: VertexId, _v: VertexId, _result: ProbeResult) {}
    fn on_source(&mut self, _u: VertexId) {}
    /// `v` is finished with final degree `degree` during round `round`.
    fn on_insert(&mut self, _v: VertexId, _degree: u32, _round: u32) {}
    fn on_round_end(&mut self, _round: u32, _book: &VertexBook) {}
    fn on_finish(&mut self, _book: &VertexBook) {}
}

impl GsoeObserver for () {}

/// Find the k highest-degree vertices (with ties) probing as little as the
/// round schedule allows.
pub fn gsoe_top_k<O: EdgeOracle>(oracle: &O, k: u32) -> Result<TopKResult, Error> {
    gsoe_top_k_observed(oracle, k, &mut ())
}

/// As [`gsoe_top_k`], reporting events to `obs`.
pub fn gsoe_top_k_observed<O: EdgeOracle, B: GsoeObserver>(
    oracle: &O,
    k: u32,
    obs: &mut B,
) -> Result<TopKResult, Error> {
    let n = oracle.vertex_count();
    if k < 1 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    let mut ledger = ProbeLedger::new(n);
    let mut book = VertexBook::new(n);
    let mut done = vec![false; (n + 1) as usize];
    let mut entries: Vec<(VertexId, u32)> = Vec::new();
    let mut round: u32 = 1;

    fn admit<B: GsoeObserver>(
        w: VertexId,
        round: u32,
        book: &VertexBook,
        done: &mut [bool],
        entries: &mut Vec<(VertexId, u32)>,
        obs: &mut B,
    ) {
        if !done[w as usize] && book.fully_probed(w) && book.vertex(w).state == 0 {
            done[w as usize] = true;
            let d = book.vertex(w).s;
            entries.push((w, d));
            obs.on_insert(w, d, round);
        }
    }

    loop {
        for u in 1..=n {
            if done[u as usize] || book.vertex(u).state < 0 {
                continue;
            }
            if book.fully_probed(u) {
                admit(u, round, &book, &mut done, &mut entries, obs);
                continue;
            }
            obs.on_source(u);
            loop {
                // Every unprobed pair of u is still listed, so a missing
                // destination here would mean the bookkeeping broke.
                let v = book
                    .vertex(u)
                    .pms()
                    .select_destination()
                    .ok_or(Error::Exhausted)?;
                let res = ledger.probe(oracle, u, v)?;
                obs.on_probe(u, v, res);
                book.apply_probe_result(u, v, res)?;
                match res {
                    ProbeResult::Solid => {
                        admit(v, round, &book, &mut done, &mut entries, obs);
                        if book.fully_probed(u) {
                            admit(u, round, &book, &mut done, &mut entries, obs);
                            break;
                        }
                    }
                    ProbeResult::Empty => break,
                }
            }
        }
        if entries.len() >= k as usize {
            obs.on_finish(&book);
            return Ok(TopKResult {
                entries,
                probes: ledger.probes(),
                max_probes: ledger.max_probes(),
                rounds: round,
            });
        }
        obs.on_round_end(round, &book);
        book.end_round();
        round += 1;
    }
}
