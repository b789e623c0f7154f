//! Per-vertex probe accounting shared by both search algorithms.
//!
//! Every probe touches two vertices; both sides get their counters updated
//! and the pair leaves both interval sets, so `s + e + skipped + remaining`
//! stays pinned to `n - 1` for every vertex. The `state` variable implements
//! round cooling: an empty probe pushes both endpoints one step negative, and
//! every round end recovers one step, which is what ties a vertex's entry
//! round to its empty-probe count.

use crate::interval::IntervalSet;
use crate::{Error, ProbeResult, VertexId};

/// One vertex's view of the probing history.
#[derive(Clone, Debug)]
pub struct VertexState {
    /// Solid probes touching this vertex.
    pub s: u32,
    /// Empty probes touching this vertex.
    pub e: u32,
    /// 0 = may act as probe source; negative = cooling down after empties.
    pub state: i32,
    /// Pairs consumed without a probe (partner was already eliminated).
    pub skipped: u32,
    solid: Vec<VertexId>,
    pms: IntervalSet,
}

impl VertexState {
    /// Partners confirmed solid, in probe order.
    pub fn solid_partners(&self) -> &[VertexId] {
        &self.solid
    }

    /// Destinations not yet examined from this vertex.
    pub fn pms(&self) -> &IntervalSet {
        &self.pms
    }
}

/// The full table of [`VertexState`]s for vertices `1..=n`.
#[derive(Clone, Debug)]
pub struct VertexBook {
    n: u32,
    v: Vec<VertexState>,
}

impl VertexBook {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1);
        let v = (1..=n)
            .map(|u| VertexState {
                s: 0,
                e: 0,
                state: 0,
                skipped: 0,
                solid: Vec::new(),
                pms: IntervalSet::new(n, u),
            })
            .collect();
        VertexBook { n, v }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex(&self, u: VertexId) -> &VertexState {
        &self.v[(u - 1) as usize]
    }

    /// Upper bound on the degree this vertex can still reach: `n - 1 - e`.
    pub fn potential_degree(&self, u: VertexId) -> u32 {
        self.n - 1 - self.vertex(u).e
    }

    /// Every pair involving `u` has been probed (`s + e = n - 1`).
    pub fn fully_probed(&self, u: VertexId) -> bool {
        let st = self.vertex(u);
        st.s + st.e == self.n - 1
    }

    /// No destinations remain for `u` — every pair was probed or consumed.
    pub fn exhausted(&self, u: VertexId) -> bool {
        self.vertex(u).pms.is_empty()
    }

    /// Record a probe of `{u, v}`: the pair leaves both interval sets, then
    /// a solid result bumps both `s` counters and partner lists, an empty
    /// result bumps both `e` counters and cools both states one step.
    pub fn apply_probe_result(
        &mut self,
        u: VertexId,
        v: VertexId,
        r: ProbeResult,
    ) -> Result<(), Error> {
        self.unlink(u, v)?;
        let (a, b) = self.pair_mut(u, v);
        match r {
            ProbeResult::Solid => {
                a.s += 1;
                b.s += 1;
                a.solid.push(v);
                b.solid.push(u);
            }
            ProbeResult::Empty => {
                a.e += 1;
                b.e += 1;
                a.state -= 1;
                b.state -= 1;
            }
        }
        self.debug_check(u);
        self.debug_check(v);
        Ok(())
    }

    /// Consume the pair `{u, v}` without probing it (the partner is already
    /// eliminated): it leaves both interval sets, counters stay put.
    pub fn consume_pair(&mut self, u: VertexId, v: VertexId) -> Result<(), Error> {
        self.unlink(u, v)?;
        let (a, b) = self.pair_mut(u, v);
        a.skipped += 1;
        b.skipped += 1;
        self.debug_check(u);
        self.debug_check(v);
        Ok(())
    }

    /// Round boundary: every cooling vertex recovers one step toward 0.
    pub fn end_round(&mut self) {
        for st in &mut self.v {
            if st.state < 0 {
                st.state += 1;
            }
        }
    }

    fn unlink(&mut self, u: VertexId, v: VertexId) -> Result<(), Error> {
        if u == v {
            return Err(Error::SelfProbe(u));
        }
        self.v[(u - 1) as usize].pms.remove(v)?;
        self.v[(v - 1) as usize].pms.remove(u)?;
        Ok(())
    }

    fn pair_mut(&mut self, u: VertexId, v: VertexId) -> (&mut VertexState, &mut VertexState) {
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        let (head, tail) = self.v.split_at_mut(hi as usize - 1);
        let (a, b) = (&mut head[lo as usize - 1], &mut tail[0]);
        if u < v {
            (a, b)
        } else {
            (b, a)
        }
    }

    #[cfg(debug_assertions)]
    fn debug_check(&self, u: VertexId) {
        let st = self.vertex(u);
        debug_assert_eq!(
            st.s + st.e + st.skipped + st.pms.len(),
            self.n - 1,
            "vertex {u} accounting broke"
        );
        debug_assert_eq!(st.s as usize, st.solid.len());
    }

    #[cfg(not(debug_assertions))]
    fn debug_check(&self, _u: VertexId) {}
}
