//! Disjoint-interval bookkeeping of not-yet-probed destinations.
//!
//! Each vertex keeps its unexamined partners as maximal integer intervals in
//! an ordered map, so picking the next destination is constant work (left
//! endpoint of the first interval) and removing an arbitrary destination is
//! logarithmic: shrink an endpoint, drop a singleton, or split an interval.

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::{Error, VertexId};

thread_local! {
    static CMP_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Key comparisons performed by interval-set operations on this thread since
/// the last [`reset_comparison_count`]. Lets tests pin the complexity
/// contract: selection does zero comparisons, removal O(log n).
pub fn comparison_count() -> u64 {
    CMP_COUNT.with(|c| c.get())
}

pub fn reset_comparison_count() {
    CMP_COUNT.with(|c| c.set(0));
}

/// Interval key: the left endpoint. Comparisons are counted so the
/// logarithmic contract is testable rather than assumed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Lo(u32);

impl Ord for Lo {
    fn cmp(&self, other: &Self) -> Ordering {
        CMP_COUNT.with(|c| c.set(c.get() + 1));
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Lo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Set of destination ids kept as disjoint maximal intervals `[lo, hi]`,
/// ordered by left endpoint.
#[derive(Clone, Debug, Default)]
pub struct IntervalSet {
    map: BTreeMap<Lo, u32>,
    len: u32,
}

impl IntervalSet {
    /// All destinations `1..=n` except `self_id` itself: at most the two
    /// intervals `[1, self_id-1]` and `[self_id+1, n]`.
    pub fn new(n: u32, self_id: VertexId) -> Self {
        assert!((1..=n).contains(&self_id), "self_id out of range");
        let mut map = BTreeMap::new();
        if self_id > 1 {
            map.insert(Lo(1), self_id - 1);
        }
        if self_id < n {
            map.insert(Lo(self_id + 1), n);
        }
        IntervalSet { map, len: n - 1 }
    }

    /// Remaining destination count.
    pub fn len(&self) -> u32 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Next destination: the left endpoint of the first interval. Constant
    /// work — descends the leftmost spine without key comparisons.
    pub fn select_destination(&self) -> Option<VertexId> {
        self.map.first_key_value().map(|(lo, _)| lo.0)
    }

    /// Remove destination `v`. Three shapes: drop a singleton interval,
    /// shrink an endpoint, or split the interval around an interior point.
    pub fn remove(&mut self, v: VertexId) -> Result<(), Error> {
        let (&Lo(lo), hi_ref) = self
            .map
            .range_mut(..=Lo(v))
            .next_back()
            .ok_or(Error::NotPresent(v))?;
        let hi = *hi_ref;
        if v > hi {
            return Err(Error::NotPresent(v));
        }
        if lo < v && v < hi {
            *hi_ref = v - 1;
            self.map.insert(Lo(v + 1), hi);
        } else if lo == v && v == hi {
            self.map.remove(&Lo(lo));
        } else if lo == v {
            self.map.remove(&Lo(lo));
            self.map.insert(Lo(lo + 1), hi);
        } else {
            *hi_ref = v - 1;
        }
        self.len -= 1;
        Ok(())
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.map
            .range(..=Lo(v))
            .next_back()
            .is_some_and(|(_, &hi)| v <= hi)
    }

    /// Current intervals as `(lo, hi)` pairs in ascending order.
    pub fn intervals(&self) -> Vec<(u32, u32)> {
        self.map.iter().map(|(&Lo(lo), &hi)| (lo, hi)).collect()
    }

    pub fn interval_count(&self) -> usize {
        self.map.len()
    }
}
