//! Exact maximum independent sets by branch and bound over bitmasks.
//!
//! Branching picks a maximum-degree vertex of the candidate set and tries
//! "include" (drop its closed neighborhood) before "exclude". A candidate of
//! degree at most one is always included without branching, since some
//! maximum independent set contains it. The bound is current size plus the
//! number of remaining candidates.

use serde::{Deserialize, Serialize};

use crate::graph::{bit, Bits, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaResult {
    pub alpha: usize,
    pub witness: VertexSet,
}

struct Solver<'a> {
    adj: &'a [u64],
    best_size: u32,
    best_set: u64,
    /// Stop as soon as a set of this size is found.
    target: u32,
}

impl Solver<'_> {
    fn search(&mut self, mut cand: u64, mut chosen: u64) {
        loop {
            let size = chosen.count_ones();
            if size + cand.count_ones() <= self.best_size || self.best_size >= self.target {
                return;
            }
            if cand == 0 {
                self.best_size = size;
                self.best_set = chosen;
                return;
            }
            let mut pivot = 0;
            let mut pivot_deg = 0;
            let mut forced = None;
            for v in Bits(cand) {
                let d = (self.adj[v] & cand).count_ones();
                if d <= 1 {
                    forced = Some(v);
                    break;
                }
                if d > pivot_deg {
                    pivot = v;
                    pivot_deg = d;
                }
            }
            if let Some(v) = forced {
                chosen |= bit(v);
                cand &= !(self.adj[v] | bit(v));
                continue;
            }
            self.search(cand & !(self.adj[pivot] | bit(pivot)), chosen | bit(pivot));
            cand &= !bit(pivot);
        }
    }
}

/// Maximum independent set of the subgraph induced by `within`.
pub(crate) fn alpha_within(adj: &[u64], within: u64) -> (usize, u64) {
    let mut s = Solver {
        adj,
        best_size: 0,
        best_set: 0,
        target: u32::MAX,
    };
    s.search(within, 0);
    (s.best_size as usize, s.best_set)
}

/// Whether the subgraph induced by `within` has an independent set of size
/// at least `target`.
pub(crate) fn has_independent_set(adj: &[u64], within: u64, target: usize) -> bool {
    if target == 0 {
        return true;
    }
    if within.count_ones() < target as u32 {
        return false;
    }
    let mut s = Solver {
        adj,
        best_size: target as u32 - 1,
        best_set: 0,
        target: target as u32,
    };
    s.search(within, 0);
    s.best_size as usize >= target
}

/// Independence number with one maximum independent set.
pub fn alpha(g: &Graph) -> AlphaResult {
    let (alpha, set) = alpha_within(g.rows(), g.vertex_mask());
    AlphaResult {
        alpha,
        witness: VertexSet::from_mask(set),
    }
}

/// `α(G ∖ {v})` for every vertex `v`, indexed by `v`.
pub fn alpha_after_single_removals(g: &Graph) -> Vec<usize> {
    let all = g.vertex_mask();
    (0..g.n())
        .map(|v| alpha_within(g.rows(), all & !bit(v)).0)
        .collect()
}

/// All independent sets of size `t` in lexicographic order.
pub fn independent_sets_of_size(g: &Graph, t: usize) -> IndependentSets<'_> {
    IndependentSets {
        adj: g.rows(),
        t,
        stack: vec![Frame {
            chosen: 0,
            size: 0,
            options: g.vertex_mask(),
        }],
    }
}

struct Frame {
    chosen: u64,
    size: usize,
    /// Vertices after the last chosen one that are not adjacent to any chosen.
    options: u64,
}

pub struct IndependentSets<'a> {
    adj: &'a [u64],
    t: usize,
    stack: Vec<Frame>,
}

impl Iterator for IndependentSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        loop {
            let top = self.stack.last_mut()?;
            if top.size == self.t {
                let found = top.chosen;
                self.stack.pop();
                return Some(VertexSet::from_mask(found));
            }
            if (top.options.count_ones() as usize) < self.t - top.size {
                self.stack.pop();
                continue;
            }
            let v = top.options.trailing_zeros() as usize;
            top.options &= !bit(v);
            let child = Frame {
                chosen: top.chosen | bit(v),
                size: top.size + 1,
                options: top.options & !self.adj[v],
            };
            self.stack.push(child);
        }
    }
}
