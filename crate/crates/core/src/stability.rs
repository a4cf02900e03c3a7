//! (k,ℓ)-stability: removing any k vertices lowers α by at most ℓ.
//!
//! A (k,ℓ)-stable graph on n vertices has α ≤ ⌊(n−k+1)/2⌋ + ℓ; graphs
//! attaining the bound are *tight*. The reference check scans all k-subsets
//! in lexicographic order and reports the first one whose removal drops α by
//! more than ℓ.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};
use crate::independence::{alpha_within, has_independent_set};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub k: usize,
    pub l: usize,
    pub stable: bool,
    /// First violating removal set, present iff not stable.
    pub witness: Option<VertexSet>,
    pub alpha: usize,
    pub bound: usize,
    pub tight: bool,
}

fn check_parameters(n: usize, k: usize, l: usize) -> Result<()> {
    if k > l && n > k {
        Ok(())
    } else {
        Err(Error::StabilityParameters { n, k, l })
    }
}

/// ⌊(n−k+1)/2⌋ + ℓ.
pub fn stability_bound(n: usize, k: usize, l: usize) -> Result<usize> {
    check_parameters(n, k, l)?;
    Ok((n - k + 1) / 2 + l)
}

/// Lexicographic k-subsets of `0..n` as masks.
pub(crate) struct Combinations {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Combinations {
    pub(crate) fn new(n: usize, k: usize) -> Self {
        Combinations {
            idx: (0..k).collect(),
            n,
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.done {
            return None;
        }
        let mask = self.idx.iter().fold(0, |acc, &v| acc | bit(v));
        let k = self.idx.len();
        match (0..k).rev().find(|&i| self.idx[i] < self.n - k + i) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(mask)
    }
}

/// First k-subset whose removal leaves no independent set of size `need`.
fn first_violation(g: &Graph, k: usize, need: usize) -> Option<VertexSet> {
    let all = g.vertex_mask();
    Combinations::new(g.n(), k)
        .find(|&s| !has_independent_set(g.rows(), all & !s, need))
        .map(VertexSet::from_mask)
}

pub fn is_stable(g: &Graph, k: usize, l: usize) -> Result<StabilityReport> {
    let bound = stability_bound(g.n(), k, l)?;
    let (alpha, _) = alpha_within(g.rows(), g.vertex_mask());
    let witness = first_violation(g, k, alpha - l.min(alpha));
    let stable = witness.is_none();
    Ok(StabilityReport {
        k,
        l,
        stable,
        witness,
        alpha,
        bound,
        tight: stable && alpha == bound,
    })
}

/// Stable and α equal to the bound. Skips the subset scan when α misses it.
pub fn is_tight_stable(g: &Graph, k: usize, l: usize) -> Result<bool> {
    let bound = stability_bound(g.n(), k, l)?;
    if l == 0 && g.min_degree() < k {
        return Ok(false);
    }
    let (alpha, _) = alpha_within(g.rows(), g.vertex_mask());
    Ok(alpha == bound && first_violation(g, k, alpha - l).is_none())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub holds: bool,
    /// A vertex of degree below k, when one exists.
    pub violator: Option<usize>,
}

/// A (k,0)-stable graph has minimum degree at least k: deleting the closed
/// neighborhood of a vertex of degree < k removes at most k vertices and
/// lowers α.
pub fn min_degree_necessary(g: &Graph, k: usize) -> DegreeCheck {
    let violator = (0..g.n()).find(|&v| g.degree(v) < k);
    DegreeCheck {
        holds: violator.is_none(),
        violator,
    }
}
