//! Vertex-by-vertex canonical augmentation.
//!
//! A level holds one canonical representative per isomorphism class on `m`
//! vertices, stored as flat canonical rows. A child of parent `P` is `P` plus
//! a vertex `v` joined to a subset `S`. The child is kept when `v` is, up to
//! isomorphism of the deleted graphs, its canonical last vertex `w*`: either
//! `w* = v`, or `G ∖ w*` has the canonical rows of `P`. Every class then has
//! exactly one parent (the canonical form of `G ∖ w*`), and the few
//! isomorphic children one parent can still produce are removed by comparing
//! canonical forms within that parent.
//!
//! `w*` always has maximum degree, so subsets making `v` a non-maximum
//! degree vertex are skipped before any labeling is computed.

use std::collections::HashSet;

use rayon::prelude::*;
use rayon::ThreadPool;

use crate::canon::canonical_rows;
use crate::error::{Error, Result};
use crate::graph::low_mask;

/// Hard cap on the order of fully enumerated graphs.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Parents handed to the worker pool at a time. Bounds the memory held by
/// children awaiting in-order delivery.
const BATCH: usize = 2048;

pub(crate) fn check_order(n: usize) -> Result<()> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::Range(format!(
            "enumeration order must lie in 1..={MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// All canonical representatives on `n` vertices, flat rows with stride `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Level {
    pub n: usize,
    pub rows: Vec<u64>,
}

impl Level {
    pub fn single_vertex() -> Self {
        Level { n: 1, rows: vec![0] }
    }

    pub fn len(&self) -> usize {
        self.rows.len() / self.n
    }

    pub fn graphs(&self) -> std::slice::ChunksExact<'_, u64> {
        self.rows.chunks_exact(self.n)
    }
}

/// Calls `emit` with the canonical rows of every accepted child of the
/// canonical `parent`, in increasing order of the neighbor subset.
pub(crate) fn children(parent: &[u64], mut emit: impl FnMut(&[u64])) {
    let m = parent.len();
    let n = m + 1;
    let v = m;
    let parent_max = parent.iter().map(|r| r.count_ones()).max().unwrap_or(0);
    let mut adj = [0u64; 64];
    adj[..m].copy_from_slice(parent);
    let mut lab = [0u8; 64];
    let mut rows = [0u64; 64];
    let mut sub_adj = [0u64; 64];
    let mut sub_lab = [0u8; 64];
    let mut sub_rows = [0u64; 64];
    let mut seen: HashSet<[u64; MAX_ENUMERATION_ORDER]> = HashSet::new();

    for s in 0..=low_mask(m) {
        let deg = s.count_ones();
        if deg < parent_max {
            continue;
        }
        // new degree of u is its old one plus one when u joins v
        if (0..m).any(|u| parent[u].count_ones() + (s >> u & 1) as u32 > deg) {
            continue;
        }
        for u in 0..m {
            adj[u] = parent[u] | (s >> u & 1) << v;
        }
        adj[v] = s;
        canonical_rows(&adj[..n], &mut lab, &mut rows);
        let last = lab[n - 1] as usize;
        if last != v {
            // rows of G ∖ last with the remaining vertices squeezed together
            for (k, u) in (0..n).filter(|&u| u != last).enumerate() {
                sub_adj[k] = squeeze(adj[u], last);
            }
            canonical_rows(&sub_adj[..m], &mut sub_lab, &mut sub_rows);
            if sub_rows[..m] != *parent {
                continue;
            }
        }
        let mut key = [0u64; MAX_ENUMERATION_ORDER];
        key[..n].copy_from_slice(&rows[..n]);
        if seen.insert(key) {
            emit(&rows[..n]);
        }
    }
}

/// Drops bit `gone` from `row`, shifting the higher bits down by one.
fn squeeze(row: u64, gone: usize) -> u64 {
    let low = row & low_mask(gone);
    let high = (row >> 1) & !low_mask(gone);
    low | high
}

/// Pool of `jobs` workers; `jobs = 0` uses rayon's default.
pub(crate) fn pool(jobs: usize) -> Result<ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))
}

/// Visits every child of every parent in `level`, optionally keeping only
/// those accepted by `keep`. `map` runs on the workers; its results reach
/// `sink` on the calling thread in parent order, so output does not depend
/// on the number of workers. The scan stops as soon as `sink` returns false.
pub(crate) fn scan_children<T, M, S>(pool: &ThreadPool, level: &Level, map: M, mut sink: S)
where
    T: Send,
    M: Fn(&[u64]) -> Option<T> + Sync,
    S: FnMut(T) -> bool,
{
    let parents: Vec<&[u64]> = level.graphs().collect();
    for batch in parents.chunks(BATCH) {
        let out: Vec<Vec<T>> = pool.install(|| {
            batch
                .par_iter()
                .map(|p| {
                    let mut local = Vec::new();
                    children(p, |c| {
                        if let Some(t) = map(c) {
                            local.push(t);
                        }
                    });
                    local
                })
                .collect()
        });
        for t in out.into_iter().flatten() {
            if !sink(t) {
                return;
            }
        }
    }
}

/// Next level, keeping only children accepted by `keep`.
pub(crate) fn next_level(pool: &ThreadPool, level: &Level, keep: &(dyn Fn(&[u64]) -> bool + Sync)) -> Level {
    let mut rows = Vec::new();
    scan_children(
        pool,
        level,
        |c| keep(c).then(|| c.to_vec()),
        |c| {
            rows.extend_from_slice(&c);
            true
        },
    );
    Level {
        n: level.n + 1,
        rows,
    }
}

/// Level `n`, built from one vertex. `keep(m, rows)` filters graphs on `m`
/// vertices as they are produced; whatever it rejects has no descendants.
pub(crate) fn build_level(pool: &ThreadPool, n: usize, keep: &(dyn Fn(usize, &[u64]) -> bool + Sync)) -> Level {
    let mut level = Level::single_vertex();
    if !keep(1, &level.rows) {
        level.rows.clear();
    }
    while level.n < n {
        let m = level.n + 1;
        level = next_level(pool, &level, &|c| keep(m, c));
    }
    level
}

/// Iterator over one representative per isomorphism class on `n` vertices.
/// Graphs come out in canonical form; memory is the level below plus the
/// children of one parent.
pub struct CanonicalGraphs {
    parents: Level,
    next_parent: usize,
    pending: std::vec::IntoIter<Vec<u64>>,
    first: Option<Vec<u64>>,
}

impl Iterator for CanonicalGraphs {
    type Item = crate::graph::Graph;

    fn next(&mut self) -> Option<Self::Item> {
        if let Some(rows) = self.first.take() {
            return Some(crate::graph::Graph::from_rows_unchecked(&rows));
        }
        loop {
            if let Some(rows) = self.pending.next() {
                return Some(crate::graph::Graph::from_rows_unchecked(&rows));
            }
            if self.next_parent >= self.parents.len() {
                return None;
            }
            let m = self.parents.n;
            let p = &self.parents.rows[self.next_parent * m..(self.next_parent + 1) * m];
            let mut batch = Vec::new();
            children(p, |c| batch.push(c.to_vec()));
            self.pending = batch.into_iter();
            self.next_parent += 1;
        }
    }
}

/// One graph per isomorphism class on `n` vertices, `1 ≤ n ≤ 10`.
pub fn enumerate_canonical(n: usize) -> Result<CanonicalGraphs> {
    check_order(n)?;
    let (parents, first) = if n == 1 {
        (Level { n: 1, rows: Vec::new() }, Some(vec![0]))
    } else {
        (build_level(&pool(1)?, n - 1, &|_, _| true), None)
    };
    Ok(CanonicalGraphs {
        parents,
        next_parent: 0,
        pending: Vec::new().into_iter(),
        first,
    })
}

/// Number of classes on `n` vertices, counted with `jobs` workers.
pub fn count_canonical(n: usize, jobs: usize) -> Result<u64> {
    check_order(n)?;
    if n == 1 {
        return Ok(1);
    }
    let pool = pool(jobs)?;
    let parents = build_level(&pool, n - 1, &|_, _| true);
    let mut count = 0u64;
    scan_children(&pool, &parents, |_| Some(()), |()| {
        count += 1;
        true
    });
    Ok(count)
}
