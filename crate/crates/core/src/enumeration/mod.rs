//! Exhaustive enumeration and theorem verification.
//!
//! Everything here is deterministic: workers only ever compute, and results
//! are handed back in generation order regardless of the pool size.

mod atlas;
mod filter;
mod generate;
mod verify;

use std::borrow::Cow;

pub use atlas::{
    atlas_read, atlas_write, compute_flags, parse_record, write_record, AtlasRecord, FlagValue, Provenance,
};
pub use filter::{Filter, Predicate};
pub use generate::{count_canonical, enumerate_canonical, CanonicalGraphs, MAX_ENUMERATION_ORDER};
pub use verify::{verify_theorem, verify_theorem_with, ParameterRange, TheoremId, Verdict, VerificationReport, VerifyParams};

use crate::error::Result;
use crate::graph::Graph;
use generate::{build_level, check_order, next_level, pool, scan_children, Level};
use rayon::ThreadPool;

/// Unpruned levels are shared between consecutive orders; pruned ones
/// depend on the target order and are rebuilt.
struct Levels {
    pool: ThreadPool,
    plain: Level,
}

impl Levels {
    fn new(jobs: usize) -> Result<Self> {
        Ok(Levels {
            pool: pool(jobs)?,
            plain: Level::single_vertex(),
        })
    }

    /// Runs `map` on every graph on `n` vertices the filter's prune lets
    /// through, delivering results to `sink` in generation order until it
    /// returns false.
    fn scan<T: Send>(&mut self, n: usize, filter: &Filter, map: impl Fn(Graph) -> T + Sync, mut sink: impl FnMut(T) -> bool) {
        if n == 1 {
            sink(map(Graph::from_rows_unchecked(&[0])));
            return;
        }
        let parents = parents(&self.pool, &mut self.plain, n, filter);
        scan_children(&self.pool, &parents, |rows| Some(map(Graph::from_rows_unchecked(rows))), sink);
    }
}

/// Parents of the graphs on `n ≥ 2` vertices, reusing `plain` when there is
/// no prune.
fn parents<'a>(pool: &ThreadPool, plain: &'a mut Level, n: usize, filter: &Filter) -> Cow<'a, Level> {
    if filter.prune().is_some() {
        let keep = |m: usize, rows: &[u64]| filter.keeps_ancestor(n, m, &Graph::from_rows_unchecked(rows));
        return Cow::Owned(build_level(pool, n - 1, &keep));
    }
    if plain.n > n - 1 {
        *plain = Level::single_vertex();
    }
    while plain.n < n - 1 {
        *plain = next_level(pool, plain, &|_| true);
    }
    Cow::Borrowed(plain)
}

/// The (k,l) pairs whose verdicts go into record flags.
fn stability_pairs(filter: &Filter) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = filter
        .predicates()
        .iter()
        .filter_map(|p| match *p {
            Predicate::Stable { k, l } | Predicate::Tight { k, l } => Some((k, l)),
            _ => None,
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

fn provenance(source: &str, filter: &Filter) -> Provenance {
    let filters = filter.predicates().iter().map(|p| p.to_string()).collect();
    Provenance::new(source, filters, filter.prune().is_some())
}

/// Streams a record for every graph on `n` vertices passing `filter`, in
/// generation order. Returns the number of graphs examined at order `n`.
pub fn scan_filtered(n: usize, filter: &Filter, jobs: usize, mut sink: impl FnMut(AtlasRecord)) -> Result<u64> {
    check_order(n)?;
    let pairs = stability_pairs(filter);
    let prov = provenance("enumerate", filter);
    let mut scanned = 0u64;
    let mut first_error = None;
    Levels::new(jobs)?.scan(
        n,
        filter,
        |g| filter.accepts(&g).then(|| AtlasRecord::new(&g, &pairs, prov.clone())),
        |r| {
            scanned += 1;
            match r {
                Some(Ok(record)) => sink(record),
                Some(Err(e)) => {
                    first_error.get_or_insert(e);
                }
                None => {}
            }
            true
        },
    );
    first_error.map_or(Ok(scanned), Err)
}

/// Every graph on `n` vertices passing `filter`, as atlas records.
pub fn enumerate_filtered(n: usize, filter: &Filter, jobs: usize) -> Result<Vec<AtlasRecord>> {
    let mut out = Vec::new();
    scan_filtered(n, filter, jobs, |r| out.push(r))?;
    Ok(out)
}
