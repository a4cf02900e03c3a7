//! Slow, obviously correct reference implementations. Nothing here calls the
//! solvers under test.

#![allow(dead_code)]

use rand::Rng;
use stabilitylab_core::graph::{Edge, Graph};

fn adjacent(g: &Graph, u: usize, v: usize) -> bool {
    g.rows()[u] >> v & 1 == 1
}

fn independent(g: &Graph, set: u64) -> bool {
    let n = g.n();
    (0..n).all(|u| set >> u & 1 == 0 || (u + 1..n).all(|v| set >> v & 1 == 0 || !adjacent(g, u, v)))
}

/// Largest independent subset of `within`, by trying every subset.
pub fn naive_alpha_within(g: &Graph, within: u64) -> usize {
    let n = g.n();
    let mut best = 0;
    for set in 0u64..1 << n {
        if set & !within == 0 && independent(g, set) {
            best = best.max(set.count_ones() as usize);
        }
    }
    best
}

pub fn naive_alpha(g: &Graph) -> usize {
    naive_alpha_within(g, (1u64 << g.n()) - 1)
}

/// Independence numbers of `G ∖ S` for every `S`, indexed by the mask of
/// `S`. One pass over all subsets serves every stability question.
pub fn alpha_table(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let full = (1usize << n) - 1;
    let indep: Vec<bool> = (0u64..1 << n).map(|s| independent(g, s)).collect();
    // best[m] = largest independent subset of m, by dropping one vertex
    let mut best = vec![0u8; 1 << n];
    for m in 1..=full {
        best[m] = if indep[m] {
            m.count_ones() as u8
        } else {
            (0..n).filter(|v| m >> v & 1 == 1).map(|v| best[m & !(1 << v)]).max().unwrap()
        };
    }
    (0..=full).map(|s| best[full & !s]).collect()
}

pub fn naive_stable(g: &Graph, k: usize, l: usize) -> bool {
    let table = alpha_table(g);
    stable_from_table(&table, g.n(), k, l)
}

pub fn stable_from_table(table: &[u8], n: usize, k: usize, l: usize) -> bool {
    let a = table[0] as usize;
    (0usize..1 << n).filter(|s| s.count_ones() as usize == k).all(|s| table[s] as usize + l >= a)
}

pub fn naive_tight(g: &Graph, k: usize, l: usize) -> bool {
    let n = g.n();
    n > k && naive_stable(g, k, l) && naive_alpha(g) == (n - k + 1) / 2 + l
}

pub fn naive_critical(g: &Graph) -> bool {
    let a = naive_alpha(g);
    g.edges().all(|e| naive_alpha(&g.delete_edge(e).unwrap()) > a)
}

/// Smallest upper-triangle bit string over all relabelings.
pub fn naive_canon(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(g, perm[u], perm[v]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Isomorphism classes among all labeled graphs on `n` vertices.
pub fn labeled_classes(n: usize) -> std::collections::HashSet<u64> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|m| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e);
            naive_canon(&Graph::from_edges(n, edges).unwrap())
        })
        .collect()
}

/// Checks that `cycles` and `pairs` use every vertex of `host` exactly once
/// and only along host edges, each cycle being odd.
pub fn spanning_cycles_and_pairs(host: &Graph, cycles: &[Vec<usize>], pairs: &[Edge]) -> Result<(), String> {
    let mut used = vec![false; host.n()];
    let mut take = |v: usize| -> Result<(), String> {
        if v >= used.len() || std::mem::replace(&mut used[v], true) {
            return Err(format!("vertex {v} reused or out of range"));
        }
        Ok(())
    };
    for c in cycles {
        if c.len() < 3 || c.len() % 2 == 0 {
            return Err(format!("cycle {c:?} is not odd"));
        }
        for (i, &v) in c.iter().enumerate() {
            take(v)?;
            if !adjacent(host, v, c[(i + 1) % c.len()]) {
                return Err(format!("cycle {c:?} leaves the host"));
            }
        }
    }
    for e in pairs {
        take(e.u)?;
        take(e.v)?;
        if !adjacent(host, e.u, e.v) {
            return Err(format!("pair {e} is not an edge"));
        }
    }
    match used.iter().position(|&u| !u) {
        Some(v) => Err(format!("vertex {v} uncovered")),
        None => Ok(()),
    }
}

/// Cross edges `i ~ m+j`, `i ≠ j`, each present with probability one half.
pub fn random_cross_edges(m: usize, rng: &mut impl Rng) -> Vec<Edge> {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i != j && rng.gen_bool(0.5) {
                edges.push(Edge::new(i, m + j).unwrap());
            }
        }
    }
    edges
}
