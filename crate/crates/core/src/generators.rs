//! Generators for the graph families used as stability examples.

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, MAX_VERTICES};

/// Edges of K4 in the order used for subdivision counts.
pub const K4_EDGE_ORDER: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The cycle `0-1-…-(n-1)-0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Precondition(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn clique(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Balanced bipartite graph on sides `0..m` and `m..2m` containing the
/// perfect matching `{i, m+i}` plus `extra` cross edges.
pub fn bipartite_with_pm(m: usize, extra: &[Edge]) -> Result<Graph> {
    if m == 0 {
        return Err(Error::VertexCount(0));
    }
    let n = 2 * m;
    if n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    for e in extra {
        if e.v >= n {
            return Err(Error::VertexOutOfRange { vertex: e.v, n });
        }
        if (e.u < m) == (e.v < m) {
            return Err(Error::NonBipartiteEdge(*e));
        }
    }
    Graph::from_edges(n, (0..m).map(|i| (i, m + i)).chain(extra.iter().map(|e| (e.u, e.v))))
}

/// K4 with its `i`-th edge (see [`K4_EDGE_ORDER`]) replaced by a path with
/// `counts[i]` internal vertices. New vertices are numbered from 4 upwards,
/// branch by branch, along each path from its lower endpoint.
pub fn even_subdivision_k4(counts: [usize; 6]) -> Result<Graph> {
    if let Some((index, &count)) = counts.iter().enumerate().find(|(_, c)| *c % 2 == 1) {
        return Err(Error::OddSubdivisionCount { index, count });
    }
    let n = 4 + counts.iter().sum::<usize>();
    if n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    let mut edges = Vec::with_capacity(n + 2);
    let mut next = 4;
    for (&(u, v), &count) in K4_EDGE_ORDER.iter().zip(&counts) {
        let mut prev = u;
        for _ in 0..count {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, v));
    }
    Graph::from_edges(n, edges)
}
