//! Simple undirected graphs on at most 64 vertices.
//!
//! Each neighborhood is stored as a single `u64` bitmask, so set algebra on
//! vertex sets (intersections, closed neighborhoods, induced subgraphs) is a
//! handful of word operations.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the low `n` bits set.
#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// An undirected edge, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::Loop(a)),
        }
    }

    /// Whether `w` is an endpoint.
    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[usize; 2]>::deserialize(d)?;
        Edge::new(a, b).map_err(serde::de::Error::custom)
    }
}

/// A set of vertices of some host graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn mask(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> {
        Bits(self.0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// A set of pairwise vertex-disjoint edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices covered by the matching.
    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|e| [e.u, e.v]).collect()
    }

    /// Checks disjointness and that every edge is present in `host`.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let mut seen = VertexSet::empty();
        for e in &self.edges {
            if !host.has_edge(e.u, e.v) {
                return Err(Error::InvalidCertificate(format!(
                    "matching edge {e} missing from host"
                )));
            }
            if seen.contains(e.u) || seen.contains(e.v) {
                return Err(Error::InvalidCertificate(format!(
                    "matching edge {e} shares a vertex with another edge"
                )));
            }
            seen.insert(e.u);
            seen.insert(e.v);
        }
        Ok(())
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            for w in [a, b] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            g.adj[a] |= bit(b);
            g.adj[b] |= bit(a);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Rows are checked for symmetry,
    /// loops and range.
    pub fn from_adjacency(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let all = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                let vertex = (row & !all).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row & bit(u) != 0 {
                return Err(Error::Loop(u));
            }
            for v in Bits(row) {
                if rows[v] & bit(u) == 0 {
                    return Err(Error::Precondition(format!(
                        "adjacency not symmetric at {u}-{v}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Trusted constructor for rows already known to be a valid adjacency.
    pub(crate) fn from_rows_unchecked(rows: &[u64]) -> Self {
        debug_assert!(Graph::from_adjacency(rows.to_vec()).is_ok());
        Graph {
            n: rows.len(),
            adj: rows.to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a mask.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub(crate) fn nbr_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| Edge { u, v })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    /// Whether `set` is independent.
    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.mask() == 0)
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach(start, left);
            left &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Vertices reachable from `start` within `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Induced subgraph on `keep`, relabeled compactly in increasing order.
    /// Returns the graph and the map from new labels to original vertices.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if keep.mask() & !self.vertex_mask() != 0 {
            let vertex = (keep.mask() & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        if keep.is_empty() {
            return Err(Error::EmptyResult);
        }
        let map: Vec<usize> = keep.iter().collect();
        let mut new_label = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            new_label[v] = i;
        }
        let rows = map
            .iter()
            .map(|&v| {
                Bits(self.adj[v] & keep.mask())
                    .fold(0u64, |acc, w| acc | bit(new_label[w]))
            })
            .collect();
        Ok((
            Graph {
                n: map.len(),
                adj: rows,
            },
            map,
        ))
    }

    /// `G ∖ S`: induced subgraph on the complement of `removed`.
    pub fn delete_vertices(&self, removed: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if removed.mask() & !self.vertex_mask() != 0 {
            let vertex = (removed.mask() & !self.vertex_mask()).trailing_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        self.induced(VertexSet(self.vertex_mask() & !removed.mask()))
    }

    /// `G − e`.
    pub fn delete_edge(&self, e: Edge) -> Result<Graph> {
        if !self.has_edge(e.u, e.v) {
            return Err(Error::MissingEdge(e));
        }
        let mut g = self.clone();
        g.adj[e.u] &= !bit(e.v);
        g.adj[e.v] &= !bit(e.u);
        Ok(g)
    }

    /// `G + e`.
    pub fn add_edge(&self, e: Edge) -> Result<Graph> {
        if e.v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: e.v,
                n: self.n,
            });
        }
        let mut g = self.clone();
        g.adj[e.u] |= bit(e.v);
        g.adj[e.v] |= bit(e.u);
        Ok(g)
    }

    /// Disjoint union; `other`'s vertices follow `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Appends `t` isolated vertices.
    pub fn add_isolated(&self, t: usize) -> Result<Graph> {
        let n = self.n + t;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = self.adj.clone();
        adj.resize(n, 0);
        Ok(Graph { n, adj })
    }

    /// Appends one vertex adjacent to every existing vertex.
    pub fn cone(&self) -> Result<Graph> {
        let n = self.n + 1;
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let apex = self.n;
        let mut adj: Vec<u64> = self.adj.iter().map(|&r| r | bit(apex)).collect();
        adj.push(self.vertex_mask());
        Ok(Graph { n, adj })
    }

    /// Relabels by `perm`, where vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = Bits(row).fold(0, |acc, w| acc | bit(perm[w]));
        }
        Graph { n: self.n, adj }
    }

    /// Whether every edge of `self` is an edge of `host` (same vertex count).
    pub fn is_spanning_subgraph_of(&self, host: &Graph) -> bool {
        self.n == host.n && self.adj.iter().zip(&host.adj).all(|(a, b)| a & !b == 0)
    }

    /// Structural self-check: symmetry, no loops, neighbors in range.
    pub fn check_invariants(&self) -> Result<()> {
        Graph::from_adjacency(self.adj.clone()).map(|_| ())
    }
}
