//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualize each vertex of the first smallest
//! non-singleton cell, recurse. Every leaf is a discrete partition, i.e. a
//! relabeling; the canonical form is the relabeled adjacency that is largest
//! in row-lexicographic order. Automorphisms discovered when two leaves give
//! the same relabeled graph prune the tree in two ways: the subtree being
//! explored is abandoned back to the node where it left the stored path, and
//! children of a node lying in one orbit of the automorphisms fixing that
//! node's individualized vertices are explored only once.
//!
//! Refinement only ever splits cells in place and sorts fragments by
//! ascending neighbor count, so the initial split sorts by degree and the
//! last canonical position always holds a vertex of maximum degree. The
//! enumerator relies on this.

use std::cmp::Ordering;

use crate::graph::{bit, Bits, Edge, Graph};

const CAP: usize = 64;
const NO_JUMP: usize = usize::MAX;

#[derive(Clone, Copy)]
struct Partition {
    lab: [u8; CAP],
    /// Bit `p` is set iff a cell starts at position `p`.
    starts: u64,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut lab = [0u8; CAP];
        for (i, slot) in lab.iter_mut().enumerate().take(n) {
            *slot = i as u8;
        }
        Partition { lab, starts: 1 }
    }

    #[inline]
    fn cell_end(&self, s: usize, n: usize) -> usize {
        let above = if s >= 63 {
            0
        } else {
            self.starts & !((2u64 << s) - 1)
        };
        if above == 0 {
            n
        } else {
            above.trailing_zeros() as usize
        }
    }

    #[inline]
    fn is_discrete(&self, n: usize) -> bool {
        self.starts.count_ones() as usize == n
    }

    /// Moves the vertex at `pos` to the front of the cell starting at `s`
    /// and makes it a singleton.
    fn individualize(&mut self, s: usize, pos: usize) {
        self.lab.swap(s, pos);
        self.starts |= bit(s + 1);
    }

    /// First smallest non-singleton cell.
    fn target_cell(&self, n: usize) -> (usize, usize) {
        let mut best = (0, 0);
        let mut best_len = usize::MAX;
        let mut pos = 0;
        while pos < n {
            let end = self.cell_end(pos, n);
            let len = end - pos;
            if len > 1 && len < best_len {
                best = (pos, end);
                best_len = len;
                if len == 2 {
                    break;
                }
            }
            pos = end;
        }
        best
    }
}

/// Refines `part` to the coarsest equitable partition finer than it, using
/// the cells starting at the positions in `active` as initial splitters.
fn refine(adj: &[u64], n: usize, part: &mut Partition, mut active: u64) {
    let mut keys = [0u8; CAP];
    while active != 0 {
        if part.is_discrete(n) {
            return;
        }
        let s = active.trailing_zeros() as usize;
        active &= active - 1;
        let e = part.cell_end(s, n);
        let splitter = part.lab[s..e]
            .iter()
            .fold(0u64, |acc, &v| acc | bit(v as usize));

        let mut pos = 0;
        while pos < n {
            let end = part.cell_end(pos, n);
            if end - pos > 1 {
                let mut uniform = true;
                for p in pos..end {
                    keys[p] = (adj[part.lab[p] as usize] & splitter).count_ones() as u8;
                    uniform &= keys[p] == keys[pos];
                }
                if !uniform {
                    split_cell(part, &mut keys, pos, end, &mut active);
                }
            }
            pos = end;
        }
    }
}

/// Sorts the cell `[pos, end)` by key and splits it at key changes.
fn split_cell(part: &mut Partition, keys: &mut [u8; CAP], pos: usize, end: usize, active: &mut u64) {
    // insertion sort, cells are tiny
    for i in pos + 1..end {
        let (k, v) = (keys[i], part.lab[i]);
        let mut j = i;
        while j > pos && keys[j - 1] > k {
            keys[j] = keys[j - 1];
            part.lab[j] = part.lab[j - 1];
            j -= 1;
        }
        keys[j] = k;
        part.lab[j] = v;
    }
    let was_active = *active & bit(pos) != 0;
    let mut fragments = bit(pos);
    let (mut largest, mut largest_len, mut run_start) = (pos, 0, pos);
    for i in pos + 1..=end {
        if i == end || keys[i] != keys[i - 1] {
            if i - run_start > largest_len {
                largest = run_start;
                largest_len = i - run_start;
            }
            if i < end {
                part.starts |= bit(i);
                fragments |= bit(i);
            }
            run_start = i;
        }
    }
    if was_active {
        *active |= fragments;
    } else {
        *active |= fragments & !bit(largest);
    }
}

fn relabeled_rows(adj: &[u64], n: usize, lab: &[u8; CAP], rows: &mut [u64; CAP]) {
    let mut pos_of = [0u8; CAP];
    for (i, &v) in lab.iter().enumerate().take(n) {
        pos_of[v as usize] = i as u8;
    }
    for i in 0..n {
        rows[i] = Bits(adj[lab[i] as usize]).fold(0, |acc, w| acc | bit(pos_of[w] as usize));
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn find(parent: &mut [u8; CAP], mut v: usize) -> usize {
    while parent[v] as usize != v {
        let up = parent[parent[v] as usize];
        parent[v] = up;
        v = up as usize;
    }
    v
}

struct Leaf {
    lab: [u8; CAP],
    rows: [u64; CAP],
    path: Vec<u8>,
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<[u8; CAP]>,
    path: Vec<u8>,
    scratch_rows: [u64; CAP],
}

impl<'a> Search<'a> {
    fn new(adj: &'a [u64]) -> Self {
        Search {
            adj,
            n: adj.len(),
            first: None,
            best: None,
            generators: Vec::new(),
            path: Vec::with_capacity(adj.len()),
            scratch_rows: [0; CAP],
        }
    }

    fn run(mut self) -> Leaf {
        let mut root = Partition::unit(self.n);
        refine(self.adj, self.n, &mut root, 1);
        self.visit(&root);
        self.best.expect("search always reaches a leaf")
    }

    /// Returns the depth to unwind to, or `NO_JUMP`.
    fn visit(&mut self, part: &Partition) -> usize {
        let n = self.n;
        if part.is_discrete(n) {
            return self.leaf(part);
        }
        let (s, e) = part.target_cell(n);
        let depth = self.path.len();
        let mut explored = 0u64;
        let mut orbits = [0u8; CAP];
        let mut orbits_from = usize::MAX;
        for pos in s..e {
            let v = part.lab[pos] as usize;
            if explored != 0 && !self.generators.is_empty() {
                if orbits_from != self.generators.len() {
                    self.stabilizer_orbits(&mut orbits);
                    orbits_from = self.generators.len();
                }
                let root = find(&mut orbits, v);
                if Bits(explored).any(|u| find(&mut orbits, u) == root) {
                    continue;
                }
            }
            let mut child = *part;
            child.individualize(s, pos);
            refine(self.adj, n, &mut child, bit(s));
            self.path.push(v as u8);
            let jump = self.visit(&child);
            self.path.pop();
            explored |= bit(v);
            if jump < depth {
                return jump;
            }
        }
        NO_JUMP
    }

    /// Orbits of the group generated by the automorphisms found so far that
    /// fix every vertex on the current path.
    fn stabilizer_orbits(&self, orbits: &mut [u8; CAP]) {
        for (i, o) in orbits.iter_mut().enumerate().take(self.n) {
            *o = i as u8;
        }
        for gamma in &self.generators {
            if self.path.iter().any(|&v| gamma[v as usize] != v) {
                continue;
            }
            for v in 0..self.n {
                let a = find(orbits, v);
                let b = find(orbits, gamma[v] as usize);
                if a != b {
                    orbits[a.max(b)] = a.min(b) as u8;
                }
            }
        }
    }

    fn record_automorphism(&mut self, from: &[u8; CAP], to: &[u8; CAP]) {
        let mut gamma = [0u8; CAP];
        for i in 0..self.n {
            gamma[from[i] as usize] = to[i];
        }
        self.generators.push(gamma);
    }

    fn leaf(&mut self, part: &Partition) -> usize {
        let n = self.n;
        let mut rows = self.scratch_rows;
        relabeled_rows(self.adj, n, &part.lab, &mut rows);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab: part.lab,
                rows,
                path: self.path.clone(),
            };
            self.best = Some(Leaf {
                lab: leaf.lab,
                rows: leaf.rows,
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return NO_JUMP;
        };
        if rows[..n] == first.rows[..n] {
            let (from, jump) = (first.lab, common_prefix(&self.path, &first.path));
            self.record_automorphism(&from, &part.lab);
            return jump;
        }
        let best = self.best.as_mut().expect("best set with first");
        match rows[..n].cmp(&best.rows[..n]) {
            Ordering::Equal => {
                let (from, jump) = (best.lab, common_prefix(&self.path, &best.path));
                self.record_automorphism(&from, &part.lab);
                jump
            }
            Ordering::Greater => {
                best.lab = part.lab;
                best.rows = rows;
                best.path.clone_from(&self.path);
                NO_JUMP
            }
            Ordering::Less => NO_JUMP,
        }
    }
}

/// Canonical labeling of raw adjacency rows: `lab[i]` is the original vertex
/// placed at canonical position `i`, `rows` the relabeled adjacency.
pub(crate) fn canonical_rows(adj: &[u64], lab: &mut [u8; CAP], rows: &mut [u64; CAP]) {
    let leaf = Search::new(adj).run();
    *lab = leaf.lab;
    *rows = leaf.rows;
}

/// Isomorphism-invariant representative of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub(crate) fn from_rows(rows: &[u64]) -> Self {
        CanonicalForm {
            rows: rows.to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.graph().edges().collect()
    }

    pub fn graph(&self) -> Graph {
        Graph::from_rows_unchecked(&self.rows)
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalLabeling {
    /// `order[i]` is the vertex of the input placed at canonical position `i`.
    pub order: Vec<usize>,
    pub form: CanonicalForm,
}

impl CanonicalLabeling {
    /// Map from input vertex to canonical position.
    pub fn position_of(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalLabeling {
    let n = g.n();
    let mut lab = [0u8; CAP];
    let mut rows = [0u64; CAP];
    canonical_rows(g.rows(), &mut lab, &mut rows);
    CanonicalLabeling {
        order: lab[..n].iter().map(|&v| v as usize).collect(),
        form: CanonicalForm::from_rows(&rows[..n]),
    }
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_form(g).form == canonical_form(h).form
}
