//! Constructive versions of the structural statements about tight
//! (k,0)-stable graphs for k = 1, 2, 3.

use crate::catalog::NamedGraph;
use crate::critical::{classify_defect, critical_reduce};
use crate::error::{Error, Result};
use crate::graph::{bit, low_mask, Bits, Edge, Graph, Matching, VertexSet};
use crate::independence::alpha;
use crate::stability::is_tight_stable;

use super::{
    cycle_order, hall_matching, is_even_subdivision_k4, is_odd_cycle, spanning_embedding,
    Decomposition, DecompositionKind, HallCertificate,
};

fn require_tight(g: &Graph, k: usize, parity_odd: bool) -> Result<()> {
    let parity = if parity_odd { "odd" } else { "even" };
    if g.n() % 2 != parity_odd as usize {
        return Err(Error::Precondition(format!("expected {parity} n, got n={}", g.n())));
    }
    if !is_tight_stable(g, k, 0)? {
        return Err(Error::Precondition(format!("graph is not tight ({k},0)-stable")));
    }
    Ok(())
}

fn validated(d: Decomposition, host: &Graph) -> Result<Decomposition> {
    d.validate(host)
        .map_err(|e| Error::Internal(format!("constructed certificate rejected: {e}")))?;
    Ok(d)
}

/// Perfect matching of a tight (1,0)-stable graph of even order: a maximum
/// independent set has n/2 vertices and Hall's condition holds from it.
pub fn perfect_matching_tight10(g: &Graph) -> Result<Matching> {
    require_tight(g, 1, false)?;
    let a = alpha(g).witness;
    match hall_matching(g, a)? {
        HallCertificate::Matching(m) if 2 * m.len() == g.n() => Ok(m),
        other => Err(Error::Internal(format!(
            "independent set {a:?} of a tight (1,0)-stable graph has no perfect matching: {other:?}"
        ))),
    }
}

/// Spanning odd cycle plus matching of a tight (1,0)-stable graph of odd
/// order.
///
/// With a maximum independent set `A = {a_i}`, a Hall matching `a_i b_i` and
/// the leftover vertex `c`, an alternating search from `c` (non-matching edge
/// into some `a_i`, matching edge on to `b_i`) reaches a set of pairs. No
/// unreached `a_i` sees `c` or a reached `b_j`, so maximality of `A` forces an
/// edge among `c` and the reached `b_j`. That edge closes an odd cycle in the
/// search tree; the tree path above the cycle pairs off along tree edges and
/// every other pair keeps its matching edge.
pub fn odd_cycle_matching_decomposition(g: &Graph) -> Result<Decomposition> {
    require_tight(g, 1, true)?;
    let n = g.n();
    let a_set = alpha(g).witness;
    let matching = match hall_matching(g, a_set)? {
        HallCertificate::Matching(m) => m,
        HallCertificate::Violator(z) => {
            return Err(Error::Internal(format!("Hall violator {z:?} in a (1,0)-stable graph")))
        }
    };
    let mut mate = [usize::MAX; 64];
    for e in &matching.edges {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
    }
    let matched = matching.covered().mask();
    let c = (g.vertex_mask() & !matched).trailing_zeros() as usize;
    debug_assert_eq!((g.vertex_mask() & !matched).count_ones(), 1);

    // alternating search tree rooted at c
    let mut parent = [usize::MAX; 64];
    let mut depth = [0usize; 64];
    let mut in_tree = bit(c);
    let mut frontier_set = bit(c);
    let mut queue = std::collections::VecDeque::from([c]);
    while let Some(x) = queue.pop_front() {
        for a in Bits(g.nbr_mask(x) & a_set.mask() & !in_tree) {
            let b = mate[a];
            parent[a] = x;
            parent[b] = a;
            depth[a] = depth[x] + 1;
            depth[b] = depth[x] + 2;
            in_tree |= bit(a) | bit(b);
            frontier_set |= bit(b);
            queue.push_back(b);
        }
    }

    let closing = Bits(frontier_set)
        .find_map(|x| {
            let above = g.nbr_mask(x) & frontier_set & !low_mask(x + 1);
            (above != 0).then(|| (x, above.trailing_zeros() as usize))
        })
        .ok_or_else(|| {
            Error::Internal("no edge among the leftover vertex and reached partners".into())
        })?;

    let root_path = |mut v: usize| {
        let mut path = vec![v];
        while v != c {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        path
    };
    let (x, y) = closing;
    let px = root_path(x);
    let py = root_path(y);
    let shared = px.iter().zip(&py).take_while(|(p, q)| p == q).count();
    let lca_index = shared - 1;

    let mut cycle: Vec<usize> = px[lca_index..].to_vec();
    cycle.extend(py[shared..].iter().rev());

    let mut certificate = Decomposition::new(DecompositionKind::OddCyclePlusMatching);
    let mut used = cycle.iter().fold(0u64, |acc, &v| acc | bit(v));
    let prefix = &px[..lca_index];
    for pair in prefix.chunks(2) {
        let [u, v] = pair else {
            return Err(Error::Internal("odd-length tree prefix above the cycle".into()));
        };
        certificate.matching.edges.push(Edge::new(*u, *v)?);
        used |= bit(*u) | bit(*v);
    }
    for e in &matching.edges {
        if used & (bit(e.u) | bit(e.v)) == 0 {
            certificate.matching.edges.push(*e);
            used |= bit(e.u) | bit(e.v);
        }
    }
    certificate.matching.edges.sort();
    certificate.cycle_vertices.push(cycle);
    debug_assert_eq!(used.count_ones() as usize, n);
    validated(certificate, g)
}

/// Two disjoint odd cycles or an even subdivision of K4, spanning a tight
/// (2,0)-stable graph of even order. Read off an α-critical spanning kernel,
/// which has at most two components.
pub fn two_cycles_or_subdivision_decomposition(g: &Graph) -> Result<Decomposition> {
    require_tight(g, 2, false)?;
    let kernel = critical_reduce(g).kernel;
    let components = kernel.components();
    let certificate = match components.as_slice() {
        [_] => {
            let sub = is_even_subdivision_k4(&kernel).ok_or_else(|| {
                Error::Internal(format!("connected kernel {kernel:?} is not an even subdivision of K4"))
            })?;
            let mut d = Decomposition::new(DecompositionKind::EvenSubdivisionK4);
            d.subdivision = Some(sub);
            d
        }
        [first, second] => {
            let mut d = Decomposition::new(DecompositionKind::TwoOddCycles);
            for comp in [first, second] {
                let (part, _) = kernel.induced(*comp)?;
                if !is_odd_cycle(&part) {
                    return Err(Error::Internal(format!(
                        "kernel component {comp:?} is not an odd cycle"
                    )));
                }
                d.cycle_vertices.push(cycle_order(&kernel, comp.mask()));
            }
            d
        }
        more => {
            return Err(Error::Internal(format!("kernel has {} components", more.len())));
        }
    };
    validated(certificate, g)
}

/// Spanning copy of one of K4, K5, H7, H9, T9 in a tight (3,0)-stable graph.
///
/// Even order: every vertex deletion is tight (2,0)-stable of odd order,
/// hence an odd cycle, which only K4 satisfies. Odd order: the α-critical
/// kernel is connected with `n = 2α + 3` and minimum degree at least 3, and is
/// identified by isomorphism.
pub fn five_graph_decomposition(g: &Graph) -> Result<Decomposition> {
    if !is_tight_stable(g, 3, 0)? {
        return Err(Error::Precondition("graph is not tight (3,0)-stable".into()));
    }
    let (name, host_for_search) = if g.n() % 2 == 0 {
        for v in 0..g.n() {
            let (rest, _) = g.delete_vertices(VertexSet::from_mask(bit(v)))?;
            if !is_odd_cycle(&rest) {
                return Err(Error::Internal(format!("deleting {v} leaves a non-cycle")));
            }
        }
        (NamedGraph::K4, g.clone())
    } else {
        let kernel = critical_reduce(g).kernel;
        let class = classify_defect(&kernel)
            .map_err(|e| Error::Internal(format!("kernel outside the defect-3 hypotheses: {e}")))?;
        let name = class.classification.named().ok_or_else(|| {
            Error::Internal(format!("kernel {kernel:?} classified as {:?}", class.classification))
        })?;
        (name, kernel)
    };
    let embedding = spanning_embedding(&host_for_search, &name.graph())
        .ok_or_else(|| Error::Internal(format!("no spanning {name} found")))?;
    let mut d = Decomposition::new(DecompositionKind::NamedSpanning);
    d.embedding = Some(embedding);
    d.name = Some(name);
    validated(d, g)
}

/// The certificate a tight (k,0)-stable graph carries, for `k ≤ 3`.
pub fn tight_decomposition(g: &Graph, k: usize) -> Result<Decomposition> {
    match (k, g.n() % 2) {
        (1, 0) => {
            let mut d = Decomposition::new(DecompositionKind::PerfectMatching);
            d.matching = perfect_matching_tight10(g)?;
            validated(d, g)
        }
        (1, _) => odd_cycle_matching_decomposition(g),
        (2, 0) => two_cycles_or_subdivision_decomposition(g),
        (2, _) => {
            require_tight(g, 2, true)?;
            if !is_odd_cycle(g) {
                return Err(Error::Internal(format!("odd tight (2,0)-stable graph {g:?} is not a cycle")));
            }
            let mut d = Decomposition::new(DecompositionKind::OddCyclePlusMatching);
            d.cycle_vertices.push(cycle_order(g, g.vertex_mask()));
            validated(d, g)
        }
        (3, _) => five_graph_decomposition(g),
        _ => Err(Error::Precondition(format!("no certificate is known for k={k}"))),
    }
}
