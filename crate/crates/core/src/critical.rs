//! α-critical graphs: every edge deletion raises the independence number.

use serde::{Deserialize, Serialize};

use crate::canon::is_isomorphic;
use crate::catalog::NamedGraph;
use crate::error::{Error, Result};
use crate::graph::{bit, Edge, Graph};
use crate::independence::{alpha_within, has_independent_set};
use crate::structure::{is_even_subdivision_k4, is_odd_cycle};

/// Whether deleting `e` raises α above `alpha`. A larger independent set of
/// `G − uv` must contain both u and v, so this asks for `alpha − 1`
/// independent vertices outside `N[u] ∪ N[v]`.
pub(crate) fn edge_is_critical(adj: &[u64], all: u64, alpha: usize, e: Edge) -> bool {
    let outside = all & !(adj[e.u] | adj[e.v] | bit(e.u) | bit(e.v));
    has_independent_set(adj, outside, alpha.saturating_sub(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalCheck {
    pub critical: bool,
    /// First edge (lexicographically) whose deletion keeps α.
    pub witness: Option<Edge>,
}

pub fn is_alpha_critical(g: &Graph) -> CriticalCheck {
    let (alpha, _) = alpha_within(g.rows(), g.vertex_mask());
    let witness = g
        .edges()
        .find(|&e| !edge_is_critical(g.rows(), g.vertex_mask(), alpha, e));
    CriticalCheck {
        critical: witness.is_none(),
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalKernel {
    /// Spanning α-critical subgraph with the same α as the input.
    pub kernel: Graph,
    /// Deleted edges, in deletion order.
    pub removed: Vec<Edge>,
}

/// Greedily deletes the lexicographically smallest edge whose deletion
/// preserves α until none is left.
pub fn critical_reduce(g: &Graph) -> CriticalKernel {
    let (alpha, _) = alpha_within(g.rows(), g.vertex_mask());
    let all = g.vertex_mask();
    let mut adj = g.rows().to_vec();
    let mut removed = Vec::new();
    // An edge that is critical stays critical after later deletions, so a
    // single lexicographic pass equals rescanning from the start.
    for e in g.edges().collect::<Vec<_>>() {
        if !edge_is_critical(&adj, all, alpha, e) {
            adj[e.u] &= !bit(e.v);
            adj[e.v] &= !bit(e.u);
            removed.push(e);
        }
    }
    CriticalKernel {
        kernel: Graph::from_rows_unchecked(&adj),
        removed,
    }
}

/// `n − 2α(G)`.
pub fn defect(g: &Graph) -> i64 {
    let (alpha, _) = alpha_within(g.rows(), g.vertex_mask());
    g.n() as i64 - 2 * alpha as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    OddCycle,
    EvenSubdivisionK4,
    K5,
    H7,
    H9,
    T9,
    Other,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::OddCycle => "OddCycle",
            Classification::EvenSubdivisionK4 => "EvenSubdivisionK4",
            Classification::K5 => "K5",
            Classification::H7 => "H7",
            Classification::H9 => "H9",
            Classification::T9 => "T9",
            Classification::Other => "Other",
        }
    }

    pub fn named(self) -> Option<NamedGraph> {
        match self {
            Classification::K5 => Some(NamedGraph::K5),
            Classification::H7 => Some(NamedGraph::H7),
            Classification::H9 => Some(NamedGraph::H9),
            Classification::T9 => Some(NamedGraph::T9),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectClass {
    pub defect: i64,
    pub classification: Classification,
}

/// Classifies a connected α-critical graph of defect 1, 2 or 3 (the latter
/// with minimum degree at least 3). Anything else is `Other`.
pub fn classify_defect(g: &Graph) -> Result<DefectClass> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if let Some(e) = is_alpha_critical(g).witness {
        return Err(Error::Precondition(format!(
            "graph is not alpha-critical: deleting {e} keeps alpha"
        )));
    }
    let defect = defect(g);
    let classification = match defect {
        1 if is_odd_cycle(g) => Classification::OddCycle,
        2 if is_even_subdivision_k4(g).is_some() => Classification::EvenSubdivisionK4,
        3 if g.min_degree() >= 3 => [
            (NamedGraph::K5, Classification::K5),
            (NamedGraph::H7, Classification::H7),
            (NamedGraph::H9, Classification::H9),
            (NamedGraph::T9, Classification::T9),
        ]
        .into_iter()
        .find(|(named, _)| is_isomorphic(g, &named.graph()))
        .map_or(Classification::Other, |(_, c)| c),
        _ => Classification::Other,
    };
    Ok(DefectClass {
        defect,
        classification,
    })
}
