use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Edge, Graph, Matching, VertexSet};

/// Either a matching saturating the independent set, or a set violating
/// Hall's condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HallCertificate {
    Matching(Matching),
    /// Inclusion-minimal `Z ⊆ A` with `|N(Z)| < |Z|`.
    Violator(VertexSet),
}

impl HallCertificate {
    pub fn matching(&self) -> Option<&Matching> {
        match self {
            HallCertificate::Matching(m) => Some(m),
            HallCertificate::Violator(_) => None,
        }
    }
}

struct Kuhn<'a> {
    adj: &'a [u64],
    mate_of_b: [Option<usize>; 64],
}

impl Kuhn<'_> {
    fn augment(&mut self, a: usize, visited: &mut u64) -> bool {
        for b in Bits(self.adj[a] & !*visited) {
            if *visited & bit(b) != 0 {
                continue;
            }
            *visited |= bit(b);
            let free = match self.mate_of_b[b] {
                None => true,
                Some(other) => self.augment(other, visited),
            };
            if free {
                self.mate_of_b[b] = Some(a);
                return true;
            }
        }
        false
    }
}

/// Augmenting-path matching of the independent set `side` into its
/// neighborhood. On failure returns the alternating-tree violator of the
/// first unmatchable vertex, which has exactly one more member than
/// neighbors.
fn match_side(adj: &[u64], side: u64) -> std::result::Result<Vec<Edge>, u64> {
    let mut kuhn = Kuhn {
        adj,
        mate_of_b: [None; 64],
    };
    for a in Bits(side) {
        let mut visited = 0u64;
        if !kuhn.augment(a, &mut visited) {
            let mates = Bits(visited).fold(0, |acc, b| acc | bit(kuhn.mate_of_b[b].expect("visited vertices are matched")));
            return Err(bit(a) | mates);
        }
    }
    let mut edges: Vec<Edge> = kuhn
        .mate_of_b
        .iter()
        .enumerate()
        .filter_map(|(b, m)| m.map(|a| Edge::new(a, b).expect("independent side has no loops")))
        .collect();
    edges.sort();
    Ok(edges)
}

/// Matching from the independent set `a` into `V ∖ A` saturating `a`, or an
/// inclusion-minimal Hall violator.
pub fn hall_matching(g: &Graph, a: VertexSet) -> Result<HallCertificate> {
    if a.mask() & !g.vertex_mask() != 0 {
        let vertex = (a.mask() & !g.vertex_mask()).trailing_zeros() as usize;
        return Err(Error::VertexOutOfRange { vertex, n: g.n() });
    }
    if !g.is_independent(a) {
        return Err(Error::NotIndependent);
    }
    let adj = g.rows();
    let mut violator = match match_side(adj, a.mask()) {
        Ok(edges) => return Ok(HallCertificate::Matching(Matching { edges })),
        Err(z) => z,
    };
    // Shrink until every one-smaller subset is matchable; then every proper
    // subset is, since subsets of matchable sets are matchable.
    'shrink: loop {
        for z in Bits(violator) {
            if let Err(smaller) = match_side(adj, violator & !bit(z)) {
                violator = smaller;
                continue 'shrink;
            }
        }
        break;
    }
    Ok(HallCertificate::Violator(VertexSet::from_mask(violator)))
}

/// `N(S)` as a mask.
#[cfg(test)]
fn neighborhood(g: &Graph, s: VertexSet) -> u64 {
    s.iter().fold(0, |acc, v| acc | g.nbr_mask(v))
}
