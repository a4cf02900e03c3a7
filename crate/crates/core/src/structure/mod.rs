//! Certificates for the structure of tight stable graphs.
//!
//! Every builder returns a [`Decomposition`] that has already passed
//! [`Decomposition::validate`] against the input graph. The validator only
//! looks at the certificate and the host, never at how it was built.

mod certificates;
mod embedding;
mod hall;
mod recognize;

use serde::{Deserialize, Serialize};

pub use certificates::{
    five_graph_decomposition, odd_cycle_matching_decomposition, perfect_matching_tight10,
    tight_decomposition, two_cycles_or_subdivision_decomposition,
};
pub use embedding::spanning_embedding;
pub use hall::{hall_matching, HallCertificate};
pub use recognize::{is_even_subdivision_k4, is_odd_cycle, K4Subdivision};

pub(crate) use recognize::cycle_order;

use crate::catalog::NamedGraph;
use crate::error::{Error, Result};
use crate::graph::{bit, Graph, Matching};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DecompositionKind {
    PerfectMatching,
    OddCyclePlusMatching,
    TwoOddCycles,
    EvenSubdivisionK4,
    NamedSpanning,
}

/// A certified spanning structure of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Decomposition {
    pub kind: DecompositionKind,
    /// Cyclically ordered vertex lists.
    pub cycle_vertices: Vec<Vec<usize>>,
    pub matching: Matching,
    pub subdivision: Option<K4Subdivision>,
    /// For `NamedSpanning`: host vertex of each vertex of the named graph.
    pub embedding: Option<Vec<usize>>,
    pub name: Option<NamedGraph>,
}

impl Decomposition {
    pub(crate) fn new(kind: DecompositionKind) -> Self {
        Decomposition {
            kind,
            cycle_vertices: Vec::new(),
            matching: Matching::default(),
            subdivision: None,
            embedding: None,
            name: None,
        }
    }

    /// Checks that the certificate is a spanning structure of `host` of the
    /// declared kind.
    pub fn validate(&self, host: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidCertificate(msg));
        let mut covered = 0u64;
        let mut claim = |v: usize, covered: &mut u64| -> Result<()> {
            if v >= host.n() {
                return Err(Error::InvalidCertificate(format!("vertex {v} out of range")));
            }
            if *covered & bit(v) != 0 {
                return Err(Error::InvalidCertificate(format!("vertex {v} used twice")));
            }
            *covered |= bit(v);
            Ok(())
        };

        let expected_cycles = match self.kind {
            DecompositionKind::OddCyclePlusMatching => 1,
            DecompositionKind::TwoOddCycles => 2,
            _ => 0,
        };
        if self.cycle_vertices.len() != expected_cycles {
            return fail(format!(
                "{:?} needs {expected_cycles} cycles, found {}",
                self.kind,
                self.cycle_vertices.len()
            ));
        }
        for cycle in &self.cycle_vertices {
            if cycle.len() < 3 || cycle.len() % 2 == 0 {
                return fail(format!("cycle of length {} is not odd", cycle.len()));
            }
            for (i, &v) in cycle.iter().enumerate() {
                claim(v, &mut covered)?;
                let w = cycle[(i + 1) % cycle.len()];
                if !host.has_edge(v, w) {
                    return fail(format!("cycle edge {v}-{w} missing from host"));
                }
            }
        }

        self.matching.validate(host)?;
        let matching_allowed = matches!(
            self.kind,
            DecompositionKind::PerfectMatching | DecompositionKind::OddCyclePlusMatching
        );
        if !matching_allowed && !self.matching.is_empty() {
            return fail(format!("{:?} carries a matching", self.kind));
        }
        for e in &self.matching.edges {
            claim(e.u, &mut covered)?;
            claim(e.v, &mut covered)?;
        }

        match self.kind {
            DecompositionKind::EvenSubdivisionK4 => {
                let Some(sub) = &self.subdivision else {
                    return fail("missing subdivision structure".into());
                };
                validate_subdivision(sub, host, &mut covered, &mut claim)?;
            }
            DecompositionKind::NamedSpanning => {
                let (Some(name), Some(image)) = (self.name, &self.embedding) else {
                    return fail("named embedding missing name or map".into());
                };
                let target = name.graph();
                if image.len() != target.n() {
                    return fail(format!("{name} has {} vertices, map has {}", target.n(), image.len()));
                }
                for &v in image {
                    claim(v, &mut covered)?;
                }
                let bad = target.edges().find(|e| !host.has_edge(image[e.u], image[e.v]));
                if let Some(e) = bad {
                    return fail(format!("{name} edge {e} maps to a non-edge"));
                }
            }
            _ => {}
        }

        if covered != host.vertex_mask() {
            return fail(format!(
                "certificate is not spanning: {} of {} vertices covered",
                covered.count_ones(),
                host.n()
            ));
        }
        Ok(())
    }
}

fn validate_subdivision(
    sub: &K4Subdivision,
    host: &Graph,
    covered: &mut u64,
    claim: &mut impl FnMut(usize, &mut u64) -> Result<()>,
) -> Result<()> {
    let fail = |msg: String| Err(Error::InvalidCertificate(msg));
    for &b in &sub.branch {
        claim(b, covered)?;
    }
    if sub.paths.len() != 6 {
        return fail(format!("{} branch paths, expected 6", sub.paths.len()));
    }
    let mut pairs = Vec::with_capacity(6);
    for path in &sub.paths {
        if path.len() < 2 {
            return fail("branch path too short".into());
        }
        let (a, b) = (path[0], path[path.len() - 1]);
        if !sub.branch.contains(&a) || !sub.branch.contains(&b) || a == b {
            return fail(format!("branch path {a}..{b} does not join two branch vertices"));
        }
        pairs.push((a.min(b), a.max(b)));
        if (path.len() - 2) % 2 == 1 {
            return fail(format!("branch path {a}..{b} has an odd number of internal vertices"));
        }
        for &v in &path[1..path.len() - 1] {
            claim(v, covered)?;
        }
        if let Some(w) = path.windows(2).find(|w| !host.has_edge(w[0], w[1])) {
            return fail(format!("path edge {}-{} missing from host", w[0], w[1]));
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    if pairs.len() != 6 {
        return fail("branch paths do not join all six pairs".into());
    }
    Ok(())
}
