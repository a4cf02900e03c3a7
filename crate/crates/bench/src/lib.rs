//! Shared inputs for the criterion benchmarks.

use stabilitylab_core::generators::{cycle, even_subdivision_k4};
use stabilitylab_core::{Graph, NamedGraph};

/// Graphs with a mix of symmetry and size, each labeled for reporting.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("C9", cycle(9).unwrap()),
        ("H7", NamedGraph::H7.graph()),
        ("H9", NamedGraph::H9.graph()),
        ("T9", NamedGraph::T9.graph()),
        ("subdivided-K4-12", even_subdivision_k4([2, 2, 2, 2, 0, 0]).unwrap()),
        ("C31", cycle(31).unwrap()),
    ]
}
