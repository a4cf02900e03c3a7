//! Independence-number stability of graphs.
//!
//! A graph is (k,ℓ)-stable when deleting any k vertices lowers its
//! independence number by at most ℓ, and tight when α meets the upper bound
//! ⌊(n−k+1)/2⌋+ℓ. This crate computes α exactly, decides stability, builds
//! the structural certificates tight graphs are known to carry, and checks
//! the classification of tight (k,0)-stable graphs for k ≤ 3 over every
//! graph of a given order.

pub mod canon;
pub mod catalog;
pub mod critical;
pub mod enumeration;
mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod independence;
pub mod stability;
pub mod structure;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, CanonicalLabeling};
pub use catalog::NamedGraph;
pub use critical::{
    classify_defect, critical_reduce, defect, is_alpha_critical, Classification, CriticalCheck,
    CriticalKernel, DefectClass,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, Matching, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, write_graph6};
pub use independence::{alpha, alpha_after_single_removals, independent_sets_of_size, AlphaResult};
pub use stability::{
    is_stable, is_tight_stable, min_degree_necessary, stability_bound, DegreeCheck, StabilityReport,
};
pub use structure::{Decomposition, DecompositionKind, HallCertificate, K4Subdivision};

/// Toolkit version recorded in persisted output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
