//! The named graphs that appear as spanning subgraphs of tight
//! (3,0)-stable graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::generators::clique;
use crate::graph::Graph;

pub const H7_EDGES: [(usize, usize); 11] = [
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (2, 6), (3, 5), (3, 6), (4, 6), (5, 6),
];

/// Labeling: `L0..L3 = 0..3`, `R0..R3 = 4..7`, `M = 8`.
pub const H9_EDGES: [(usize, usize); 14] = [
    (0, 3), (0, 4), (0, 5), (1, 2), (1, 4), (1, 5), (2, 3),
    (2, 8), (3, 8), (4, 7), (5, 6), (6, 7), (6, 8), (7, 8),
];

/// Outer triangle `0,1,2`, inner hexagon `3..8`, two spokes per corner.
pub const T9_EDGES: [(usize, usize); 15] = [
    (0, 1), (1, 2), (0, 2),
    (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 3),
    (0, 7), (0, 4), (1, 3), (1, 6), (2, 8), (2, 5),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum NamedGraph {
    K4,
    K5,
    H7,
    H9,
    T9,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 5] = [
        NamedGraph::K4,
        NamedGraph::K5,
        NamedGraph::H7,
        NamedGraph::H9,
        NamedGraph::T9,
    ];

    pub fn graph(self) -> Graph {
        let built = match self {
            NamedGraph::K4 => clique(4),
            NamedGraph::K5 => clique(5),
            NamedGraph::H7 => Graph::from_edges(7, H7_EDGES),
            NamedGraph::H9 => Graph::from_edges(9, H9_EDGES),
            NamedGraph::T9 => Graph::from_edges(9, T9_EDGES),
        };
        built.expect("catalog adjacency is valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::K4 => "K4",
            NamedGraph::K5 => "K5",
            NamedGraph::H7 => "H7",
            NamedGraph::H9 => "H9",
            NamedGraph::T9 => "T9",
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown named graph {s:?}")))
    }
}
