//! Exhaustive checks of the structural theorems about stable graphs.
//!
//! Each pipeline selects graphs with a filter and then runs a check on every
//! match, usually the certificate construction the theorem promises. A
//! failed check is a counterexample.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{provenance, stability_pairs, AtlasRecord, Filter, Levels, Predicate, MAX_ENUMERATION_ORDER};
use crate::critical::classify_defect;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::independence::{alpha, independent_sets_of_size};
use crate::structure::{
    five_graph_decomposition, hall_matching, is_even_subdivision_k4, is_odd_cycle, odd_cycle_matching_decomposition,
    perfect_matching_tight10, two_cycles_or_subdivision_decomposition, HallCertificate,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum TheoremId {
    /// Tight (1,0), even n: perfect matching.
    T1a,
    /// Tight (1,0), odd n: spanning odd cycle plus matching.
    T1b,
    /// Tight (2,0), odd n: odd cycle.
    T1c,
    /// Tight (2,0), even n: two odd cycles or an even subdivision of K4.
    T1d,
    /// Tight (3,0): spanning K4, K5, H7, H9 or T9.
    T2,
    /// Tight (k,0) with k ≥ 3: at most k + 6 vertices.
    Cor,
    /// (1,0)-stable: every maximum independent set matches into the rest.
    L21,
    /// Connected α-critical with n = 2α + 2: even subdivision of K4.
    And,
    /// Connected α-critical with n = 2α + 3 and minimum degree ≥ 3: one of
    /// K5, H7, H9, T9.
    Sur,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::T1a,
        TheoremId::T1b,
        TheoremId::T1c,
        TheoremId::T1d,
        TheoremId::T2,
        TheoremId::Cor,
        TheoremId::L21,
        TheoremId::And,
        TheoremId::Sur,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1a => "T1a",
            TheoremId::T1b => "T1b",
            TheoremId::T1c => "T1c",
            TheoremId::T1d => "T1d",
            TheoremId::T2 => "T2",
            TheoremId::Cor => "COR",
            TheoremId::L21 => "L21",
            TheoremId::And => "AND",
            TheoremId::Sur => "SUR",
        }
    }

    /// The tight (k,0) class the pipeline scans, if any.
    fn tight_k(self, k: usize) -> Option<usize> {
        match self {
            TheoremId::T1a | TheoremId::T1b => Some(1),
            TheoremId::T1c | TheoremId::T1d => Some(2),
            TheoremId::T2 => Some(3),
            TheoremId::Cor => Some(k),
            _ => None,
        }
    }

    fn predicates(self, k: usize) -> Vec<Predicate> {
        use Predicate::*;
        match self {
            TheoremId::L21 => vec![Stable { k: 1, l: 0 }],
            TheoremId::And => vec![Connected, Defect(2), AlphaCritical],
            TheoremId::Sur => vec![Connected, MinDegree(3), Defect(3), AlphaCritical],
            t => vec![Tight { k: t.tight_k(k).expect("tight pipeline"), l: 0 }],
        }
    }

    fn covers_order(self, n: usize, k: usize) -> bool {
        let odd = n % 2 == 1;
        match self {
            TheoremId::T1a => !odd && n >= 2,
            TheoremId::T1b | TheoremId::T1c => odd && n >= 3,
            TheoremId::T1d => !odd && n >= 4,
            TheoremId::T2 => n >= 4,
            TheoremId::Cor => n > k,
            TheoremId::L21 => n >= 2,
            TheoremId::And => !odd && n >= 4,
            TheoremId::Sur => odd && n >= 5,
        }
    }

    /// Whether `g`, already known to match, satisfies the conclusion.
    fn holds(self, g: &Graph, k: usize) -> bool {
        match self {
            TheoremId::T1a => perfect_matching_tight10(g).is_ok(),
            TheoremId::T1b => odd_cycle_matching_decomposition(g).is_ok(),
            TheoremId::T1c => is_odd_cycle(g),
            TheoremId::T1d => two_cycles_or_subdivision_decomposition(g).is_ok(),
            TheoremId::T2 => five_graph_decomposition(g).is_ok(),
            TheoremId::Cor => g.n() <= k + 6,
            TheoremId::L21 => {
                let a = alpha(g).alpha;
                independent_sets_of_size(g, a).all(|set| {
                    matches!(hall_matching(g, set), Ok(HallCertificate::Matching(m)) if m.len() == a)
                })
            }
            TheoremId::And => is_even_subdivision_k4(g).is_some(),
            TheoremId::Sur => classify_defect(g).is_ok_and(|c| c.classification.named().is_some()),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl TryFrom<String> for TheoremId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<TheoremId> for String {
    fn from(t: TheoremId) -> String {
        t.name().to_string()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    pub n_min: usize,
    pub n_max: usize,
    /// Only for `COR`; defaults to 3.
    pub k: Option<usize>,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Required to scan order 10.
    pub extended: bool,
    /// Hereditary prune; only for the tight (k,0) pipelines.
    pub prune: bool,
    /// Stop after this many graphs, giving a partial verdict.
    pub max_graphs: Option<u64>,
}

impl VerifyParams {
    pub fn new(n_min: usize, n_max: usize) -> Self {
        VerifyParams {
            n_min,
            n_max,
            k: None,
            jobs: 0,
            extended: false,
            prune: false,
            max_graphs: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ParameterRange {
    pub n_min: usize,
    pub n_max: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// Orders in the range the theorem speaks about, i.e. those scanned.
    pub orders: Vec<usize>,
    pub extended: bool,
    pub prune: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_graphs: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Verified,
    Refuted,
    Partial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct VerificationReport {
    pub theorem_id: TheoremId,
    pub parameter_range: ParameterRange,
    pub graphs_scanned: u64,
    pub matches: Vec<String>,
    pub counterexamples: Vec<String>,
    pub verdict: Verdict,
}

fn check_params(theorem: TheoremId, p: &VerifyParams) -> Result<usize> {
    if p.n_min == 0 || p.n_min > p.n_max {
        return Err(Error::Range(format!("empty order range {}..={}", p.n_min, p.n_max)));
    }
    if p.n_max > MAX_ENUMERATION_ORDER {
        return Err(Error::Range(format!(
            "order {} exceeds the enumeration cap {MAX_ENUMERATION_ORDER}",
            p.n_max
        )));
    }
    if p.n_max == MAX_ENUMERATION_ORDER && !p.extended {
        return Err(Error::Range(format!(
            "order {MAX_ENUMERATION_ORDER} is an extended run and must be requested as such"
        )));
    }
    let k = match (theorem, p.k) {
        (TheoremId::Cor, None) => 3,
        (TheoremId::Cor, Some(k)) if k >= 3 => k,
        (TheoremId::Cor, Some(k)) => {
            return Err(Error::Range(format!("COR needs k >= 3, got {k}")));
        }
        (_, Some(_)) => {
            return Err(Error::Precondition(format!("k is fixed for {theorem}")));
        }
        (_, None) => 0,
    };
    if p.prune && theorem.tight_k(k).is_none() {
        return Err(Error::Precondition(format!("{theorem} does not scan a tight (k,0) class")));
    }
    Ok(k)
}

/// Scans every order of the range and checks the theorem on each match.
pub fn verify_theorem(theorem: TheoremId, params: &VerifyParams) -> Result<VerificationReport> {
    run(theorem, params, None)
}

/// As [`verify_theorem`], also handing an atlas record of each match to
/// `sink` in scan order.
pub fn verify_theorem_with(
    theorem: TheoremId,
    params: &VerifyParams,
    mut sink: impl FnMut(AtlasRecord),
) -> Result<VerificationReport> {
    run(theorem, params, Some(&mut sink))
}

enum Seen {
    Miss,
    Hit {
        g6: String,
        holds: bool,
        record: Option<Result<AtlasRecord>>,
    },
}

fn run(theorem: TheoremId, params: &VerifyParams, mut sink: Option<&mut dyn FnMut(AtlasRecord)>) -> Result<VerificationReport> {
    let k = check_params(theorem, params)?;
    let mut filter = Filter::new(theorem.predicates(k));
    if params.prune {
        filter = filter.with_prune()?;
    }
    let orders: Vec<usize> = (params.n_min..=params.n_max).filter(|&n| theorem.covers_order(n, k)).collect();
    let pairs = stability_pairs(&filter);
    let prov = provenance(theorem.name(), &filter);
    let want_records = sink.is_some();

    let mut levels = Levels::new(params.jobs)?;
    let mut scanned = 0u64;
    let mut truncated = false;
    let mut matches = Vec::new();
    let mut counterexamples = Vec::new();
    let mut first_error = None;
    for &n in &orders {
        if truncated {
            break;
        }
        let map = |g: Graph| {
            if !filter.accepts(&g) {
                return Seen::Miss;
            }
            Seen::Hit {
                g6: write_graph6(&g).expect("enumerated orders fit graph6"),
                holds: theorem.holds(&g, k),
                record: want_records.then(|| AtlasRecord::new(&g, &pairs, prov.clone())),
            }
        };
        levels.scan(n, &filter, map, |seen| {
            if params.max_graphs.is_some_and(|cap| scanned >= cap) {
                truncated = true;
                return false;
            }
            scanned += 1;
            if let Seen::Hit { g6, holds, record } = seen {
                if holds {
                    matches.push(g6);
                } else {
                    counterexamples.push(g6);
                }
                match (record, sink.as_mut()) {
                    (Some(Ok(r)), Some(sink)) => sink(r),
                    (Some(Err(e)), _) => {
                        first_error.get_or_insert(e);
                    }
                    _ => {}
                }
            }
            true
        });
    }
    if let Some(e) = first_error {
        return Err(e);
    }
    let verdict = if !counterexamples.is_empty() {
        Verdict::Refuted
    } else if truncated {
        Verdict::Partial
    } else {
        Verdict::Verified
    };
    Ok(VerificationReport {
        theorem_id: theorem,
        parameter_range: ParameterRange {
            n_min: params.n_min,
            n_max: params.n_max,
            k: (theorem == TheoremId::Cor).then_some(k),
            orders,
            extended: params.extended,
            prune: params.prune,
            max_graphs: params.max_graphs,
        },
        graphs_scanned: scanned,
        matches,
        counterexamples,
        verdict,
    })
}
