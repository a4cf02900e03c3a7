use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::critical::{defect, is_alpha_critical};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::stability::{is_stable, is_tight_stable};

/// A property a graph must have to be kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Predicate {
    Connected,
    MinDegree(usize),
    AlphaCritical,
    /// `n − 2α` equals the value.
    Defect(i64),
    Stable { k: usize, l: usize },
    Tight { k: usize, l: usize },
}

impl Predicate {
    /// Rough evaluation cost; filters run cheapest first.
    fn cost(self) -> u8 {
        match self {
            Predicate::MinDegree(_) => 0,
            Predicate::Connected => 1,
            Predicate::Defect(_) => 2,
            Predicate::Tight { .. } => 3,
            Predicate::Stable { .. } => 4,
            Predicate::AlphaCritical => 5,
        }
    }

    /// Stability predicates only make sense for `n > k`; on smaller graphs
    /// they are false.
    pub fn holds(self, g: &Graph) -> bool {
        match self {
            Predicate::Connected => g.is_connected(),
            Predicate::MinDegree(d) => g.min_degree() >= d,
            Predicate::AlphaCritical => is_alpha_critical(g).critical,
            Predicate::Defect(d) => defect(g) == d,
            Predicate::Stable { k, l } => is_stable(g, k, l).is_ok_and(|r| r.stable),
            Predicate::Tight { k, l } => is_tight_stable(g, k, l).unwrap_or(false),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Connected => write!(f, "connected"),
            Predicate::MinDegree(d) => write!(f, "min-degree={d}"),
            Predicate::AlphaCritical => write!(f, "alpha-critical"),
            Predicate::Defect(d) => write!(f, "defect={d}"),
            Predicate::Stable { k, l } => write!(f, "stable={k},{l}"),
            Predicate::Tight { k, l } => write!(f, "tight={k},{l}"),
        }
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("unknown predicate {s:?}"));
        let pair = |v: &str| -> Result<(usize, usize)> {
            let (k, l) = v.split_once(',').ok_or_else(bad)?;
            let k = k.trim().parse().map_err(|_| bad())?;
            let l = l.trim().parse().map_err(|_| bad())?;
            if k <= l {
                return Err(Error::Precondition(format!("{s:?} needs k > l")));
            }
            Ok((k, l))
        };
        let (name, value) = match s.split_once('=') {
            Some((name, value)) => (name.trim(), Some(value.trim())),
            None => (s.trim(), None),
        };
        match (name.to_ascii_lowercase().as_str(), value) {
            ("connected", None) => Ok(Predicate::Connected),
            ("alpha-critical", None) => Ok(Predicate::AlphaCritical),
            ("min-degree", Some(v)) => Ok(Predicate::MinDegree(v.parse().map_err(|_| bad())?)),
            ("defect", Some(v)) => Ok(Predicate::Defect(v.parse().map_err(|_| bad())?)),
            ("stable", Some(v)) => pair(v).map(|(k, l)| Predicate::Stable { k, l }),
            ("tight", Some(v)) => pair(v).map(|(k, l)| Predicate::Tight { k, l }),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Predicate {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Predicate> for String {
    fn from(p: Predicate) -> String {
        p.to_string()
    }
}

/// A conjunction of predicates, optionally with the hereditary prune.
///
/// Deleting a vertex from a tight (k,0)-stable graph leaves a tight
/// (k−1,0)-stable graph. Every graph the generator reaches on `n − j`
/// vertices is obtained by deleting `j` vertices from its descendants, so
/// with the prune on, ancestors on `n − j` vertices (`0 < j < k`) that are
/// not tight (k−j,0)-stable are cut along with their whole subtree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filter {
    predicates: Vec<Predicate>,
    prune: Option<usize>,
}

impl Filter {
    pub fn new(mut predicates: Vec<Predicate>) -> Self {
        predicates.sort_by_key(|&p| (p.cost(), p));
        predicates.dedup();
        Filter {
            predicates,
            prune: None,
        }
    }

    /// Turns on the hereditary prune, driven by the largest `k` among the
    /// tight (k,0) predicates.
    pub fn with_prune(mut self) -> Result<Self> {
        let k = self
            .predicates
            .iter()
            .filter_map(|p| match *p {
                Predicate::Tight { k, l: 0 } => Some(k),
                _ => None,
            })
            .max()
            .ok_or_else(|| Error::Precondition("the hereditary prune needs a tight (k,0) predicate".into()))?;
        self.prune = Some(k);
        Ok(self)
    }

    pub fn predicates(&self) -> &[Predicate] {
        &self.predicates
    }

    pub fn prune(&self) -> Option<usize> {
        self.prune
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.predicates.iter().all(|p| p.holds(g))
    }

    /// Whether a partial graph on `m` vertices may still have descendants on
    /// `n` vertices that pass.
    pub(crate) fn keeps_ancestor(&self, n: usize, m: usize, g: &Graph) -> bool {
        match self.prune {
            Some(k) if m < n && n - m < k && n > k => {
                is_tight_stable(g, k - (n - m), 0).unwrap_or(false)
            }
            _ => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::cycle;

    #[test]
    fn parse_round_trip() {
        for text in ["connected", "min-degree=3", "alpha-critical", "defect=-1", "stable=2,1", "tight=3,0"] {
            let p: Predicate = text.parse().unwrap();
            assert_eq!(p.to_string(), text);
        }
        for bad in ["", "tight=1,1", "stable=2", "degree=3", "connected=1"] {
            assert!(bad.parse::<Predicate>().is_err(), "{bad}");
        }
    }

    #[test]
    fn cheap_first() {
        let f = Filter::new(vec![Predicate::AlphaCritical, Predicate::Tight { k: 2, l: 0 }, Predicate::Connected]);
        assert_eq!(f.predicates()[0], Predicate::Connected);
        assert_eq!(f.predicates()[2], Predicate::AlphaCritical);
    }

    #[test]
    fn prune_needs_tight_zero() {
        assert!(Filter::new(vec![Predicate::Stable { k: 2, l: 0 }]).with_prune().is_err());
        let f = Filter::new(vec![Predicate::Tight { k: 3, l: 0 }]).with_prune().unwrap();
        assert_eq!(f.prune(), Some(3));
        // C7 is tight (2,0) so it may grow into a tight (3,0) graph on 8
        assert!(f.keeps_ancestor(8, 7, &cycle(7).unwrap()));
        let p7 = Graph::from_edges(7, (0..6).map(|i| (i, i + 1))).unwrap();
        assert!(!f.keeps_ancestor(8, 7, &p7));
        assert!(f.keeps_ancestor(8, 5, &Graph::empty(5).unwrap()));
    }

    #[test]
    fn small_graphs_fail_stability() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(!Predicate::Tight { k: 2, l: 0 }.holds(&k2));
        assert!(Predicate::Tight { k: 1, l: 0 }.holds(&k2));
    }
}
