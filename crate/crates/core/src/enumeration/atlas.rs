//! Line-delimited JSON records of enumerated graphs.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::critical::{classify_defect, defect, is_alpha_critical};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::independence::alpha;
use crate::stability::{is_stable, is_tight_stable};
use crate::VERSION;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FlagValue {
    Bool(bool),
    Int(i64),
    Text(String),
}

/// Where a record came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct Provenance {
    pub toolkit: String,
    pub version: String,
    /// `enumerate` or the theorem being verified.
    pub source: String,
    pub filters: Vec<String>,
    pub prune: bool,
}

impl Provenance {
    pub fn new(source: impl Into<String>, filters: Vec<String>, prune: bool) -> Self {
        Provenance {
            toolkit: "stabilitylab".into(),
            version: VERSION.into(),
            source: source.into(),
            filters,
            prune,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AtlasRecord {
    pub g6: String,
    pub n: usize,
    pub alpha: usize,
    pub flags: BTreeMap<String, FlagValue>,
    pub provenance: Provenance,
}

fn stable_key(k: usize, l: usize) -> String {
    format!("stable_{k}_{l}")
}

fn tight_key(k: usize, l: usize) -> String {
    format!("tight_{k}_{l}")
}

/// Flags of `g`: the fixed set plus stability and tightness for each pair.
pub fn compute_flags(g: &Graph, pairs: &[(usize, usize)]) -> BTreeMap<String, FlagValue> {
    let mut flags = BTreeMap::new();
    let connected = g.is_connected();
    let critical = is_alpha_critical(g).critical;
    flags.insert("connected".into(), FlagValue::Bool(connected));
    flags.insert("alphaCritical".into(), FlagValue::Bool(critical));
    flags.insert("minDegree".into(), FlagValue::Int(g.min_degree() as i64));
    flags.insert("defect".into(), FlagValue::Int(defect(g)));
    if connected && critical {
        if let Ok(class) = classify_defect(g) {
            flags.insert("classification".into(), FlagValue::Text(class.classification.name().into()));
        }
    }
    for &(k, l) in pairs {
        let stable = is_stable(g, k, l).is_ok_and(|r| r.stable);
        let tight = is_tight_stable(g, k, l).unwrap_or(false);
        flags.insert(stable_key(k, l), FlagValue::Bool(stable));
        flags.insert(tight_key(k, l), FlagValue::Bool(tight));
    }
    flags
}

/// Recovers the stability pairs a flag map was computed for.
fn flag_pairs(flags: &BTreeMap<String, FlagValue>) -> std::result::Result<Vec<(usize, usize)>, String> {
    const FIXED: [&str; 5] = ["connected", "alphaCritical", "minDegree", "defect", "classification"];
    let mut pairs = Vec::new();
    for key in flags.keys() {
        if FIXED.contains(&key.as_str()) {
            continue;
        }
        let parsed = key
            .strip_prefix("stable_")
            .or_else(|| key.strip_prefix("tight_"))
            .and_then(|rest| rest.split_once('_'))
            .and_then(|(k, l)| Some((k.parse().ok()?, l.parse().ok()?)));
        match parsed {
            Some(pair) => pairs.push(pair),
            None => return Err(format!("unknown flag {key:?}")),
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    Ok(pairs)
}

impl AtlasRecord {
    pub fn new(g: &Graph, pairs: &[(usize, usize)], provenance: Provenance) -> Result<Self> {
        Ok(AtlasRecord {
            g6: write_graph6(g)?,
            n: g.n(),
            alpha: alpha(g).alpha,
            flags: compute_flags(g, pairs),
            provenance,
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        parse_graph6(&self.g6)
    }

    /// Recomputes every stored property from the graph and compares.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let g = self.graph().map_err(|e| format!("bad g6: {e}"))?;
        if g.n() != self.n {
            return Err(format!("n is {} but g6 has {} vertices", self.n, g.n()));
        }
        let a = alpha(&g).alpha;
        if a != self.alpha {
            return Err(format!("alpha is {} but recomputes to {a}", self.alpha));
        }
        let expected = compute_flags(&g, &flag_pairs(&self.flags)?);
        if expected != self.flags {
            let key = expected
                .iter()
                .find(|(k, v)| self.flags.get(*k) != Some(v))
                .map(|(k, _)| k.clone())
                .or_else(|| self.flags.keys().find(|k| !expected.contains_key(*k)).cloned())
                .unwrap_or_default();
            return Err(format!("flag {key:?} does not match the graph"));
        }
        Ok(())
    }
}

/// One record per line, fields in declaration order.
pub fn write_record(out: &mut impl Write, record: &AtlasRecord) -> Result<()> {
    serde_json::to_writer(&mut *out, record)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn atlas_write(records: &[AtlasRecord], path: impl AsRef<Path>) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    for r in records {
        write_record(&mut out, r)?;
    }
    out.flush()?;
    Ok(())
}

/// Parses and validates one line; `line` is 1-based and only used in errors.
pub fn parse_record(text: &str, line: usize) -> Result<AtlasRecord> {
    let record: AtlasRecord = serde_json::from_str(text).map_err(|e| Error::Atlas {
        line,
        reason: e.to_string(),
    })?;
    record.validate().map_err(|reason| Error::Atlas { line, reason })?;
    Ok(record)
}

pub fn atlas_read(path: impl AsRef<Path>) -> Result<Vec<AtlasRecord>> {
    let reader = BufReader::new(File::open(path)?);
    let mut records = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        records.push(parse_record(&line?, i + 1)?);
    }
    Ok(records)
}
