//! Output payloads. Each command's result has a typed shape; a JSON value
//! conforms when it survives a round trip through that type unchanged.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use stabilitylab_core::critical::DefectClass;
use stabilitylab_core::enumeration::VerificationReport;
use stabilitylab_core::{Decomposition, Edge, StabilityReport};

pub const SCHEMA: &str = "stabilitylab-cli/1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct CliReport {
    pub schema: String,
    pub command: String,
    /// SHA-256 of the graph6 input, or of the parameters for commands
    /// without a graph.
    pub input_digest: String,
    pub version: String,
    pub result: Value,
}

impl CliReport {
    pub fn new(command: &str, digest_of: &str, result: impl Serialize) -> serde_json::Result<Self> {
        Ok(CliReport {
            schema: SCHEMA.into(),
            command: command.into(),
            input_digest: digest(digest_of),
            version: stabilitylab_core::VERSION.into(),
            result: serde_json::to_value(result)?,
        })
    }
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct AlphaOutput {
    pub n: usize,
    pub alpha: usize,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ReduceOutput {
    pub n: usize,
    pub alpha: usize,
    pub kernel: String,
    /// Edges removed, in removal order.
    pub removed: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ClassifyOutput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Decomposition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defect_class: Option<DefectClass>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ConstructOutput {
    pub family: String,
    pub n: usize,
    pub edges: usize,
    pub g6: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct EnumerateOutput {
    pub n: usize,
    pub filters: Vec<String>,
    pub prune: bool,
    pub graphs_scanned: u64,
    pub records: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub atlas: Option<String>,
}

fn round_trips<T: Serialize + DeserializeOwned>(value: &Value) -> Result<(), String> {
    let typed: T = serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
    let back = serde_json::to_value(&typed).map_err(|e| e.to_string())?;
    if &back == value {
        Ok(())
    } else {
        Err(format!("value changes on a round trip: {back}"))
    }
}

/// Checks a full report against the schema of its command.
pub fn validate(report: &Value) -> Result<(), String> {
    round_trips::<CliReport>(report)?;
    let report: CliReport = serde_json::from_value(report.clone()).map_err(|e| e.to_string())?;
    if report.schema != SCHEMA {
        return Err(format!("unknown schema {:?}", report.schema));
    }
    if report.input_digest.len() != 64 || !report.input_digest.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err("input digest is not a SHA-256 hex string".into());
    }
    let result = &report.result;
    match report.command.as_str() {
        "alpha" => round_trips::<AlphaOutput>(result),
        "check" => round_trips::<StabilityReport>(result),
        "reduce" => round_trips::<ReduceOutput>(result),
        "classify" => round_trips::<ClassifyOutput>(result),
        "construct" => round_trips::<ConstructOutput>(result),
        "enumerate" => round_trips::<EnumerateOutput>(result),
        "verify" => round_trips::<VerificationReport>(result),
        other => Err(format!("unknown command {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_report_validates() {
        let r = CliReport::new("alpha", "A_", AlphaOutput { n: 2, alpha: 1, witness: vec![0] }).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        validate(&v).unwrap();
        let mut extra = v.clone();
        extra["result"]["bogus"] = Value::Bool(true);
        assert!(validate(&extra).is_err());
        let mut wrong = v;
        wrong["command"] = "reduce".into();
        assert!(validate(&wrong).is_err());
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(digest(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }
}
