//! The JSON report shared by all commands.

use cxcore::curvature::Certificate;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Error => 2,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: u32,
    pub check: String,
    pub input_digest: Option<String>,
    pub verdict: Verdict,
    pub certificates: Vec<Certificate>,
    pub timing_ms: f64,
    pub version: &'static str,
    pub data: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Report {
    pub fn new(check: &str) -> Report {
        Report {
            schema: 1,
            check: check.to_string(),
            input_digest: None,
            verdict: Verdict::Pass,
            certificates: Vec::new(),
            timing_ms: 0.0,
            version: env!("CARGO_PKG_VERSION"),
            data: Value::Null,
            error: None,
        }
    }
}

/// Human-readable rendering of a certificate.
pub fn describe(c: &Certificate) -> String {
    match c {
        Certificate::ShortLinkCycle { vertex, corners, ends } => {
            let cs: Vec<String> = corners.iter().map(|c| format!("{}@{}", c.square, c.corner)).collect();
            format!(
                "link of `{vertex}` has a cycle of length {}: ends [{}], corners [{}]",
                corners.len(),
                ends.join(", "),
                cs.join(", ")
            )
        }
        Certificate::VhContradiction { steps } => {
            let parts: Vec<String> = steps
                .iter()
                .map(|s| format!("{} -{:?}({}:{}-{})-> {}", s.from, s.kind, s.square, s.from_side, s.to_side, s.to))
                .collect();
            format!("odd constraint cycle of length {}: {}", steps.len(), parts.join(", "))
        }
        Certificate::NotSimple { base, cells } => {
            format!("link of `{base}` is not simple: {}", cells.join(", "))
        }
        Certificate::MissingCliqueSimplex { base, clique } => {
            format!("link of `{base}` is not flag: clique {{{}}} spans no simplex", clique.join(", "))
        }
        Certificate::ChordlessCycle { base, cycle } => {
            format!("link of `{base}` has a {}-cycle without diagonals: {}", cycle.len(), cycle.join(" "))
        }
    }
}
