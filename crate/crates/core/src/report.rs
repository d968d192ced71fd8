//! Machine-readable run reports (JSON and CSV).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::family::FunctionFamily;
use crate::richness::{CheckOutcome, Verdict};
use crate::semigroup::Semigroup;
use crate::subset::SubsetMask;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// A subset written both ways: labels for people, hex mask for scripts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetRecord {
    pub labels: Vec<String>,
    pub mask: String,
}

impl SetRecord {
    pub fn new(s: &Semigroup, set: &SubsetMask) -> SetRecord {
        SetRecord { labels: set.labels(s).into_iter().map(String::from).collect(), mask: set.to_hex() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub version: String,
    pub spec: String,
    pub property: String,
    pub k: Option<usize>,
    pub r: Option<usize>,
    pub m: Option<usize>,
    pub side: Option<String>,
    pub verdict: Verdict,
    pub witness: Option<Value>,
    pub counterexample: Option<Value>,
    pub families_scanned: u64,
    pub families_pruned: u64,
    pub ms: u64,
    pub workers: usize,
    pub set: Option<SetRecord>,
    /// Command-specific payload (search frontier, experiment counts).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

/// Column order of [`RunReport::csv_header`] and [`RunReport::csv_record`].
pub const CSV_COLUMNS: [&str; 14] = [
    "version",
    "spec",
    "property",
    "k",
    "r",
    "m",
    "side",
    "verdict",
    "witness",
    "counterexample",
    "families_scanned",
    "families_pruned",
    "ms",
    "workers",
];

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

impl RunReport {
    pub fn new(spec: &str, property: &str, verdict: Verdict) -> RunReport {
        RunReport {
            version: TOOL_VERSION.to_string(),
            spec: spec.to_string(),
            property: property.to_string(),
            k: None,
            r: None,
            m: None,
            side: None,
            verdict,
            witness: None,
            counterexample: None,
            families_scanned: 0,
            families_pruned: 0,
            ms: 0,
            workers: 1,
            set: None,
            details: None,
        }
    }

    /// Copies the box, verdict, counts and counterexample of a sweep.
    pub fn absorb(&mut self, outcome: &CheckOutcome) {
        self.k = Some(outcome.k);
        self.r = Some(outcome.r);
        self.m = outcome.m;
        self.verdict = outcome.verdict;
        self.families_scanned = outcome.families_scanned;
        self.families_pruned = outcome.families_pruned;
        self.counterexample = outcome.counterexample.as_ref().map(family_json);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<RunReport> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))
    }

    /// Same content with wall time and worker count blanked, for reproducibility checks.
    pub fn normalized(&self) -> RunReport {
        RunReport { ms: 0, workers: 0, ..self.clone() }
    }

    pub fn csv_header() -> Vec<&'static str> {
        CSV_COLUMNS.to_vec()
    }

    pub fn csv_record(&self) -> Vec<String> {
        let json = |v: &Option<Value>| v.as_ref().map(Value::to_string).unwrap_or_default();
        vec![
            self.version.clone(),
            self.spec.clone(),
            self.property.clone(),
            opt(&self.k),
            opt(&self.r),
            opt(&self.m),
            opt(&self.side),
            serde_json::to_value(self.verdict).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default(),
            json(&self.witness),
            json(&self.counterexample),
            self.families_scanned.to_string(),
            self.families_pruned.to_string(),
            self.ms.to_string(),
            self.workers.to_string(),
        ]
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(Self::csv_header()).and_then(|_| w.write_record(self.csv_record())).expect("in-memory csv");
        String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8")
    }
}

/// A family as nested arrays of element indices.
pub fn family_json(f: &FunctionFamily) -> Value {
    serde_json::to_value(f.values()).expect("plain integers")
}
