//! Machine-readable run reports.
//!
//! Every invocation writes exactly one JSON object to standard output.
//! Field order is fixed by the struct definitions, probabilities are
//! printed at full double precision (shortest round-trip form), and
//! `elapsed_ms` is always the final field — two runs of the same command
//! line with the same seed produce byte-identical reports apart from it.

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Hex digest of raw input bytes, prefixed with the algorithm name.
pub fn sha256_digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

/// One random source circuit pushed through the acceptance-relay gadget.
#[derive(Debug, Serialize)]
pub struct DwTrial {
    /// Acceptance probability of the source circuit on `|0…0⟩`.
    pub source_acceptance: f64,
    /// Acceptance the relay law predicts for the gadget.
    pub predicted: f64,
    /// Acceptance computed by exact ensemble averaging.
    pub simulated: f64,
    /// `|simulated - predicted|`.
    pub deviation: f64,
}

/// Bounds check on sources with acceptance at most one half: the gadget
/// acceptance must fall between 2/2ⁿ and 4/2ⁿ times the source acceptance.
#[derive(Debug, Serialize)]
pub struct SbGapCheck {
    /// How many of the trial circuits had source acceptance ≤ 1/2.
    pub circuits_below_half: usize,
    /// Whether every such circuit satisfied both bounds (within tolerance).
    pub holds: bool,
}

/// Report for `demo-dw`.
#[derive(Debug, Serialize)]
pub struct DemoDwReport {
    pub command: String,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub ensemble_cap: usize,
    pub decompose_toffoli: bool,
    pub trial_results: Vec<DwTrial>,
    pub max_deviation: f64,
    pub sb_gap: SbGapCheck,
    pub verdict: String,
    pub elapsed_ms: f64,
}

/// Report for `compare`.
#[derive(Debug, Serialize)]
pub struct CompareReport {
    pub command: String,
    pub file: String,
    pub input_digest: String,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub marginal: Option<Vec<usize>>,
    pub tolerance: f64,
    pub cone_cap: usize,
    pub ensemble_cap: usize,
    /// Qubits the compared distributions range over, in bit order.
    pub output_qubits: Vec<usize>,
    /// Exact ensemble-oracle probabilities, indexed by outcome.
    pub oracle: Vec<f64>,
    /// Strong-simulator probabilities, indexed by outcome.
    pub strongsim: Vec<f64>,
    pub max_deviation: f64,
    pub verdict: String,
    pub elapsed_ms: f64,
}

/// Serializes a report as pretty-printed JSON.
pub fn to_json(report: &impl Serialize) -> String {
    serde_json::to_string_pretty(report).expect("reports contain only finite numbers and strings")
}

/// The verdict strings used across reports.
pub fn verdict(pass: bool) -> String {
    if pass { "pass" } else { "fail" }.to_string()
}
