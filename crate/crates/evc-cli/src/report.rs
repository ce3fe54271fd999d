//! The JSON report schema. Every command prints exactly one `RunReport`
//! to stdout; field order is fixed by the struct definitions and map keys
//! are sorted, so a report is byte-identical across runs and worker
//! counts. Wall time is opt-in because it would break that guarantee.

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub input: InputInfo,
    pub parameters: serde_json::Value,
    pub results: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Serialize)]
pub struct InputInfo {
    /// File path or corpus descriptor.
    pub source: String,
    pub digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges: Option<usize>,
}

pub fn digest_bytes(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

#[derive(Serialize)]
pub struct ComponentEvc {
    pub vertices: Vec<String>,
    pub k: usize,
    pub class_size: usize,
}

#[derive(Serialize)]
pub struct EvcExactResult {
    pub k: usize,
    pub model: String,
    pub forced: Vec<String>,
    pub components: Vec<ComponentEvc>,
}

#[derive(Serialize)]
pub struct ComponentFast {
    pub vertices: Vec<String>,
    pub lower_bound: usize,
    pub evc: Option<usize>,
    pub method: String,
    pub plus_one_witness: Option<String>,
}

#[derive(Serialize)]
pub struct EvcFastResult {
    pub lower_bound: usize,
    pub evc: Option<usize>,
    pub method: String,
    pub plus_one_witness: Option<String>,
    pub certificate_size: usize,
    pub components: Vec<ComponentFast>,
}

#[derive(Serialize)]
pub struct MvcResult {
    pub size: usize,
    pub witness: Vec<String>,
    pub method: String,
    pub forced: Vec<String>,
    pub component_sizes: Vec<usize>,
}

#[derive(Serialize)]
pub struct DecomposeResult {
    pub cut_vertices: Vec<String>,
    pub blocks: Vec<Vec<String>>,
    pub edges: Vec<[String; 2]>,
    /// Block index of each edge, aligned with `edges`.
    pub edge_blocks: Vec<usize>,
}

#[derive(Serialize)]
pub struct VerifyResult {
    pub claim: String,
    pub corpus: String,
    pub instances_checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

#[derive(Serialize)]
pub struct CertificateResult {
    pub valid: bool,
    pub reason: Option<String>,
    pub k: usize,
    pub covers: usize,
}

#[derive(Serialize)]
pub struct GenerateResult {
    pub kind: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub density: f64,
    pub chordal: bool,
    pub written_to: Option<String>,
}
