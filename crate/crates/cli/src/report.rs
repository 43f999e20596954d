//! JSON report schema shared by `solve` and `spectrum`.
//!
//! The leading fields (`case`, `inputs`, `roots`, `sphere`, `residuals`,
//! `tol`, `warnings`) are common to both commands; octonions are arrays of
//! eight numbers in canonical basis order `(1, i, j, k, l, il, jl, kl)`.
//! Numbers use the shortest decimal form that reads back to the same double.

use std::collections::BTreeMap;

use octoquad::Octonion;
use serde::{Deserialize, Serialize};

pub type Coeffs = [f64; 8];

/// Coefficients with `-0.0` folded to `0.0`.
pub fn coeffs(x: Octonion) -> Coeffs {
    x.coeffs().map(plain)
}

pub fn plain(v: f64) -> f64 {
    v + 0.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CaseField {
    Number(u8),
    Label(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphereJson {
    pub center_real: f64,
    pub im_radius: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub case: CaseField,
    pub inputs: BTreeMap<String, Coeffs>,
    pub roots: Vec<Coeffs>,
    pub sphere: Option<SphereJson>,
    pub residuals: Vec<f64>,
    pub tol: f64,
    pub warnings: Vec<String>,
    /// `solve` only: the single isolated root is a double root.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiplicity2: Option<bool>,
    /// `solve` only: which roots are sphere samples (case 2).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampled: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumJson {
    /// `"triangular"` or `"reduced"`.
    pub kind: String,
    pub reduced: Option<ReducedJson>,
    pub eigenpairs: Vec<EigenpairJson>,
    pub eigen_sphere: Option<EigenSphereJson>,
    /// Row-2 defects outside the quaternion subspace; informational only.
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReducedJson {
    pub beta: Coeffs,
    pub gamma: Coeffs,
    pub case: u8,
    pub root_residuals: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenpairJson {
    pub t: Option<Coeffs>,
    pub lambda: Coeffs,
    pub vector: [Coeffs; 2],
    pub residual_row1: f64,
    pub residual_row2: f64,
    pub sampled: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenSphereJson {
    pub center: Coeffs,
    pub radius: f64,
    pub normal: Coeffs,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableJson {
    pub basis: Vec<String>,
    pub table: Vec<Vec<String>>,
    pub check: Option<TableCheck>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableCheck {
    pub agree: usize,
    pub total: usize,
}

/// Re-emit any JSON text with sorted keys and two-space indentation.
pub fn canonical_json(text: &str) -> serde_json::Result<String> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    serde_json::to_string_pretty(&value)
}
