//! JSON query and report documents. Indices in documents are 1-based.
//!
//! A query:
//!
//! ```json
//! {
//!   "root_type": {"series": "B", "rank": 2},
//!   "real_form": {"black": [1], "arrows": []},
//!   "lattice": "full",
//!   "parabolic": {"phi": [2]},
//!   "requests": ["pi0_cartan", "validate"]
//! }
//! ```
//!
//! `real_form` is either `{"name": ...}` (catalog lookup, `root_type`
//! optional) or `{"black": [...], "arrows": [[i, j], ...]}`. `lattice` is
//! `"full"`, `"root"` or `{"generators": [[...], ...]}` in weight
//! coordinates; the root lattice is always included.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root_type: Option<RootTypeDoc>,
    pub real_form: RealFormDoc,
    #[serde(default)]
    pub lattice: LatticeDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parabolic: Option<ParabolicQuery>,
    #[serde(default = "default_requests")]
    pub requests: Vec<Request>,
}

fn default_requests() -> Vec<Request> {
    vec![Request::All]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootTypeDoc {
    pub series: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RealFormDoc {
    Named(NamedForm),
    Diagram(DiagramForm),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NamedForm {
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramForm {
    #[serde(default)]
    pub black: Vec<usize>,
    #[serde(default)]
    pub arrows: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeDoc {
    Keyword(LatticeKeyword),
    Generators(GeneratorsDoc),
}

impl Default for LatticeDoc {
    fn default() -> Self {
        LatticeDoc::Keyword(LatticeKeyword::Full)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeKeyword {
    Full,
    Root,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsDoc {
    pub generators: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParabolicQuery {
    pub phi: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Request {
    Pi0Cartan,
    Pi0Isotropy,
    Delta,
    Validate,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Invalid,
    Defect,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub query: QueryDoc,
    pub status: Status,
    pub form: FormDoc,
    pub validation: Vec<CheckDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derived: Option<DerivedDoc>,
    pub results: Vec<ResultDoc>,
    pub assumptions: Vec<String>,
    pub warnings: Vec<String>,
    pub errors: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_us: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub root_type: String,
    pub black: Vec<usize>,
    pub arrows: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivedDoc {
    /// Row labels of `k` and `k′`.
    pub white: Vec<usize>,
    /// Column labels of `k` and `k′`.
    pub black: Vec<usize>,
    pub k: Vec<Vec<i64>>,
    pub kprime: Vec<Vec<i64>>,
    /// σ on weight coordinates; column `j` is the image of `ω_j`.
    pub sigma_on_weights: Vec<Vec<i64>>,
    pub fixed_omegas: Vec<usize>,
    pub root_counts: RootCounts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeInfo>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parabolic: Option<ParabolicInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootCounts {
    pub total: usize,
    pub real: usize,
    pub imaginary: usize,
    pub complex: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeInfo {
    pub kind: String,
    /// Hermite basis in weight coordinates.
    pub basis: Vec<Vec<i64>>,
    pub index_in_weight_lattice: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicInfo {
    pub phi: Vec<usize>,
    pub totally_real: bool,
    pub real_phi: Vec<usize>,
    /// Simple-root coordinates of the simple system of ℛ′.
    pub rprime_basis: Vec<Vec<i64>>,
    pub rprime_size: usize,
    pub m: usize,
    pub z0_dim: usize,
    /// Indices `i` of the generating characters `ω_i`.
    pub phistar: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub levi_chamber: Option<LeviInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviInfo {
    pub word: Vec<usize>,
    pub epsilon: String,
    /// New simple roots in base simple-root coordinates.
    pub simple_roots: Vec<Vec<i64>>,
    pub phi_prime: Vec<usize>,
    pub levi_positions: Vec<usize>,
    pub s_adapted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub notation: String,
    pub order: u64,
    pub invariant_factors: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub generators: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDoc {
    pub request: Request,
    pub quantity: String,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupDoc>,
    pub method: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<CheckDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<DeltaDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaDoc {
    /// Simple indices `j ∈ Φ ∩ ℛ_re` labelling the sign coordinates.
    pub sign_coords: Vec<usize>,
    pub rows: Vec<DeltaRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaRow {
    pub root: Vec<i64>,
    /// Entries `(ω_j|α^∨) mod 2`; 1 means the sign flips.
    pub exponents: Vec<u8>,
}

/// Parses one query or an array of queries; errors carry line and column.
pub fn parse_queries(text: &str) -> Result<Vec<QueryDoc>, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if value.is_array() {
        serde_json::from_str::<Vec<QueryDoc>>(text).map_err(|e| e.to_string())
    } else {
        serde_json::from_str::<QueryDoc>(text).map(|q| vec![q]).map_err(|e| e.to_string())
    }
}
