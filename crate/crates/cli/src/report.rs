//! JSON report layouts. Field order is the serialization order.

use serde::Serialize;

pub const REPORT_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Envelope<T: Serialize> {
    pub version: u32,
    pub tool_version: &'static str,
    pub command: &'static str,
    pub field: String,
    pub result: T,
}

#[derive(Serialize)]
pub struct VariableEntry {
    pub name: String,
    pub degree: i64,
}

#[derive(Serialize)]
pub struct ValidateReport {
    pub valid: bool,
    pub variables: Vec<VariableEntry>,
    pub normalization: Vec<String>,
    pub relations: Vec<String>,
    pub violations: Vec<String>,
    pub finite_over_normalization: Option<bool>,
}

#[derive(Serialize)]
pub struct HilbertReport {
    pub series: String,
    pub numerator: Vec<[i64; 2]>,
    pub denominator: Vec<u32>,
    pub coefficients: Vec<i64>,
    pub hilbert_polynomial: Option<String>,
    pub checked_through_degree: u64,
}

#[derive(Serialize)]
pub struct UnknownEntry {
    pub name: String,
    pub entry: String,
    pub torus_weight: i64,
}

#[derive(Serialize)]
pub struct RepeqsReport {
    pub shifts: Vec<i64>,
    pub unknowns: Vec<UnknownEntry>,
    pub generators: Vec<String>,
}

#[derive(Serialize)]
pub struct ModuleEntry {
    pub label: String,
    pub shifts: Vec<i64>,
    pub matrices: Vec<String>,
}

#[derive(Serialize)]
pub struct CheckPointReport {
    pub module: ModuleEntry,
    pub valid: bool,
}

#[derive(Serialize)]
pub struct IsomReport {
    pub first: ModuleEntry,
    pub second: ModuleEntry,
    pub isomorphic: bool,
    pub hom_dimension: usize,
    pub evidence: String,
    pub witness: Option<String>,
}

#[derive(Serialize)]
pub struct IndecReport {
    pub module: ModuleEntry,
    pub endomorphism_dimension: usize,
    pub indecomposable: bool,
}

#[derive(Serialize)]
pub struct OrbitEntry {
    pub representative: Vec<u32>,
    pub size: usize,
    pub stabilizer_order: Option<u64>,
    pub label: Option<String>,
    pub iso_class: usize,
}

#[derive(Serialize)]
pub struct CensusReport {
    pub q: u64,
    pub shifts: Vec<i64>,
    pub points: usize,
    pub group_order: Option<u64>,
    pub method: String,
    pub orbit_count: usize,
    pub iso_class_count: usize,
    pub divergent: bool,
    pub orbits: Vec<OrbitEntry>,
}

#[derive(Serialize)]
pub struct SpreadReport {
    pub shifts: Vec<i64>,
    pub spread: i64,
    pub normalized: Vec<i64>,
    pub shift: i64,
}

#[derive(Serialize)]
pub struct FamilyMember {
    pub n: i64,
    pub module: ModuleEntry,
    pub valid: bool,
    pub indecomposable: bool,
    pub series: String,
    pub hilbert_polynomial: String,
    pub rank: usize,
    pub normalized: Vec<i64>,
    pub spread: i64,
}

#[derive(Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub members: Vec<FamilyMember>,
}
