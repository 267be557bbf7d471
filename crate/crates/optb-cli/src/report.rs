//! JSON report schema. Every mathematical value is an exact string.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: String,
    pub input: Input,
    pub bundle: Option<BundleSummary>,
    pub conditions: Option<ConditionsReport>,
    pub representations: Option<RepresentationsReport>,
    pub verdict: Option<VerdictReport>,
    pub primes: Option<PrimesReport>,
    pub citations: Vec<String>,
}

impl Report {
    pub fn new(input: Input) -> Self {
        Report {
            schema_version: SCHEMA_VERSION.to_string(),
            input,
            bundle: None,
            conditions: None,
            representations: None,
            verdict: None,
            primes: None,
            citations: Vec::new(),
        }
    }

    pub fn cite(&mut self, c: impl Into<String>) {
        let c = c.into();
        if !self.citations.contains(&c) {
            self.citations.push(c);
        }
    }
}

/// The command echo.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Input {
    pub command: String,
    pub word: Option<String>,
    pub args: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Element {
    Rational {
        value: String,
    },
    /// a + b·√d
    Quadratic {
        radicand: String,
        coefficients: Vec<String>,
        text: String,
    },
    /// Σ c_k ζ^k in the power basis of Q(ζ_conductor).
    Cyclotomic {
        conductor: String,
        coefficients: Vec<String>,
        text: String,
    },
    /// Σ c_k w^k in Q[w]/(modulus).
    NumberField {
        modulus: Vec<String>,
        coefficients: Vec<String>,
        text: String,
    },
    /// Σ c_k g^k in F_p[g]/(modulus).
    Finite {
        characteristic: String,
        modulus: Vec<String>,
        coefficients: Vec<String>,
        text: String,
    },
}

/// Rows of a 2×2 matrix.
pub type Matrix = Vec<Vec<Element>>;

/// Coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    pub variable: String,
    pub coefficients: Vec<String>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentTerm {
    pub exponent: String,
    pub coefficient: Element,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Laurent {
    pub variable: String,
    pub terms: Vec<LaurentTerm>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BundleSummary {
    pub word: String,
    pub canonical_word: String,
    pub phi: Vec<Vec<String>>,
    pub trace: String,
    pub characteristic_polynomial: Polynomial,
    pub free_rank: String,
    pub torsion_invariants: Vec<String>,
    pub torsion_order: String,
    pub order_x: String,
    pub order_y: String,
    pub n: String,
    pub alexander: Option<Vec<AlexanderRow>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TwistReport {
    /// "trivial" or "x=zeta(m)^p,y=zeta(m)^q".
    pub label: String,
    pub x: Element,
    pub y: Element,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlexanderRow {
    pub twist: TwistReport,
    pub field: String,
    pub delta0: Laurent,
    pub delta1: Laurent,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Star1Report {
    pub holds: bool,
    pub trace: String,
    pub value: String,
    pub square_class: String,
    pub square_root: Option<String>,
    pub minimal_polynomial: Polynomial,
    pub justification: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Star2Report {
    pub holds: bool,
    pub n: String,
    pub element: Element,
    pub degree: Option<String>,
    pub minimal_polynomial: Option<Polynomial>,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvidenceReport {
    pub type_a: String,
    pub type_b: String,
    pub type_c: String,
    pub canonical_component: bool,
    pub irreducibility_asserted: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionsReport {
    pub field: String,
    pub star1: Star1Report,
    pub star2: Star2Report,
    pub evidence: EvidenceReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub failed_relator: Option<String>,
    pub failed_value: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SignedRepresentation {
    pub signs: Vec<String>,
    pub x: Matrix,
    pub y: Matrix,
    pub t: Matrix,
    pub verification: VerificationReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TypeAReport {
    pub trace: String,
    pub radicand: String,
    pub eigenvalue: Element,
    pub eigenvector: Vec<Element>,
    pub w_minimal_polynomial: Polynomial,
    pub quartic_factored: bool,
    pub w: Element,
    pub representations: Vec<SignedRepresentation>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TypeBcReport {
    #[serde(rename = "type")]
    pub kind: String,
    pub conductor: String,
    pub alpha_exponent: String,
    pub beta_exponent: String,
    pub delta: String,
    pub parametric: bool,
    pub alpha: Element,
    pub beta: Element,
    pub x: Matrix,
    pub y: Matrix,
    pub t: Matrix,
    pub non_abelian: bool,
    pub verification: VerificationReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepresentationsReport {
    pub requested: Vec<String>,
    pub type_a: Option<Vec<TypeAReport>>,
    pub type_bc_field: Option<String>,
    /// Solution listing, produced by `reps` only.
    pub type_bc: Option<Vec<TypeBcReport>>,
    /// Every enumerated B/C solution passed relator verification.
    pub type_bc_all_verified: Option<bool>,
    /// Why the Type B/C enumeration was not run.
    pub type_bc_skipped: Option<String>,
    pub counts: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExplanationReport {
    #[serde(rename = "type")]
    pub kind: String,
    pub evidence: String,
    pub condition: String,
    pub condition_holds: bool,
    pub effect: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub outcome: String,
    pub rule: String,
    pub explanation: Vec<ExplanationReport>,
    pub resolutions: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimeEntry {
    pub prime: String,
    pub provenance: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SkippedCase {
    pub prime: String,
    pub conductor: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanResult {
    pub bound: String,
    pub twisted: bool,
    pub flagged: Vec<PrimeEntry>,
    pub condition1: Vec<String>,
    pub condition2: Vec<String>,
    pub twisted_flags: Vec<String>,
    pub skipped: Vec<SkippedCase>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimesReport {
    pub candidate_set: Vec<PrimeEntry>,
    pub scan: Option<ScanResult>,
    /// Present when Tr = a² + 2.
    pub closed_form: Option<Vec<String>>,
}

/// One fixture of a family run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub citation: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureRun {
    pub family: String,
    pub j: Option<String>,
    pub word: String,
    pub field: String,
    pub expected: BTreeMap<String, ExpectedEntry>,
    /// Present with `--check`.
    pub checks: Option<Vec<CheckReport>>,
    pub pass: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub schema_version: String,
    pub input: Input,
    pub fixtures: Vec<FixtureRun>,
    pub pass: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpectedEntry {
    pub value: serde_json::Value,
    pub citation: String,
}

/// A stored regression fixture: the `analyze` report plus the cited expectations.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureFile {
    #[serde(flatten)]
    pub report: Report,
    pub expected: BTreeMap<String, ExpectedEntry>,
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serialization");
    s.push('\n');
    s
}
