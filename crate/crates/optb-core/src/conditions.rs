//! Conditions (★1) and (★2) over a field of definition, the extension verdict
//! and the tame symbol calculus.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::arith::intfns::{euler_phi, exact_sqrt};
use crate::arith::minpoly::minimal_polynomial;
use crate::arith::poly::Poly;
use crate::arith::quadratic::{is_squarefree, Quadratic};
use crate::arith::squares::{is_square_in_field, quadratic_is_square, rational_square_class, SquareField};
use crate::arith::{FieldTag, Q};
use crate::error::{Error, Result};
use crate::monodromy::TorusBundle;
use crate::reps::RepType;

/// Minimal polynomials of η_n − η_n⁻¹ are attached to witnesses only up to this degree.
pub const WITNESS_DEGREE_LIMIT: u64 = 48;

/// The field of definition k of the component, as asserted by the caller.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum DefinitionField {
    #[default]
    Rational,
    /// Q(√d), d squarefree, d ∉ {0, 1}.
    Quadratic(i64),
    /// Q(ζ_m), m ≥ 1.
    Cyclotomic(u64),
}

impl DefinitionField {
    pub fn quadratic(d: i64) -> Result<Self> {
        if d == 1 {
            return Ok(DefinitionField::Rational);
        }
        if !is_squarefree(d) {
            return Err(Error::InvalidArgument(format!("radicand {d} is not squarefree and nonzero")));
        }
        Ok(DefinitionField::Quadratic(d))
    }

    pub fn cyclotomic(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("cyclotomic conductor must be at least 1".into()));
        }
        Ok(DefinitionField::Cyclotomic(m))
    }

    pub fn square_field(&self) -> SquareField {
        match self {
            DefinitionField::Rational => SquareField::Rational,
            DefinitionField::Quadratic(d) => SquareField::Quadratic(*d),
            DefinitionField::Cyclotomic(m) => SquareField::Cyclotomic(*m),
        }
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            DefinitionField::Rational => FieldTag::Rational,
            DefinitionField::Quadratic(d) => FieldTag::Quadratic(*d),
            DefinitionField::Cyclotomic(m) => FieldTag::Cyclotomic(*m),
        }
    }
}

impl fmt::Display for DefinitionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DefinitionField::Quadratic(-1) => write!(f, "Q(i)"),
            other => write!(f, "{}", other.tag()),
        }
    }
}

impl FromStr for DefinitionField {
    type Err = Error;

    /// Accepts `Q`, `Q(i)`, `Q(sqrt(d))`, `Q(sqrt d)`, `Q(zeta_m)` and `Q(zeta(m))`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidArgument(format!("unrecognised field {s:?}"));
        if compact == "Q" {
            return Ok(DefinitionField::Rational);
        }
        let inner = compact.strip_prefix("Q(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        if inner == "i" {
            return Ok(DefinitionField::Quadratic(-1));
        }
        let number = |t: &str| t.trim_start_matches('(').trim_end_matches(')').to_string();
        if let Some(rest) = inner.strip_prefix("sqrt") {
            let d: i64 = number(rest).parse().map_err(|_| bad())?;
            return DefinitionField::quadratic(d);
        }
        if let Some(rest) = inner.strip_prefix("zeta") {
            let m: u64 = number(rest.trim_start_matches('_')).parse().map_err(|_| bad())?;
            return DefinitionField::cyclotomic(m);
        }
        Err(bad())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Evidence {
    Present,
    Absent,
    #[default]
    Unknown,
}

impl Evidence {
    pub const ALL: [Evidence; 3] = [Evidence::Present, Evidence::Absent, Evidence::Unknown];
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Evidence::Present => "present",
            Evidence::Absent => "absent",
            Evidence::Unknown => "unknown",
        })
    }
}

impl FromStr for Evidence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "present" | "p" | "yes" => Ok(Evidence::Present),
            "absent" | "a" | "no" => Ok(Evidence::Absent),
            "unknown" | "u" | "?" => Ok(Evidence::Unknown),
            _ => Err(Error::InvalidArgument(format!("evidence must be present, absent or unknown, got {s:?}"))),
        }
    }
}

/// What is known about reducible characters on the component C.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ComponentEvidence {
    pub type_a_on_c: Evidence,
    pub type_b_on_c: Evidence,
    pub type_c_on_c: Evidence,
    /// C contains a lift of the holonomy character, which makes the
    /// irreducibility hypothesis of the non-extension criterion automatic.
    pub canonical_component: bool,
}

impl ComponentEvidence {
    pub fn new(a: Evidence, b: Evidence, c: Evidence, canonical_component: bool) -> Self {
        ComponentEvidence { type_a_on_c: a, type_b_on_c: b, type_c_on_c: c, canonical_component }
    }

    pub fn get(&self, kind: RepType) -> Evidence {
        match kind {
            RepType::A => self.type_a_on_c,
            RepType::B => self.type_b_on_c,
            RepType::C => self.type_c_on_c,
        }
    }

    /// Parses `A=present,B=absent,C=unknown`; omitted types stay Unknown.
    pub fn parse_assignments(s: &str, canonical_component: bool) -> Result<Self> {
        let mut ev = ComponentEvidence { canonical_component, ..Default::default() };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("evidence item {part:?} is not TYPE=value")))?;
            let value: Evidence = value.parse()?;
            match key.trim().to_ascii_uppercase().as_str() {
                "A" => ev.type_a_on_c = value,
                "B" => ev.type_b_on_c = value,
                "C" => ev.type_c_on_c = value,
                other => return Err(Error::InvalidArgument(format!("unknown representation type {other:?}"))),
            }
        }
        Ok(ev)
    }
}

/// (★1): w − 1/w ∈ k, where w² is an eigenvalue of Φ.
#[derive(Clone, Debug, PartialEq)]
pub struct Star1 {
    pub holds: bool,
    pub field: DefinitionField,
    pub trace: BigInt,
    /// (w − 1/w)² = Tr(Φ) − 2.
    pub value: BigInt,
    /// Squarefree s with Tr(Φ) − 2 = s · t².
    pub square_class: BigInt,
    /// a ≥ 0 with Tr(Φ) = a² + 2, when it exists.
    pub a: Option<BigInt>,
    /// Minimal polynomial of w − 1/w over Q, up to the sign of the root.
    pub minimal_polynomial: Poly<Q>,
    pub justification: Vec<String>,
}

impl Star1 {
    /// Re-checks the witness: a² + 2 = Tr, the square class and the minimal polynomial.
    pub fn reverify(&self) -> bool {
        let two = BigInt::from(2);
        if &self.trace - &two != self.value {
            return false;
        }
        if let Some(a) = &self.a {
            if a * a + &two != self.trace || a.is_negative() {
                return false;
            }
        }
        let Some((s, t)) = crate::arith::intfns::squarefree_decomposition(&self.value).ok() else {
            return false;
        };
        if s != self.square_class || &s * &t * &t != self.value {
            return false;
        }
        match &self.a {
            Some(a) => self.minimal_polynomial == Poly::new(vec![Q::from_integer(-a), Q::one()]),
            None => {
                self.minimal_polynomial == Poly::new(vec![Q::from_integer(-self.value.clone()), Q::zero(), Q::one()])
            }
        }
    }
}

fn star1_for_trace(trace: &BigInt, k: &DefinitionField) -> Result<Star1> {
    let two = BigInt::from(2);
    let value = trace - &two;
    if value.is_zero() || (trace + &two).is_zero() {
        return Err(Error::NotHyperbolic { abs_trace: trace.abs() });
    }
    let a = if value.is_positive() { exact_sqrt(&value) } else { None };
    let square_class = rational_square_class(&Q::from_integer(value.clone()))?;
    let holds = is_square_in_field(&Q::from_integer(value.clone()), &k.square_field())?;
    let minimal_polynomial = match &a {
        Some(a) => Poly::new(vec![Q::from_integer(-a), Q::one()]),
        None => Poly::new(vec![Q::from_integer(-value.clone()), Q::zero(), Q::one()]),
    };
    let mut justification = vec![
        format!("w^2 is an eigenvalue of Phi, so w^2 + w^-2 = Tr(Phi) = {trace}"),
        format!("(w - 1/w)^2 = Tr(Phi) - 2 = {value} = {square_class} * square"),
    ];
    justification.push(match (&a, holds) {
        (Some(a), _) => format!("Tr(Phi) = {a}^2 + 2, so w - 1/w = +-{a} is rational"),
        (None, true) => format!("{square_class} is a square in {k}, so w - 1/w lies in {k}"),
        (None, false) => format!("{square_class} is not a square in {k}, so w - 1/w does not lie in {k}"),
    });
    Ok(Star1 { holds, field: k.clone(), trace: trace.clone(), value, square_class, a, minimal_polynomial, justification })
}

/// (★1) by the square-class test on Tr(Φ) − 2.
pub fn star1(b: &TorusBundle, k: &DefinitionField) -> Result<Star1> {
    star1_for_trace(b.trace(), k)
}

/// (★1) by the square-class test, from the trace alone.
pub fn star1_from_trace(trace: &BigInt, k: &DefinitionField) -> Result<Star1> {
    star1_for_trace(trace, k)
}

/// (★1) over Q by the factorisation route: x⁴ − c x² + 1 has a factor x² + p x − 1
/// with p ∈ Z. Roots satisfy |x|² ≤ |c|, so |p| ≤ 2√|c| suffices; by
/// Gauss's lemma rational factors of a monic integer quartic are integral.
pub fn star1_via_factorization(trace: &BigInt) -> bool {
    let c = Q::from_integer(trace.clone());
    let quartic = Poly::new(vec![Q::one(), Q::zero(), -c, Q::zero(), Q::one()]);
    let bound: BigInt = (trace.abs().sqrt() + BigInt::one()) * 2;
    let bound: i64 = bound.to_i64().unwrap_or(i64::MAX);
    // x² + p x − 1 and x² − p x − 1 are both factors or neither, so p ≥ 0 suffices
    let mut p = 0i64;
    while p <= bound {
        let factor = Poly::new(vec![-Q::one(), Q::from_integer(BigInt::from(p)), Q::one()]);
        if quartic.rem(&factor).is_zero() {
            return true;
        }
        p += 1;
    }
    false
}

/// (★2): η_n − η_n⁻¹ ∈ k.
#[derive(Clone, Debug, PartialEq)]
pub struct Star2 {
    pub holds: bool,
    pub field: DefinitionField,
    pub n: u64,
    pub element: Cyclotomic,
    /// Number of distinct Galois conjugates found, capped at 3 for quadratic fields.
    pub degree: Option<u64>,
    /// Present when [Q(ζ_n) : Q] ≤ [`WITNESS_DEGREE_LIMIT`].
    pub minimal_polynomial: Option<Poly<Q>>,
    pub note: String,
}

impl Star2 {
    /// The witness polynomial vanishes at the element.
    pub fn reverify(&self) -> bool {
        match &self.minimal_polynomial {
            None => true,
            Some(p) => crate::arith::minpoly::evaluate_at(p, &self.element).is_zero(),
        }
    }
}

/// η_n − η_n⁻¹ with η_n = ζ_n.
pub fn star2_element(n: u64) -> Cyclotomic {
    let f = CyclotomicField::new(n.max(1));
    Cyclotomic::zeta_pow(&f, 1) - Cyclotomic::zeta_pow(&f, -1)
}

fn distinct_conjugates(e: &Cyclotomic, cap: usize) -> Vec<Cyclotomic> {
    let n = e.conductor() as i64;
    let mut out = vec![e.clone()];
    for u in 2..n {
        if u.gcd(&n) != 1 {
            continue;
        }
        let g = e.galois(u);
        if !out.contains(&g) {
            out.push(g);
            if out.len() >= cap {
                break;
            }
        }
    }
    out
}

/// (★2) for the lcm n of the torsion orders of x and y.
pub fn star2(b: &TorusBundle, k: &DefinitionField) -> Result<Star2> {
    let n = b.n_u64()?;
    Ok(star2_for_order(n, k))
}

/// (★2) by Galois invariance inside Q(ζ_n). Q(η_n − η_n⁻¹) is Galois over Q, so
/// the choice of primitive root does not matter.
pub fn star2_for_order(n: u64, k: &DefinitionField) -> Star2 {
    let n = n.max(1);
    let element = star2_element(n);
    let mut degree = None;
    let holds = match k {
        DefinitionField::Rational => element.as_rational().is_some(),
        DefinitionField::Cyclotomic(m) => element.lies_in_cyclotomic(*m),
        DefinitionField::Quadratic(d) => {
            let conj = distinct_conjugates(&element, 3);
            degree = Some(conj.len() as u64);
            match conj.len() {
                1 => true,
                2 => {
                    let diff = conj[0].clone() - conj[1].clone();
                    let disc = (diff.clone() * diff).as_rational().expect("discriminant of a rational quadratic");
                    rational_square_class(&disc).is_ok_and(|s| s == BigInt::from(*d))
                }
                _ => false,
            }
        }
    };
    let minimal_polynomial = (euler_phi(n) <= WITNESS_DEGREE_LIMIT).then(|| minimal_polynomial(&element));
    if let Some(p) = &minimal_polynomial {
        degree = p.degree().map(|d| d as u64);
    }
    let note = format!(
        "eta_{n} - eta_{n}^-1 {} {k}; Q(eta - 1/eta) is Galois over Q, so every primitive root of order {n} gives the same answer",
        if holds { "lies in" } else { "does not lie in" }
    );
    Star2 { holds, field: k.clone(), n, element, degree, minimal_polynomial, note }
}

/// (★2) from the minimal polynomial alone: a root in Q, or an irreducible
/// quadratic whose discriminant has square class d. `None` for cyclotomic k
/// or when the degree exceeds the witness limit.
pub fn star2_via_minimal_polynomial(n: u64, k: &DefinitionField) -> Option<bool> {
    let n = n.max(1);
    if euler_phi(n) > WITNESS_DEGREE_LIMIT {
        return None;
    }
    star2_from_polynomial(&minimal_polynomial(&star2_element(n)), k)
}

/// The membership decision for a given minimal polynomial of η_n − η_n⁻¹.
pub fn star2_from_polynomial(p: &Poly<Q>, k: &DefinitionField) -> Option<bool> {
    match (k, p.degree()?) {
        (DefinitionField::Cyclotomic(_), _) => None,
        (_, 1) => Some(true),
        (DefinitionField::Quadratic(d), 2) => {
            let (c0, c1) = (p.coeff(0), p.coeff(1));
            let disc = &c1 * &c1 - Q::from_integer(BigInt::from(4)) * c0;
            Some(rational_square_class(&disc).is_ok_and(|s| s == BigInt::from(*d)))
        }
        _ => Some(false),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StarConditions {
    pub star1: Star1,
    pub star2: Star2,
}

pub fn star_conditions(b: &TorusBundle, k: &DefinitionField) -> Result<StarConditions> {
    Ok(StarConditions { star1: star1(b, k)?, star2: star2(b, k)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Extends,
    DoesNotExtend,
    Conditional,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Extends => "Extends",
            Outcome::DoesNotExtend => "DoesNotExtend",
            Outcome::Conditional => "Conditional",
        })
    }
}

pub const RULE_EXTENDS: &str =
    "extension criterion: (star1) at Type A characters and (star2) at Type B/C characters that may lie on C";
pub const RULE_DOES_NOT_EXTEND: &str =
    "non-extension criterion: a reducible character on C violates its condition, with C canonical or irreducibility asserted";
pub const RULE_CONDITIONAL: &str = "neither criterion applies to the supplied evidence";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplanationItem {
    pub kind: RepType,
    pub evidence: Evidence,
    /// "(star1)" or "(star2)".
    pub condition: &'static str,
    pub condition_holds: bool,
    pub effect: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionVerdict {
    pub outcome: Outcome,
    pub rule_fired: &'static str,
    pub explanation: Vec<ExplanationItem>,
    /// For Conditional outcomes: the evidence upgrades that would settle the question.
    pub resolutions: Vec<String>,
}

fn condition_name(kind: RepType) -> &'static str {
    match kind {
        RepType::A => "(star1)",
        RepType::B | RepType::C => "(star2)",
    }
}

/// The verdict as a function of the condition values and the evidence.
pub fn verdict_from_values(
    star1: bool,
    star2: bool,
    ev: &ComponentEvidence,
    irreducibility_asserted: bool,
) -> ExtensionVerdict {
    let hypothesis = ev.canonical_component || irreducibility_asserted;
    let kinds = [RepType::A, RepType::B, RepType::C];
    let holds = |k: RepType| if k == RepType::A { star1 } else { star2 };

    let blocking: Vec<RepType> = kinds.into_iter().filter(|&k| ev.get(k) != Evidence::Absent && !holds(k)).collect();
    let violating: Vec<RepType> = blocking.iter().copied().filter(|&k| ev.get(k) == Evidence::Present).collect();

    let outcome = if blocking.is_empty() {
        Outcome::Extends
    } else if !violating.is_empty() && hypothesis {
        Outcome::DoesNotExtend
    } else {
        Outcome::Conditional
    };

    let explanation = kinds
        .into_iter()
        .map(|k| {
            let e = ev.get(k);
            let h = holds(k);
            let effect = match (e, h) {
                (Evidence::Absent, _) => "no requirement".to_string(),
                (_, true) => "requirement met".to_string(),
                (Evidence::Present, false) if hypothesis => "violation; non-extension criterion applies".to_string(),
                (Evidence::Present, false) => "violation; non-extension needs the irreducibility hypothesis".to_string(),
                (_, false) => "unmet requirement for an unknown type".to_string(),
            };
            ExplanationItem { kind: k, evidence: e, condition: condition_name(k), condition_holds: h, effect }
        })
        .collect();

    let mut resolutions = Vec::new();
    if outcome == Outcome::Conditional {
        let unknown: Vec<RepType> = blocking.iter().copied().filter(|&k| ev.get(k) == Evidence::Unknown).collect();
        if violating.is_empty() {
            let list = unknown.iter().map(|k| format!("Type {k}")).collect::<Vec<_>>().join(", ");
            resolutions.push(format!("showing {list} absent from C gives Extends"));
            for k in &unknown {
                let extra = if hypothesis { "" } else { " together with canonical_component or the irreducibility hypothesis" };
                resolutions.push(format!("showing Type {k} present on C{extra} gives DoesNotExtend"));
            }
        } else {
            resolutions.push(
                "asserting canonical_component or the irreducibility hypothesis gives DoesNotExtend".to_string(),
            );
        }
    }

    let rule_fired = match outcome {
        Outcome::Extends => RULE_EXTENDS,
        Outcome::DoesNotExtend => RULE_DOES_NOT_EXTEND,
        Outcome::Conditional => RULE_CONDITIONAL,
    };
    ExtensionVerdict { outcome, rule_fired, explanation, resolutions }
}

pub fn verdict(stars: &StarConditions, ev: &ComponentEvidence, irreducibility_asserted: bool) -> ExtensionVerdict {
    verdict_from_values(stars.star1.holds, stars.star2.holds, ev, irreducibility_asserted)
}

/// Valuations and residues of a Hilbert symbol (α, β) at a point of the curve.
#[derive(Clone, Debug, PartialEq)]
pub struct HilbertSymbolData {
    pub alpha_label: String,
    pub beta_label: String,
    pub ord_alpha: i64,
    pub ord_beta: i64,
    /// Residue of α·π^(−ord α) for a uniformiser π; needed when ord β is odd.
    pub residue_alpha: Option<Quadratic>,
    /// Residue of β·π^(−ord β); needed when ord α is odd.
    pub residue_beta: Option<Quadratic>,
    pub residue_field: SquareField,
}

#[derive(Clone, Debug, PartialEq)]
pub enum TameSymbol {
    Trivial,
    /// A representative of the nontrivial square class.
    NonTrivial(Quadratic),
    Unsupported(String),
}

fn is_square_in(x: &Quadratic, field: &SquareField) -> Result<Option<bool>> {
    if let Some(r) = x.as_rational() {
        return match is_square_in_field(&r, field) {
            Ok(v) => Ok(Some(v)),
            Err(Error::Unsupported(_)) => Ok(None),
            Err(e) => Err(e),
        };
    }
    match field {
        SquareField::Quadratic(d) if x.radicand() == Some(*d) => quadratic_is_square(x).map(Some),
        _ => Ok(None),
    }
}

/// The class of (−1)^(vα vβ) α^vβ / β^vα in the residue field modulo squares.
pub fn tame_symbol(h: &HilbertSymbolData) -> Result<TameSymbol> {
    let (va, vb) = (h.ord_alpha, h.ord_beta);
    let mut rep = Quadratic::rational(if (va * vb).is_even() { Q::one() } else { -Q::one() });
    let mut take = |needed: bool, residue: &Option<Quadratic>, label: &str| -> Result<()> {
        if !needed {
            return Ok(());
        }
        let r = residue.as_ref().ok_or_else(|| Error::MissingResidue(label.to_string()))?;
        if r.is_zero() {
            return Err(Error::InvalidArgument(format!("residue of {label} must be nonzero")));
        }
        // u and 1/u have the same square class
        rep = rep.clone() * r.clone();
        Ok(())
    };
    take(vb.is_odd(), &h.residue_alpha, &h.alpha_label)?;
    take(va.is_odd(), &h.residue_beta, &h.beta_label)?;
    match is_square_in(&rep, &h.residue_field)? {
        Some(true) => Ok(TameSymbol::Trivial),
        Some(false) => Ok(TameSymbol::NonTrivial(rep)),
        None => Ok(TameSymbol::Unsupported(format!("square test of {rep} in {}", h.residue_field))),
    }
}
