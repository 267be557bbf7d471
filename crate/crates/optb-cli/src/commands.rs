//! Report assembly for each subcommand.

use std::collections::BTreeMap;

use optb_core::alexander::{
    alexander_invariants, all_twists, cyclotomic_twist, finite_trivial_twist, rational_trivial_twist,
    reduce_twist, splitting_field_of_unity, validate_twist, Twist,
};
use optb_core::arith::cyclotomic::{Cyclotomic, CyclotomicField};
use optb_core::arith::finite_field::FiniteField;
use optb_core::arith::intfns::is_prime;
use optb_core::conditions::{star_conditions, verdict, ComponentEvidence, DefinitionField, StarConditions};
use optb_core::families::{self, check_fixture, Cited, Family, FamilyFixture};
use optb_core::integral::{candidate_prime_set, finite_field_scan, lemma_finfield_closed_form};
use optb_core::monodromy::{build_bundle, char_poly, homology_report, TorusBundle};
use optb_core::reps::{enumerate_type_bc, type_a_representations, type_bc_field, verify_representation, RepType};
use optb_core::words::parse_monodromy;
use optb_core::{Error, Result};
use serde_json::{json, Value};

use crate::encode::{self, Encode};
use crate::report::{
    BundleSummary, CheckReport, ConditionsReport, EvidenceReport, ExpectedEntry, ExplanationReport, FamilyReport,
    FixtureFile, FixtureRun, Input, PrimesReport, Report, RepresentationsReport, SignedRepresentation, Star1Report,
    Star2Report, TypeAReport, TypeBcReport, VerdictReport, SCHEMA_VERSION,
};

/// Type B/C enumeration is skipped above this n unless raised.
pub const DEFAULT_MAX_N: u64 = 60;

/// Scan bound used for stored fixtures.
pub const FIXTURE_SCAN_BOUND: u64 = 200;

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidArgument(_) => 2,
        Error::NotHyperbolic { .. } => 3,
        Error::InvalidTwist { .. } => 4,
        Error::Unsupported(_) | Error::DegenerateJacobian | Error::MissingResidue(_) => 5,
    }
}

fn bundle_for(word: &str) -> Result<TorusBundle> {
    build_bundle(&parse_monodromy(word)?)
}

fn input(command: &str, word: Option<&str>, args: &[(&str, String)]) -> Input {
    Input {
        command: command.to_string(),
        word: word.map(str::to_string),
        args: args.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
    }
}

pub fn bundle_summary(b: &TorusBundle) -> BundleSummary {
    let h = homology_report(b);
    BundleSummary {
        word: b.word().source().to_string(),
        canonical_word: b.word().canonical(),
        phi: encode::int_matrix(b.phi()),
        trace: b.trace().to_string(),
        characteristic_polynomial: encode::polynomial(&char_poly(b), "z"),
        free_rank: h.free_rank.to_string(),
        torsion_invariants: h.torsion_invariants.iter().map(|x| x.to_string()).collect(),
        torsion_order: b.torsion_order().to_string(),
        order_x: h.order_x.to_string(),
        order_y: h.order_y.to_string(),
        n: h.n.to_string(),
        alexander: None,
    }
}

fn evidence_string(ev: &ComponentEvidence) -> String {
    format!("A={},B={},C={}", ev.type_a_on_c, ev.type_b_on_c, ev.type_c_on_c)
}

fn conditions_report(s: &StarConditions, ev: &ComponentEvidence, irreducible: bool) -> ConditionsReport {
    let (s1, s2) = (&s.star1, &s.star2);
    ConditionsReport {
        field: s1.field.to_string(),
        star1: Star1Report {
            holds: s1.holds,
            trace: s1.trace.to_string(),
            value: s1.value.to_string(),
            square_class: s1.square_class.to_string(),
            square_root: s1.a.as_ref().map(|a| a.to_string()),
            minimal_polynomial: encode::polynomial(&s1.minimal_polynomial, "X"),
            justification: s1.justification.clone(),
        },
        star2: Star2Report {
            holds: s2.holds,
            n: s2.n.to_string(),
            element: s2.element.encode(),
            degree: s2.degree.map(|d| d.to_string()),
            minimal_polynomial: s2.minimal_polynomial.as_ref().map(|p| encode::polynomial(p, "X")),
            note: s2.note.clone(),
        },
        evidence: EvidenceReport {
            type_a: ev.type_a_on_c.to_string(),
            type_b: ev.type_b_on_c.to_string(),
            type_c: ev.type_c_on_c.to_string(),
            canonical_component: ev.canonical_component,
            irreducibility_asserted: irreducible,
        },
    }
}

/// Which representation types to list, and the n above which B/C is skipped.
/// The Type B/C solutions are listed only when `listing` is set; otherwise
/// they are counted and verified.
pub fn representations_report(
    b: &TorusBundle,
    kinds: &[RepType],
    max_n: u64,
    listing: bool,
) -> Result<RepresentationsReport> {
    let mut counts = BTreeMap::new();
    let type_a = if kinds.contains(&RepType::A) {
        let mut out = Vec::new();
        for data in type_a_representations(b)? {
            let representations = data
                .sign_choices
                .iter()
                .map(|&(e1, e2)| {
                    let rep = data.representation(e1, e2);
                    SignedRepresentation {
                        signs: vec![e1.to_string(), e2.to_string()],
                        x: encode::matrix(&rep.x),
                        y: encode::matrix(&rep.y),
                        t: encode::matrix(&rep.t),
                        verification: encode::verification(&verify_representation(&rep, b)),
                    }
                })
                .collect();
            out.push(TypeAReport {
                trace: data.trace.to_string(),
                radicand: data.radicand.to_string(),
                eigenvalue: data.eigenvalue.encode(),
                eigenvector: vec![data.eigenvector.0.encode(), data.eigenvector.1.encode()],
                w_minimal_polynomial: encode::polynomial(&data.w_minimal_polynomial, "x"),
                quartic_factored: data.quartic_factored,
                w: data.w.encode(),
                representations,
            });
        }
        let total: usize = out.iter().map(|d| d.representations.len()).sum();
        counts.insert("A".to_string(), total.to_string());
        Some(out)
    } else {
        None
    };
    let wants_bc = kinds.iter().any(|k| *k != RepType::A);
    let n = b.n_u64()?;
    let (mut type_bc, mut type_bc_field_s, mut skipped, mut all_verified) = (None, None, None, None);
    if wants_bc {
        if n > max_n {
            skipped = Some(format!("n = {n} exceeds --max-n {max_n}"));
        } else {
            type_bc_field_s = Some(format!("Q(zeta_{})", type_bc_field(b)?.conductor()));
            let mut rows = Vec::new();
            let mut tally: BTreeMap<RepType, usize> = BTreeMap::new();
            let mut ok = true;
            for s in enumerate_type_bc(b)? {
                if !kinds.contains(&s.kind()) {
                    continue;
                }
                *tally.entry(s.kind()).or_default() += 1;
                let verification = verify_representation(&s.rep, b);
                ok &= verification.ok;
                if !listing {
                    continue;
                }
                rows.push(TypeBcReport {
                    kind: s.kind().to_string(),
                    conductor: s.conductor.to_string(),
                    alpha_exponent: s.alpha_exp.to_string(),
                    beta_exponent: s.beta_exp.to_string(),
                    delta: s.delta.to_string(),
                    parametric: s.parametric,
                    alpha: s.rep.x.a.encode(),
                    beta: s.rep.y.a.encode(),
                    x: encode::matrix(&s.rep.x),
                    y: encode::matrix(&s.rep.y),
                    t: encode::matrix(&s.rep.t),
                    non_abelian: s.rep.is_non_abelian(),
                    verification: encode::verification(&verification),
                });
            }
            for k in [RepType::B, RepType::C] {
                if kinds.contains(&k) {
                    counts.insert(k.to_string(), tally.get(&k).copied().unwrap_or(0).to_string());
                }
            }
            all_verified = Some(ok);
            type_bc = listing.then_some(rows);
        }
    }
    Ok(RepresentationsReport {
        requested: kinds.iter().map(|k| k.to_string()).collect(),
        type_a,
        type_bc_field: type_bc_field_s,
        type_bc,
        type_bc_all_verified: all_verified,
        type_bc_skipped: skipped,
        counts,
    })
}

pub fn primes_report(b: &TorusBundle, bound: Option<u64>, twisted: bool) -> Result<PrimesReport> {
    let scan = match bound {
        Some(bound) => Some(encode::scan(&finite_field_scan(b, bound, twisted)?, twisted)),
        None => None,
    };
    Ok(PrimesReport {
        candidate_set: encode::prime_entries(&candidate_prime_set(b)?),
        scan,
        closed_form: lemma_finfield_closed_form(b.trace()).map(|s| encode::prime_list(&s)),
    })
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub word: String,
    pub field: DefinitionField,
    pub evidence: ComponentEvidence,
    pub irreducible: bool,
    pub bound: Option<u64>,
    pub twisted_scan: bool,
    pub max_n: u64,
}

impl AnalyzeOptions {
    pub fn new(word: &str) -> Self {
        AnalyzeOptions {
            word: word.to_string(),
            field: DefinitionField::Rational,
            evidence: ComponentEvidence::default(),
            irreducible: false,
            bound: None,
            twisted_scan: false,
            max_n: DEFAULT_MAX_N,
        }
    }

    /// The flags that reproduce this run, keyed by long option name.
    pub fn args(&self) -> Vec<(&'static str, String)> {
        let mut v = vec![
            ("field", self.field.to_string()),
            ("evidence", evidence_string(&self.evidence)),
            ("canonical", self.evidence.canonical_component.to_string()),
            ("irreducible", self.irreducible.to_string()),
            ("max-n", self.max_n.to_string()),
        ];
        if let Some(b) = self.bound {
            v.push(("bound", b.to_string()));
            v.push(("twisted-scan", self.twisted_scan.to_string()));
        }
        v
    }
}

pub fn analyze(o: &AnalyzeOptions) -> Result<Report> {
    let b = bundle_for(&o.word)?;
    let mut r = Report::new(input("analyze", Some(&o.word), &o.args()));
    r.bundle = Some(bundle_summary(&b));
    let stars = star_conditions(&b, &o.field)?;
    r.conditions = Some(conditions_report(&stars, &o.evidence, o.irreducible));
    r.representations = Some(representations_report(&b, &[RepType::A, RepType::B, RepType::C], o.max_n, false)?);
    let v = verdict(&stars, &o.evidence, o.irreducible);
    r.cite(v.rule_fired);
    r.verdict = Some(VerdictReport {
        outcome: v.outcome.to_string(),
        rule: v.rule_fired.to_string(),
        explanation: v
            .explanation
            .iter()
            .map(|e| ExplanationReport {
                kind: e.kind.to_string(),
                evidence: e.evidence.to_string(),
                condition: e.condition.to_string(),
                condition_holds: e.condition_holds,
                effect: e.effect.clone(),
            })
            .collect(),
        resolutions: v.resolutions.clone(),
    });
    r.primes = Some(primes_report(&b, o.bound, o.twisted_scan)?);
    r.cite(families::CITE_STAR1);
    r.cite(families::CITE_STAR2);
    r.cite(families::CITE_PRIMES);
    Ok(r)
}

pub fn reps(word: &str, kind: Option<RepType>, max_n: u64) -> Result<Report> {
    let b = bundle_for(word)?;
    let mut args = vec![("max-n", max_n.to_string())];
    if let Some(k) = kind {
        args.push(("type", k.to_string()));
    }
    let mut r = Report::new(input("reps", Some(word), &args));
    r.bundle = Some(bundle_summary(&b));
    let kinds = match kind {
        Some(k) => vec![k],
        None => vec![RepType::A, RepType::B, RepType::C],
    };
    r.representations = Some(representations_report(&b, &kinds, max_n, true)?);
    Ok(r)
}

pub fn primes(word: &str, bound: u64, twisted: bool) -> Result<Report> {
    let b = bundle_for(word)?;
    let args = [("bound", bound.to_string()), ("twisted-scan", twisted.to_string())];
    let mut r = Report::new(input("primes", Some(word), &args));
    r.bundle = Some(bundle_summary(&b));
    r.primes = Some(primes_report(&b, Some(bound), twisted)?);
    r.cite(families::CITE_PRIMES);
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistChoice {
    Trivial,
    /// σ(x) = ζ_m^a, σ(y) = ζ_m^b.
    Explicit { m: u64, a: u64, b: u64 },
    All,
}

fn parse_root(s: &str) -> Result<(u64, i64)> {
    let bad = || Error::InvalidArgument(format!("cannot read twist value {s:?}; use 1, -1 or zeta(m)^k"));
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    match s.as_str() {
        "1" => return Ok((1, 0)),
        "-1" => return Ok((2, 1)),
        _ => {}
    }
    let (base, exp) = match s.split_once('^') {
        Some((base, e)) => (base, e.trim_start_matches('(').trim_end_matches(')').parse::<i64>().map_err(|_| bad())?),
        None => (s.as_str(), 1),
    };
    let m = base
        .strip_prefix("zeta(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| base.strip_prefix("zeta_"))
        .ok_or_else(bad)?
        .parse::<u64>()
        .map_err(|_| bad())?;
    if m == 0 {
        return Err(bad());
    }
    Ok((m, exp))
}

impl std::str::FromStr for TwistChoice {
    type Err = Error;

    /// `trivial`, `all`, or `x=zeta(m)^a,y=zeta(m)^b` (either side may be 1 or -1).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("trivial") {
            return Ok(TwistChoice::Trivial);
        }
        if t.eq_ignore_ascii_case("all") {
            return Ok(TwistChoice::All);
        }
        let (mut x, mut y) = ((1, 0), (1, 0));
        for part in t.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidArgument(format!("twist item {part:?} is not x=... or y=...")))?;
            match k.trim() {
                "x" => x = parse_root(v)?,
                "y" => y = parse_root(v)?,
                other => return Err(Error::InvalidArgument(format!("unknown twist generator {other:?}"))),
            }
        }
        let m = num_lcm(x.0, y.0);
        let scale = |(mm, e): (u64, i64)| (e * (m / mm) as i64).rem_euclid(m as i64) as u64;
        let (a, b) = (scale(x), scale(y));
        if a == 0 && b == 0 {
            return Ok(TwistChoice::Trivial);
        }
        Ok(TwistChoice::Explicit { m, a, b })
    }
}

fn num_lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn twist_label(m: u64, a: u64, b: u64) -> String {
    if a == 0 && b == 0 {
        "trivial".to_string()
    } else {
        format!("x=zeta({m})^{a},y=zeta({m})^{b}")
    }
}

fn alexander_row(b: &TorusBundle, label: String, s: &Twist<Cyclotomic>, m: u64, modp: Option<u64>) -> Result<crate::report::AlexanderRow> {
    match modp {
        None => Ok(encode::alexander_row(label, &alexander_invariants(b, s)?)),
        Some(l) => {
            let (_, omega) = splitting_field_of_unity(l, m)?;
            let t = reduce_twist(s, &omega)
                .ok_or_else(|| Error::Unsupported(format!("twist {label} does not reduce modulo {l}")))?;
            Ok(encode::alexander_row(label, &alexander_invariants(b, &t)?))
        }
    }
}

pub fn alexander(word: &str, choice: &TwistChoice, modp: Option<u64>) -> Result<Report> {
    let b = bundle_for(word)?;
    if let Some(l) = modp {
        if !is_prime(l) {
            return Err(Error::InvalidArgument(format!("--modp needs a prime, got {l}")));
        }
    }
    let twist_arg = match choice {
        TwistChoice::Trivial => "trivial".to_string(),
        TwistChoice::All => "all".to_string(),
        TwistChoice::Explicit { m, a, b } => twist_label(*m, *a, *b),
    };
    let mut args = vec![("twist", twist_arg)];
    if let Some(l) = modp {
        args.push(("modp", l.to_string()));
    }
    let mut r = Report::new(input("alexander", Some(word), &args));
    let mut summary = bundle_summary(&b);
    let rows = match choice {
        TwistChoice::Trivial => vec![match modp {
            None => encode::alexander_row("trivial".into(), &alexander_invariants(&b, &rational_trivial_twist())?),
            Some(l) => {
                let f = FiniteField::prime(l)?;
                encode::alexander_row("trivial".into(), &alexander_invariants(&b, &finite_trivial_twist(&f))?)
            }
        }],
        TwistChoice::Explicit { m, a, b: bexp } => {
            let field = CyclotomicField::new(*m);
            let s = cyclotomic_twist(&field, *a as i64, *bexp as i64);
            validate_twist(&b, &s)?;
            vec![alexander_row(&b, twist_label(*m, *a, *bexp), &s, *m, modp)?]
        }
        TwistChoice::All => {
            let n = b.n_u64()?;
            let mut rows = Vec::new();
            for (p, q, s) in all_twists(&b, n) {
                rows.push(alexander_row(&b, twist_label(n, p, q), &s, n, modp)?);
            }
            rows
        }
    };
    summary.alexander = Some(rows);
    r.bundle = Some(summary);
    Ok(r)
}

fn entry<T>(c: &Cited<T>, value: Value) -> ExpectedEntry {
    ExpectedEntry { value, citation: c.citation.to_string() }
}

fn strs<T: ToString>(v: &[T]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// The cited expectations of a fixture, keyed by name.
pub fn expected_block(f: &FamilyFixture) -> BTreeMap<String, ExpectedEntry> {
    let e = &f.expected;
    let ev = &e.evidence.value;
    let mut m = BTreeMap::new();
    m.insert("phi".into(), entry(&e.phi, strs(&e.phi.value)));
    m.insert("trace".into(), entry(&e.trace, json!(e.trace.value.to_string())));
    m.insert("torsion_invariants".into(), entry(&e.torsion_invariants, strs(&e.torsion_invariants.value)));
    m.insert("n".into(), entry(&e.n, json!(e.n.value.to_string())));
    m.insert("star1".into(), entry(&e.star1, json!(e.star1.value)));
    m.insert("star2".into(), entry(&e.star2, json!(e.star2.value)));
    m.insert(
        "evidence".into(),
        entry(
            &e.evidence,
            json!({
                "type_a": ev.type_a_on_c.to_string(),
                "type_b": ev.type_b_on_c.to_string(),
                "type_c": ev.type_c_on_c.to_string(),
                "canonical_component": ev.canonical_component,
            }),
        ),
    );
    m.insert("verdict".into(), entry(&e.verdict, json!(e.verdict.value.to_string())));
    m.insert("candidate_primes".into(), entry(&e.candidate_primes, strs(&e.candidate_primes.value)));
    if let Some(s) = &e.scan_condition2 {
        m.insert("scan_condition2".into(), entry(s, strs(&s.value)));
    }
    m
}

pub fn fixture_options(f: &FamilyFixture) -> AnalyzeOptions {
    AnalyzeOptions {
        field: f.field.clone(),
        evidence: f.expected.evidence.value,
        bound: Some(FIXTURE_SCAN_BOUND),
        ..AnalyzeOptions::new(&f.word)
    }
}

pub fn fixture_file(f: &FamilyFixture) -> Result<FixtureFile> {
    let mut report = analyze(&fixture_options(f))?;
    let mut cites: Vec<&str> = f.expected_citations();
    cites.sort_unstable();
    cites.dedup();
    for c in cites {
        report.cite(c);
    }
    Ok(FixtureFile { report, expected: expected_block(f) })
}

pub fn fixture_file_name(f: &FamilyFixture) -> String {
    match f.j {
        Some(j) => format!("{}_{j:02}.json", f.family),
        None => format!("{}.json", f.family),
    }
}

trait Citations {
    fn expected_citations(&self) -> Vec<&'static str>;
}

impl Citations for FamilyFixture {
    fn expected_citations(&self) -> Vec<&'static str> {
        let e = &self.expected;
        let mut v = vec![
            e.phi.citation,
            e.trace.citation,
            e.torsion_invariants.citation,
            e.n.citation,
            e.star1.citation,
            e.star2.citation,
            e.evidence.citation,
            e.verdict.citation,
            e.candidate_primes.citation,
        ];
        if let Some(s) = &e.scan_condition2 {
            v.push(s.citation);
        }
        v
    }
}

/// Default index range when none is given.
pub fn default_range(f: Family) -> (u64, u64) {
    match f {
        Family::TunnelOne => (1, 20),
        Family::FibCover => (1, 12),
        Family::CensusM135 => (1, 1),
    }
}

pub fn family(f: Family, range: Option<(u64, u64)>, check: bool) -> Result<FamilyReport> {
    let (lo, hi) = range.unwrap_or_else(|| default_range(f));
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range {lo}..{hi}")));
    }
    let mut args = vec![("check", check.to_string())];
    if f.is_indexed() {
        args.push(("range", format!("{lo}..{hi}")));
    }
    let mut runs = Vec::new();
    for fx in families::fixtures(f, lo..=hi)? {
        let (checks, pass) = if check {
            let c = check_fixture(&fx)?;
            let items: Vec<CheckReport> = c
                .items
                .iter()
                .map(|i| CheckReport {
                    name: i.name.to_string(),
                    expected: i.expected.clone(),
                    actual: i.actual.clone(),
                    citation: i.citation.to_string(),
                    pass: i.pass,
                })
                .collect();
            (Some(items), Some(c.pass()))
        } else {
            (None, None)
        };
        runs.push(FixtureRun {
            family: fx.family.to_string(),
            j: fx.j.map(|j| j.to_string()),
            word: fx.word.clone(),
            field: fx.field.to_string(),
            expected: expected_block(&fx),
            checks,
            pass,
        });
    }
    let pass = check.then(|| runs.iter().all(|r| r.pass == Some(true)));
    Ok(FamilyReport {
        schema_version: SCHEMA_VERSION.to_string(),
        input: input("family", None, &{
            let mut a = args;
            a.push(("name", f.to_string()));
            a
        }),
        fixtures: runs,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_parsing() {
        assert_eq!("trivial".parse::<TwistChoice>().unwrap(), TwistChoice::Trivial);
        assert_eq!("x=1,y=1".parse::<TwistChoice>().unwrap(), TwistChoice::Trivial);
        assert_eq!(
            "x=zeta(4)^1,y=zeta(4)^3".parse::<TwistChoice>().unwrap(),
            TwistChoice::Explicit { m: 4, a: 1, b: 3 }
        );
        assert_eq!(
            "x=-1,y=zeta_3".parse::<TwistChoice>().unwrap(),
            TwistChoice::Explicit { m: 6, a: 3, b: 2 }
        );
        assert_eq!("y=zeta(4)^-1".parse::<TwistChoice>().unwrap(), TwistChoice::Explicit { m: 4, a: 0, b: 3 });
        for bad in ["x=2", "z=1", "x=zeta(0)", "x=zeta(4)^a", "x"] {
            assert!(bad.parse::<TwistChoice>().is_err(), "{bad}");
        }
    }

    #[test]
    fn exit_codes_are_distinct() {
        let cases = [
            (Error::Parse { offset: 0, message: String::new() }, 2),
            (Error::InvalidArgument(String::new()), 2),
            (Error::NotHyperbolic { abs_trace: 2.into() }, 3),
            (Error::InvalidTwist { relation: String::new() }, 4),
            (Error::Unsupported(String::new()), 5),
        ];
        for (e, code) in cases {
            assert_eq!(exit_code(&e), code, "{e}");
        }
    }

    #[test]
    fn fixture_names_sort_by_index() {
        let a = families::fixture(Family::TunnelOne, Some(2)).unwrap();
        let b = families::fixture(Family::TunnelOne, Some(10)).unwrap();
        assert!(fixture_file_name(&a) < fixture_file_name(&b));
    }

    #[test]
    fn analyze_args_replay() {
        let mut o = AnalyzeOptions::new("RL");
        o.bound = Some(7);
        let keys: Vec<&str> = o.args().iter().map(|(k, _)| *k).collect();
        assert!(keys.contains(&"bound") && keys.contains(&"twisted-scan"));
        assert_eq!(analyze(&o).unwrap().input.args["evidence"], "A=unknown,B=unknown,C=unknown");
    }
}
