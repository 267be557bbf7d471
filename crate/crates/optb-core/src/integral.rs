//! Candidate bad-prime sets: the torsion set S, the finite-field obstruction
//! scan and its closed form for traces a² + 2.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::alexander::{alexander_invariants, splitting_field_of_unity, Twist};
use crate::arith::ffpoly::{self, factor_small};
use crate::arith::finite_field::{FiniteField, Gf};
use crate::arith::intfns::{divisors, exact_sqrt, factor_u64, mult_order, primes_up_to};
use crate::arith::{Field, Ring};
use crate::error::{Error, Result};
use crate::monodromy::{character_exponents, TorusBundle};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    /// An odd prime dividing n.
    TorsionDivisor,
    AlwaysTwo,
    /// ℓ has order 2 modulo some m | n, m > 1.
    RootOfUnity { m: u64 },
    /// A root w of x⁴ − Tr x² + 1 with F_ℓ(w) ≠ F_ℓ(w + 1/w); `degree` is [F_ℓ(w) : F_ℓ].
    CharacteristicPolynomial { degree: usize },
    /// A root of a twisted Δ₀ over F_ℓ(μ_m) that is not a square there.
    TwistedInvariant { m: u64 },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::TorsionDivisor => write!(f, "torsion divisor"),
            Provenance::AlwaysTwo => write!(f, "always 2"),
            Provenance::RootOfUnity { m } => write!(f, "condition (1), m = {m}"),
            Provenance::CharacteristicPolynomial { degree } => {
                write!(f, "condition (2), root of degree {degree}")
            }
            Provenance::TwistedInvariant { m } => write!(f, "condition (2), twist of conductor {m}"),
        }
    }
}

/// Sorted, deduplicated primes, each with the reasons it was included.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimeSet {
    entries: BTreeMap<u64, Vec<Provenance>>,
}

impl PrimeSet {
    pub fn new() -> Self {
        PrimeSet::default()
    }

    pub fn insert(&mut self, p: u64, why: Provenance) {
        let v = self.entries.entry(p).or_default();
        if !v.contains(&why) {
            v.push(why);
            v.sort();
        }
    }

    pub fn primes(&self) -> Vec<u64> {
        self.entries.keys().copied().collect()
    }

    pub fn provenance(&self, p: u64) -> &[Provenance] {
        self.entries.get(&p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &[Provenance])> {
        self.entries.iter().map(|(p, v)| (*p, v.as_slice()))
    }

    pub fn contains(&self, p: u64) -> bool {
        self.entries.contains_key(&p)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.entries.keys().all(|p| other.contains(*p))
    }

    /// The primes with at least one reason satisfying `keep`, restricted to those reasons.
    pub fn filter(&self, keep: impl Fn(&Provenance) -> bool) -> PrimeSet {
        let mut out = PrimeSet::new();
        for (p, v) in self.iter() {
            for why in v.iter().filter(|w| keep(w)) {
                out.insert(p, why.clone());
            }
        }
        out
    }

    pub fn merge(&mut self, other: &PrimeSet) {
        for (p, v) in other.iter() {
            for why in v {
                self.insert(p, why.clone());
            }
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.primes().iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", ps.join(", "))
    }
}

/// S = {odd primes dividing n} ∪ {2}.
pub fn candidate_prime_set(b: &TorusBundle) -> Result<PrimeSet> {
    Ok(candidate_prime_set_for(b.n_u64()?))
}

pub fn candidate_prime_set_for(n: u64) -> PrimeSet {
    let mut s = PrimeSet::new();
    s.insert(2, Provenance::AlwaysTwo);
    for (p, _) in factor_u64(n.max(1)) {
        if p != 2 {
            s.insert(p, Provenance::TorsionDivisor);
        }
    }
    s
}

/// The smallest m | n, m > 1, coprime to ℓ, with ℓ of multiplicative order 2 mod m.
pub fn root_of_unity_witness(l: u64, n: u64) -> Option<u64> {
    divisors(n.max(1)).into_iter().find(|&m| m > 1 && m.gcd(&l) == 1 && mult_order(l % m, m) == Some(2))
}

/// The irreducible factors g of x⁴ − Tr x² + 1 over F_ℓ whose root w satisfies
/// F_ℓ(w) ≠ F_ℓ(w + 1/w), as (degree of g).
pub fn characteristic_obstructions(trace: &BigInt, l: u64) -> Result<Vec<usize>> {
    let t = trace.mod_floor(&BigInt::from(l)).to_u64().unwrap();
    let quartic = vec![1, 0, (l - t) % l, 0, 1];
    let mut out = Vec::new();
    for (g, _) in factor_small(&quartic, l) {
        let deg = ffpoly::degree(&g).unwrap();
        // w is the class of x in F_ℓ[x]/(g)
        let field = FiniteField::new(l, &g)?;
        let w = Gf::from_poly(&field, &[0, 1]);
        let s = w.clone() + w.inv().expect("0 is not a root");
        if s.degree_over_prime_field() < deg {
            out.push(deg);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanReport {
    pub bound: u64,
    pub flagged: PrimeSet,
    /// (ℓ, m, reason) for twisted checks that could not be carried out.
    pub skipped: Vec<(u64, u64, String)>,
}

impl ScanReport {
    pub fn condition1(&self) -> PrimeSet {
        self.flagged.filter(|w| matches!(w, Provenance::RootOfUnity { .. }))
    }

    pub fn condition2(&self) -> PrimeSet {
        self.flagged.filter(|w| matches!(w, Provenance::CharacteristicPolynomial { .. }))
    }

    pub fn twisted(&self) -> PrimeSet {
        self.flagged.filter(|w| matches!(w, Provenance::TwistedInvariant { .. }))
    }
}

/// Flags the primes ℓ ≤ `bound` at which a quadratic obstruction exists over F_ℓ.
/// With `twisted`, Δ₀ of every character of F of conductor m | n (ℓ ∤ m) is
/// also examined over F_ℓ(μ_m).
pub fn finite_field_scan(b: &TorusBundle, bound: u64, twisted: bool) -> Result<ScanReport> {
    if bound < 2 {
        return Err(Error::InvalidArgument(format!("prime bound {bound} is below 2")));
    }
    let n = b.n_u64()?;
    let mut flagged = PrimeSet::new();
    let mut skipped = Vec::new();
    for l in primes_up_to(bound) {
        if let Some(m) = root_of_unity_witness(l, n) {
            flagged.insert(l, Provenance::RootOfUnity { m });
        }
        for degree in characteristic_obstructions(b.trace(), l)? {
            flagged.insert(l, Provenance::CharacteristicPolynomial { degree });
        }
        if twisted && n > 1 {
            twisted_scan_prime(b, n, l, &mut flagged, &mut skipped)?;
        }
    }
    Ok(ScanReport { bound, flagged, skipped })
}

fn twisted_scan_prime(
    b: &TorusBundle,
    n: u64,
    l: u64,
    flagged: &mut PrimeSet,
    skipped: &mut Vec<(u64, u64, String)>,
) -> Result<()> {
    let chars = character_exponents(b, n);
    for m in divisors(n).into_iter().filter(|&m| m > 1 && m % l != 0) {
        let omega = match splitting_field_of_unity(l, m) {
            Ok((_, omega)) => omega,
            Err(Error::Unsupported(msg)) => {
                skipped.push((l, m, msg));
                continue;
            }
            Err(e) => return Err(e),
        };
        let step = n / m;
        for &(p, q) in &chars {
            // characters of exact conductor m
            if p % step != 0 || q % step != 0 || n / n.gcd(&p).gcd(&q) != m {
                continue;
            }
            let s = Twist::new(omega.pow_u64(p / step), omega.pow_u64(q / step));
            let inv = match alexander_invariants(b, &s) {
                Ok(v) => v,
                Err(Error::DegenerateJacobian) => {
                    skipped.push((l, m, format!("degenerate Jacobian at ({p}, {q})")));
                    continue;
                }
                Err(e) => return Err(e),
            };
            let (_, d0) = inv.delta0.to_poly();
            match d0.degree() {
                Some(0) => {}
                Some(1) => {
                    let z = -d0.coeff(0) * d0.coeff(1).inv().unwrap();
                    if l != 2 && !z.is_zero() && !z.is_square() {
                        flagged.insert(l, Provenance::TwistedInvariant { m });
                    }
                }
                other => skipped.push((l, m, format!("twisted invariant of degree {other:?} at ({p}, {q})"))),
            }
        }
    }
    Ok(())
}

/// For Tr = a² + 2: {2} when Tr is odd and ∅ when even; `None` otherwise.
pub fn lemma_finfield_closed_form(trace: &BigInt) -> Option<PrimeSet> {
    let a2: BigInt = trace - 2;
    if a2.is_negative() {
        return None;
    }
    exact_sqrt(&a2)?;
    let mut out = PrimeSet::new();
    if trace.is_odd() {
        out.insert(2, Provenance::CharacteristicPolynomial { degree: 2 });
    }
    Some(out)
}
