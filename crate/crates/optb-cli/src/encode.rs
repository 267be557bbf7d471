//! Conversions from library values to the report schema.

use optb_core::alexander::{format_laurent, AlexanderInvariant, ShowCoeff, Twist};
use optb_core::arith::cyclotomic::Cyclotomic;
use optb_core::arith::finite_field::Gf;
use optb_core::arith::laurent::LaurentPoly;
use optb_core::arith::matrix::Mat2;
use optb_core::arith::number_field::NfElem;
use optb_core::arith::poly::{format_rational_poly, Poly};
use optb_core::arith::quadratic::Quadratic;
use optb_core::arith::{rational_string, Q};
use optb_core::integral::{PrimeSet, ScanReport};
use optb_core::reps::Verification;

use crate::report::{
    AlexanderRow, Element, Laurent, LaurentTerm, Matrix, Polynomial, PrimeEntry, ScanResult, SkippedCase,
    TwistReport, VerificationReport,
};

pub trait Encode {
    fn encode(&self) -> Element;
}

fn strings(v: &[Q]) -> Vec<String> {
    v.iter().map(rational_string).collect()
}

impl Encode for Q {
    fn encode(&self) -> Element {
        Element::Rational { value: rational_string(self) }
    }
}

impl Encode for Quadratic {
    fn encode(&self) -> Element {
        match self.radicand() {
            None => self.a().encode(),
            Some(d) => Element::Quadratic {
                radicand: d.to_string(),
                coefficients: strings(&[self.a().clone(), self.b().clone()]),
                text: self.display(),
            },
        }
    }
}

impl Encode for Cyclotomic {
    fn encode(&self) -> Element {
        Element::Cyclotomic {
            conductor: self.conductor().to_string(),
            coefficients: strings(&self.coefficients()),
            text: self.display(),
        }
    }
}

impl Encode for NfElem {
    fn encode(&self) -> Element {
        match self.field() {
            None => self.poly().coeff(0).encode(),
            Some(f) => Element::NumberField {
                modulus: strings(f.modulus().coeffs()),
                coefficients: strings(self.poly().coeffs()),
                text: self.display(),
            },
        }
    }
}

impl Encode for Gf {
    fn encode(&self) -> Element {
        let (characteristic, modulus) = match self.field() {
            Some(f) => (f.characteristic().to_string(), f.modulus().iter().map(u64::to_string).collect()),
            None => (String::new(), Vec::new()),
        };
        Element::Finite {
            characteristic,
            modulus,
            coefficients: self.coefficients().iter().map(u64::to_string).collect(),
            text: self.display(),
        }
    }
}

pub fn matrix<F: Encode>(m: &Mat2<F>) -> Matrix {
    vec![vec![m.a.encode(), m.b.encode()], vec![m.c.encode(), m.d.encode()]]
}

pub fn int_matrix<T: ToString>(m: &Mat2<T>) -> Vec<Vec<String>> {
    vec![vec![m.a.to_string(), m.b.to_string()], vec![m.c.to_string(), m.d.to_string()]]
}

pub fn polynomial(p: &Poly<Q>, var: &str) -> Polynomial {
    Polynomial {
        variable: var.to_string(),
        coefficients: strings(p.coeffs()),
        text: format_rational_poly(p, var),
    }
}

pub fn laurent<F: ShowCoeff + Encode>(p: &LaurentPoly<F>) -> Laurent {
    Laurent {
        variable: "z".to_string(),
        terms: p
            .terms()
            .iter()
            .map(|(e, c)| LaurentTerm { exponent: e.to_string(), coefficient: c.encode() })
            .collect(),
        text: format_laurent(p),
    }
}

pub fn alexander_row<F: ShowCoeff + Encode>(label: String, inv: &AlexanderInvariant<F>) -> AlexanderRow {
    AlexanderRow {
        twist: twist(label, &inv.twist),
        field: inv.field.to_string(),
        delta0: laurent(&inv.delta0),
        delta1: laurent(&inv.delta1),
    }
}

pub fn twist<F: Encode>(label: String, s: &Twist<F>) -> TwistReport {
    TwistReport { label, x: s.x.encode(), y: s.y.encode() }
}

pub fn verification(v: &Verification) -> VerificationReport {
    VerificationReport {
        ok: v.ok,
        failed_relator: v.failure.as_ref().map(|f| f.0.clone()),
        failed_value: v.failure.as_ref().map(|f| f.1.clone()),
    }
}

pub fn prime_entries(s: &PrimeSet) -> Vec<PrimeEntry> {
    s.iter()
        .map(|(p, why)| PrimeEntry { prime: p.to_string(), provenance: why.iter().map(|w| w.to_string()).collect() })
        .collect()
}

pub fn prime_list(s: &PrimeSet) -> Vec<String> {
    s.primes().iter().map(u64::to_string).collect()
}

pub fn scan(r: &ScanReport, twisted: bool) -> ScanResult {
    ScanResult {
        bound: r.bound.to_string(),
        twisted,
        flagged: prime_entries(&r.flagged),
        condition1: prime_list(&r.condition1()),
        condition2: prime_list(&r.condition2()),
        twisted_flags: prime_list(&r.twisted()),
        skipped: r
            .skipped
            .iter()
            .map(|(p, m, why)| SkippedCase { prime: p.to_string(), conductor: m.to_string(), reason: why.clone() })
            .collect(),
    }
}
