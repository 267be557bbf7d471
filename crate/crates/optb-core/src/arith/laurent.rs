//! Laurent polynomials in one variable `z` over an exact field.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{format_terms, Poly};
use super::{Field, Ring};
use crate::error::{Error, Result};

/// Sparse map exponent -> coefficient; zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct LaurentPoly<F> {
    terms: BTreeMap<i64, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn from_terms(iter: impl IntoIterator<Item = (i64, F)>) -> Self {
        let mut terms: BTreeMap<i64, F> = BTreeMap::new();
        for (e, c) in iter {
            let entry = terms.entry(e).or_insert_with(|| c.int_like(0));
            *entry = entry.clone() + c;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    pub fn constant(c: F) -> Self {
        Self::from_terms([(0, c)])
    }

    pub fn monomial(c: F, e: i64) -> Self {
        Self::from_terms([(e, c)])
    }

    pub fn from_poly(p: &Poly<F>, shift: i64) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + shift, c.clone())),
        )
    }

    pub fn terms(&self) -> &BTreeMap<i64, F> {
        &self.terms
    }

    pub fn coeff(&self, e: i64) -> F {
        self.terms.get(&e).cloned().unwrap_or_else(F::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Span max - min; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        Some(self.max_exp()? - self.min_exp()?)
    }

    /// Ordinary polynomial after multiplying by `z^-min_exp`.
    pub fn to_poly(&self) -> (i64, Poly<F>) {
        let Some(lo) = self.min_exp() else { return (0, Poly::zero()) };
        let hi = self.max_exp().unwrap();
        let like = self.terms.values().next().unwrap().int_like(0);
        let mut v = vec![like; (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, Poly::new(v))
    }

    /// Unit-class representative: monic with nonzero constant term, or 1 for units.
    pub fn normalized(&self) -> Self {
        let (_, p) = self.to_poly();
        if p.degree().unwrap_or(0) == 0 {
            let like = self.terms.values().next().map(|c| c.int_like(1)).unwrap_or_else(F::one);
            return if self.is_zero() { self.clone() } else { Self::constant(like) };
        }
        Self::from_poly(&p.monic(), 0)
    }

    pub fn eval(&self, at: &F) -> F {
        let mut acc = at.int_like(0);
        for (e, c) in &self.terms {
            acc = acc + c.clone() * at.pow_i64(*e).expect("negative power of zero");
        }
        acc
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    pub fn display_with(&self, show: impl Fn(&F) -> String, negative: impl Fn(&F) -> bool) -> String {
        let terms: Vec<(i64, F)> = self.terms.iter().map(|(e, c)| (*e, c.clone())).collect();
        format_terms(&terms, "z", show, negative)
    }
}

/// Normalized gcd of a family of Laurent polynomials.
pub fn laurent_gcd<F: Field>(polys: &[LaurentPoly<F>]) -> Result<LaurentPoly<F>> {
    let mut acc: Option<Poly<F>> = None;
    for p in polys.iter().filter(|p| !p.is_zero()) {
        let (_, q) = p.to_poly();
        acc = Some(match acc {
            None => q.monic(),
            Some(a) => a.gcd(&q),
        });
    }
    let g = acc.ok_or(Error::DegenerateJacobian)?;
    Ok(LaurentPoly::from_poly(&g, 0).normalized())
}

/// Exact division of Laurent polynomials when the quotient is Laurent.
pub fn laurent_div_exact<F: Field>(a: &LaurentPoly<F>, b: &LaurentPoly<F>) -> Option<LaurentPoly<F>> {
    let (sa, pa) = a.to_poly();
    let (sb, pb) = b.to_poly();
    if pb.is_zero() {
        return None;
    }
    let (qt, r) = pa.div_rem(&pb);
    if !r.is_zero() {
        return None;
    }
    Some(LaurentPoly::from_poly(&qt, sa - sb))
}

impl<F: Field> Zero for LaurentPoly<F> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field> One for LaurentPoly<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Ring for LaurentPoly<F> {
    fn int_like(&self, n: i64) -> Self {
        let like = self.terms.values().next().cloned().unwrap_or_else(F::one);
        Self::constant(like.int_like(n))
    }
}

impl<F: Field> Add for LaurentPoly<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::from_terms(self.terms.into_iter().chain(o.terms))
    }
}

impl<F: Field> Neg for LaurentPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<F: Field> Sub for LaurentPoly<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<F: Field> Mul for LaurentPoly<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                out.push((ea + eb, ca.clone() * cb.clone()));
            }
        }
        Self::from_terms(out)
    }
}

impl fmt::Display for LaurentPoly<super::Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.display_with(super::rational_string, |c| c < &super::Q::zero());
        write!(f, "{s}")
    }
}
