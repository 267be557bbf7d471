//! Minimal polynomials over Q of elements of simple extensions.
//!
//! The characteristic polynomial Res_x(m(x), D·X − num(x)) is assembled from
//! integer resultants at the sample points X = 0, 1, …, deg m and Newton
//! interpolation; its squarefree part is the minimal polynomial, which is then
//! root-checked in the element's own field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclotomic::{cyclotomic_polynomial, Cyclotomic};
use super::intfns::{divisors, exact_sqrt};
use super::number_field::NfElem;
use super::poly::Poly;
use super::quadratic::Quadratic;
use super::resultant::resultant;
use super::{q, Field, Ring, Q};

/// An element of Q[x]/(m) with a known power basis.
pub trait PowerBasis: Field {
    /// Monic defining polynomial of the ambient field.
    fn defining_polynomial(&self) -> Poly<Q>;
    /// Coordinates of `self` in the basis 1, x, x², ….
    fn power_coordinates(&self) -> Poly<Q>;
    /// A rational number in the same field as `self`.
    fn rational_like(&self, c: &Q) -> Self;
}

impl PowerBasis for Q {
    fn defining_polynomial(&self) -> Poly<Q> {
        Poly::from_ints(&[0, 1])
    }
    fn power_coordinates(&self) -> Poly<Q> {
        Poly::constant(self.clone())
    }
    fn rational_like(&self, c: &Q) -> Self {
        c.clone()
    }
}

impl PowerBasis for Cyclotomic {
    fn defining_polynomial(&self) -> Poly<Q> {
        cyclotomic_polynomial(self.conductor())
    }
    fn power_coordinates(&self) -> Poly<Q> {
        self.to_poly()
    }
    fn rational_like(&self, c: &Q) -> Self {
        Cyclotomic::rational(self.field(), c)
    }
}

impl PowerBasis for Quadratic {
    fn defining_polynomial(&self) -> Poly<Q> {
        match self.radicand() {
            None => Poly::from_ints(&[0, 1]),
            Some(d) => Poly::from_ints(&[-d, 0, 1]),
        }
    }
    fn power_coordinates(&self) -> Poly<Q> {
        match self.radicand() {
            None => Poly::constant(self.a().clone()),
            Some(_) => Poly::new(vec![self.a().clone(), self.b().clone()]),
        }
    }
    fn rational_like(&self, c: &Q) -> Self {
        self.int_like(0) + Quadratic::rational(c.clone())
    }
}

impl PowerBasis for NfElem {
    fn defining_polynomial(&self) -> Poly<Q> {
        match self.field() {
            None => Poly::from_ints(&[0, 1]),
            Some(f) => f.modulus().clone(),
        }
    }
    fn power_coordinates(&self) -> Poly<Q> {
        self.poly().clone()
    }
    fn rational_like(&self, c: &Q) -> Self {
        self.int_like(0) + NfElem::rational(c.clone())
    }
}

/// Integer numerator vector and common denominator of a rational polynomial.
fn clear_denominators(p: &Poly<Q>) -> (Poly<BigInt>, BigInt) {
    let den = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let num = p.map(|c| (c * Q::from_integer(den.clone())).to_integer());
    (num, den)
}

/// Newton interpolation through (i, values[i]) for i = 0, 1, ….
fn interpolate_at_naturals(values: &[Q]) -> Poly<Q> {
    let n = values.len();
    let mut dd: Vec<Q> = values.to_vec();
    let mut coef = Vec::with_capacity(n);
    for level in 0..n {
        coef.push(dd[0].clone());
        // with nodes 0, 1, 2, … the divided-difference denominator is `level + 1`
        dd = dd
            .windows(2)
            .map(|w| (&w[1] - &w[0]) / q(level as i64 + 1))
            .collect();
    }
    let mut acc = Poly::new(vec![]);
    for (k, c) in coef.iter().enumerate().rev() {
        acc = acc * Poly::from_ints(&[-(k as i64), 1]) + Poly::constant(c.clone());
    }
    acc
}

/// Characteristic polynomial of multiplication by `e`, by resultant elimination.
pub fn characteristic_polynomial<E: PowerBasis>(e: &E) -> Poly<Q> {
    let m = e.defining_polynomial().primitive_integer();
    let deg = m.degree().unwrap();
    let (num, den) = clear_denominators(&e.power_coordinates());
    let values: Vec<Q> = (0..=deg)
        .map(|x0| {
            let mut g: Vec<BigInt> = num.coeffs().iter().map(|c| -c).collect();
            if g.is_empty() {
                g.push(BigInt::zero());
            }
            g[0] += &den * BigInt::from(x0);
            Q::from_integer(resultant(&m, &Poly::new(g)))
        })
        .collect();
    interpolate_at_naturals(&values).monic()
}

/// Monic minimal polynomial over Q.
pub fn minimal_polynomial<E: PowerBasis>(e: &E) -> Poly<Q> {
    let mp = characteristic_polynomial(e).squarefree_part();
    assert!(evaluate_at(&mp, e).is_zero(), "minimal polynomial does not vanish at its element");
    mp
}

/// `p(e)` computed in the field of `e`.
pub fn evaluate_at<E: PowerBasis>(p: &Poly<Q>, e: &E) -> E {
    let mut acc = e.int_like(0);
    for c in p.coeffs().iter().rev() {
        acc = acc * e.clone() + e.rational_like(c);
    }
    acc
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let v = n.abs().to_u64()?;
    if v > 1 << 40 {
        return None;
    }
    Some(divisors(v).into_iter().map(BigInt::from).collect())
}

/// Irreducibility over Q for degree ≤ 4: rational root test, plus a search over
/// monic integer quadratic factors for quartics. `None` above degree 4 or when
/// the constant term is too large to enumerate divisors.
pub fn is_irreducible_up_to_quartic(p: &Poly<Q>) -> Option<bool> {
    let deg = p.degree()?;
    if deg == 0 {
        return Some(false);
    }
    if deg == 1 {
        return Some(true);
    }
    if deg > 4 {
        return None;
    }
    let z = p.primitive_integer();
    let c = z.coeffs().to_vec();
    if c[0].is_zero() {
        return Some(false);
    }
    let pr = super::poly::to_rational_poly(&z);
    for num in small_divisors(&c[0])? {
        for den in small_divisors(&c[deg])? {
            for s in [BigInt::one(), -BigInt::one()] {
                let r = Q::new(&s * &num, den.clone());
                if pr.eval(&r).is_zero() {
                    return Some(false);
                }
            }
        }
    }
    if deg < 4 {
        return Some(true);
    }
    // a^3 p(x/a) is monic with integer coefficients
    let a = c[4].clone();
    let m: Vec<BigInt> = (0..4).map(|i| &c[i] * a.pow(3 - i as u32)).collect();
    // (x² + b x + e)(x² + b' x + e'): e e' = m0, b + b' = m3, e + e' + b b' = m2,
    // b e' + b' e = m1; for each divisor e, b solves b² − m3 b + (m2 − e − e') = 0
    for d in small_divisors(&m[0])? {
        for e in [d.clone(), -d] {
            let e2 = &m[0] / &e;
            let disc = &m[3] * &m[3] - 4 * (&m[2] - &e - &e2);
            let Some(r) = exact_sqrt(&disc) else { continue };
            for root in [&m[3] + &r, &m[3] - &r] {
                if root.is_odd() {
                    continue;
                }
                let b = root / 2;
                let b2 = &m[3] - &b;
                if &b * &e2 + &b2 * &e == m[1] {
                    return Some(false);
                }
            }
        }
    }
    Some(true)
}
