//! Finite fields F_{p^k}, k ≤ 4, as F_p[x] modulo a verified irreducible.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::ffpoly::{self, FpPoly};
use super::intfns::{factor_u64, is_prime};
use super::{Field, FieldTag, Ring};
use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 4;

#[derive(Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: usize,
    modulus: FpPoly,
}

impl FiniteField {
    pub fn new(p: u64, modulus: &[u64]) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        let m = ffpoly::monic(&ffpoly::trim(modulus.iter().map(|c| c % p).collect()), p);
        let k = ffpoly::degree(&m).unwrap_or(0);
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::Unsupported(format!("extension degree {k} (supported: 1..=4)")));
        }
        if !ffpoly::is_irreducible(&m, p) {
            return Err(Error::InvalidArgument(format!("modulus {m:?} is reducible over F_{p}")));
        }
        Ok(Arc::new(FiniteField { p, k, modulus: m }))
    }

    pub fn prime(p: u64) -> Result<Arc<Self>> {
        FiniteField::new(p, &[0, 1])
    }

    /// F_{p^k} with the lexicographically first irreducible modulus.
    pub fn of_degree(p: u64, k: usize) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::Unsupported(format!("extension degree {k} (supported: 1..=4)")));
        }
        FiniteField::new(p, &ffpoly::first_irreducible(p, k))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.k as u32)
    }

    pub fn generator(self: &Arc<Self>) -> Gf {
        Gf::from_poly(self, &[0, 1])
    }

    /// The `idx`-th element in base-p digit order.
    pub fn element_by_index(self: &Arc<Self>, mut idx: u128) -> Gf {
        let mut c = vec![0u64; self.k];
        for slot in c.iter_mut() {
            *slot = (idx % self.p as u128) as u64;
            idx /= self.p as u128;
        }
        Gf::from_poly(self, &c)
    }

    /// Some element of exact multiplicative order m, if m divides |F^*|.
    pub fn root_of_unity(self: &Arc<Self>, m: u64) -> Option<Gf> {
        let group = self.order() - 1;
        if m == 0 || !group.is_multiple_of(m as u128) {
            return None;
        }
        let cof = group / m as u128;
        for idx in 1..self.order() {
            let h = self.element_by_index(idx).pow_u128(cof);
            if h.multiplicative_order() == Some(m as u128) {
                return Some(h);
            }
        }
        None
    }
}

/// Element of a finite field. `Int` is a context-free integer constant
/// (used for `zero()`/`one()`), promoted on contact with a field element.
#[derive(Clone, Debug)]
pub enum Gf {
    Int(i64),
    Elem(Arc<FiniteField>, FpPoly),
}

impl Gf {
    pub fn from_poly(field: &Arc<FiniteField>, c: &[u64]) -> Self {
        let reduced = ffpoly::rem(&ffpoly::trim(c.iter().map(|x| x % field.p).collect()), &field.modulus, field.p);
        Gf::Elem(field.clone(), reduced)
    }

    pub fn from_int(field: &Arc<FiniteField>, n: i64) -> Self {
        Gf::from_poly(field, &[n.rem_euclid(field.p as i64) as u64])
    }

    pub fn field(&self) -> Option<&Arc<FiniteField>> {
        match self {
            Gf::Int(_) => None,
            Gf::Elem(f, _) => Some(f),
        }
    }

    /// Coefficient vector of length k (requires a field context).
    pub fn coefficients(&self) -> Vec<u64> {
        match self {
            Gf::Int(n) => vec![*n as u64],
            Gf::Elem(f, c) => {
                let mut v = c.clone();
                v.resize(f.k, 0);
                v
            }
        }
    }

    fn lift(&self, field: &Arc<FiniteField>) -> FpPoly {
        match self {
            Gf::Int(n) => ffpoly::trim(vec![n.rem_euclid(field.p as i64) as u64]),
            Gf::Elem(_, c) => c.clone(),
        }
    }

    fn binop(self, o: Self, op: impl Fn(&[u64], &[u64], &FiniteField) -> FpPoly, int_op: impl Fn(i64, i64) -> i64) -> Self {
        match (&self, &o) {
            (Gf::Int(a), Gf::Int(b)) => Gf::Int(int_op(*a, *b)),
            (Gf::Elem(f, _), _) | (_, Gf::Elem(f, _)) => {
                if let (Gf::Elem(f1, _), Gf::Elem(f2, _)) = (&self, &o) {
                    assert!(Arc::ptr_eq(f1, f2) || f1 == f2, "mixing different finite fields");
                }
                let f = f.clone();
                let r = op(&self.lift(&f), &o.lift(&f), &f);
                Gf::Elem(f, r)
            }
        }
    }

    pub fn pow_u128(&self, mut e: u128) -> Self {
        let mut base = self.clone();
        let mut acc = self.int_like(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    pub fn frobenius(&self) -> Self {
        match self {
            Gf::Int(_) => self.clone(),
            Gf::Elem(f, _) => self.pow_u128(f.p as u128),
        }
    }

    /// Degree over the prime field of the subfield generated by this element.
    pub fn degree_over_prime_field(&self) -> usize {
        let mut cur = self.frobenius();
        let mut d = 1;
        while cur != *self {
            cur = cur.frobenius();
            d += 1;
        }
        d
    }

    pub fn multiplicative_order(&self) -> Option<u128> {
        let f = self.field()?;
        if self.is_zero() {
            return None;
        }
        let group = f.order() - 1;
        let mut ord = group;
        for (r, _) in factor_u64(group as u64) {
            while ord % r as u128 == 0 && self.pow_u128(ord / r as u128).is_one() {
                ord /= r as u128;
            }
        }
        Some(ord)
    }

    /// Euler's criterion; every element is a square in characteristic 2.
    pub fn is_square(&self) -> bool {
        match self {
            Gf::Int(_) => panic!("square test needs a field context"),
            Gf::Elem(f, _) => {
                if self.is_zero() || f.p == 2 {
                    return true;
                }
                self.pow_u128((f.order() - 1) / 2).is_one()
            }
        }
    }

    pub fn display(&self) -> String {
        match self {
            Gf::Int(n) => n.to_string(),
            Gf::Elem(f, c) => {
                if f.k == 1 {
                    return c.first().copied().unwrap_or(0).to_string();
                }
                let p = super::poly::Poly::new(c.iter().map(|&x| num_bigint::BigInt::from(x)).collect());
                super::poly::format_poly_with(&p, "g", |x| x.to_string(), |_| false)
            }
        }
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl PartialEq for Gf {
    fn eq(&self, o: &Self) -> bool {
        match (self, o) {
            (Gf::Int(a), Gf::Int(b)) => a == b,
            (Gf::Elem(f, a), other) | (other, Gf::Elem(f, a)) => *a == other.lift(f),
        }
    }
}

impl Zero for Gf {
    fn zero() -> Self {
        Gf::Int(0)
    }
    fn is_zero(&self) -> bool {
        match self {
            Gf::Int(n) => *n == 0,
            Gf::Elem(_, c) => c.is_empty(),
        }
    }
}

impl One for Gf {
    fn one() -> Self {
        Gf::Int(1)
    }
}

impl Add for Gf {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.binop(o, |a, b, f| ffpoly::add(a, b, f.p), |a, b| a + b)
    }
}

impl Sub for Gf {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.binop(o, |a, b, f| ffpoly::sub(a, b, f.p), |a, b| a - b)
    }
}

impl Neg for Gf {
    type Output = Self;
    fn neg(self) -> Self {
        Gf::Int(0) - self
    }
}

impl Mul for Gf {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.binop(
            o,
            |a, b, f| ffpoly::rem(&ffpoly::mul(a, b, f.p), &f.modulus, f.p),
            |a, b| a * b,
        )
    }
}

impl Ring for Gf {
    fn int_like(&self, n: i64) -> Self {
        match self {
            Gf::Int(_) => Gf::Int(n),
            Gf::Elem(f, _) => Gf::from_int(f, n),
        }
    }
}

impl Field for Gf {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match self {
            Gf::Int(1) => Some(Gf::Int(1)),
            Gf::Int(-1) => Some(Gf::Int(-1)),
            Gf::Int(n) => panic!("cannot invert the bare integer {n} without a field context"),
            Gf::Elem(f, _) => Some(self.pow_u128(f.order() - 2)),
        }
    }

    fn tag(&self) -> FieldTag {
        match self {
            Gf::Int(_) => FieldTag::Rational,
            Gf::Elem(f, _) => FieldTag::Finite { p: f.p, k: f.k },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_input() {
        assert!(FiniteField::prime(9).is_err());
        assert!(FiniteField::new(2, &[1, 0, 1]).is_err());
        assert!(matches!(FiniteField::of_degree(3, 5), Err(Error::Unsupported(_))));
    }

    #[test]
    fn f4_arithmetic() {
        let f4 = FiniteField::new(2, &[1, 1, 1]).unwrap();
        let w = f4.generator();
        assert_eq!(w.clone() * w.clone() + w.clone() + Gf::one(), Gf::zero());
        let v = w.clone() + w.inv().unwrap();
        assert_eq!(v, Gf::from_int(&f4, 1));
        assert_eq!(w.degree_over_prime_field(), 2);
        assert_eq!(v.degree_over_prime_field(), 1);
        assert_eq!(w.multiplicative_order(), Some(3));
    }

    #[test]
    fn roots_of_unity_exist_where_expected() {
        let f49 = FiniteField::of_degree(7, 2).unwrap();
        let z = f49.root_of_unity(8).unwrap();
        assert_eq!(z.multiplicative_order(), Some(8));
        assert!(FiniteField::prime(7).unwrap().root_of_unity(4).is_none());
    }

    #[test]
    fn euler_criterion() {
        let f7 = FiniteField::prime(7).unwrap();
        let squares: Vec<i64> = (1..7).filter(|&a| Gf::from_int(&f7, a).is_square()).collect();
        assert_eq!(squares, vec![1, 2, 4]);
    }
}
