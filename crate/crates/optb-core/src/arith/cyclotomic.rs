//! Cyclotomic fields Q(ζ_n), elements stored in the power basis modulo Φ_n.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::intfns::{divisors, euler_phi};
use super::poly::{to_rational_poly, Poly};
use super::{rational_string, Field, FieldTag, Ring, Q};

/// Φ_n with integer coefficients.
pub fn cyclotomic_polynomial_int(n: u64) -> Poly<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let mut num = Poly::monomial(BigInt::one(), n as usize) - Poly::constant(BigInt::one());
    for d in divisors(n) {
        if d < n {
            num = num.div_exact_poly(&cyclotomic_polynomial_int(d));
        }
    }
    num
}

pub fn cyclotomic_polynomial(n: u64) -> Poly<Q> {
    to_rational_poly(&cyclotomic_polynomial_int(n))
}

/// Context for Q(ζ_n): Φ_n and the reductions of ζ^j for 0 ≤ j < n.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u64,
    phi: usize,
    modulus: Poly<BigInt>,
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicField {
    pub fn new(n: u64) -> Arc<Self> {
        assert!(n >= 1, "conductor must be positive");
        let modulus = cyclotomic_polynomial_int(n);
        let phi = euler_phi(n) as usize;
        let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(n as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by ζ and reduce
            let top = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            next[1..phi].clone_from_slice(&cur[..phi - 1]);
            if !top.is_zero() {
                for (i, m) in modulus.coeffs().iter().take(phi).enumerate() {
                    next[i] -= &top * m;
                }
            }
            cur = next;
        }
        Arc::new(CyclotomicField { n, phi, modulus, powers })
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &Poly<BigInt> {
        &self.modulus
    }

    /// ζ^k as a reduced integer vector.
    fn power(&self, k: i64) -> &[BigInt] {
        &self.powers[k.rem_euclid(self.n as i64) as usize]
    }
}

#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    fn from_parts(field: Arc<CyclotomicField>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut out = Cyclotomic { field, num, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -self.den.clone();
            for c in &mut self.num {
                *c = -c.clone();
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn rational(field: &Arc<CyclotomicField>, x: &Q) -> Self {
        let mut num = vec![BigInt::zero(); field.phi];
        num[0] = x.numer().clone();
        Cyclotomic::from_parts(field.clone(), num, x.denom().clone())
    }

    pub fn from_rational(x: &Q) -> Self {
        Cyclotomic::rational(&CyclotomicField::new(1), x)
    }

    pub fn zeta_pow(field: &Arc<CyclotomicField>, k: i64) -> Self {
        Cyclotomic { field: field.clone(), num: field.power(k).to_vec(), den: BigInt::one() }
    }

    pub fn zeta(field: &Arc<CyclotomicField>) -> Self {
        Self::zeta_pow(field, 1)
    }

    /// Element with the given rational power-basis coefficients (reduced mod Φ_n).
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: &[Q]) -> Self {
        let mut acc = Cyclotomic::rational(field, &Q::zero());
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + Cyclotomic::zeta_pow(field, k as i64) * Cyclotomic::rational(field, c);
            }
        }
        acc
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn conductor(&self) -> u64 {
        self.field.n
    }

    pub fn coefficients(&self) -> Vec<Q> {
        self.num
            .iter()
            .map(|c| Q::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn to_poly(&self) -> Poly<Q> {
        Poly::new(self.coefficients())
    }

    pub fn as_rational(&self) -> Option<Q> {
        if self.num.iter().skip(1).all(|c| c.is_zero()) {
            Some(Q::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Image in Q(ζ_m) for a multiple m of the conductor.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Self {
        let n = self.field.n;
        let m = target.n;
        assert!(m.is_multiple_of(n), "cannot embed Q(zeta_{n}) into Q(zeta_{m})");
        if m == n {
            return self.clone();
        }
        let step = (m / n) as i64;
        let mut num = vec![BigInt::zero(); target.phi];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (acc, v) in num.iter_mut().zip(target.power(k as i64 * step)) {
                *acc += c * v;
            }
        }
        Cyclotomic::from_parts(target.clone(), num, self.den.clone())
    }

    /// The automorphism ζ ↦ ζ^u, for u coprime to the conductor.
    pub fn galois(&self, u: i64) -> Self {
        let n = self.field.n as i64;
        assert!(u.gcd(&n) == 1, "galois exponent must be a unit");
        let mut num = vec![BigInt::zero(); self.field.phi];
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (acc, v) in num.iter_mut().zip(self.field.power(k as i64 * u)) {
                *acc += c * v;
            }
        }
        Cyclotomic::from_parts(self.field.clone(), num, self.den.clone())
    }

    /// Whether this element lies in Q(ζ_m), tested by Galois invariance inside Q(ζ_lcm).
    pub fn lies_in_cyclotomic(&self, m: u64) -> bool {
        let l = self.field.n.lcm(&m);
        let big = CyclotomicField::new(l);
        let e = self.embed(&big);
        (1..l as i64)
            .filter(|u| u.gcd(&(l as i64)) == 1 && (*u as u64) % m == 1 % m)
            .all(|u| e.galois(u) == e)
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        if Arc::ptr_eq(&a.field, &b.field) || a.field.n == b.field.n {
            return (a.clone(), b.clone());
        }
        if a.field.n == 1 {
            return (a.embed(&b.field), b.clone());
        }
        if b.field.n == 1 {
            return (a.clone(), b.embed(&a.field));
        }
        let big = CyclotomicField::new(a.field.n.lcm(&b.field.n));
        (a.embed(&big), b.embed(&big))
    }

    pub fn display(&self) -> String {
        let var = format!("zeta{}", self.field.n);
        let p = self.to_poly();
        super::poly::format_poly_with(&p, &var, rational_string, |c| c < &Q::zero())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({})", self.display())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.field.n == other.field.n {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = Cyclotomic::unify(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(&Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_rational(&Q::one())
    }
}

impl Add for Cyclotomic {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (a, b) = if self.field.n == o.field.n { (self, o) } else { Cyclotomic::unify(&self, &o) };
        if a.den == b.den {
            let num = a.num.iter().zip(&b.num).map(|(x, y)| x + y).collect();
            return Cyclotomic::from_parts(a.field, num, a.den);
        }
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * &b.den + y * &a.den)
            .collect();
        Cyclotomic::from_parts(a.field, num, a.den * b.den)
    }
}

impl Neg for Cyclotomic {
    type Output = Self;
    fn neg(self) -> Self {
        Cyclotomic { field: self.field, num: self.num.into_iter().map(|c| -c).collect(), den: self.den }
    }
}

impl Sub for Cyclotomic {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for Cyclotomic {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = if self.field.n == o.field.n { (self, o) } else { Cyclotomic::unify(&self, &o) };
        let f = a.field.clone();
        let n = f.n as usize;
        let phi = f.phi;
        let mut acc = vec![BigInt::zero(); n.min(2 * phi - 1)];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                acc[(i + j) % n] += x * y;
            }
        }
        let mut num = vec![BigInt::zero(); phi];
        for (k, c) in acc.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                num[k] += c;
            } else {
                for (t, v) in num.iter_mut().zip(&f.powers[k]) {
                    *t += &c * v;
                }
            }
        }
        Cyclotomic::from_parts(f, num, a.den * b.den)
    }
}

impl Ring for Cyclotomic {
    fn int_like(&self, n: i64) -> Self {
        Cyclotomic::rational(&self.field, &Q::from_integer(BigInt::from(n)))
    }
}

impl Field for Cyclotomic {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Cyclotomic::rational(&self.field, &r.recip()));
        }
        // a⁻¹ = (product of the other conjugates) / N(a); everything stays integral
        let n = self.field.n as i64;
        let mut rest = Cyclotomic::rational(&self.field, &Q::one());
        for u in 2..n {
            if u.gcd(&n) == 1 {
                rest = rest * self.galois(u);
            }
        }
        let norm = (self.clone() * rest.clone()).as_rational().expect("the norm is rational");
        Some(rest * Cyclotomic::rational(&self.field, &norm.recip()))
    }

    fn tag(&self) -> FieldTag {
        if self.field.n == 1 {
            FieldTag::Rational
        } else {
            FieldTag::Cyclotomic(self.field.n)
        }
    }
}
