//! Dense univariate polynomials over an exact ring, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{rational_string, Domain, Field, FieldTag, Ring, Q};

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![c.int_like(0); k];
        v.push(c);
        Poly::new(v)
    }

    /// The variable, with coefficients placed alongside `like`.
    pub fn x_like(like: &R) -> Self {
        Poly::new(vec![like.int_like(0), like.int_like(1)])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = at.int_like(0);
        for c in self.coeffs.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul_int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Substitute `x -> x^k`.
    pub fn inflate(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let zero = self.coeffs[0].int_like(0);
        let mut v = vec![zero; (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * k] = c.clone();
        }
        Poly::new(v)
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero");
        let lb = b.lead().unwrap().clone();
        let mut r = self.clone();
        let Some(da) = r.degree() else { return r };
        if da < db {
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().unwrap().clone();
            let shift = dr - db;
            let mut v: Vec<R> = r.coeffs.iter().map(|c| c.clone() * lb.clone()).collect();
            for (i, c) in b.coeffs.iter().enumerate() {
                v[i + shift] = v[i + shift].clone() - c.clone() * lr.clone();
            }
            r = Poly::new(v);
            steps -= 1;
        }
        let f = lb.pow_u64(steps as u64);
        r.scale(&f)
    }
}

impl<R: Domain> Poly<R> {
    /// Exact division; panics (in debug) if `b` does not divide `self`.
    pub fn div_exact_poly(&self, b: &Self) -> Self {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.lead().unwrap().clone();
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree() else { return self.clone() };
        if da < db {
            debug_assert!(self.is_zero());
            return Poly::new(vec![]);
        }
        let mut q = vec![lb.int_like(0); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = r[k + db].div_exact(&lb);
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - c.clone() * bc.clone();
            }
            q[k] = c;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Poly::new(q)
    }

    /// gcd of the coefficients is not computed here; see `content` on Z[x].
    pub fn div_exact_scalar(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.div_exact(c)).collect())
    }
}

impl<R: Domain> Domain for Poly<R> {
    fn div_exact(&self, other: &Self) -> Self {
        self.div_exact_poly(other)
    }
}

impl<F: Field> Poly<F> {
    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("division by zero polynomial");
        let inv = b.lead().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        let Some(da) = self.degree() else { return (self.clone(), self.clone()) };
        if da < db {
            return (Poly::new(vec![]), self.clone());
        }
        let mut q = vec![inv.int_like(0); da - db + 1];
        for k in (0..=da - db).rev() {
            let c = r[k + db].clone() * inv.clone();
            if !c.is_zero() {
                for (i, bc) in b.coeffs.iter().enumerate() {
                    r[k + i] = r[k + i].clone() - c.clone() * bc.clone();
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        (Poly::new(q), Poly::new(r))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with s*a + t*b = g monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let like = self
            .lead()
            .or(other.lead())
            .cloned()
            .unwrap_or_else(F::one);
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::constant(like.int_like(1)), Poly::new(vec![]));
        let (mut t0, mut t1) = (Poly::new(vec![]), Poly::constant(like.int_like(1)));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0 - q.clone() * s1.clone();
            s0 = std::mem::replace(&mut s1, s);
            let t = t0 - q * t1.clone();
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().cloned() {
            None => (r0, s0, t0),
            Some(l) => {
                let i = l.inv().unwrap();
                (r0.scale(&i), s0.scale(&i), t0.scale(&i))
            }
        }
    }

    /// Squarefree part in characteristic zero: f / gcd(f, f').
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn field_tag(&self) -> FieldTag {
        self.coeffs
            .iter()
            .map(|c| c.tag())
            .max()
            .unwrap_or(FieldTag::Rational)
    }
}

impl Poly<Q> {
    /// Scales to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive_integer(&self) -> Poly<BigInt> {
        use num_integer::Integer;
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Q::from_integer(den.clone())).to_integer())
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if g.is_zero() {
            return Poly::new(vec![]);
        }
        if ints.last().is_some_and(|l| l < &BigInt::zero()) {
            g = -g;
        }
        Poly::new(ints.into_iter().map(|c| c / &g).collect())
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Poly::new(v.iter().map(|&c| super::q(c)).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

pub fn to_rational_poly(p: &Poly<BigInt>) -> Poly<Q> {
    p.map(|c| Q::from_integer(c.clone()))
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn int_like(&self, n: i64) -> Self {
        let like = self.coeffs.first().cloned().unwrap_or_else(R::one);
        Poly::constant(like.int_like(n))
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= o.coeffs.len() { (self, o) } else { (o, self) };
        for (i, c) in short.coeffs.into_iter().enumerate() {
            long.coeffs[i] = long.coeffs[i].clone() + c;
        }
        Poly::new(long.coeffs)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Poly::zero();
        }
        let zero = self.coeffs[0].int_like(0);
        let mut v = vec![zero; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(v)
    }
}

/// Human-readable form with a chosen variable name, for rational coefficients.
pub fn format_rational_poly(p: &Poly<Q>, var: &str) -> String {
    format_poly_with(p, var, rational_string, |c| c.numer().sign() == num_bigint::Sign::Minus)
}

pub fn format_poly_with<R: Ring>(
    p: &Poly<R>,
    var: &str,
    show: impl Fn(&R) -> String,
    negative: impl Fn(&R) -> bool,
) -> String {
    let terms: Vec<(i64, R)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as i64, c.clone()))
        .collect();
    format_terms(&terms, var, show, negative)
}

/// Shared pretty printer for dense and Laurent polynomials; highest exponent first.
pub(crate) fn format_terms<R: Ring>(
    terms: &[(i64, R)],
    var: &str,
    show: impl Fn(&R) -> String,
    negative: impl Fn(&R) -> bool,
) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (e, c)) in terms.iter().rev().enumerate() {
        let neg = negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        let body = show(&mag);
        let atom = match *e {
            0 => String::new(),
            1 => var.to_string(),
            k => format!("{var}^{k}"),
        };
        let needs_paren = body.contains(['+', ' ']) || (body.contains('-') && !body.starts_with('-'));
        let coef_part = if atom.is_empty() {
            body.clone()
        } else if mag.is_one() {
            String::new()
        } else if needs_paren {
            format!("({body})*")
        } else {
            format!("{body}*")
        };
        let term = if atom.is_empty() {
            if needs_paren { format!("({body})") } else { coef_part }
        } else {
            format!("{coef_part}{atom}")
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    out
}

impl fmt::Display for Poly<Q> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_rational_poly(self, "x"))
    }
}
