//! Exact arithmetic kernel. Nothing in here rounds.

pub mod cyclotomic;
pub mod ffpoly;
pub mod finite_field;
pub mod intfns;
pub mod laurent;
pub mod matrix;
pub mod minpoly;
pub mod number_field;
pub mod poly;
pub mod quadratic;
pub mod resultant;
pub mod snf;
pub mod squares;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rationals.
pub type Q = BigRational;

/// Commutative ring with exact arithmetic.
///
/// `Zero` and `One` are context free. Types whose elements carry a field
/// context (cyclotomic, finite) represent them by a context-free sentinel
/// that is promoted on first contact with a contextful operand.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// The integer `n` placed in the same ring (and context) as `self`.
    fn int_like(&self, n: i64) -> Self;

    fn mul_int(&self, n: i64) -> Self {
        self.clone() * self.int_like(n)
    }

    fn pow_u64(&self, mut e: u64) -> Self {
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
}

/// Which field an element lives in, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    Quadratic(i64),
    Cyclotomic(u64),
    NumberField(String),
    Finite { p: u64, k: usize },
}

impl std::fmt::Display for FieldTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "Q"),
            FieldTag::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
            FieldTag::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
            FieldTag::NumberField(m) => write!(f, "Q[x]/({m})"),
            FieldTag::Finite { p, k: 1 } => write!(f, "F_{p}"),
            FieldTag::Finite { p, k } => write!(f, "F_{p}^{k}"),
        }
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn tag(&self) -> FieldTag;

    /// Panics on division by zero.
    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv().expect("division by zero")
    }

    fn pow_i64(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow_u64(e as u64))
        } else {
            self.inv().map(|v| v.pow_u64(e.unsigned_abs()))
        }
    }

    fn pow_big(&self, e: &BigInt) -> Option<Self> {
        let base = if e.is_negative() { self.inv()? } else { self.clone() };
        let mut acc = self.int_like(1);
        let bits = e.abs().to_str_radix(2);
        for ch in bits.chars() {
            acc = acc.clone() * acc;
            if ch == '1' {
                acc = acc * base.clone();
            }
        }
        Some(acc)
    }
}

/// Integral domain with exact division, as needed by subresultant sequences.
pub trait Domain: Ring {
    /// `self / other`, assuming `other` divides `self`.
    fn div_exact(&self, other: &Self) -> Self;
}

impl Ring for BigInt {
    fn int_like(&self, n: i64) -> Self {
        BigInt::from(n)
    }
}

impl Domain for BigInt {
    fn div_exact(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(r.is_zero(), "inexact integer division");
        q
    }
}

impl Ring for Q {
    fn int_like(&self, n: i64) -> Self {
        Q::from_integer(BigInt::from(n))
    }
}

impl Field for Q {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn tag(&self) -> FieldTag {
        FieldTag::Rational
    }
}

impl Domain for Q {
    fn div_exact(&self, other: &Self) -> Self {
        self.div(other)
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qq(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// "p/q" or "p" for integers.
pub fn rational_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}
