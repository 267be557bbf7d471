//! Quadratic fields Q(√d) with elements a + b√d.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intfns::squarefree_decomposition;
use super::{rational_string, Field, FieldTag, Ring, Q};

/// `d == 1` marks a plain rational (then `b == 0`); it adopts the radicand of
/// whatever it is combined with.
#[derive(Clone, Debug)]
pub struct Quadratic {
    d: i64,
    a: Q,
    b: Q,
}

pub fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    squarefree_decomposition(&BigInt::from(d)).is_ok_and(|(_, t)| t.is_one())
}

impl Quadratic {
    /// `a + b√d`; `d` must be squarefree and different from 0 and 1.
    pub fn new(d: i64, a: Q, b: Q) -> Self {
        assert!(d != 1 && is_squarefree(d), "radicand {d} must be squarefree and not 1");
        Quadratic { d, a, b }
    }

    pub fn rational(a: Q) -> Self {
        Quadratic { d: 1, a, b: Q::zero() }
    }

    pub fn sqrt_d(d: i64) -> Self {
        Quadratic::new(d, Q::zero(), Q::one())
    }

    pub fn radicand(&self) -> Option<i64> {
        (self.d != 1).then_some(self.d)
    }

    pub fn a(&self) -> &Q {
        &self.a
    }

    pub fn b(&self) -> &Q {
        &self.b
    }

    pub fn conjugate(&self) -> Self {
        Quadratic { d: self.d, a: self.a.clone(), b: -self.b.clone() }
    }

    pub fn norm(&self) -> Q {
        &self.a * &self.a - Q::from_integer(BigInt::from(self.d)) * &self.b * &self.b
    }

    pub fn trace(&self) -> Q {
        &self.a + &self.a
    }

    pub fn as_rational(&self) -> Option<Q> {
        self.b.is_zero().then(|| self.a.clone())
    }

    fn common_d(&self, o: &Self) -> i64 {
        match (self.d, o.d) {
            (1, d) | (d, 1) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("mixing Q(sqrt({x})) and Q(sqrt({y}))"),
        }
    }

    pub fn display(&self) -> String {
        if self.b.is_zero() {
            return rational_string(&self.a);
        }
        let r = format!("sqrt({})", self.d);
        let bpart = if self.b.is_one() {
            r
        } else if self.b == -Q::one() {
            format!("-{r}")
        } else {
            format!("{}*{r}", rational_string(&self.b))
        };
        if self.a.is_zero() {
            bpart
        } else if let Some(stripped) = bpart.strip_prefix('-') {
            format!("{} - {stripped}", rational_string(&self.a))
        } else {
            format!("{} + {bpart}", rational_string(&self.a))
        }
    }
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl PartialEq for Quadratic {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (self.b.is_zero() || self.d == o.d)
    }
}

impl Zero for Quadratic {
    fn zero() -> Self {
        Quadratic::rational(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Quadratic {
    fn one() -> Self {
        Quadratic::rational(Q::one())
    }
}

impl Add for Quadratic {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let d = self.common_d(&o);
        Quadratic { d, a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Quadratic {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let d = self.common_d(&o);
        Quadratic { d, a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Quadratic {
    type Output = Self;
    fn neg(self) -> Self {
        Quadratic { d: self.d, a: -self.a, b: -self.b }
    }
}

impl Mul for Quadratic {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = self.common_d(&o);
        let dq = Q::from_integer(BigInt::from(d));
        Quadratic {
            d,
            a: &self.a * &o.a + dq * &self.b * &o.b,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

impl Ring for Quadratic {
    fn int_like(&self, n: i64) -> Self {
        Quadratic { d: self.d, a: Q::from_integer(BigInt::from(n)), b: Q::zero() }
    }
}

impl Field for Quadratic {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Quadratic { d: self.d, a: &self.a / &n, b: -&self.b / &n })
    }

    fn tag(&self) -> FieldTag {
        if self.d == 1 {
            FieldTag::Rational
        } else {
            FieldTag::Quadratic(self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, qq};

    #[test]
    fn golden_ratio() {
        let s5 = Quadratic::sqrt_d(5);
        let phi = (Quadratic::one() + s5) * Quadratic::rational(qq(1, 2));
        assert_eq!(phi.clone() * phi.clone(), phi.clone() + Quadratic::one());
        assert_eq!(phi.inv().unwrap() * phi, Quadratic::one());
    }

    #[test]
    fn eigenvalues_of_m135_matrix() {
        let s2 = Quadratic::sqrt_d(2);
        let lam = Quadratic::rational(q(-3)) + s2.mul_int(2);
        // λ² + 6λ + 1 = 0
        let v = lam.clone() * lam.clone() + lam.mul_int(6) + Quadratic::one();
        assert!(v.is_zero());
        assert_eq!(lam.display(), "-3 + 2*sqrt(2)");
    }

    #[test]
    fn squarefree_check() {
        assert!(is_squarefree(-1));
        assert!(is_squarefree(30));
        assert!(!is_squarefree(12));
        assert!(!is_squarefree(0));
    }
}
