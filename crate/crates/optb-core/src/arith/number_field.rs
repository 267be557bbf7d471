//! Simple extensions Q[x]/(m) for a monic irreducible m; used to host the
//! square root of an eigenvalue of the monodromy.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::poly::{format_rational_poly, Poly};
use super::{Field, FieldTag, Ring, Q};

#[derive(Debug, PartialEq)]
pub struct NumberField {
    modulus: Poly<Q>,
}

impl NumberField {
    /// Irreducibility of `modulus` is the caller's responsibility.
    pub fn new(modulus: Poly<Q>) -> Arc<Self> {
        assert!(modulus.degree().unwrap_or(0) >= 1, "modulus must be nonconstant");
        Arc::new(NumberField { modulus: modulus.monic() })
    }

    pub fn modulus(&self) -> &Poly<Q> {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn generator(self: &Arc<Self>) -> NfElem {
        NfElem::from_poly(self, Poly::from_ints(&[0, 1]))
    }
}

/// Element of a `NumberField`; `field == None` marks a bare rational.
#[derive(Clone, Debug)]
pub struct NfElem {
    field: Option<Arc<NumberField>>,
    poly: Poly<Q>,
}

impl NfElem {
    pub fn from_poly(field: &Arc<NumberField>, p: Poly<Q>) -> Self {
        NfElem { field: Some(field.clone()), poly: p.rem(&field.modulus) }
    }

    pub fn rational(x: Q) -> Self {
        NfElem { field: None, poly: Poly::constant(x) }
    }

    pub fn poly(&self) -> &Poly<Q> {
        &self.poly
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    fn join(&self, o: &Self) -> Option<Arc<NumberField>> {
        match (&self.field, &o.field) {
            (Some(a), Some(b)) => {
                assert!(Arc::ptr_eq(a, b) || a == b, "mixing different number fields");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn build(field: Option<Arc<NumberField>>, p: Poly<Q>) -> Self {
        match field {
            Some(f) => NfElem::from_poly(&f, p),
            None => NfElem { field: None, poly: p },
        }
    }

    pub fn display(&self) -> String {
        format_rational_poly(&self.poly, "w")
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl PartialEq for NfElem {
    fn eq(&self, o: &Self) -> bool {
        self.join(o);
        self.poly == o.poly
    }
}

impl Zero for NfElem {
    fn zero() -> Self {
        NfElem::rational(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl One for NfElem {
    fn one() -> Self {
        NfElem::rational(Q::one())
    }
}

impl Add for NfElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let f = self.join(&o);
        NfElem { field: f, poly: self.poly + o.poly }
    }
}

impl Sub for NfElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let f = self.join(&o);
        NfElem { field: f, poly: self.poly - o.poly }
    }
}

impl Neg for NfElem {
    type Output = Self;
    fn neg(self) -> Self {
        NfElem { field: self.field, poly: -self.poly }
    }
}

impl Mul for NfElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let f = self.join(&o);
        NfElem::build(f, self.poly * o.poly)
    }
}

impl Ring for NfElem {
    fn int_like(&self, n: i64) -> Self {
        NfElem { field: self.field.clone(), poly: Poly::constant(super::q(n)) }
    }
}

impl Field for NfElem {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.field {
            None => Some(NfElem::rational(self.poly.coeff(0).recip())),
            Some(f) => {
                let (g, s, _) = self.poly.xgcd(&f.modulus);
                assert!(g.degree() == Some(0), "modulus is reducible: element not invertible");
                Some(NfElem::from_poly(f, s))
            }
        }
    }

    fn tag(&self) -> FieldTag {
        match &self.field {
            None => FieldTag::Rational,
            Some(f) => FieldTag::NumberField(format_rational_poly(&f.modulus, "x")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_root_inverse() {
        // w^4 - 5w^2 + 1 = 0, so 1/w = 5w - w^3
        let k = NumberField::new(Poly::from_ints(&[1, 0, -5, 0, 1]));
        let w = k.generator();
        let winv = w.inv().unwrap();
        assert_eq!(winv, w.mul_int(5) - w.pow_u64(3));
        assert_eq!(w.clone() * winv, NfElem::one());
    }
}
