//! Square-class tests for rational numbers in the supported fields.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::finite_field::{FiniteField, Gf};
use super::intfns::{exact_sqrt, squarefree_decomposition};
use super::quadratic::Quadratic;
use super::Q;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum SquareField {
    Rational,
    /// Q(√d), d squarefree and not 0 or 1.
    Quadratic(i64),
    /// Q(ζ_n).
    Cyclotomic(u64),
    Finite(Arc<FiniteField>),
}

impl fmt::Display for SquareField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareField::Rational => write!(f, "Q"),
            SquareField::Quadratic(d) => write!(f, "Q(sqrt({d}))"),
            SquareField::Cyclotomic(n) => write!(f, "Q(zeta_{n})"),
            SquareField::Finite(k) if k.degree() == 1 => write!(f, "F_{}", k.characteristic()),
            SquareField::Finite(k) => write!(f, "F_{}^{}", k.characteristic(), k.degree()),
        }
    }
}

pub fn is_rational_square(a: &Q) -> bool {
    !a.is_negative() && exact_sqrt(a.numer()).is_some() && exact_sqrt(a.denom()).is_some()
}

/// Squarefree signed integer `s` with `a = s · t²` for a rational `t`.
pub fn rational_square_class(a: &Q) -> Result<BigInt> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("square class of 0".into()));
    }
    // a = n/d = (n·d) / d²
    let (s, _) = squarefree_decomposition(&(a.numer() * a.denom()))?;
    Ok(s)
}

/// Discriminant of Q(√s) for squarefree s ≠ 1.
pub fn quadratic_discriminant(s: &BigInt) -> BigInt {
    if s.mod_floor(&BigInt::from(4)) == BigInt::one() {
        s.clone()
    } else {
        s * 4
    }
}

/// Whether the nonzero rational `a` is a square in `field`.
pub fn is_square_in_field(a: &Q, field: &SquareField) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::InvalidArgument("square test of 0".into()));
    }
    match field {
        SquareField::Rational => Ok(is_rational_square(a)),
        SquareField::Quadratic(d) => {
            let dq = Q::from_integer(BigInt::from(*d));
            Ok(is_rational_square(a) || is_rational_square(&(a / dq)))
        }
        SquareField::Cyclotomic(n) => {
            let s = rational_square_class(a)?;
            if s.is_one() {
                return Ok(true);
            }
            let disc = quadratic_discriminant(&s).abs();
            Ok((BigInt::from(*n) % disc).is_zero())
        }
        SquareField::Finite(k) => Ok(reduce_to_finite(a, k)?.is_square()),
    }
}

/// The image of a rational number in F_{ℓ^k}; fails when ℓ divides the
/// denominator or the numerator.
pub fn reduce_to_finite(a: &Q, k: &Arc<FiniteField>) -> Result<Gf> {
    let p = BigInt::from(k.characteristic());
    let den = a.denom().mod_floor(&p);
    if den.is_zero() {
        return Err(Error::InvalidArgument(format!("{a} has a pole at {p}")));
    }
    let num = a.numer().mod_floor(&p);
    if num.is_zero() {
        return Err(Error::InvalidArgument(format!("{a} reduces to 0 modulo {p}")));
    }
    let n = Gf::from_int(k, num.to_i64().unwrap());
    let d = Gf::from_int(k, den.to_i64().unwrap());
    Ok(n * super::Field::inv(&d).unwrap())
}

/// Whether a nonzero element of Q(√d) is a square there.
///
/// If (u + v√d)² = a + b√d then a² − d b² = N must be a rational square s²,
/// and u² is (a + s)/2 or (a − s)/2.
pub fn quadratic_is_square(x: &Quadratic) -> Result<bool> {
    if let Some(r) = x.as_rational() {
        return match x.radicand() {
            None => is_square_in_field(&r, &SquareField::Rational),
            Some(d) => is_square_in_field(&r, &SquareField::Quadratic(d)),
        };
    }
    let norm = x.norm();
    if !is_rational_square(&norm) {
        return Ok(false);
    }
    let s = Q::new(exact_sqrt(norm.numer()).unwrap(), exact_sqrt(norm.denom()).unwrap());
    let two = Q::from_integer(BigInt::from(2));
    for u2 in [(x.a() + &s) / &two, (x.a() - &s) / &two] {
        if !u2.is_zero() && is_rational_square(&u2) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclotomic::{Cyclotomic, CyclotomicField};
    use crate::arith::{q, qq, Field, Ring};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert!(is_square_in_field(&q(2), &SquareField::Cyclotomic(8)).unwrap());
        assert!(!is_square_in_field(&q(-8), &SquareField::Cyclotomic(4)).unwrap());
        assert!(!is_square_in_field(&q(-8), &SquareField::Quadratic(-1)).unwrap());
        assert!(is_square_in_field(&q(4), &SquareField::Rational).unwrap());
        assert!(is_square_in_field(&q(0), &SquareField::Rational).is_err());
    }

    #[test]
    fn two_is_a_square_in_q_zeta8_by_expansion() {
        let f = CyclotomicField::new(8);
        let s = Cyclotomic::zeta(&f) + Cyclotomic::zeta(&f).inv().unwrap();
        assert_eq!(s.clone() * s, Cyclotomic::rational(&f, &q(2)));
    }

    #[test]
    fn cyclotomic_criterion_matches_galois_membership() {
        // √s ∈ Q(ζ_n) decided independently: √s is in Q(ζ_|disc|), hence in
        // Q(ζ_n) iff it is fixed by the automorphisms of Q(ζ_lcm) over Q(ζ_n)
        for s in [-11i64, -7, -6, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 13] {
            let disc = quadratic_discriminant(&BigInt::from(s)).abs().to_u64().unwrap();
            let big = CyclotomicField::new(disc);
            let root = gauss_sqrt(s, &big);
            assert_eq!(root.clone() * root.clone(), Cyclotomic::rational(&big, &q(s)));
            for n in 1..=40u64 {
                let crit = is_square_in_field(&q(s), &SquareField::Cyclotomic(n)).unwrap();
                assert_eq!(crit, root.lies_in_cyclotomic(n), "s = {s}, n = {n}");
            }
        }
    }

    /// A square root of s in Q(ζ_disc) from a Gauss sum ∑ χ(k) ζ^k, with χ found
    /// by brute force over sign patterns on the units.
    fn gauss_sqrt(s: i64, f: &Arc<CyclotomicField>) -> Cyclotomic {
        let n = f.conductor() as i64;
        let units: Vec<i64> = (1..n).filter(|k| k.gcd(&n) == 1).collect();
        // the Gauss sum of the character of Q(√s) squares to the signed discriminant
        let four = s.rem_euclid(4) != 1;
        let disc = Cyclotomic::rational(f, &q(if four { 4 * s } else { s }));
        let mut index = vec![usize::MAX; n as usize];
        for (i, &u) in units.iter().enumerate() {
            index[u as usize] = i;
        }
        let m = units.len();
        for mask in 0u64..(1u64 << m.min(20)) {
            let chi = |k: i64| -> i64 {
                let idx = index[k.rem_euclid(n) as usize];
                if mask >> idx & 1 == 1 { -1 } else { 1 }
            };
            let multiplicative = units
                .iter()
                .all(|&a| units.iter().all(|&b| chi(a * b) == chi(a) * chi(b)));
            if !multiplicative {
                continue;
            }
            let g = units.iter().fold(Cyclotomic::rational(f, &q(0)), |acc, &k| {
                acc + Cyclotomic::zeta_pow(f, k).mul_int(chi(k))
            });
            if g.clone() * g.clone() == disc {
                return if four { g * Cyclotomic::rational(f, &qq(1, 2)) } else { g };
            }
        }
        panic!("no square root of {s} found in Q(zeta_{n})");
    }

    #[test]
    fn finite_fields() {
        let f7 = FiniteField::prime(7).unwrap();
        assert!(is_square_in_field(&q(2), &SquareField::Finite(f7.clone())).unwrap());
        assert!(!is_square_in_field(&q(3), &SquareField::Finite(f7.clone())).unwrap());
        assert!(is_square_in_field(&qq(1, 2), &SquareField::Finite(f7.clone())).unwrap());
        assert!(is_square_in_field(&q(7), &SquareField::Finite(f7)).is_err());
        let f49 = FiniteField::of_degree(7, 2).unwrap();
        assert!(is_square_in_field(&q(3), &SquareField::Finite(f49)).unwrap());
    }

    #[test]
    fn quadratic_elements() {
        // (1 + √2)² = 3 + 2√2
        assert!(quadratic_is_square(&Quadratic::new(2, q(3), q(2))).unwrap());
        assert!(!quadratic_is_square(&Quadratic::new(2, q(-3), q(2))).unwrap());
        assert!(quadratic_is_square(&Quadratic::new(5, q(5), q(0))).unwrap());
    }

    proptest! {
        #[test]
        fn squares_are_squares(n in -500i64..=500, d in 1i64..=500, k in 1u64..=60) {
            prop_assume!(n != 0);
            let a = qq(n, d);
            let a2 = &a * &a;
            prop_assert!(is_square_in_field(&a2, &SquareField::Rational).unwrap());
            prop_assert!(is_square_in_field(&a2, &SquareField::Cyclotomic(k)).unwrap());
            for rad in [-1i64, 2, -3, 5] {
                prop_assert!(is_square_in_field(&a2, &SquareField::Quadratic(rad)).unwrap());
            }
            for p in [2u64, 3, 5, 7, 11, 13] {
                let f = FiniteField::of_degree(p, 2).unwrap();
                if (n % p as i64) != 0 && (d % p as i64) != 0 {
                    prop_assert!(is_square_in_field(&a2, &SquareField::Finite(f)).unwrap());
                }
            }
        }

        #[test]
        fn quadratic_squares(a in -30i64..=30, b in -30i64..=30) {
            prop_assume!(a != 0 || b != 0);
            for d in [-1i64, 2, 3, -7] {
                let x = Quadratic::new(d, q(a), q(b));
                prop_assert!(quadratic_is_square(&(x.clone() * x)).unwrap());
            }
        }
    }
}
