//! 2×2 matrices over a ring, and determinants of square matrices over a field.

use std::fmt;
use std::ops::Mul;

use super::{Field, Ring};

#[derive(Clone, PartialEq, Debug)]
pub struct Mat2<R> {
    pub a: R,
    pub b: R,
    pub c: R,
    pub d: R,
}

impl<R: Ring> Mat2<R> {
    pub fn new(a: R, b: R, c: R, d: R) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity_like(like: &R) -> Self {
        Mat2::new(like.int_like(1), like.int_like(0), like.int_like(0), like.int_like(1))
    }

    pub fn scalar(s: R) -> Self {
        let z = s.int_like(0);
        Mat2::new(s.clone(), z.clone(), z, s)
    }

    pub fn det(&self) -> R {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> R {
        self.a.clone() + self.d.clone()
    }

    /// Adjugate; the inverse for determinant-one matrices.
    pub fn adjugate(&self) -> Self {
        Mat2::new(self.d.clone(), -self.b.clone(), -self.c.clone(), self.a.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.c.is_zero()
    }

    pub fn commutes_with(&self, o: &Self) -> bool {
        self.clone() * o.clone() == o.clone() * self.clone()
    }

    pub fn sub_identity(&self) -> Self {
        let one = self.a.int_like(1);
        Mat2::new(self.a.clone() - one.clone(), self.b.clone(), self.c.clone(), self.d.clone() - one)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Mat2<S> {
        Mat2::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }

    pub fn pow_u64(&self, e: u64) -> Self {
        let mut acc = Mat2::identity_like(&self.a);
        let mut base = self.clone();
        let mut e = e;
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

impl<R: Ring> Mul for Mat2<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Mat2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c * o.b + self.d * o.d,
        )
    }
}

impl<R: fmt::Display> fmt::Display for Mat2<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Determinant by Gaussian elimination over a field.
pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    if n == 0 {
        return F::one();
    }
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut det = a[0][0].int_like(1);
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return a[0][0].int_like(0);
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det = det * p.clone();
        let pinv = p.inv().unwrap();
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone() * pinv.clone();
            let (top, rest) = a.split_at_mut(r);
            for (x, y) in rest[0][col..n].iter_mut().zip(&top[col][col..n]) {
                *x = x.clone() - y.clone() * f.clone();
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, Q};
    use num_bigint::BigInt;

    #[test]
    fn integer_matrices() {
        let r = Mat2::new(BigInt::from(1), BigInt::from(1), BigInt::from(0), BigInt::from(1));
        let l = Mat2::new(BigInt::from(1), BigInt::from(0), BigInt::from(1), BigInt::from(1));
        let rl = r.clone() * l.clone();
        assert_eq!(rl, Mat2::new(BigInt::from(2), BigInt::from(1), BigInt::from(1), BigInt::from(1)));
        assert_eq!(rl.det(), BigInt::from(1));
        assert!((rl.clone() * rl.adjugate()).is_identity());
        assert_eq!(rl.pow_u64(2), rl.clone() * rl);
    }

    #[test]
    fn det_3x3() {
        let m: Vec<Vec<Q>> = vec![
            vec![q(2), q(0), q(1)],
            vec![q(1), q(3), q(2)],
            vec![q(1), q(1), q(1)],
        ];
        assert_eq!(determinant(&m), q(2 + (1 - 3)));
    }
}
