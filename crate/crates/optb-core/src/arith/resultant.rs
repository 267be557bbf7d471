//! Resultants by the subresultant remainder sequence over an exact domain.

use num_traits::Zero;

use super::matrix::determinant;
use super::poly::Poly;
use super::{Domain, Field};

/// `Res(a, b) = lc(a)^deg(b) ∏_{a(θ)=0} b(θ)`.
pub fn resultant<R: Domain>(a: &Poly<R>, b: &Poly<R>) -> R {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    let like = a.lead().unwrap().clone();
    let one = like.int_like(1);
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign_neg = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        sign_neg = da % 2 == 1 && db % 2 == 1;
    }
    if b.degree() == Some(0) {
        let r = b.lead().unwrap().pow_u64(a.degree().unwrap() as u64);
        return if sign_neg { -r } else { r };
    }
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let dega = a.degree().unwrap();
        let degb = b.degree().unwrap();
        let delta = (dega - degb) as u64;
        if dega % 2 == 1 && degb % 2 == 1 {
            sign_neg = !sign_neg;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return R::zero();
        }
        let divisor = g.clone() * h.pow_u64(delta);
        b = r.div_exact_scalar(&divisor);
        g = a.lead().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            g.pow_u64(delta).div_exact(&h.pow_u64(delta - 1))
        };
        let degb = b.degree().unwrap();
        if degb == 0 {
            let dega = a.degree().unwrap() as u64;
            let lb = b.lead().unwrap().clone();
            let res = if dega == 0 {
                one.clone()
            } else {
                lb.pow_u64(dega).div_exact(&h.pow_u64(dega - 1))
            };
            return if sign_neg { -res } else { res };
        }
    }
}

/// Determinant of the Sylvester matrix; the slow reference path.
pub fn sylvester_resultant<F: Field>(a: &Poly<F>, b: &Poly<F>) -> F {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return F::zero();
    };
    let like = a.lead().unwrap().clone();
    if m + n == 0 {
        return like.int_like(1);
    }
    let size = m + n;
    let mut rows = vec![vec![like.int_like(0); size]; size];
    for i in 0..n {
        for j in 0..=m {
            rows[i][i + j] = a.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            rows[n + i][i + j] = b.coeff(n - j);
        }
    }
    determinant(&rows)
}
