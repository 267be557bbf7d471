//! Small integer utilities: primality, factoring of modest integers, orders.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let b = bound as usize;
    let mut sieve = vec![true; b + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= b {
        if sieve[i] {
            let mut j = i * i;
            while j <= b {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..=b).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

/// Prime factorisation by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factor_u64(n) {
        let cur = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(cur.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factor_u64(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc: u128 = 1;
    let mut base = (a % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    a = acc as u64;
    a
}

/// Multiplicative order of `a` modulo `m`; `None` unless gcd(a, m) = 1.
pub fn mult_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if a.gcd(&m) != 1 {
        return None;
    }
    let lambda = euler_phi(m);
    let mut ord = lambda;
    for (p, _) in factor_u64(lambda) {
        while ord.is_multiple_of(p) && pow_mod(a, ord / p, m) == 1 {
            ord /= p;
        }
    }
    Some(ord)
}

pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Writes a nonzero integer as `s * t^2` with `s` squarefree (sign kept in `s`).
///
/// Trial division to 2^20; a remaining cofactor is accepted when it is a
/// square or small enough to be prime, otherwise the call is unsupported.
pub fn squarefree_decomposition(n: &BigInt) -> Result<(BigInt, BigInt)> {
    if n.is_zero() {
        return Err(Error::InvalidArgument("squarefree part of 0".into()));
    }
    let mut s = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut t = BigInt::one();
    let mut m = n.abs();
    let mut p: u64 = 2;
    while p < (1 << 20) {
        let pb = BigInt::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e > 0 {
            t *= pb.pow(e / 2);
            if e % 2 == 1 {
                s *= &pb;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        if let Some(r) = exact_sqrt(&m) {
            t *= r;
        } else if m.to_u64().is_some_and(|v| v < (1u64 << 40))
            || BigInt::from(p) * BigInt::from(p) > m
        {
            s *= m;
        } else {
            return Err(Error::Unsupported(format!(
                "squarefree part of {n}: cofactor {m} too large to certify"
            )));
        }
    }
    Ok((s, t))
}
