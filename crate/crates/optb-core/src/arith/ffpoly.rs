//! Dense polynomials over a prime field F_p, coefficient vectors lowest degree first.
//! Factorisation is only provided up to degree 4.

pub type FpPoly = Vec<u64>;

pub fn trim(mut f: FpPoly) -> FpPoly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn degree(f: &[u64]) -> Option<usize> {
    f.len().checked_sub(1)
}

pub fn reduce_coeffs(f: &[i64], p: u64) -> FpPoly {
    trim(f.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect())
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let n = a.len().max(b.len());
    trim((0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect())
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u128; a.len() + b.len() - 1];
    let p128 = p as u128;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u128 * y as u128) % p128;
        }
    }
    trim(out.into_iter().map(|c| c as u64).collect())
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    super::intfns::pow_mod(a, p - 2, p)
}

pub fn monic(f: &[u64], p: u64) -> FpPoly {
    match f.last() {
        None => Vec::new(),
        Some(&l) => {
            let i = inv_mod(l, p) as u128;
            f.iter().map(|&c| (c as u128 * i % p as u128) as u64).collect()
        }
    }
}

pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (FpPoly, FpPoly) {
    let db = degree(b).expect("division by zero polynomial");
    let inv = inv_mod(b[db], p) as u128;
    let mut r: Vec<u64> = a.to_vec();
    if a.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = (r[k + db] as u128 * inv % p as u128) as u64;
        if c != 0 {
            for (i, &bc) in b.iter().enumerate() {
                let t = (c as u128 * bc as u128 % p as u128) as u64;
                r[k + i] = (r[k + i] + p - t) % p;
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    div_rem(a, b, p).1
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> FpPoly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

pub fn derivative(f: &[u64], p: u64) -> FpPoly {
    trim(f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| ((i as u128 % p as u128) * c as u128 % p as u128) as u64)
        .collect())
}

pub fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc: u128 = 0;
    for &c in f.iter().rev() {
        acc = (acc * x as u128 + c as u128) % p as u128;
    }
    acc as u64
}

/// `base^e mod m`.
pub fn pow_mod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> FpPoly {
    let mut acc: FpPoly = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        e >>= 1;
        if e > 0 {
            b = rem(&mul(&b, &b, p), m, p);
        }
    }
    acc
}

/// Rabin's irreducibility test.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let Some(k) = degree(&f) else { return false };
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x: FpPoly = vec![0, 1];
    let frob = |j: usize| pow_mod(&x, (p as u128).pow(j as u32), &f, p);
    if sub(&frob(k), &rem(&x, &f, p), p) != Vec::<u64>::new() {
        return false;
    }
    for (r, _) in super::intfns::factor_u64(k as u64) {
        let h = sub(&frob(k / r as usize), &x, p);
        if gcd(&h, &f, p).len() > 1 {
            return false;
        }
    }
    true
}

/// Lexicographically first monic irreducible polynomial of degree `k`.
pub fn first_irreducible(p: u64, k: usize) -> FpPoly {
    let total = (p as u128).pow(k as u32);
    for idx in 0..total {
        let mut f = vec![0u64; k + 1];
        let mut t = idx;
        for c in f.iter_mut().take(k) {
            *c = (t % p as u128) as u64;
            t /= p as u128;
        }
        f[k] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Complete factorisation into monic irreducibles with multiplicity, for degree ≤ 4.
pub fn factor_small(f: &[u64], p: u64) -> Vec<(FpPoly, u32)> {
    let mut g = monic(&trim(f.to_vec()), p);
    let d = degree(&g).expect("factoring the zero polynomial");
    assert!(d <= 4, "factor_small handles degree at most 4");
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    // linear factors: roots in F_p, found through gcd with x^p - x
    let xp = pow_mod(&[0, 1], p as u128, &g, p);
    let lin = gcd(&sub(&xp, &[0, 1], p), &g, p);
    if lin.len() > 1 {
        for r in 0..p {
            if eval(&lin, r, p) == 0 {
                let lf = vec![(p - r) % p, 1];
                let mut e = 0;
                loop {
                    let (qt, rm) = div_rem(&g, &lf, p);
                    if !rm.is_empty() {
                        break;
                    }
                    g = qt;
                    e += 1;
                }
                out.push((lf, e));
            }
            if degree(&lin) == Some(out.len()) {
                break;
            }
        }
    }
    match degree(&g).unwrap() {
        0 => {}
        2 | 3 => out.push((g, 1)),
        4 => out.extend(split_rootless_quartic(&g, p)),
        _ => unreachable!("a rootless remainder of degree 1"),
    }
    out.sort();
    out
}

fn split_rootless_quartic(g: &[u64], p: u64) -> Vec<(FpPoly, u32)> {
    if is_irreducible(g, p) {
        return vec![(g.to_vec(), 1)];
    }
    let dg = derivative(g, p);
    if dg.is_empty() {
        // p = 2 and g = h(x^2) = h(x)^2 over the prime field
        let h: FpPoly = g.iter().step_by(2).copied().collect();
        return vec![(h, 2)];
    }
    let sq = gcd(g, &dg, p);
    if degree(&sq) == Some(2) {
        return vec![(sq, 2)];
    }
    // squarefree product of two distinct irreducible quadratics; p is odd here
    let e = ((p as u128) * (p as u128) - 1) / 2;
    for a in 0..p {
        let t = pow_mod(&[a, 1], e, g, p);
        let h = gcd(&sub(&t, &[1], p), g, p);
        if degree(&h) == Some(2) {
            let (other, _) = div_rem(g, &h, p);
            return vec![(h, 1), (monic(&other, p), 1)];
        }
    }
    unreachable!("equal-degree splitting failed")
}
