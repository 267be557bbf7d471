//! Smith normal form of integer matrices with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

#[derive(Clone, Debug, PartialEq)]
pub struct Snf {
    /// Diagonal result, same shape as the input.
    pub d: IntMatrix,
    /// Row transform (rows × rows).
    pub u: IntMatrix,
    /// Column transform (cols × cols).
    pub v: IntMatrix,
}

impl Snf {
    /// Diagonal entries d₁ | d₂ | …, including zeros and ones.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.len().min(self.d.first().map_or(0, |r| r.len())))
            .map(|i| self.d[i][i].clone())
            .collect()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(BigInt::zero(), |acc, t| acc + &a[i][t] * &b[t][j]))
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion; intended for the small transforms here.
pub fn int_det(a: &IntMatrix) -> BigInt {
    let n = a.len();
    match n {
        0 => BigInt::one(),
        1 => a[0][0].clone(),
        2 => &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0],
        _ => (0..n).fold(BigInt::zero(), |acc, j| {
            let minor: IntMatrix = a[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &a[0][j] * int_det(&minor);
            if j % 2 == 0 { acc + term } else { acc - term }
        }),
    }
}

fn add_row_multiple(m: &mut IntMatrix, dst: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    let row = m[src].clone();
    for (x, y) in m[dst].iter_mut().zip(row.iter()) {
        *x += f * y;
    }
}

fn add_col_multiple(m: &mut IntMatrix, dst: usize, src: usize, f: &BigInt) {
    if f.is_zero() {
        return;
    }
    for r in m.iter_mut() {
        let y = r[src].clone();
        r[dst] += f * y;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for r in m.iter_mut() {
        r.swap(a, b);
    }
}

/// `U·M·V = D` with `D` diagonal, nonnegative, and d₁ | d₂ | ….
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // pivot: smallest nonzero absolute value in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut a, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_floor(&a[t][t]);
                add_row_multiple(&mut a, i, t, &-q.clone());
                add_row_multiple(&mut u, i, t, &-q);
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_floor(&a[t][t]);
                add_col_multiple(&mut a, j, t, &-q.clone());
                add_col_multiple(&mut v, j, t, &-q);
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and redo
            let piv = a[t][t].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&a[i][j] % &piv).is_zero()));
            match bad {
                Some(i) => {
                    add_row_multiple(&mut a, t, i, &BigInt::one());
                    add_row_multiple(&mut u, t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    Snf { d: a, u, v }
}
