//! The monodromy matrix Φ of a bundle, its homology Z ⊕ F with F = coker(Φ − I),
//! and the torsion orders of x and y.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::matrix::Mat2;
use crate::arith::poly::Poly;
use crate::arith::snf::{smith_normal_form, IntMatrix, Snf};
use crate::arith::{Ring, Q};
use crate::error::{Error, Result};
use crate::words::{apply_monodromy, word_to_automorphism, GroupLike, GroupWord, Letter, MonodromyWord};

pub type IntMat2 = Mat2<BigInt>;

/// Matrices in SL₂; the inverse is the adjugate.
impl<R: Ring> GroupLike for Mat2<R> {
    fn op(&self, o: &Self) -> Self {
        self.clone() * o.clone()
    }
    fn inverse(&self) -> Self {
        self.adjugate()
    }
    fn identity_like(&self) -> Self {
        Mat2::identity_like(&self.a)
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn letter_matrix(l: Letter, e: i64) -> IntMat2 {
    match l {
        Letter::R => Mat2::new(big(1), big(e), big(0), big(1)),
        Letter::L => Mat2::new(big(1), big(0), big(e), big(1)),
        Letter::I => {
            let s = if e.rem_euclid(2) == 1 { -1 } else { 1 };
            Mat2::new(big(s), big(0), big(0), big(s))
        }
    }
}

/// Product of the letter matrices in word order.
pub fn monodromy_matrix(w: &MonodromyWord) -> IntMat2 {
    w.letters()
        .iter()
        .fold(Mat2::identity_like(&BigInt::zero()), |acc, &(l, e)| acc * letter_matrix(l, e))
}

#[derive(Debug)]
pub struct TorusBundle {
    word: MonodromyWord,
    phi: IntMat2,
    trace: BigInt,
    snf: Snf,
    torsion_invariants: Vec<BigInt>,
    order_x: BigInt,
    order_y: BigInt,
    n: BigInt,
    images: OnceLock<(GroupWord, GroupWord)>,
}

/// Upper bound on free-group word lengths: reduction only shortens words.
#[derive(Clone, Copy, Debug)]
struct LengthBound(u128);

impl GroupLike for LengthBound {
    fn op(&self, o: &Self) -> Self {
        LengthBound(self.0.saturating_add(o.0))
    }
    fn inverse(&self) -> Self {
        *self
    }
    fn identity_like(&self) -> Self {
        LengthBound(0)
    }
    fn power(&self, e: i64) -> Self {
        LengthBound(self.0.saturating_mul(e.unsigned_abs() as u128))
    }
}

/// Order of the class of `v` in ⊕ Z/d_i, given the transform `u` of an SNF.
fn class_order(u: &IntMatrix, diag: &[BigInt], v: &[BigInt; 2]) -> BigInt {
    let mut ord = BigInt::one();
    for (i, d) in diag.iter().enumerate() {
        let c = &u[i][0] * &v[0] + &u[i][1] * &v[1];
        let g = c.gcd(d);
        if !g.is_zero() {
            ord = ord.lcm(&(d / g));
        }
    }
    ord
}

pub fn build_bundle(w: &MonodromyWord) -> Result<TorusBundle> {
    let phi = monodromy_matrix(w);
    debug_assert!(phi.det().is_one());
    let trace = phi.trace();
    if trace.abs() <= big(2) {
        return Err(Error::NotHyperbolic { abs_trace: trace.abs() });
    }
    let a = phi.sub_identity();
    let m: IntMatrix = vec![vec![a.a.clone(), a.b.clone()], vec![a.c.clone(), a.d.clone()]];
    let snf = smith_normal_form(&m);
    let diag = snf.diagonal();
    let torsion_invariants: Vec<BigInt> = diag.iter().filter(|d| !d.is_one()).cloned().collect();
    let order_x = class_order(&snf.u, &diag, &[big(1), big(0)]);
    let order_y = class_order(&snf.u, &diag, &[big(0), big(1)]);
    let n = order_x.lcm(&order_y);
    let b = TorusBundle {
        word: w.clone(),
        phi,
        trace,
        snf,
        torsion_invariants,
        order_x,
        order_y,
        n,
        images: OnceLock::new(),
    };
    debug_assert_eq!(b.torsion_order(), (&b.trace - big(2)).abs());
    Ok(b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyReport {
    pub free_rank: u32,
    pub torsion_invariants: Vec<BigInt>,
    pub order_x: BigInt,
    pub order_y: BigInt,
    pub n: BigInt,
}

impl TorusBundle {
    pub fn word(&self) -> &MonodromyWord {
        &self.word
    }

    pub fn phi(&self) -> &IntMat2 {
        &self.phi
    }

    pub fn trace(&self) -> &BigInt {
        &self.trace
    }

    /// Tr as an i64, for the arithmetic that needs machine integers.
    pub fn trace_i64(&self) -> Result<i64> {
        self.trace
            .to_i64()
            .ok_or_else(|| Error::Unsupported(format!("trace {} exceeds 64 bits", self.trace)))
    }

    pub fn snf(&self) -> &Snf {
        &self.snf
    }

    /// All diagonal entries of the SNF of Φ − I, including ones.
    pub fn snf_diagonal(&self) -> Vec<BigInt> {
        self.snf.diagonal()
    }

    /// U⁻¹ for the row transform U; its columns are the invariant-factor generators.
    pub fn snf_u_inverse(&self) -> IntMatrix {
        let u = &self.snf.u;
        let det = &u[0][0] * &u[1][1] - &u[0][1] * &u[1][0];
        let s = if det.is_negative() { -BigInt::one() } else { BigInt::one() };
        vec![
            vec![&s * &u[1][1], -&s * &u[0][1]],
            vec![-&s * &u[1][0], &s * &u[0][0]],
        ]
    }

    pub fn torsion_invariants(&self) -> &[BigInt] {
        &self.torsion_invariants
    }

    pub fn torsion_order(&self) -> BigInt {
        self.torsion_invariants.iter().product()
    }

    pub fn order_x(&self) -> &BigInt {
        &self.order_x
    }

    pub fn order_y(&self) -> &BigInt {
        &self.order_y
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    pub fn n_u64(&self) -> Result<u64> {
        self.n.to_u64().ok_or_else(|| Error::Unsupported(format!("n = {} exceeds 64 bits", self.n)))
    }

    /// |Tr Φ − 2| as a u64.
    pub fn torsion_order_u64(&self) -> Result<u64> {
        let t = self.torsion_order();
        t.to_u64().ok_or_else(|| Error::Unsupported(format!("|F| = {t} exceeds 64 bits")))
    }

    /// Coordinates of the integer vector (a, b) = a·e₁ + b·e₂ in ⊕ Z/d_i.
    pub fn project_to_torsion(&self, v: &[BigInt; 2]) -> Vec<BigInt> {
        let u = &self.snf.u;
        self.snf_diagonal()
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let c = &u[i][0] * &v[0] + &u[i][1] * &v[1];
                if d.is_zero() {
                    c
                } else {
                    c.mod_floor(d)
                }
            })
            .collect()
    }

    /// Upper bound on the lengths of φ(x), φ(y).
    pub fn image_length_bound(&self) -> u128 {
        let (a, b) = apply_monodromy(&self.word, &LengthBound(1), &LengthBound(1));
        a.0.max(b.0)
    }

    /// φ(x), φ(y) as reduced words, computed on first use.
    pub fn phi_images(&self) -> &(GroupWord, GroupWord) {
        self.images.get_or_init(|| word_to_automorphism(&self.word))
    }

    /// φ(x), φ(y) when their unreduced length stays below `max_len`.
    pub fn phi_images_bounded(&self, max_len: u128) -> Option<&(GroupWord, GroupWord)> {
        if self.images.get().is_none() && self.image_length_bound() > max_len {
            return None;
        }
        Some(self.phi_images())
    }
}

pub fn homology_report(b: &TorusBundle) -> HomologyReport {
    HomologyReport {
        free_rank: 1,
        torsion_invariants: b.torsion_invariants.clone(),
        order_x: b.order_x.clone(),
        order_y: b.order_y.clone(),
        n: b.n.clone(),
    }
}

/// z² − Tr(Φ) z + 1.
pub fn char_poly(b: &TorusBundle) -> Poly<Q> {
    Poly::new(vec![
        Q::one(),
        Q::from_integer(-b.trace.clone()),
        Q::one(),
    ])
}

fn residue(v: &BigInt, n: u64) -> u128 {
    v.mod_floor(&BigInt::from(n)).to_u128().unwrap()
}

/// Exponent pairs (p, q) mod n with x ↦ ζ_n^p, y ↦ ζ_n^q killing the columns
/// of Φ − I, i.e. the characters of F with values in μ_n.
pub fn character_exponents(b: &TorusBundle, n: u64) -> Vec<(u64, u64)> {
    let phi = b.phi();
    let (a1, bb, c, d1) = (
        residue(&(&phi.a - 1), n),
        residue(&phi.b, n),
        residue(&phi.c, n),
        residue(&(&phi.d - 1), n),
    );
    let n = n as u128;
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if (a1 * p + c * q) % n == 0 && (bb * p + d1 * q) % n == 0 {
                out.push((p as u64, q as u64));
            }
        }
    }
    out
}
