//! Shared generators and the brute-force Type B/C oracle.

#![allow(dead_code)]

use optb_core::arith::cyclotomic::{Cyclotomic, CyclotomicField};
use optb_core::arith::matrix::Mat2;
use num_traits::{One, Zero};
use optb_core::arith::{q, Field, Ring};
use optb_core::conditions::{ComponentEvidence, Evidence, Outcome};
use optb_core::monodromy::{build_bundle, TorusBundle};
use optb_core::reps::{RepType, TypeBcSolution};
use optb_core::words::{parse_monodromy, word_to_automorphism, Gen, GroupWord, Letter, MonodromyWord};
use rand::Rng;
use std::sync::Arc;

pub fn bundle(s: &str) -> TorusBundle {
    build_bundle(&parse_monodromy(s).unwrap()).unwrap()
}

/// A random word in R^±k, L^±k (|k| ≤ 3) with at most `max_len` letters
/// counted with multiplicity, sometimes prefixed by i.
pub fn random_word(rng: &mut impl Rng, max_len: u64) -> MonodromyWord {
    let mut letters = Vec::new();
    if rng.gen_bool(0.25) {
        letters.push((Letter::I, 1));
    }
    let mut used = 0u64;
    let target = rng.gen_range(1..=max_len);
    while used < target {
        let e = rng.gen_range(1..=3.min(target - used)) as i64;
        let e = if rng.gen_bool(0.2) { -e } else { e };
        let l = if rng.gen_bool(0.5) { Letter::R } else { Letter::L };
        letters.push((l, e));
        used += e.unsigned_abs();
    }
    MonodromyWord::from_letters(letters)
}

pub fn random_hyperbolic(rng: &mut impl Rng, max_len: u64) -> TorusBundle {
    loop {
        if let Ok(b) = build_bundle(&random_word(rng, max_len)) {
            return b;
        }
    }
}

/// Every word in R, L, R⁻¹, L⁻¹ of 1..=max_len letters without adjacent
/// inverse pairs, with and without an i prefix.
pub fn all_short_words(max_len: usize) -> Vec<MonodromyWord> {
    let alphabet = [(Letter::R, 1i64), (Letter::R, -1), (Letter::L, 1), (Letter::L, -1)];
    let mut layer: Vec<Vec<(Letter, i64)>> = vec![vec![]];
    let mut out = Vec::new();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &a in &alphabet {
                if w.last().is_some_and(|&(l, e)| l == a.0 && e == -a.1) {
                    continue;
                }
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        for w in &next {
            out.push(MonodromyWord::from_letters(w.clone()));
            let mut with_i = vec![(Letter::I, 1)];
            with_i.extend(w.iter().copied());
            out.push(MonodromyWord::from_letters(with_i));
        }
        layer = next;
    }
    out
}

/// One normal-form solution in exponents of ζ_N.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleSolution {
    pub kind: RepType,
    pub a: u64,
    pub b: u64,
    pub delta: i8,
    pub parametric: bool,
    pub r: Cyclotomic,
    pub s: Cyclotomic,
}

impl OracleSolution {
    fn key(&self) -> (RepType, u64, u64, i8) {
        (self.kind, self.a, self.b, self.delta)
    }
}

fn eval(w: &GroupWord, x: &Mat2<Cyclotomic>, y: &Mat2<Cyclotomic>, t: &Mat2<Cyclotomic>) -> Mat2<Cyclotomic> {
    let mut acc = Mat2::identity_like(&x.a);
    for &(g, e) in w.syllables() {
        let m = match g {
            Gen::X => x,
            Gen::Y => y,
            Gen::T => t,
        };
        // determinant one, so the inverse is the adjugate
        let base = if e < 0 { m.adjugate() } else { m.clone() };
        acc = acc * base.pow_u64(e.unsigned_abs());
    }
    acc
}

/// Brute force over all pairs (α, β) = (ζ_N^a, ζ_N^b), N = |F|: the relators
/// t x t⁻¹ φ(x)⁻¹ and t y t⁻¹ φ(y)⁻¹ are evaluated as explicit matrices at
/// (r, s) = (0,0), (1,0), (0,1), which pins down the affine top-right entry,
/// and the 2×2 system is solved by hand. Solutions are reported modulo
/// unipotent conjugation with r = 0 when α ≠ ±1 and s = 0 otherwise.
pub fn brute_force_type_bc(w: &MonodromyWord, big_n: u64) -> Vec<OracleSolution> {
    let field = CyclotomicField::new(big_n);
    let (px, py) = word_to_automorphism(w);
    let zero = Cyclotomic::rational(&field, &q(0));
    let one = zero.int_like(1);
    let mut out = Vec::new();
    for a in 0..big_n {
        for b in 0..big_n {
            let alpha = Cyclotomic::zeta_pow(&field, a as i64);
            let beta = Cyclotomic::zeta_pow(&field, b as i64);
            let pm1 = |z: &Cyclotomic| z.is_one() || (-z.clone()).is_one();
            if pm1(&alpha) && pm1(&beta) {
                continue;
            }
            let ai = alpha.inv().unwrap();
            let bi = beta.inv().unwrap();
            for kind in [RepType::B, RepType::C] {
                for delta in [1i8, -1] {
                    let d = zero.int_like(delta as i64);
                    let t = Mat2::new(d.clone(), if kind == RepType::B { one.clone() } else { zero.clone() }, zero.clone(), d.clone());
                    let ti = t.adjugate();
                    let rel = |r: &Cyclotomic, s: &Cyclotomic| {
                        let x = Mat2::new(alpha.clone(), r.clone(), zero.clone(), ai.clone());
                        let y = Mat2::new(beta.clone(), s.clone(), zero.clone(), bi.clone());
                        let l1 = t.clone() * x.clone() * ti.clone();
                        let l2 = t.clone() * y.clone() * ti.clone();
                        (
                            [l1.clone(), eval(&px, &x, &y, &t)],
                            [l2.clone(), eval(&py, &x, &y, &t)],
                        )
                    };
                    let (m1, m2) = rel(&zero, &zero);
                    // the diagonal must match: (α, β) is a character of F
                    if m1[0].a != m1[1].a || m2[0].a != m2[1].a {
                        continue;
                    }
                    let top = |m: &[Mat2<Cyclotomic>; 2]| m[0].b.clone() - m[1].b.clone();
                    let e0 = [top(&m1), top(&m2)];
                    let (r1, r2) = rel(&one, &zero);
                    let (s1, s2) = rel(&zero, &one);
                    let cr = [top(&r1) - e0[0].clone(), top(&r2) - e0[1].clone()];
                    let cs = [top(&s1) - e0[0].clone(), top(&s2) - e0[1].clone()];
                    // equations e0[i] + cr[i] r + cs[i] s = 0; unipotent conjugation
                    // moves (r, s) along v, so v spans part of the kernel
                    let v = [ai.clone() - alpha.clone(), bi.clone() - beta.clone()];
                    for i in 0..2 {
                        let along = cr[i].clone() * v[0].clone() + cs[i].clone() * v[1].clone();
                        assert!(along.is_zero(), "relator {i} is not conjugation invariant at ({a}, {b})");
                    }
                    let free = cr.iter().chain(cs.iter()).all(|c| c.is_zero());
                    if free {
                        if e0.iter().all(|c| c.is_zero()) {
                            let (r, s) = if pm1(&alpha) { (one.clone(), zero.clone()) } else { (zero.clone(), one.clone()) };
                            out.push(OracleSolution { kind, a, b, delta, parametric: true, r, s });
                        }
                        continue;
                    }
                    if kind == RepType::C {
                        // homogeneous with a nonzero equation: only the conjugates of the diagonal point
                        continue;
                    }
                    // one unknown fixed to 0, solve for the other
                    let (coef, is_r) = if pm1(&alpha) { (cr.clone(), true) } else { (cs.clone(), false) };
                    let Some(i) = (0..2).find(|&i| !coef[i].is_zero()) else { continue };
                    let u = -(e0[i].clone() * coef[i].inv().unwrap());
                    let consistent = (0..2).all(|j| (e0[j].clone() + coef[j].clone() * u.clone()).is_zero());
                    if !consistent {
                        continue;
                    }
                    let (r, s) = if is_r { (u, zero.clone()) } else { (zero.clone(), u) };
                    out.push(OracleSolution { kind, a, b, delta, parametric: false, r, s });
                }
            }
        }
    }
    out.sort_by_key(|s| s.key());
    out
}

/// The enumerator's output restated over Q(ζ_N).
pub fn embed_solutions(sols: &[TypeBcSolution], big_n: u64) -> Vec<OracleSolution> {
    let target: Arc<CyclotomicField> = CyclotomicField::new(big_n);
    let mut out: Vec<OracleSolution> = sols
        .iter()
        .map(|s| {
            let scale = big_n / s.conductor;
            OracleSolution {
                kind: s.kind(),
                a: s.alpha_exp * scale,
                b: s.beta_exp * scale,
                delta: s.delta,
                parametric: s.parametric,
                r: s.rep.x.b.embed(&target),
                s: s.rep.y.b.embed(&target),
            }
        })
        .collect();
    out.sort_by_key(|s| s.key());
    out
}

pub const E: Outcome = Outcome::Extends;
pub const D: Outcome = Outcome::DoesNotExtend;
pub const C: Outcome = Outcome::Conditional;

/// Evidence (A, B, C) against outcomes for (★1, ★2) = TT, TF, FT, FF, with
/// the component canonical or irreducibility asserted. Without either
/// hypothesis every D becomes C.
pub const TRUTH_TABLE: [(&str, [Outcome; 4]); 27] = [
    ("PPP", [E, D, D, D]),
    ("PPA", [E, D, D, D]),
    ("PPU", [E, D, D, D]),
    ("PAP", [E, D, D, D]),
    ("PAA", [E, E, D, D]),
    ("PAU", [E, C, D, D]),
    ("PUP", [E, D, D, D]),
    ("PUA", [E, C, D, D]),
    ("PUU", [E, C, D, D]),
    ("APP", [E, D, E, D]),
    ("APA", [E, D, E, D]),
    ("APU", [E, D, E, D]),
    ("AAP", [E, D, E, D]),
    ("AAA", [E, E, E, E]),
    ("AAU", [E, C, E, C]),
    ("AUP", [E, D, E, D]),
    ("AUA", [E, C, E, C]),
    ("AUU", [E, C, E, C]),
    ("UPP", [E, D, C, D]),
    ("UPA", [E, D, C, D]),
    ("UPU", [E, D, C, D]),
    ("UAP", [E, D, C, D]),
    ("UAA", [E, E, C, C]),
    ("UAU", [E, C, C, C]),
    ("UUP", [E, D, C, D]),
    ("UUA", [E, C, C, C]),
    ("UUU", [E, C, C, C]),
];

pub fn evidence_code(code: &str, canonical: bool) -> ComponentEvidence {
    let e: Vec<Evidence> = code
        .chars()
        .map(|c| match c {
            'P' => Evidence::Present,
            'A' => Evidence::Absent,
            _ => Evidence::Unknown,
        })
        .collect();
    ComponentEvidence::new(e[0], e[1], e[2], canonical)
}
