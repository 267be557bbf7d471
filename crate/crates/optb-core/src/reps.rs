//! Non-abelian reducible representations of π₁ into SL₂, in upper-triangular
//! form, and an exact relator check for them.
//!
//! Type A has ρ(t) diagonal with w ≠ ±1; Type B has ρ(t) = [[δ,1],[0,δ]];
//! Type C has ρ(t) = δ·Id, with δ = ±1.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::arith::intfns::{exact_sqrt, squarefree_decomposition};
use crate::arith::matrix::Mat2;
use crate::arith::number_field::{NfElem, NumberField};
use crate::arith::poly::Poly;
use crate::arith::quadratic::Quadratic;
use crate::arith::{Field, FieldTag, Q};
use crate::error::{Error, Result};
use crate::monodromy::{character_exponents, TorusBundle};
use crate::words::{apply_monodromy, GroupLike};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepType {
    A,
    B,
    C,
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RepType::A => "A",
            RepType::B => "B",
            RepType::C => "C",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct UTRepresentation<F> {
    pub kind: RepType,
    pub field: FieldTag,
    pub x: Mat2<F>,
    pub y: Mat2<F>,
    pub t: Mat2<F>,
}

impl<F: Field> UTRepresentation<F> {
    pub fn is_upper_triangular_sl2(&self) -> bool {
        [&self.x, &self.y, &self.t]
            .iter()
            .all(|m| m.is_upper_triangular() && m.det().is_one())
    }

    /// Some pair of generator images fails to commute.
    pub fn is_non_abelian(&self) -> bool {
        !(self.x.commutes_with(&self.y) && self.x.commutes_with(&self.t) && self.y.commutes_with(&self.t))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub ok: bool,
    /// Name of the first failing relator and its value.
    pub failure: Option<(String, String)>,
}

/// Evaluates t x t⁻¹ φ(x)⁻¹ and t y t⁻¹ φ(y)⁻¹ exactly.
pub fn verify_representation<F: Field + fmt::Display>(rep: &UTRepresentation<F>, b: &TorusBundle) -> Verification {
    let (px, py) = apply_monodromy(b.word(), &rep.x, &rep.y);
    let tinv = rep.t.inverse();
    let relators = [
        ("t x t^-1 phi(x)^-1", rep.t.op(&rep.x).op(&tinv).op(&px.inverse())),
        ("t y t^-1 phi(y)^-1", rep.t.op(&rep.y).op(&tinv).op(&py.inverse())),
    ];
    for (name, value) in relators {
        if !value.is_identity() {
            return Verification { ok: false, failure: Some((name.to_string(), value.to_string())) };
        }
    }
    Verification { ok: true, failure: None }
}

/// One eigenvalue branch λ = w² of Φ with its left eigenvector.
#[derive(Clone, Debug)]
pub struct TypeAData {
    pub trace: BigInt,
    /// Squarefree part of Tr² − 4, so λ ∈ Q(√radicand).
    pub radicand: i64,
    pub eigenvalue: Quadratic,
    /// (r, s) with (r, s)·Φ = λ·(r, s).
    pub eigenvector: (Quadratic, Quadratic),
    /// Irreducible factor of x⁴ − Tr·x² + 1 having w as a root.
    pub w_minimal_polynomial: Poly<Q>,
    /// Whether the quartic splits into quadratics over Q.
    pub quartic_factored: bool,
    pub w: NfElem,
    /// (ε₁, ε₂) for which x ↦ (−1)^ε₁, y ↦ (−1)^ε₂ is trivial on the relations.
    pub sign_choices: Vec<(u8, u8)>,
    phi: Mat2<BigInt>,
}

impl TypeAData {
    pub fn representation(&self, e1: u8, e2: u8) -> UTRepresentation<NfElem> {
        let field = self.w.field().unwrap();
        let nf = |q: Q| NfElem::from_poly(field, Poly::constant(q));
        let lambda = self.w.clone() * self.w.clone();
        let r = nf(Q::from_integer(self.phi.c.clone()));
        let s = lambda - nf(Q::from_integer(self.phi.a.clone()));
        let sign = |e: u8| nf(Q::from_integer(BigInt::from(if e == 1 { -1 } else { 1 })));
        let unipotent = |e: u8, v: NfElem| {
            let g = sign(e);
            Mat2::new(g.clone(), g.clone() * v, nf(Q::zero()), g)
        };
        let winv = self.w.inv().unwrap();
        UTRepresentation {
            kind: RepType::A,
            field: FieldTag::NumberField(crate::arith::poly::format_rational_poly(field.modulus(), "w")),
            x: unipotent(e1, r),
            y: unipotent(e2, s),
            t: Mat2::new(self.w.clone(), nf(Q::zero()), nf(Q::zero()), winv),
        }
    }

    /// The eigenvector identity (r, s)·Φ = λ·(r, s), checked in Q(√radicand).
    pub fn eigenvector_holds(&self) -> bool {
        let (r, s) = &self.eigenvector;
        let z = |v: &BigInt| Quadratic::rational(Q::from_integer(v.clone()));
        let p = &self.phi;
        r.clone() * z(&p.a) + s.clone() * z(&p.c) == self.eigenvalue.clone() * r.clone()
            && r.clone() * z(&p.b) + s.clone() * z(&p.d) == self.eigenvalue.clone() * s.clone()
    }
}

/// Irreducible factor of x⁴ − Tr x² + 1 through which w is taken, and whether
/// the quartic factors. It splits exactly when Tr = a² + 2 or Tr = a² − 2.
pub fn w_minimal_polynomial(trace: &BigInt) -> (Poly<Q>, bool) {
    let two = BigInt::from(2);
    let qi = |v: BigInt| Q::from_integer(v);
    if let Some(a) = (trace > &two).then(|| exact_sqrt(&(trace - &two))).flatten() {
        // (x² − a x − 1)(x² + a x − 1)
        return (Poly::new(vec![qi(-BigInt::one()), qi(-a), Q::one()]), true);
    }
    if let Some(a) = (trace > &two).then(|| exact_sqrt(&(trace + &two))).flatten() {
        // (x² − a x + 1)(x² + a x + 1)
        return (Poly::new(vec![Q::one(), qi(-a), Q::one()]), true);
    }
    let quartic = Poly::new(vec![Q::one(), Q::zero(), qi(-trace.clone()), Q::zero(), Q::one()]);
    (quartic, false)
}

/// The two Type A branches, w and w⁻¹, over Q(w).
pub fn type_a_representations(b: &TorusBundle) -> Result<Vec<TypeAData>> {
    let phi = b.phi().clone();
    let trace = b.trace().clone();
    let disc = &trace * &trace - BigInt::from(4);
    let (s, t) = squarefree_decomposition(&disc)?;
    let radicand = s
        .to_i64()
        .ok_or_else(|| Error::Unsupported(format!("radicand {s} exceeds 64 bits")))?;
    let half_tr = Q::new(trace.clone(), BigInt::from(2));
    let half_t = Q::new(t.clone(), BigInt::from(2));
    let (mpoly, factored) = w_minimal_polynomial(&trace);
    let field = NumberField::new(mpoly.clone());
    let w = field.generator();
    let parity = |v: &BigInt| v.mod_floor(&BigInt::from(2)).is_one();
    let sign_choices: Vec<(u8, u8)> = [(0u8, 0u8), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .filter(|&(e1, e2)| {
            let e1b = BigInt::from(e1);
            let e2b = BigInt::from(e2);
            let first = (&phi.a - 1) * &e1b + &phi.c * &e2b;
            let second = &phi.b * &e1b + (&phi.d - 1) * &e2b;
            !parity(&first) && !parity(&second)
        })
        .collect();
    let mut out = Vec::new();
    for (branch_w, sign) in [(w.clone(), 1), (w.inv().unwrap(), -1)] {
        // √radicand ↦ (2w² − Tr)/t identifies Q(√radicand) inside Q(w)
        let eigenvalue = Quadratic::new(radicand, half_tr.clone(), half_t.clone() * Q::from_integer(BigInt::from(sign)));
        let a = Quadratic::rational(Q::from_integer(phi.a.clone()));
        let eigenvector = (Quadratic::rational(Q::from_integer(phi.c.clone())), eigenvalue.clone() - a);
        out.push(TypeAData {
            trace: trace.clone(),
            radicand,
            eigenvalue,
            eigenvector,
            w_minimal_polynomial: mpoly.clone(),
            quartic_factored: factored,
            w: branch_w,
            sign_choices: sign_choices.clone(),
            phi: phi.clone(),
        });
    }
    Ok(out)
}

/// A Type B or C solution in normal form over Q(ζ_n).
#[derive(Clone, Debug, PartialEq)]
pub struct TypeBcSolution {
    pub rep: UTRepresentation<Cyclotomic>,
    pub conductor: u64,
    /// α = ζ_n^alpha_exp, β = ζ_n^beta_exp.
    pub alpha_exp: u64,
    pub beta_exp: u64,
    pub delta: i8,
    /// The off-diagonal entry is unconstrained; the stored value 1 is a representative.
    pub parametric: bool,
}

impl TypeBcSolution {
    pub fn kind(&self) -> RepType {
        self.rep.kind
    }

    fn sort_key(&self) -> (RepType, u64, u64, u64, u64, i8) {
        let n = self.conductor;
        let ord = |e: u64| n / e.gcd(&n);
        (self.rep.kind, ord(self.alpha_exp), self.alpha_exp, ord(self.beta_exp), self.beta_exp, self.delta)
    }
}

/// [[p, q],[0, p⁻¹]] with q = q₀ + q₁ r + q₂ s affine in the unknowns.
#[derive(Clone, Debug)]
struct AffineUT<F> {
    p: F,
    pinv: F,
    q: [F; 3],
}

impl<F: Field> GroupLike for AffineUT<F> {
    fn op(&self, o: &Self) -> Self {
        let q = std::array::from_fn(|i| self.p.clone() * o.q[i].clone() + self.q[i].clone() * o.pinv.clone());
        AffineUT { p: self.p.clone() * o.p.clone(), pinv: self.pinv.clone() * o.pinv.clone(), q }
    }
    fn inverse(&self) -> Self {
        AffineUT { p: self.pinv.clone(), pinv: self.p.clone(), q: std::array::from_fn(|i| -self.q[i].clone()) }
    }
    fn identity_like(&self) -> Self {
        let z = self.p.int_like(0);
        AffineUT { p: self.p.int_like(1), pinv: self.p.int_like(1), q: [z.clone(), z.clone(), z] }
    }
}

enum Slice<F> {
    Unique(F),
    Free,
    Empty,
}

/// Solves c₀ + c·u = 0 for every (c₀, c) simultaneously.
fn solve_slice<F: Field>(eqs: &[(F, F)]) -> Slice<F> {
    let candidate = eqs
        .iter()
        .find(|(_, c)| !c.is_zero())
        .map(|(c0, c)| -c0.div(c));
    match candidate {
        Some(u) => {
            if eqs.iter().all(|(c0, c)| (c0.clone() + c.clone() * u.clone()).is_zero()) {
                Slice::Unique(u)
            } else {
                Slice::Empty
            }
        }
        None if eqs.iter().all(|(c0, _)| c0.is_zero()) => Slice::Free,
        None => Slice::Empty,
    }
}

/// Every Type B and C solution, in the normal forms described on `TypeBcSolution`.
///
/// The characters of the diagonal run over Q(ζ_n), n the lcm of the orders of
/// x and y; every root of unity they can take has order dividing n. The
/// relators are evaluated with symbolic off-diagonal entries and the
/// resulting affine equations are solved after fixing one off-diagonal entry
/// to 0 by a unipotent conjugation.
pub fn enumerate_type_bc(b: &TorusBundle) -> Result<Vec<TypeBcSolution>> {
    let n = b.n_u64()?;
    let field = CyclotomicField::new(n);
    let zeta = |k: u64| Cyclotomic::zeta_pow(&field, k as i64);
    let int = |k: i64| Cyclotomic::rational(&field, &Q::from_integer(BigInt::from(k)));
    let mut out = Vec::new();
    for (p, q) in character_exponents(b, n) {
        let alpha_pm1 = (2 * p) % n == 0;
        let beta_pm1 = (2 * q) % n == 0;
        if alpha_pm1 && beta_pm1 {
            continue;
        }
        let gen = |e: u64, slot: usize| {
            let mut coeffs = [int(0), int(0), int(0)];
            coeffs[slot] = int(1);
            AffineUT { p: zeta(e), pinv: zeta((n - e) % n), q: coeffs }
        };
        let x = gen(p, 1);
        let y = gen(q, 2);
        let (px, py) = apply_monodromy(b.word(), &x, &y);
        for kind in [RepType::B, RepType::C] {
            for delta in [1i8, -1] {
                let dl = int(delta as i64);
                let t = AffineUT {
                    p: dl.clone(),
                    pinv: dl.clone(),
                    q: [if kind == RepType::B { int(1) } else { int(0) }, int(0), int(0)],
                };
                let lx = t.op(&x).op(&t.inverse());
                let ly = t.op(&y).op(&t.inverse());
                debug_assert!(lx.p == px.p && ly.p == py.p);
                let eq = |l: &AffineUT<Cyclotomic>, r: &AffineUT<Cyclotomic>| -> [Cyclotomic; 3] {
                    std::array::from_fn(|i| l.q[i].clone() - r.q[i].clone())
                };
                let (e1, e2) = (eq(&lx, &px), eq(&ly, &py));
                // the unknown kept free: s when α ≠ ±1 (r conjugated to 0), else r
                let slot = if alpha_pm1 { 1 } else { 2 };
                let eqs = [(e1[0].clone(), e1[slot].clone()), (e2[0].clone(), e2[slot].clone())];
                let (value, parametric) = match solve_slice(&eqs) {
                    Slice::Unique(u) if kind == RepType::C => {
                        // homogeneous system: only the abelian point survives
                        debug_assert!(u.is_zero());
                        continue;
                    }
                    Slice::Unique(u) => (u, false),
                    Slice::Free => (int(1), true),
                    Slice::Empty => continue,
                };
                let zero = int(0);
                let (r, s) = if slot == 1 { (value, zero.clone()) } else { (zero.clone(), value) };
                let tm = Mat2::new(
                    dl.clone(),
                    if kind == RepType::B { int(1) } else { zero.clone() },
                    zero.clone(),
                    dl.clone(),
                );
                let rep = UTRepresentation {
                    kind,
                    field: FieldTag::Cyclotomic(n),
                    x: Mat2::new(zeta(p), r, zero.clone(), zeta((n - p) % n)),
                    y: Mat2::new(zeta(q), s, zero, zeta((n - q) % n)),
                    t: tm,
                };
                out.push(TypeBcSolution { rep, conductor: n, alpha_exp: p, beta_exp: q, delta, parametric });
            }
        }
    }
    out.sort_by_key(|s| s.sort_key());
    Ok(out)
}

/// Field hosting a Type B/C solution list.
pub fn type_bc_field(b: &TorusBundle) -> Result<Arc<CyclotomicField>> {
    Ok(CyclotomicField::new(b.n_u64()?))
}
