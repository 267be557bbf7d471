//! Twisted Alexander invariants Δ₀, Δ₁ from the Fox Jacobian of the presentation
//! ⟨x, y, t | t x t⁻¹ φ(x)⁻¹, t y t⁻¹ φ(y)⁻¹⟩, over any exact field.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::cyclotomic::{Cyclotomic, CyclotomicField};
use crate::arith::finite_field::{FiniteField, Gf};
use crate::arith::intfns::mult_order;
use crate::arith::laurent::{laurent_gcd, LaurentPoly};
use crate::arith::poly::{format_terms, Poly};
use crate::arith::{Field, FieldTag, Ring, Q};
use crate::error::{Error, Result};
use crate::monodromy::{character_exponents, TorusBundle};
use crate::words::{apply_monodromy, fox_derivative, relators, Gen, GroupLike, GroupWord};

/// σ on F, given by the images of x and y.
#[derive(Clone, Debug, PartialEq)]
pub struct Twist<F> {
    pub x: F,
    pub y: F,
}

impl<F: Field> Twist<F> {
    pub fn new(x: F, y: F) -> Self {
        Twist { x, y }
    }

    pub fn is_trivial(&self) -> bool {
        self.x.is_one() && self.y.is_one()
    }

    pub fn field(&self) -> FieldTag {
        self.x.tag()
    }

    fn power(&self, ex: &BigInt, ey: &BigInt) -> F {
        self.x.pow_big(ex).expect("twist values are units") * self.y.pow_big(ey).expect("twist values are units")
    }
}

/// x ↦ ζ_n^a, y ↦ ζ_n^b.
pub fn cyclotomic_twist(field: &Arc<CyclotomicField>, a: i64, b: i64) -> Twist<Cyclotomic> {
    Twist::new(Cyclotomic::zeta_pow(field, a), Cyclotomic::zeta_pow(field, b))
}

/// Checks σ through the invariant-factor basis: σ(g_i)^{d_i} = 1 for the
/// generators g_i = U⁻¹ e_i of F.
pub fn validate_twist<F: Field>(b: &TorusBundle, s: &Twist<F>) -> Result<()> {
    if s.x.is_zero() || s.y.is_zero() {
        return Err(Error::InvalidTwist { relation: "twist values must be nonzero".into() });
    }
    let uinv = b.snf_u_inverse();
    for (i, d) in b.snf_diagonal().iter().enumerate() {
        let (ex, ey) = (&uinv[0][i], &uinv[1][i]);
        let g = s.power(ex, ey);
        if !g.pow_big(d).unwrap().is_one() {
            return Err(Error::InvalidTwist {
                relation: format!("(sigma(x)^{ex} sigma(y)^{ey})^{d} != 1"),
            });
        }
    }
    Ok(())
}

/// The direct test: σ kills both columns of Φ − I.
pub fn twist_kills_relations<F: Field>(b: &TorusBundle, s: &Twist<F>) -> bool {
    let m = b.phi().sub_identity();
    s.power(&m.a, &m.c).is_one() && s.power(&m.b, &m.d).is_one()
}

/// All twists with values in μ_m, as (p, q, σ) with σ(x) = ζ_m^p, σ(y) = ζ_m^q.
pub fn all_twists(b: &TorusBundle, m: u64) -> Vec<(u64, u64, Twist<Cyclotomic>)> {
    let field = CyclotomicField::new(m);
    character_exponents(b, m)
        .into_iter()
        .map(|(p, q)| (p, q, cyclotomic_twist(&field, p as i64, q as i64)))
        .collect()
}

/// (σ(w), σ(∂w/∂x), σ(∂w/∂y)) for a word w in x, y, composed letter by letter.
#[derive(Clone, Debug)]
struct FoxValue<F> {
    value: F,
    inv: F,
    dx: F,
    dy: F,
}

impl<F: Field> GroupLike for FoxValue<F> {
    fn op(&self, o: &Self) -> Self {
        FoxValue {
            value: self.value.clone() * o.value.clone(),
            inv: o.inv.clone() * self.inv.clone(),
            dx: self.dx.clone() + self.value.clone() * o.dx.clone(),
            dy: self.dy.clone() + self.value.clone() * o.dy.clone(),
        }
    }
    fn inverse(&self) -> Self {
        FoxValue {
            value: self.inv.clone(),
            inv: self.value.clone(),
            dx: -(self.inv.clone() * self.dx.clone()),
            dy: -(self.inv.clone() * self.dy.clone()),
        }
    }
    fn identity_like(&self) -> Self {
        let z = self.value.int_like(0);
        FoxValue { value: self.value.int_like(1), inv: self.value.int_like(1), dx: z.clone(), dy: z }
    }
}

pub type Jacobian<F> = [[LaurentPoly<F>; 3]; 2];

/// Entry (j, i) is the image of ∂R_j/∂x_i, with x₁ = x, x₂ = y, x₃ = t.
pub fn fox_jacobian<F: Field>(b: &TorusBundle, s: &Twist<F>) -> Result<Jacobian<F>> {
    validate_twist(b, s)?;
    let one = s.x.int_like(1);
    let zero = s.x.int_like(0);
    let gx = FoxValue { value: s.x.clone(), inv: s.x.inv().unwrap(), dx: one.clone(), dy: zero.clone() };
    let gy = FoxValue { value: s.y.clone(), inv: s.y.inv().unwrap(), dx: zero.clone(), dy: one.clone() };
    let (px, py) = apply_monodromy(b.word(), &gx, &gy);
    let z_minus = |c: F| LaurentPoly::from_terms([(1, one.clone()), (0, -c)]);
    let c = |v: F| LaurentPoly::constant(v);
    Ok([
        [z_minus(px.dx), c(-px.dy), c(one.clone() - s.x.clone())],
        [c(-py.dx), z_minus(py.dy), c(one.clone() - s.y.clone())],
    ])
}

/// The same matrix from explicit Fox derivatives of the relator words, mapped
/// through φ_σ with the torsion projection taken in the SNF basis. Returns
/// `None` when the relators would be longer than `max_len`.
pub fn fox_jacobian_expanded<F: Field>(b: &TorusBundle, s: &Twist<F>, max_len: u128) -> Result<Option<Jacobian<F>>> {
    validate_twist(b, s)?;
    if b.image_length_bound() > max_len {
        return Ok(None);
    }
    let (r1, r2) = relators(b.word());
    let uinv = b.snf_u_inverse();
    let gens: Vec<F> = (0..b.snf_diagonal().len())
        .map(|i| s.power(&uinv[0][i], &uinv[1][i]))
        .collect();
    let image = |w: &GroupWord| -> LaurentPoly<F> {
        let [ex, ey, et] = w.abelianization();
        let coords = b.project_to_torsion(&[BigInt::from(ex), BigInt::from(ey)]);
        let value = gens
            .iter()
            .zip(&coords)
            .fold(s.x.int_like(1), |acc, (g, c)| acc * g.pow_big(c).unwrap());
        LaurentPoly::monomial(value, et)
    };
    let scale = |p: &LaurentPoly<F>, k: i64| p.clone() * LaurentPoly::constant(s.x.int_like(k));
    let entry = |r: &GroupWord, g: Gen| fox_derivative(r, g).map_to(image, scale, LaurentPoly::zero());
    Ok(Some([
        [entry(&r1, Gen::X), entry(&r1, Gen::Y), entry(&r1, Gen::T)],
        [entry(&r2, Gen::X), entry(&r2, Gen::Y), entry(&r2, Gen::T)],
    ]))
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlexanderInvariant<F> {
    pub delta0: LaurentPoly<F>,
    pub delta1: LaurentPoly<F>,
    pub twist: Twist<F>,
    pub field: FieldTag,
}

pub fn jacobian_minors<F: Field>(j: &Jacobian<F>) -> [LaurentPoly<F>; 3] {
    let minor = |a: usize, c: usize| j[0][a].clone() * j[1][c].clone() - j[0][c].clone() * j[1][a].clone();
    [minor(0, 1), minor(0, 2), minor(1, 2)]
}

/// Δ₀ is the gcd of the 2×2 minors and Δ₁ the gcd of the entries, both in
/// normal form.
pub fn alexander_invariants<F: Field>(b: &TorusBundle, s: &Twist<F>) -> Result<AlexanderInvariant<F>> {
    let j = fox_jacobian(b, s)?;
    let delta0 = laurent_gcd(&jacobian_minors(&j))?;
    let entries: Vec<LaurentPoly<F>> = j.iter().flatten().cloned().collect();
    let delta1 = laurent_gcd(&entries)?;
    Ok(AlexanderInvariant { delta0, delta1, twist: s.clone(), field: s.field() })
}

/// Multiplicity of `at` as a root of `p`, by repeated exact division.
pub fn order_of_vanishing<E: Field>(p: &LaurentPoly<E>, at: &E) -> u32 {
    let (_, mut poly) = p.to_poly();
    if poly.is_zero() {
        return u32::MAX;
    }
    let linear = Poly::new(vec![-at.clone(), at.int_like(1)]);
    let mut k = 0;
    loop {
        let (q, r) = poly.div_rem(&linear);
        if !r.is_zero() {
            return k;
        }
        poly = q;
        k += 1;
    }
}

/// Order of vanishing of Δ₀^σ at `f_t`, where `f_t` may live in an extension
/// reached through `embed`.
pub fn is_zero_of_alexander<F: Field, E: Field>(
    b: &TorusBundle,
    f_t: &E,
    s: &Twist<F>,
    embed: impl Fn(&F) -> E,
) -> Result<u32> {
    let inv = alexander_invariants(b, s)?;
    Ok(order_of_vanishing(&inv.delta0.map(embed), f_t))
}

/// The trivial twist over Q.
pub fn rational_trivial_twist() -> Twist<Q> {
    Twist::new(Q::from_integer(1.into()), Q::from_integer(1.into()))
}

/// The trivial twist over F_ℓ.
pub fn finite_trivial_twist(field: &Arc<FiniteField>) -> Twist<Gf> {
    Twist::new(Gf::from_int(field, 1), Gf::from_int(field, 1))
}

/// F_{ℓ^k} with k the order of ℓ mod m, which contains a primitive m-th root ω.
pub fn splitting_field_of_unity(l: u64, m: u64) -> Result<(Arc<FiniteField>, Gf)> {
    if m.is_multiple_of(l) {
        return Err(Error::InvalidArgument(format!("{l} divides the conductor {m}")));
    }
    let k = if m == 1 { 1 } else { mult_order(l % m, m).unwrap() } as usize;
    let field = FiniteField::of_degree(l, k)?;
    let omega = field
        .root_of_unity(m)
        .ok_or_else(|| Error::InvalidArgument(format!("no primitive {m}th root of unity in F_{l}^{k}")))?;
    Ok((field, omega))
}

/// Image of a rational in F_ℓ, when ℓ does not divide the denominator.
pub fn reduce_rational(x: &Q, field: &Arc<FiniteField>) -> Option<Gf> {
    let p = BigInt::from(field.characteristic());
    let m = |v: &BigInt| ((v % &p + &p) % &p).to_i64().unwrap();
    let den = m(x.denom());
    if den == 0 {
        return None;
    }
    Some(Gf::from_int(field, m(x.numer())) * Gf::from_int(field, den).inv().unwrap())
}

/// Image of a cyclotomic element under ζ ↦ ω.
pub fn reduce_cyclotomic(x: &Cyclotomic, omega: &Gf) -> Option<Gf> {
    let field = omega.field()?.clone();
    let mut acc = Gf::from_int(&field, 0);
    for (k, c) in x.coefficients().iter().enumerate() {
        if !c.is_zero() {
            acc = acc + reduce_rational(c, &field)? * omega.pow_u64(k as u64);
        }
    }
    Some(acc)
}

pub fn reduce_twist(s: &Twist<Cyclotomic>, omega: &Gf) -> Option<Twist<Gf>> {
    Some(Twist::new(reduce_cyclotomic(&s.x, omega)?, reduce_cyclotomic(&s.y, omega)?))
}

/// Coefficient rendering shared by the report writers.
pub trait ShowCoeff: Field {
    fn show(&self) -> String;
    fn is_negative_coeff(&self) -> bool;
}

impl ShowCoeff for Q {
    fn show(&self) -> String {
        crate::arith::rational_string(self)
    }
    fn is_negative_coeff(&self) -> bool {
        self < &Q::zero()
    }
}

impl ShowCoeff for Cyclotomic {
    fn show(&self) -> String {
        self.display()
    }
    fn is_negative_coeff(&self) -> bool {
        self.as_rational().is_some_and(|r| r < Q::zero())
    }
}

impl ShowCoeff for Gf {
    fn show(&self) -> String {
        self.display()
    }
    fn is_negative_coeff(&self) -> bool {
        // prime-field constants print in balanced form
        match (self.field(), self.coefficients().as_slice()) {
            (Some(f), [c]) => *c > f.characteristic() / 2,
            _ => false,
        }
    }
}

pub fn format_laurent<F: ShowCoeff>(p: &LaurentPoly<F>) -> String {
    let terms: Vec<(i64, F)> = p.terms().iter().map(|(e, c)| (*e, c.clone())).collect();
    format_terms(&terms, "z", |c| c.show(), |c| c.is_negative_coeff())
}

impl<F: ShowCoeff> fmt::Display for AlexanderInvariant<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Delta0 = {}, Delta1 = {}", format_laurent(&self.delta0), format_laurent(&self.delta1))
    }
}
