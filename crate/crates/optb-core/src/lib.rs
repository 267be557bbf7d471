//! Exact computations for once-punctured torus bundles: monodromy and
//! homology, reducible SL₂ representations, twisted Alexander invariants,
//! extension conditions for the tautological quaternion algebra, and
//! candidate bad-prime sets.

pub mod alexander;
pub mod arith;
pub mod conditions;
pub mod error;
pub mod families;
pub mod integral;
pub mod monodromy;
pub mod reps;
pub mod words;

pub use error::{Error, Result};

pub type Rational = arith::Q;
pub type RationalPoly = arith::poly::Poly<arith::Q>;
pub type IntPoly = arith::poly::Poly<num_bigint::BigInt>;
pub type CyclotomicElement = arith::cyclotomic::Cyclotomic;
pub type QuadraticElement = arith::quadratic::Quadratic;
pub type FiniteFieldElement = arith::finite_field::Gf;
pub type RationalLaurent = arith::laurent::LaurentPoly<arith::Q>;
pub type CyclotomicLaurent = arith::laurent::LaurentPoly<arith::cyclotomic::Cyclotomic>;
pub type FiniteLaurent = arith::laurent::LaurentPoly<arith::finite_field::Gf>;
