//! Exact rationals and cyclotomic-field arithmetic.

mod cyclotomic;
pub mod poly;
mod text;

pub use cyclotomic::Cyclotomic;
pub use text::{parse as cyc_parse, render as cyc_render, LiteralError};

pub use num_bigint::{BigInt, BigUint};
pub use num_complex::Complex64;

/// Arbitrary-precision rational, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Absolute tolerance for every floating-point magnitude comparison.
pub const MAGNITUDE_TOL: f64 = 1e-9;

pub fn cyc_mul(a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
    a * b
}

pub fn cyc_conj(a: &Cyclotomic) -> Cyclotomic {
    a.conj()
}

pub fn cyc_embed(a: &Cyclotomic) -> Complex64 {
    a.embed()
}
