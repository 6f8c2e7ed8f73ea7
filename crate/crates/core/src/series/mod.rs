//! Exact univariate polynomials, rational functions and truncated power
//! series over the rationals.

mod poly;
mod prefix;
mod rational;
mod text;

pub use poly::Polynomial;
pub use prefix::SeriesPrefix;
pub use rational::RationalFunction;
pub use text::{parse_rational_function, HilbertForm, Numerator};

/// Arbitrary-precision rational number.
pub type Rational = num::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("exponent {0} in a product of (1 - t^e) must be at least 1")]
    NonPositiveExponent(i64),
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("pole at origin: no power series expansion at t = 0")]
    PoleAtOrigin,
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` as a rational.
///
/// # Panics
///
/// Panics if `d` is zero.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `∏ (1 - t^e)`; see [`Polynomial::from_exponent_product`].
pub fn poly_from_exponent_product(exponents: &[i64]) -> Result<Polynomial, SeriesError> {
    Polynomial::from_exponent_product(exponents)
}

pub fn rf_add(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
    a + b
}

pub fn rf_mul(a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
    a * b
}

pub fn rf_equal(a: &RationalFunction, b: &RationalFunction) -> bool {
    a == b
}

pub fn rf_expand(a: &RationalFunction, order: usize) -> Result<SeriesPrefix, SeriesError> {
    a.expand(order)
}
