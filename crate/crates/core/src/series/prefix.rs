use std::fmt;

use num::{Signed, ToPrimitive, Zero};

use super::{Polynomial, Rational};

/// Coefficients `c_0, ..., c_order` of a truncated power series.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesPrefix {
    coefficients: Vec<Rational>,
}

impl SeriesPrefix {
    /// # Panics
    ///
    /// Panics on an empty coefficient vector; a prefix always has `c_0`.
    pub fn new(coefficients: Vec<Rational>) -> Self {
        assert!(!coefficients.is_empty(), "series prefix needs at least c_0");
        Self { coefficients }
    }

    pub fn from_integers(coefficients: &[i64]) -> Self {
        Self::new(coefficients.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, n: usize) -> Option<&Rational> {
        self.coefficients.get(n)
    }

    /// Keeps `c_0..=c_order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coefficients.iter().take(order + 1).cloned().collect())
    }

    /// Coefficientwise sum, truncated to the smaller order.
    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Product with a polynomial, truncated to this prefix's order.
    pub fn mul_polynomial(&self, p: &Polynomial) -> Self {
        let n = self.order();
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in p.coeffs().iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// All coefficients as machine integers, if they are integral and fit.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.coefficients
            .iter()
            .map(|c| if c.is_integer() { c.numer().to_i64() } else { None })
            .collect()
    }
}

impl fmt::Display for SeriesPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() && !(first && i == self.order()) {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}t")?,
                _ => write!(f, "{mag}t^{i}")?,
            }
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}
