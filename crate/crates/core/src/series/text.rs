//! Textual forms of Hilbert series.
//!
//! Two renderings exist: the factored form `(1-t^6)/(1-t)^5`, available when
//! the series comes from a weighted presentation, and the expanded form
//! `(num)/(den)` of any [`RationalFunction`]. Both are read back by
//! [`parse_rational_function`], whose grammar is
//!
//! ```text
//! expr    := ['-'] product ['/' product]
//! product := factor (['*'] factor)*
//! factor  := atom ['^' uint]
//! atom    := '(' poly ')' | term
//! poly    := ['+'|'-'] term (('+'|'-') term)*
//! term    := coef ['*'] ['t' ['^' uint]] | 't' ['^' uint]
//! coef    := uint ['/' uint]
//! ```
//!
//! Whitespace is ignored, `−` is accepted for `-` and `·` for `*`. Juxtaposed
//! factors after `/` all belong to the denominator.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One};

use super::{Polynomial, Rational, RationalFunction, SeriesError};

/// Numerator of a Hilbert series in weighted form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Numerator {
    /// `∏ (1 - t^d)` over the listed degrees.
    Product(Vec<u64>),
    /// An explicit polynomial, e.g. a Pfaffian numerator.
    Expanded(Polynomial),
}

/// `numerator / ∏ (1 - t^a)` with the ambient weights kept for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertForm {
    pub numerator: Numerator,
    pub weights: Vec<u64>,
}

impl HilbertForm {
    pub fn product(degrees: &[u64], weights: &[u64]) -> Self {
        Self {
            numerator: Numerator::Product(degrees.to_vec()),
            weights: weights.to_vec(),
        }
    }

    pub fn numerator_polynomial(&self) -> Polynomial {
        match &self.numerator {
            Numerator::Product(d) => product_of(d),
            Numerator::Expanded(p) => p.clone(),
        }
    }

    pub fn denominator_polynomial(&self) -> Polynomial {
        product_of(&self.weights)
    }

    /// Canonical rational function of this form.
    pub fn to_rational_function(&self) -> RationalFunction {
        RationalFunction::new(self.numerator_polynomial(), self.denominator_polynomial())
            .expect("product of (1 - t^a) is nonzero")
    }
}

fn product_of(exps: &[u64]) -> Polynomial {
    exps.iter()
        .fold(Polynomial::one(), |acc, &e| acc.mul_one_minus_t_pow(e as usize))
}

fn write_factors(f: &mut fmt::Formatter<'_>, exps: &[u64]) -> fmt::Result {
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    for &e in exps {
        *counts.entry(e).or_default() += 1;
    }
    for (e, m) in counts {
        match e {
            1 => f.write_str("(1-t)")?,
            _ => write!(f, "(1-t^{e})")?,
        }
        if m > 1 {
            write!(f, "^{m}")?;
        }
    }
    Ok(())
}

impl fmt::Display for HilbertForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.numerator {
            Numerator::Product(d) if d.is_empty() => f.write_str("1")?,
            Numerator::Product(d) => write_factors(f, d)?,
            Numerator::Expanded(p) => write!(f, "({p})")?,
        }
        if !self.weights.is_empty() {
            f.write_str("/")?;
            write_factors(f, &self.weights)?;
        }
        Ok(())
    }
}

/// Parses either textual form back into a canonical rational function.
pub fn parse_rational_function(text: &str) -> Result<RationalFunction, SeriesError> {
    let chars: Vec<char> = text
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '−' => '-',
            '·' => '*',
            other => other,
        })
        .collect();
    let mut p = Parser { chars, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, k: usize) -> Option<char> {
        self.chars.get(self.pos + k).copied()
    }

    fn error(&self, message: &str) -> SeriesError {
        SeriesError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction, SeriesError> {
        let negate = self.eat('-');
        let mut num = self.product()?;
        if negate {
            num = -num;
        }
        if self.eat('/') {
            let den = self.product()?;
            num.checked_div(&den).map_err(|_| self.error("division by zero"))
        } else {
            Ok(num)
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(c) if c == '(' || c == 't' || c.is_ascii_digit())
    }

    fn product(&mut self) -> Result<RationalFunction, SeriesError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') || self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunction, SeriesError> {
        let base = if self.eat('(') {
            let p = self.poly()?;
            if !self.eat(')') {
                return Err(self.error("expected ')'"));
            }
            RationalFunction::from_polynomial(p)
        } else if self.starts_factor() {
            RationalFunction::from_polynomial(self.term()?)
        } else {
            return Err(self.error("expected '(' or a term"));
        };
        if self.eat('^') {
            let e = self.uint()?;
            let e = usize::try_from(e).map_err(|_| self.error("exponent too large"))?;
            let mut out = RationalFunction::one();
            for _ in 0..e {
                out = &out * &base;
            }
            Ok(out)
        } else {
            Ok(base)
        }
    }

    fn poly(&mut self) -> Result<Polynomial, SeriesError> {
        let mut acc = Polynomial::zero();
        let mut first = true;
        loop {
            let neg = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                return Ok(acc);
            };
            let term = self.term()?;
            acc = if neg { &acc - &term } else { &acc + &term };
            first = false;
        }
    }

    fn term(&mut self) -> Result<Polynomial, SeriesError> {
        let mut coef = Rational::one();
        let mut has_coef = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.uint()?;
            coef = Rational::from_integer(n);
            if self.peek() == Some('/') && self.peek_at(1).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
                let d = self.uint()?;
                if d == BigInt::from(0) {
                    return Err(self.error("zero denominator in coefficient"));
                }
                coef /= Rational::from_integer(d);
            }
            has_coef = true;
            if self.peek() == Some('*') && self.peek_at(1) == Some('t') {
                self.pos += 1;
            }
        }
        if self.eat('t') {
            let exp = if self.eat('^') {
                let e = self.uint()?;
                usize::try_from(e).map_err(|_| self.error("exponent too large"))?
            } else {
                1
            };
            Ok(Polynomial::monomial(coef, exp))
        } else if has_coef {
            Ok(Polynomial::constant(coef))
        } else {
            Err(self.error("expected a coefficient or 't'"))
        }
    }

    fn uint(&mut self) -> Result<BigInt, SeriesError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factored_rendering() {
        let f = HilbertForm::product(&[10], &[1, 1, 1, 1, 5]);
        assert_eq!(f.to_string(), "(1-t^10)/(1-t)^4(1-t^5)");
        let g = HilbertForm::product(&[], &[1, 1]);
        assert_eq!(g.to_string(), "1/(1-t)^2");
        let pf = HilbertForm {
            numerator: Numerator::Expanded(Polynomial::from_integers(&[1, 0, -2])),
            weights: vec![1],
        };
        assert_eq!(pf.to_string(), "(1-2t^2)/(1-t)");
    }

    #[test]
    fn parses_both_forms() {
        let f = HilbertForm::product(&[10], &[1, 1, 1, 1, 5]);
        let rf = f.to_rational_function();
        assert_eq!(parse_rational_function(&f.to_string()).unwrap(), rf);
        assert_eq!(parse_rational_function(&rf.to_string()).unwrap(), rf);
        assert_eq!(
            parse_rational_function("(1 − t^6)/(1 − t)^5").unwrap(),
            HilbertForm::product(&[6], &[1; 5]).to_rational_function()
        );
        assert_eq!(
            parse_rational_function("t/(1-t)").unwrap(),
            RationalFunction::t_over_one_minus_t()
        );
        let half = parse_rational_function("3/2*t^2 + 1").unwrap_err();
        assert!(matches!(half, SeriesError::Parse { .. }));
        assert_eq!(
            parse_rational_function("(3/2*t^2+1)").unwrap().numerator().coeff(2),
            Rational::new(3.into(), 2.into())
        );
    }

    #[test]
    fn parse_errors() {
        assert!(parse_rational_function("(1-t").is_err());
        assert!(parse_rational_function("1/(1-1)").is_err());
        assert!(parse_rational_function("").is_err());
        assert!(parse_rational_function("x").is_err());
    }
}
