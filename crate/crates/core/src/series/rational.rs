use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::{Polynomial, Rational, SeriesError, SeriesPrefix};

/// Quotient of two polynomials in `t` over the rationals.
///
/// Values built by the arithmetic operations are canonical: numerator and
/// denominator are coprime and the lowest nonzero coefficient of the
/// denominator is 1. [`RationalFunction::from_parts`] keeps an unreduced pair
/// as given; equality is always decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Canonicalized `num / den`.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self, SeriesError> {
        Ok(Self::from_parts(num, den)?.canonical())
    }

    /// Stores `num / den` without reduction.
    pub fn from_parts(num: Polynomial, den: Polynomial) -> Result<Self, SeriesError> {
        if den.is_zero() {
            return Err(SeriesError::ZeroDenominator);
        }
        Ok(Self { num, den })
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    /// `t / (1 - t)`, the generating function of `h^0` shifts in the
    /// transition identity.
    pub fn t_over_one_minus_t() -> Self {
        Self {
            num: Polynomial::t(),
            den: Polynomial::from_integers(&[1, -1]),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Reduced form: coprime parts, denominator's lowest nonzero coefficient 1.
    pub fn canonical(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let g = Polynomial::gcd(&self.num, &self.den);
        let (num, _) = self.num.div_rem(&g).expect("gcd of nonzero is nonzero");
        let (den, _) = self.den.div_rem(&g).expect("gcd of nonzero is nonzero");
        let low = den.lowest_degree().expect("nonzero denominator");
        let norm = den.coeffs()[low].recip();
        Self {
            num: num.scale(&norm),
            den: den.scale(&norm),
        }
    }

    pub fn recip(&self) -> Result<Self, SeriesError> {
        if self.num.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        Ok(Self {
            num: self.den.clone(),
            den: self.num.clone(),
        }
        .canonical())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        Ok(self * &rhs.recip()?)
    }

    /// Taylor coefficients at `t = 0` up to and including `t^order`.
    pub fn expand(&self, order: usize) -> Result<SeriesPrefix, SeriesError> {
        let c = self.canonical();
        let q0 = c.den.coeff(0);
        if q0.is_zero() {
            return Err(SeriesError::PoleAtOrigin);
        }
        let inv = q0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = c.num.coeff(n);
            for (k, qk) in c.den.coeffs().iter().enumerate().skip(1).take(n) {
                acc -= qk * &out[n - k];
            }
            out.push(acc * &inv);
        }
        Ok(SeriesPrefix::new(out))
    }

    /// Order of the pole at `t = 1`; negative for a zero there.
    /// The zero function reports `None`.
    pub fn pole_order_at_one(&self) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        Some(multiplicity_at_one(&self.den) as i64 - multiplicity_at_one(&self.num) as i64)
    }

    /// `lim_{t→1} (1-t)^k · f(t)`, or `None` if the limit is infinite.
    pub fn limit_at_one(&self, k: i64) -> Option<Rational> {
        let Some(order) = self.pole_order_at_one() else {
            return Some(Rational::zero());
        };
        if order > k {
            return None;
        }
        if order < k {
            return Some(Rational::zero());
        }
        let (num, mn) = strip_one(&self.num);
        let (den, md) = strip_one(&self.den);
        debug_assert_eq!(md as i64 - mn as i64, k);
        // (1-t)^k f = num / den after stripping (t-1) factors; (1-t) = -(t-1)
        let one = Rational::one();
        let sign = if (md - mn) % 2 == 0 { one.clone() } else { -one.clone() };
        Some(sign * num.eval(&one) / den.eval(&one))
    }
}

fn multiplicity_at_one(p: &Polynomial) -> usize {
    strip_one(p).1
}

/// Divides out the largest power of `(t - 1)`.
fn strip_one(p: &Polynomial) -> (Polynomial, usize) {
    let root = Polynomial::from_integers(&[-1, 1]);
    let mut cur = p.clone();
    let mut m = 0;
    while !cur.is_zero() {
        let (q, r) = cur.div_rem(&root).expect("nonzero divisor");
        if !r.is_zero() {
            break;
        }
        cur = q;
        m += 1;
    }
    (cur, m)
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl Add for &RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
        .canonical()
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
        .canonical()
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: RationalFunction) -> RationalFunction {
        &self + &rhs
    }
}

impl Sub for RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: RationalFunction) -> RationalFunction {
        &self - &rhs
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: RationalFunction) -> RationalFunction {
        &self * &rhs
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_polynomial(p)
    }
}

impl fmt::Display for RationalFunction {
    /// Expanded form `(num)/(den)`, parseable by [`super::parse_rational_function`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "({})", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_integers(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::from_parts(p(n), p(d)).unwrap()
    }

    fn one_minus_t_pow(e: usize) -> Polynomial {
        Polynomial::one().mul_one_minus_t_pow(e)
    }

    fn prod(exps: &[i64]) -> Polynomial {
        Polynomial::from_exponent_product(exps).unwrap()
    }

    #[test]
    fn rejects_zero_denominator() {
        assert!(matches!(
            RationalFunction::new(p(&[1]), Polynomial::zero()),
            Err(SeriesError::ZeroDenominator)
        ));
    }

    #[test]
    fn add_examples() {
        let geo = rf(&[1], &[1, -1]);
        assert_eq!(&geo + &RationalFunction::zero(), geo);
        let s = &RationalFunction::t_over_one_minus_t() + &RationalFunction::one();
        assert_eq!(s, geo);
        // canonical: exactly 1/(1-t)
        assert_eq!(s.numerator(), &p(&[1]));
        assert_eq!(s.denominator(), &p(&[1, -1]));
    }

    #[test]
    fn mul_examples() {
        let x = rf(&[3, 1], &[1, 0, 2]);
        assert_eq!(&x * &RationalFunction::one(), x);
        // (1-t^2)/(1-t) * 1/(1+t) = 1
        let prod = &rf(&[1, 0, -1], &[1, -1]) * &rf(&[1], &[1, 1]);
        assert_eq!(prod.numerator(), &p(&[1]));
        assert_eq!(prod.denominator(), &p(&[1]));
        // t/(1-t) * (1-t^4)/(1-t)^4 = t(1-t^4)/(1-t)^5
        let ps = RationalFunction::from_parts(one_minus_t_pow(4), prod_pow(&[1, 1, 1, 1])).unwrap();
        let lhs = &RationalFunction::t_over_one_minus_t() * &ps;
        let rhs = RationalFunction::from_parts(one_minus_t_pow(4).shift(1), prod_pow(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(lhs, rhs);
    }

    fn prod_pow(e: &[i64]) -> Polynomial {
        prod(e)
    }

    #[test]
    fn equality_by_cross_multiplication() {
        // (1-t^2)/(1-t)^2 == (1+t)/(1-t)
        assert_eq!(rf(&[1, 0, -1], &[1, -2, 1]), rf(&[1, 1], &[1, -1]));
        assert_ne!(rf(&[1], &[1, -1]), rf(&[1], &[1, 0, -1]));
    }

    #[test]
    fn expansion() {
        let px = RationalFunction::new(prod(&[6]), prod(&[1; 5])).unwrap();
        let s = px.expand(3).unwrap();
        assert_eq!(s.to_integers().unwrap(), vec![1, 5, 15, 35]);
        assert_eq!(
            rf(&[1], &[1, -1]).expand(2).unwrap().to_integers().unwrap(),
            vec![1, 1, 1]
        );
        let ps = RationalFunction::new(prod(&[4]), prod(&[1; 4])).unwrap();
        assert_eq!(ps.expand(1).unwrap().to_integers().unwrap(), vec![1, 4]);
        assert!(matches!(rf(&[1], &[0, 1]).expand(3), Err(SeriesError::PoleAtOrigin)));
        // removable: t/t has no pole after canonicalization
        assert_eq!(rf(&[0, 1], &[0, 1]).expand(0).unwrap().to_integers().unwrap(), vec![1]);
    }

    #[test]
    fn limit_at_one_gives_degree() {
        let px = RationalFunction::new(prod(&[6]), prod(&[1; 5])).unwrap();
        assert_eq!(px.pole_order_at_one(), Some(4));
        assert_eq!(px.limit_at_one(4), Some(Rational::from_integer(6.into())));
        let x46 = RationalFunction::new(prod(&[46]), prod(&[4, 5, 6, 7, 23])).unwrap();
        assert_eq!(x46.limit_at_one(4), Some(Rational::new(1.into(), 420.into())));
        assert_eq!(x46.limit_at_one(3), None);
        assert_eq!(x46.limit_at_one(5), Some(Rational::zero()));
    }

    #[test]
    fn display_expanded() {
        assert_eq!(rf(&[1], &[1, -1]).to_string(), "(1)/(1-t)");
        assert_eq!(RationalFunction::from_polynomial(p(&[1, 1])).to_string(), "(1+t)");
    }
}
