//! Orbifold Riemann–Roch for canonical 3-folds and polarized K3 surfaces.
//!
//! A point of type `1/r(a, -a, 1)` (or `1/r(a, -a)` on a surface) enters the
//! plurigenus formula through `b = a^{-1} mod r` and the periodic term
//! `c_Q(j) = bar(bj) (r - bar(bj)) / 2r`.

use std::fmt;

use num::{One, Zero};

use crate::families::{Basket, BasketEntry, Family, FamilyError};
use crate::series::{int, ratio, Rational, RationalFunction, SeriesError, SeriesPrefix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RrError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("series does not start with 1")]
    ConstantTerm,
    #[error("no invariants fit the series with this basket (first mismatch at t^{0})")]
    Inconsistent(usize),
    #[error("coefficient of t is {0}, not a nonnegative integer")]
    BadGenus(Rational),
    #[error("fitted χ(O) = {0} is not an integer")]
    NonIntegralChi(Rational),
}

/// Invariants of a canonical 3-fold that determine its plurigenera.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreefoldInvariants {
    /// `K^3`.
    pub k_cubed: Rational,
    /// `χ(O_X)`.
    pub chi: i64,
    pub p_g: u64,
    pub basket: Basket,
    /// `K · c_2`, when known.
    pub kc2: Option<Rational>,
}

impl ThreefoldInvariants {
    /// `χ(ω_X) = -χ(O_X)` by Serre duality.
    pub fn chi_omega(&self) -> i64 {
        -self.chi
    }
}

/// Invariants of a K3 surface polarized by `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K3Invariants {
    /// `A^2`.
    pub a_squared: Rational,
    /// `h^0(A)`.
    pub g1: u64,
    pub basket: Basket,
    /// `δ(S)`.
    pub delta: Rational,
}

impl K3Invariants {
    /// Fills in `g1` and `delta` from `A^2` and the basket.
    pub fn new(a_squared: Rational, basket: Basket) -> Result<Self, RrError> {
        let g1 = k3_coefficient(&a_squared, &basket, 1, SIGNS);
        let g1 = nonneg_integer(&g1).ok_or(RrError::BadGenus(g1))?;
        let delta = delta_of_basket(&basket);
        Ok(Self {
            a_squared,
            g1,
            basket,
            delta,
        })
    }
}

/// Signs of the correction terms in the two Riemann–Roch formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RrSigns {
    /// Sign of `(1 - 2n) χ(O)` in `P_n`.
    pub chi: i8,
    /// Sign of the basket sum in `P_n`.
    pub basket: i8,
    /// Sign of the basket sum in `h^0(nA)` of a K3.
    pub k3_basket: i8,
}

impl fmt::Display for RrSigns {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |x: i8| if x > 0 { '+' } else { '-' };
        write!(
            f,
            "chi {} basket {} k3 basket {}",
            s(self.chi),
            s(self.basket),
            s(self.k3_basket)
        )
    }
}

/// Convention used throughout; [`calibrate`] recovers it from product-form series.
pub const SIGNS: RrSigns = RrSigns {
    chi: 1,
    basket: 1,
    k3_basket: -1,
};

/// `c_Q(j) = bar(bj) (r - bar(bj)) / 2r` with `b = a^{-1} mod r`.
pub fn periodic_term(e: &BasketEntry, j: u64) -> Rational {
    let r = e.r;
    let x = (e.local_index() * (j % r)) % r;
    ratio((x * (r - x)) as i64, 2 * r as i64)
}

/// `ℓ(Q, n) = Σ_{j=1}^{n-1} c_Q(j)`, the 3-fold correction at `P_n`.
pub fn orbifold_correction(e: &BasketEntry, n: u64) -> Rational {
    (1..n).map(|j| periodic_term(e, j)).sum()
}

fn basket_sum(basket: &Basket, f: impl Fn(&BasketEntry) -> Rational) -> Rational {
    basket.entries().iter().map(|e| f(e) * int(e.multiplicity as i64)).sum()
}

fn threefold_coefficient(inv: &ThreefoldInvariants, n: u64, signs: RrSigns) -> Rational {
    match n {
        0 => Rational::one(),
        1 => int(inv.p_g as i64),
        _ => {
            let n_i = n as i64;
            ratio(n_i * (n_i - 1) * (2 * n_i - 1), 12) * &inv.k_cubed
                + int(signs.chi as i64 * (1 - 2 * n_i) * inv.chi)
                + basket_sum(&inv.basket, |e| orbifold_correction(e, n)) * int(signs.basket as i64)
        }
    }
}

fn k3_coefficient(a_squared: &Rational, basket: &Basket, n: u64, signs: RrSigns) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let n_i = n as i64;
    int(2) + ratio(n_i * n_i, 2) * a_squared + basket_sum(basket, |e| periodic_term(e, n)) * int(signs.k3_basket as i64)
}

/// `P_0, ..., P_order` of a canonical 3-fold.
pub fn plurigenus_series(inv: &ThreefoldInvariants, order: usize) -> SeriesPrefix {
    plurigenus_series_with(inv, order, SIGNS)
}

pub fn plurigenus_series_with(inv: &ThreefoldInvariants, order: usize, signs: RrSigns) -> SeriesPrefix {
    // running ℓ(Q, n) keeps this linear in `order`
    let mut corr = Rational::zero();
    let mut out = Vec::with_capacity(order + 1);
    for n in 0..=order as u64 {
        if n < 2 {
            out.push(threefold_coefficient(inv, n, signs));
            continue;
        }
        corr += basket_sum(&inv.basket, |e| periodic_term(e, n - 1));
        let n_i = n as i64;
        out.push(
            ratio(n_i * (n_i - 1) * (2 * n_i - 1), 12) * &inv.k_cubed
                + int(signs.chi as i64 * (1 - 2 * n_i) * inv.chi)
                + &corr * int(signs.basket as i64),
        );
    }
    SeriesPrefix::new(out)
}

/// `h^0(nA)` for `n = 0..=order` on a polarized K3.
pub fn k3_series(inv: &K3Invariants, order: usize) -> SeriesPrefix {
    k3_series_with(&inv.a_squared, &inv.basket, order, SIGNS)
}

pub fn k3_series_with(a_squared: &Rational, basket: &Basket, order: usize, signs: RrSigns) -> SeriesPrefix {
    SeriesPrefix::new(
        (0..=order as u64)
            .map(|n| k3_coefficient(a_squared, basket, n, signs))
            .collect(),
    )
}

/// Number of coefficients compared when fitting invariants to a series:
/// two quasi-polynomials of degree at most 3 and period `L` agree once
/// `4L` consecutive values do.
fn fit_order(basket: &Basket) -> usize {
    20.max(4 * basket.index_lcm() as usize + 4)
}

fn first_mismatch(a: &SeriesPrefix, b: &SeriesPrefix) -> Option<usize> {
    a.coefficients().iter().zip(b.coefficients()).position(|(x, y)| x != y)
}

fn nonneg_integer(q: &Rational) -> Option<u64> {
    if q.is_integer() {
        u64::try_from(q.to_integer()).ok()
    } else {
        None
    }
}

/// Solves for `K^3` and `χ(O)` from `P_2` and `P_3`, then checks the fit.
pub fn extract_threefold_invariants(p: &RationalFunction, basket: &Basket) -> Result<ThreefoldInvariants, RrError> {
    let order = fit_order(basket);
    let s = p.expand(order)?;
    let c = s.coefficients();
    if !c[0].is_one() {
        return Err(RrError::ConstantTerm);
    }
    let p_g = nonneg_integer(&c[1]).ok_or_else(|| RrError::BadGenus(c[1].clone()))?;
    let sb = int(SIGNS.basket as i64);
    let sc = int(SIGNS.chi as i64);
    let u2 = &c[2] - basket_sum(basket, |e| orbifold_correction(e, 2)) * &sb;
    let u3 = &c[3] - basket_sum(basket, |e| orbifold_correction(e, 3)) * &sb;
    // u2 = K/2 - 3 s χ,  u3 = 5K/2 - 5 s χ
    let chi = (&u3 - &u2 * int(5)) / (int(10) * &sc);
    if !chi.is_integer() {
        return Err(RrError::NonIntegralChi(chi));
    }
    let k_cubed = (&u2 + &chi * int(3) * &sc) * int(2);
    let inv = ThreefoldInvariants {
        k_cubed,
        chi: i64::try_from(chi.to_integer()).map_err(|_| RrError::NonIntegralChi(chi.clone()))?,
        p_g,
        basket: basket.clone(),
        kc2: None,
    };
    if let Some(n) = first_mismatch(&s, &plurigenus_series(&inv, order)) {
        return Err(RrError::Inconsistent(n));
    }
    Ok(inv)
}

/// Solves for `A^2` from `h^0(A)`, then checks the fit.
pub fn extract_k3_invariants(q: &RationalFunction, basket: &Basket) -> Result<K3Invariants, RrError> {
    let order = fit_order(basket);
    let s = q.expand(order)?;
    let c = s.coefficients();
    if !c[0].is_one() {
        return Err(RrError::ConstantTerm);
    }
    let g1 = nonneg_integer(&c[1]).ok_or_else(|| RrError::BadGenus(c[1].clone()))?;
    let corr = basket_sum(basket, |e| periodic_term(e, 1)) * int(SIGNS.k3_basket as i64);
    let a_squared = (&c[1] - int(2) - corr) * int(2);
    if let Some(n) = first_mismatch(&s, &k3_series_with(&a_squared, basket, order, SIGNS)) {
        return Err(RrError::Inconsistent(n));
    }
    Ok(K3Invariants {
        a_squared,
        g1,
        basket: basket.clone(),
        delta: delta_of_basket(basket),
    })
}

/// Invariants of a 3-fold record, from its Hilbert series and basket.
pub fn threefold_invariants(f: &Family) -> Result<ThreefoldInvariants, RrError> {
    let mut inv = extract_threefold_invariants(&f.hilbert_series()?, &f.basket)?;
    inv.kc2 = f.cached.kc2.clone();
    Ok(inv)
}

/// Invariants of a K3 record, from its Hilbert series and basket.
pub fn k3_invariants(f: &Family) -> Result<K3Invariants, RrError> {
    extract_k3_invariants(&f.hilbert_series()?, &f.basket)
}

/// `δ(S) = 24 - Σ m (r^2 - 1) / r`.
pub fn delta_of_basket(basket: &Basket) -> Rational {
    basket.entries().iter().fold(int(24), |acc, e| acc - e.delta_defect())
}

/// `e(X) - e(Y) = e(W) - 2 e(S) + 2N`.
pub fn euler_delta(e_w: i64, e_s: i64, n: u64) -> i64 {
    e_w - 2 * e_s + 2 * n as i64
}

/// Required `K·c_2(X) - K·c_2(Y)` for a transition through a K3 with `δ(S) = delta`.
pub fn kc2_delta(delta: &Rational) -> Rational {
    delta.clone()
}

/// Reference series used to fix the signs: `X_6 ⊂ P^4`,
/// `X_7 ⊂ P(1,1,1,1,2)` and `S_6 ⊂ P(1,1,2,2)`.
type ThreefoldCase = (RationalFunction, ThreefoldInvariants);
type K3Case = (RationalFunction, Rational, Basket);

fn calibration_cases() -> Result<(Vec<ThreefoldCase>, Vec<K3Case>), RrError> {
    let x6 = Family::complete_intersection(&[1; 5], &[6], 3)?;
    let x7 = Family::complete_intersection(&[1, 1, 1, 1, 2], &[7], 3)?;
    let s6 = Family::complete_intersection(&[1, 1, 2, 2], &[6], 2)?;
    let half = Basket::of(&[(1, 1, 2)])?;
    // χ(O) = 1 - p_g for these hypersurfaces
    let threefolds = vec![
        (
            x6.hilbert_series()?,
            ThreefoldInvariants {
                k_cubed: int(6),
                chi: -4,
                p_g: 5,
                basket: Basket::empty(),
                kc2: None,
            },
        ),
        (
            x7.hilbert_series()?,
            ThreefoldInvariants {
                k_cubed: ratio(7, 2),
                chi: -3,
                p_g: 4,
                basket: half,
                kc2: None,
            },
        ),
    ];
    let k3s = vec![(s6.hilbert_series()?, ratio(3, 2), Basket::of(&[(3, 1, 2)])?)];
    Ok((threefolds, k3s))
}

/// Every sign choice that reproduces the reference series to `order`.
pub fn calibrate(order: usize) -> Vec<RrSigns> {
    let Ok((threefolds, k3s)) = calibration_cases() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for chi in [1i8, -1] {
        for basket in [1i8, -1] {
            for k3_basket in [1i8, -1] {
                let signs = RrSigns { chi, basket, k3_basket };
                let ok3 = threefolds
                    .iter()
                    .all(|(p, inv)| p.expand(order).ok() == Some(plurigenus_series_with(inv, order, signs)));
                let ok2 = k3s
                    .iter()
                    .all(|(p, a2, b)| p.expand(order).ok() == Some(k3_series_with(a2, b, order, signs)));
                if ok3 && ok2 {
                    out.push(signs);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn hyp(w: &[u64], d: u64, dim: u32) -> Family {
        Family::complete_intersection(w, &[d], dim).unwrap()
    }

    #[test]
    fn calibration_is_unique_and_matches_constant() {
        assert_eq!(calibrate(20), vec![SIGNS]);
    }

    #[test]
    fn x6_plurigenera() {
        let inv = ThreefoldInvariants {
            k_cubed: int(6),
            chi: -4,
            p_g: 5,
            basket: Basket::empty(),
            kc2: None,
        };
        assert_eq!(plurigenus_series(&inv, 3).to_integers().unwrap(), vec![1, 5, 15, 35]);
        assert_eq!(plurigenus_series(&inv, 0).to_integers().unwrap(), vec![1]);
        let p = hyp(&[1; 5], 6, 3).hilbert_series().unwrap();
        assert_eq!(extract_threefold_invariants(&p, &Basket::empty()).unwrap(), inv);
    }

    #[test]
    fn x7_extraction() {
        let p = hyp(&[1, 1, 1, 1, 2], 7, 3).hilbert_series().unwrap();
        let b: Basket = "1/2".parse().unwrap();
        let inv = extract_threefold_invariants(&p, &b).unwrap();
        assert_eq!(inv.k_cubed, ratio(7, 2));
        assert_eq!(inv.chi, -3);
        assert_eq!(plurigenus_series(&inv, 3), p.expand(3).unwrap());
        // wrong basket does not fit
        assert!(extract_threefold_invariants(&p, &Basket::empty()).is_err());
    }

    #[test]
    fn x46_extraction() {
        let p = hyp(&[4, 5, 6, 7, 23], 46, 3).hilbert_series().unwrap();
        let b: Basket = "3*(1/2),(1/4),(2/5),(1/6),(2/7)".parse().unwrap();
        let inv = extract_threefold_invariants(&p, &b).unwrap();
        assert_eq!(inv.k_cubed, ratio(1, 420));
        assert_eq!(inv.p_g, 0);
        assert_eq!(inv.chi, 1);
    }

    #[test]
    fn k3_series_examples() {
        let s4 = K3Invariants::new(int(4), Basket::empty()).unwrap();
        assert_eq!(k3_series(&s4, 3).to_integers().unwrap(), vec![1, 4, 10, 20]);
        assert_eq!(s4.g1, 4);
        let b: Basket = "3*(1/2)".parse().unwrap();
        let s6 = K3Invariants::new(ratio(3, 2), b.clone()).unwrap();
        let p = hyp(&[1, 1, 2, 2], 6, 2).hilbert_series().unwrap();
        assert_eq!(k3_series(&s6, 20), p.expand(20).unwrap());
        assert_eq!(extract_k3_invariants(&p, &b).unwrap(), s6);
    }

    #[test]
    fn s20_needs_inverse_index() {
        // 1/7(2,5): with b = a the series does not fit
        let p = hyp(&[2, 5, 6, 7], 20, 2).hilbert_series().unwrap();
        let b: Basket = "3*(1/2),(1/6),(2/7)".parse().unwrap();
        let inv = extract_k3_invariants(&p, &b).unwrap();
        assert_eq!(inv.a_squared, ratio(1, 21));
        let e = BasketEntry::single(7, 2).unwrap();
        assert_eq!(periodic_term(&e, 1), ratio(4 * 3, 14));
    }

    #[test]
    fn deltas() {
        assert_eq!(delta_of_basket(&Basket::empty()), int(24));
        assert_eq!(delta_of_basket(&"3*(1/2)".parse().unwrap()), ratio(39, 2));
        assert_eq!(delta_of_basket(&"1/3".parse().unwrap()), ratio(64, 3));
        assert_eq!(kc2_delta(&delta_of_basket(&"1/3".parse().unwrap())), ratio(64, 3));
        assert_eq!(euler_delta(4, 24, 120), 196);
        assert_eq!(euler_delta(7, 0, 0), 7);
        assert_eq!(euler_delta(48, 24, 0), 0);
    }

    #[test]
    fn chi_omega_is_negative_chi() {
        let p = hyp(&[1; 5], 6, 3).hilbert_series().unwrap();
        let inv = extract_threefold_invariants(&p, &Basket::empty()).unwrap();
        assert_eq!(inv.chi_omega(), 4);
    }
}
