//! Presentations of quasismooth families in weighted projective space:
//! hypersurfaces, complete intersections and codimension 3 Pfaffians.

mod basket;
mod toric;
mod weights;

use std::fmt;
use std::str::FromStr;

use num::BigInt;

pub use basket::{Basket, BasketEntry};
pub use toric::{toric_generators, toric_sections, Monomial, ToricWeightMatrix};
pub use weights::WeightSystem;

use crate::series::{HilbertForm, Numerator, Polynomial, Rational, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("weights must be at least 1, got {0}")]
    InvalidWeight(u64),
    #[error("ambient weight system is empty")]
    EmptyAmbient,
    #[error("equation degrees must be at least 1, got {0}")]
    InvalidDegree(u64),
    #[error("invalid basket point 1/{r}({a},-{a})")]
    InvalidBasketEntry { r: u64, a: u64 },
    #[error("dimension mismatch: {ambient} variables minus codimension {codimension} minus 1 is not {dimension}")]
    DimensionMismatch {
        ambient: usize,
        codimension: usize,
        dimension: u32,
    },
    #[error("operation needs a {expected} presentation, found {found}")]
    WrongFormat { expected: &'static str, found: Format },
    #[error("a {format} presentation needs {expected} equation degrees, found {found}")]
    DegreeCount {
        format: Format,
        expected: &'static str,
        found: usize,
    },
    #[error("non-integral adjunction number: Pfaffian degrees sum to {0}")]
    NonIntegralAdjunction(u64),
    #[error("Pfaffian Hilbert numerator is not palindromic")]
    NotGorenstein,
    #[error("canonical weight is {found}, but a dimension {dimension} family needs {expected}")]
    CanonicalWeight { dimension: u32, expected: i64, found: i64 },
    #[error("unsupported dimension {0}: only K3 surfaces (2) and canonical 3-folds (3)")]
    UnsupportedDimension(u32),
    #[error("dimension mismatch: {found} cutting degrees in a {ambient_dim}-dimensional ambient space")]
    BezoutDimension { ambient_dim: usize, found: usize },
    #[error("stratum of weight-{r} points is not zero-dimensional on the general member")]
    StratumNotZeroDimensional { r: u64 },
    #[error("scope: stratum of coordinates with weight divisible by {r} has mixed weights")]
    MixedWeightStratum { r: u64 },
    #[error("{inner} is not a sub-multiset of {outer}")]
    NotSubMultiset { inner: WeightSystem, outer: WeightSystem },
    #[error("toric matrix rows have lengths {h} and {e} for {variables} variables")]
    ToricShape { variables: usize, h: usize, e: usize },
    #[error("{0}")]
    Syntax(String),
}

/// How the equations of a family are presented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Format {
    Hypersurface,
    CompleteIntersection,
    Pfaffian,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Hypersurface => "hypersurface",
            Format::CompleteIntersection => "ci",
            Format::Pfaffian => "pfaffian",
        })
    }
}

impl FromStr for Format {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hypersurface" | "hyp" => Ok(Format::Hypersurface),
            "ci" | "complete-intersection" => Ok(Format::CompleteIntersection),
            "pfaffian" | "pf" => Ok(Format::Pfaffian),
            other => Err(FamilyError::Syntax(format!("unknown format {other:?}"))),
        }
    }
}

/// Invariants carried by a data record rather than derived from the presentation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CachedInvariants {
    /// `K^3` for a canonical 3-fold, `A^2` for a K3 surface.
    pub degree: Option<Rational>,
    /// `χ(O)`.
    pub chi: Option<i64>,
    pub p_g: Option<u64>,
    /// `K · c_2`.
    pub kc2: Option<Rational>,
    /// Topological Euler number.
    pub euler: Option<i64>,
}

impl CachedInvariants {
    pub fn is_empty(&self) -> bool {
        *self == Self::default()
    }
}

/// A polarized family `V ⊂ P(a_0..a_n)` given by its equation degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    /// Graded Ring Database id, used as the node label of the web.
    pub id: Option<u32>,
    pub label: String,
    pub ambient: WeightSystem,
    pub format: Format,
    /// Equation degrees; for Pfaffians the five Pfaffian degrees.
    pub equation_degrees: Vec<u64>,
    /// 2 for K3 surfaces, 3 for canonical 3-folds.
    pub dimension: u32,
    pub basket: Basket,
    pub cached: CachedInvariants,
}

impl Family {
    /// A family with an empty basket and no cached data. The format is
    /// `Hypersurface` or `CompleteIntersection` according to the degree count.
    pub fn complete_intersection(ambient: &[u64], degrees: &[u64], dimension: u32) -> Result<Self, FamilyError> {
        let format = if degrees.len() == 1 {
            Format::Hypersurface
        } else {
            Format::CompleteIntersection
        };
        Self::build(ambient, degrees, format, dimension)
    }

    pub fn pfaffian(ambient: &[u64], degrees: &[u64], dimension: u32) -> Result<Self, FamilyError> {
        Self::build(ambient, degrees, Format::Pfaffian, dimension)
    }

    fn build(ambient: &[u64], degrees: &[u64], format: Format, dimension: u32) -> Result<Self, FamilyError> {
        let ambient = WeightSystem::new(ambient.to_vec())?;
        let mut f = Self {
            id: None,
            label: String::new(),
            ambient,
            format,
            equation_degrees: degrees.to_vec(),
            dimension,
            basket: Basket::empty(),
            cached: CachedInvariants::default(),
        };
        f.label = f.default_label();
        Ok(f)
    }

    pub fn with_id(mut self, id: u32) -> Self {
        self.id = Some(id);
        self
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn with_basket(mut self, basket: Basket) -> Self {
        self.basket = basket;
        self
    }

    /// `X_{6,20} ⊂ P(1,2,3,4,5,10)` style label; K3 surfaces use `S`.
    pub fn default_label(&self) -> String {
        let letter = if self.dimension == 2 { 'S' } else { 'X' };
        let degs: Vec<String> = self.equation_degrees.iter().map(u64::to_string).collect();
        let sub = if degs.len() == 1 {
            degs[0].clone()
        } else {
            format!("{{{}}}", degs.join(","))
        };
        format!("{letter}_{sub} ⊂ {}", self.ambient)
    }

    /// Display name: `#id label` or just the label.
    pub fn name(&self) -> String {
        match self.id {
            Some(id) => format!("{id}"),
            None => self.label.clone(),
        }
    }

    pub fn codimension(&self) -> usize {
        match self.format {
            Format::Pfaffian => 3,
            _ => self.equation_degrees.len(),
        }
    }

    pub fn is_k3(&self) -> bool {
        self.dimension == 2
    }

    /// `½ Σ d_i` for a Pfaffian presentation.
    pub fn adjunction_number(&self) -> Result<u64, FamilyError> {
        self.require(Format::Pfaffian)?;
        let sum: u64 = self.equation_degrees.iter().sum();
        if sum % 2 != 0 {
            return Err(FamilyError::NonIntegralAdjunction(sum));
        }
        Ok(sum / 2)
    }

    fn require(&self, format: Format) -> Result<(), FamilyError> {
        let ok = match format {
            Format::Pfaffian => self.format == Format::Pfaffian,
            _ => self.format != Format::Pfaffian,
        };
        if ok {
            Ok(())
        } else {
            Err(FamilyError::WrongFormat {
                expected: match format {
                    Format::Pfaffian => "pfaffian",
                    _ => "hypersurface or complete-intersection",
                },
                found: self.format,
            })
        }
    }

    /// Arithmetic well-formedness of the presentation.
    pub fn validate(&self) -> Result<(), FamilyError> {
        if let Some(&d) = self.equation_degrees.iter().find(|&&d| d == 0) {
            return Err(FamilyError::InvalidDegree(d));
        }
        match self.format {
            Format::Hypersurface if self.equation_degrees.len() != 1 => {
                return Err(FamilyError::DegreeCount {
                    format: self.format,
                    expected: "exactly one",
                    found: self.equation_degrees.len(),
                })
            }
            Format::CompleteIntersection if self.equation_degrees.is_empty() => {
                return Err(FamilyError::DegreeCount {
                    format: self.format,
                    expected: "at least one",
                    found: 0,
                })
            }
            Format::Pfaffian => {
                if self.equation_degrees.len() != 5 {
                    return Err(FamilyError::DegreeCount {
                        format: self.format,
                        expected: "five",
                        found: self.equation_degrees.len(),
                    });
                }
                self.adjunction_number()?;
                let num = pfaffian_numerator(&self.equation_degrees)?;
                if !is_palindromic(&num) {
                    return Err(FamilyError::NotGorenstein);
                }
            }
            _ => {}
        }
        let codim = self.codimension();
        if self.ambient.len() < codim + 1 || self.ambient.len() - codim - 1 != self.dimension as usize {
            return Err(FamilyError::DimensionMismatch {
                ambient: self.ambient.len(),
                codimension: codim,
                dimension: self.dimension,
            });
        }
        let expected = match self.dimension {
            2 => 0,
            3 => 1,
            d => return Err(FamilyError::UnsupportedDimension(d)),
        };
        let found = canonical_weight(self);
        if found != expected {
            return Err(FamilyError::CanonicalWeight {
                dimension: self.dimension,
                expected,
                found,
            });
        }
        Ok(())
    }

    /// Factored Hilbert series of the presentation.
    pub fn hilbert_form(&self) -> Result<HilbertForm, FamilyError> {
        let weights = self.ambient.weights().to_vec();
        Ok(match self.format {
            Format::Pfaffian => HilbertForm {
                numerator: Numerator::Expanded(pfaffian_numerator(&self.equation_degrees)?),
                weights,
            },
            _ => HilbertForm {
                numerator: Numerator::Product(self.equation_degrees.clone()),
                weights,
            },
        })
    }

    pub fn hilbert_series(&self) -> Result<RationalFunction, FamilyError> {
        match self.format {
            Format::Pfaffian => hilbert_pfaffian(self),
            _ => hilbert_ci(self),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.id {
            Some(id) => write!(f, "{id}: {}", self.label),
            None => f.write_str(&self.label),
        }
    }
}

/// `k` with `ω = O(k)`: `Σ d_j - Σ a_i` for complete intersections and
/// `½ Σ d_i - Σ a_i` for Pfaffians.
pub fn canonical_weight(f: &Family) -> i64 {
    let top = match f.format {
        Format::Pfaffian => f.equation_degrees.iter().sum::<u64>() / 2,
        _ => f.equation_degrees.iter().sum::<u64>(),
    };
    top as i64 - f.ambient.sum() as i64
}

/// `∏ (1 - t^{d_j}) / ∏ (1 - t^{a_i})`.
pub fn hilbert_ci(f: &Family) -> Result<RationalFunction, FamilyError> {
    f.require(Format::Hypersurface)?;
    Ok(HilbertForm::product(&f.equation_degrees, f.ambient.weights()).to_rational_function())
}

/// `(1 - Σ t^{d_i} + Σ t^{k - d_i} - t^k) / ∏ (1 - t^{a_i})` with `k = ½ Σ d_i`.
pub fn hilbert_pfaffian(f: &Family) -> Result<RationalFunction, FamilyError> {
    f.require(Format::Pfaffian)?;
    Ok(f.hilbert_form()?.to_rational_function())
}

/// Hilbert numerator of a codimension 3 Gorenstein ring with the given
/// Pfaffian degrees.
pub fn pfaffian_numerator(degrees: &[u64]) -> Result<Polynomial, FamilyError> {
    let sum: u64 = degrees.iter().sum();
    if sum % 2 != 0 {
        return Err(FamilyError::NonIntegralAdjunction(sum));
    }
    let k = sum / 2;
    if let Some(&d) = degrees.iter().find(|&&d| d > k) {
        return Err(FamilyError::InvalidDegree(d));
    }
    let k = k as usize;
    let mut c = vec![0i64; k + 1];
    c[0] += 1;
    c[k] -= 1;
    for &d in degrees {
        c[d as usize] -= 1;
        c[k - d as usize] += 1;
    }
    Ok(Polynomial::from_integers(&c))
}

/// Coefficients read the same from both ends of `[0, degree]`, up to the
/// overall sign `(-1)^?` fixed by the top coefficient.
pub fn is_palindromic(p: &Polynomial) -> bool {
    let Some(deg) = p.degree() else {
        return true;
    };
    let c = p.coeffs();
    let sign_flip = c[0] != c[deg];
    (0..=deg).all(|j| {
        if sign_flip {
            c[j] == -c[deg - j].clone()
        } else {
            c[j] == c[deg - j]
        }
    })
}

/// `k^dim · ∏ d / ∏ a`: `K^3` for a canonical 3-fold. For K3 surfaces
/// (`k = 0`) the polarization is `A = O(1)` and the result is `A^2 = ∏ d / ∏ a`.
pub fn degree_top(f: &Family) -> Result<Rational, FamilyError> {
    f.require(Format::Hypersurface)?;
    let k = canonical_weight(f);
    let k = if k == 0 { 1 } else { k };
    let num: BigInt = f.equation_degrees.iter().map(|&d| BigInt::from(d)).product();
    let scale = BigInt::from(k).pow(f.dimension);
    Ok(Rational::new(num * scale, f.ambient.product()))
}

/// `∏ cutting_degrees / ∏ weights`: the number of points cut out by
/// `dim` general forms when they all avoid the singular strata.
pub fn weighted_bezout(ambient: &WeightSystem, cutting_degrees: &[u64]) -> Result<Rational, FamilyError> {
    if cutting_degrees.len() != ambient.dimension() {
        return Err(FamilyError::BezoutDimension {
            ambient_dim: ambient.dimension(),
            found: cutting_degrees.len(),
        });
    }
    let num: BigInt = cutting_degrees.iter().map(|&d| BigInt::from(d)).product();
    Ok(Rational::new(num, ambient.product()))
}

/// Number of `1/r` points on a general member of a hypersurface family along
/// the stratum spanned by the coordinates of weight divisible by `r`.
///
/// Only strata on which every coordinate has weight exactly `r` are handled:
/// a point stratum contributes 1 unless a pure power of degree `d` exists, and
/// a line stratum carries a binary form of degree `d / r`.
pub fn stratum_point_count(f: &Family, r: u64) -> Result<u64, FamilyError> {
    if f.format != Format::Hypersurface {
        return Err(FamilyError::WrongFormat {
            expected: "hypersurface",
            found: f.format,
        });
    }
    if r < 2 {
        return Err(FamilyError::InvalidWeight(r));
    }
    let d = f.equation_degrees[0];
    let stratum: Vec<u64> = f.ambient.weights().iter().copied().filter(|w| w % r == 0).collect();
    if stratum.iter().any(|&w| w != r) {
        return Err(FamilyError::MixedWeightStratum { r });
    }
    match (stratum.len(), d % r == 0) {
        (0, _) => Ok(0),
        (1, true) => Ok(0),
        (1, false) => Ok(1),
        (2, true) => Ok(d / r),
        _ => Err(FamilyError::StratumNotZeroDimensional { r }),
    }
}

/// Degrees of ideal generators of `s` re-embedded in `target`: one linear
/// generator per extra variable plus the equations of `s`. Sorted.
pub fn embedded_generator_degrees(s: &Family, target: &WeightSystem) -> Result<Vec<u64>, FamilyError> {
    let mut out = target
        .complement(&s.ambient)
        .ok_or_else(|| FamilyError::NotSubMultiset {
            inner: s.ambient.clone(),
            outer: target.clone(),
        })?;
    out.extend_from_slice(&s.equation_degrees);
    out.sort_unstable();
    Ok(out)
}

/// `A^{dim}` recovered from a Hilbert series as `lim (1-t)^{dim+1} P(t)`.
pub fn series_degree(p: &RationalFunction, dimension: u32) -> Option<Rational> {
    p.limit_at_one(dimension as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, ratio};

    fn ci(w: &[u64], d: &[u64], dim: u32) -> Family {
        Family::complete_intersection(w, d, dim).unwrap()
    }

    #[test]
    fn canonical_weights() {
        assert_eq!(canonical_weight(&ci(&[1; 5], &[6], 3)), 1);
        assert_eq!(canonical_weight(&ci(&[1, 1, 2, 2], &[6], 2)), 0);
        let pf = Family::pfaffian(&[1, 1, 2, 2, 3, 3], &[4, 4, 5, 5, 6], 2).unwrap();
        assert_eq!(pf.adjunction_number().unwrap(), 12);
        assert_eq!(canonical_weight(&pf), 0);
    }

    #[test]
    fn ci_series() {
        let x6 = ci(&[1; 5], &[6], 3);
        let expected = RationalFunction::new(
            Polynomial::from_exponent_product(&[6]).unwrap(),
            Polynomial::from_exponent_product(&[1; 5]).unwrap(),
        )
        .unwrap();
        assert_eq!(hilbert_ci(&x6).unwrap(), expected);
        let x620 = ci(&[1, 2, 3, 4, 5, 10], &[6, 20], 3);
        let expected = RationalFunction::new(
            Polynomial::from_exponent_product(&[6, 20]).unwrap(),
            Polynomial::from_exponent_product(&[1, 2, 3, 4, 5, 10]).unwrap(),
        )
        .unwrap();
        assert_eq!(hilbert_ci(&x620).unwrap(), expected);
        let pf = Family::pfaffian(&[1, 1, 2, 2, 3, 3], &[4, 4, 5, 5, 6], 2).unwrap();
        assert!(matches!(hilbert_ci(&pf), Err(FamilyError::WrongFormat { .. })));
    }

    #[test]
    fn first_coefficients_count_weight_one_variables() {
        for (w, d) in [
            (vec![1u64, 1, 1, 1, 5], vec![10u64]),
            (vec![1, 3, 4, 5, 7], vec![21]),
            (vec![4, 5, 6, 7, 23], vec![46]),
            (vec![1, 2, 3, 3, 4, 4], vec![6, 12]),
        ] {
            let f = ci(&w, &d, 3);
            let s = hilbert_ci(&f).unwrap().expand(1).unwrap();
            assert_eq!(s.to_integers().unwrap(), vec![1, f.ambient.count_of(1) as i64]);
        }
    }

    #[test]
    fn pfaffian_numerator_and_errors() {
        let n = pfaffian_numerator(&[4, 4, 5, 5, 6]).unwrap();
        let mut c = vec![0i64; 13];
        c[0] = 1;
        c[4] = -2;
        c[5] = -2;
        c[7] = 2;
        c[8] = 2;
        c[12] = -1;
        assert_eq!(n, Polynomial::from_integers(&c));
        assert!(is_palindromic(&n));
        assert!(matches!(
            pfaffian_numerator(&[2, 2, 2, 2, 3]),
            Err(FamilyError::NonIntegralAdjunction(11))
        ));
        let bad = Family::pfaffian(&[1; 7], &[2, 2, 2, 2, 3], 3).unwrap();
        assert!(matches!(
            hilbert_pfaffian(&bad),
            Err(FamilyError::NonIntegralAdjunction(11))
        ));
    }

    #[test]
    fn top_degrees() {
        assert_eq!(degree_top(&ci(&[4, 5, 6, 7, 23], &[46], 3)).unwrap(), ratio(1, 420));
        assert_eq!(degree_top(&ci(&[1; 4], &[4], 2)).unwrap(), int(4));
        assert_eq!(degree_top(&ci(&[1, 1, 2, 2], &[6], 2)).unwrap(), ratio(3, 2));
        // K^3(X_7) - K^3(Y_8) = A^2(S_6)
        let x7 = degree_top(&ci(&[1, 1, 1, 1, 2], &[7], 3)).unwrap();
        let y8 = degree_top(&ci(&[1, 1, 1, 2, 2], &[8], 3)).unwrap();
        assert_eq!(x7 - y8, ratio(3, 2));
    }

    #[test]
    fn series_degree_matches_degree_top() {
        let x46 = ci(&[4, 5, 6, 7, 23], &[46], 3);
        assert_eq!(series_degree(&x46.hilbert_series().unwrap(), 3), Some(ratio(1, 420)));
        let pf = Family::pfaffian(&[1, 1, 2, 2, 3, 3], &[4, 4, 5, 5, 6], 2).unwrap();
        assert_eq!(series_degree(&pf.hilbert_series().unwrap(), 2), Some(ratio(11, 6)));
    }

    #[test]
    fn bezout_counts() {
        let w = WeightSystem::new(vec![1, 1, 1, 2, 2]).unwrap();
        assert_eq!(weighted_bezout(&w, &[1, 2, 7, 6]).unwrap(), int(21));
        let p3 = WeightSystem::projective(3);
        assert_eq!(weighted_bezout(&p3, &[4, 5, 6]).unwrap(), int(120));
        assert_eq!(weighted_bezout(&p3, &[1, 1, 1]).unwrap(), int(1));
        assert!(matches!(
            weighted_bezout(&p3, &[1, 1]),
            Err(FamilyError::BezoutDimension { .. })
        ));
    }

    #[test]
    fn stratum_counts() {
        assert_eq!(stratum_point_count(&ci(&[1, 1, 2, 2], &[6], 2), 2).unwrap(), 3);
        assert_eq!(stratum_point_count(&ci(&[1, 1, 1, 2, 2], &[8], 3), 2).unwrap(), 4);
        assert_eq!(stratum_point_count(&ci(&[1, 1, 1, 1, 2], &[7], 3), 2).unwrap(), 1);
        // pure power y^5 of degree 10 misses the point
        assert_eq!(stratum_point_count(&ci(&[1, 1, 1, 1, 2], &[10], 3), 2).unwrap(), 0);
        assert!(matches!(
            stratum_point_count(&ci(&[4, 5, 6, 7, 23], &[46], 3), 2),
            Err(FamilyError::MixedWeightStratum { r: 2 })
        ));
        assert!(matches!(
            stratum_point_count(&ci(&[1, 1, 2, 2, 2], &[7], 3), 2),
            Err(FamilyError::StratumNotZeroDimensional { r: 2 })
        ));
        assert!(matches!(
            stratum_point_count(&ci(&[1, 1, 1, 2, 2], &[7], 3), 2),
            Err(FamilyError::StratumNotZeroDimensional { r: 2 })
        ));
    }

    #[test]
    fn generator_degrees() {
        let s6 = ci(&[1, 1, 2, 2], &[6], 2);
        let y = WeightSystem::new(vec![1, 1, 1, 2, 2, 5]).unwrap();
        assert_eq!(embedded_generator_degrees(&s6, &y).unwrap(), vec![1, 5, 6]);
        let s4 = ci(&[1; 4], &[4], 2);
        let y10 = WeightSystem::new(vec![1, 1, 1, 1, 5]).unwrap();
        assert_eq!(embedded_generator_degrees(&s4, &y10).unwrap(), vec![4, 5]);
        assert_eq!(embedded_generator_degrees(&s4, &s4.ambient).unwrap(), vec![4]);
        let y46 = WeightSystem::new(vec![4, 5, 6, 7, 23]).unwrap();
        let s20 = ci(&[2, 5, 6, 7], &[20], 2);
        assert!(matches!(
            embedded_generator_degrees(&s20, &y46),
            Err(FamilyError::NotSubMultiset { .. })
        ));
    }

    #[test]
    fn validation() {
        assert!(ci(&[1; 5], &[6], 3).validate().is_ok());
        assert!(matches!(
            ci(&[1, 1, 2, 2], &[6], 3).validate(),
            Err(FamilyError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            ci(&[1; 5], &[5], 3).validate(),
            Err(FamilyError::CanonicalWeight { found: 0, .. })
        ));
        assert!(Family::pfaffian(&[1, 1, 1, 2, 2, 3, 3], &[5, 5, 6, 6, 6], 3)
            .unwrap()
            .validate()
            .is_ok());
        assert!(matches!(
            Family::pfaffian(&[1; 7], &[2, 2, 2, 2], 3).unwrap().validate(),
            Err(FamilyError::DegreeCount { .. })
        ));
    }

    #[test]
    fn labels() {
        assert_eq!(
            ci(&[1, 2, 3, 4, 5, 10], &[6, 20], 3).label,
            "X_{6,20} ⊂ P(1,2,3,4,5,10)"
        );
        assert_eq!(ci(&[1; 4], &[4], 2).label, "S_4 ⊂ P^3");
    }
}
