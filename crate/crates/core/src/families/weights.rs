use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, Integer, One};

use super::FamilyError;

/// Weights `a_0, ..., a_n` of a weighted projective space `P(a_0, ..., a_n)`.
///
/// The order is kept as given (for display); multiset operations ignore it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem(Vec<u64>);

impl WeightSystem {
    pub fn new(weights: Vec<u64>) -> Result<Self, FamilyError> {
        if weights.is_empty() {
            return Err(FamilyError::EmptyAmbient);
        }
        if let Some(&w) = weights.iter().find(|&&w| w == 0) {
            return Err(FamilyError::InvalidWeight(w));
        }
        Ok(Self(weights))
    }

    /// `P^n` with all weights 1.
    pub fn projective(n: usize) -> Self {
        Self(vec![1; n + 1])
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension of the ambient space, `n` for `P(a_0..a_n)`.
    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn product(&self) -> BigInt {
        self.0.iter().map(|&w| BigInt::from(w)).product()
    }

    /// Number of variables of weight `w`.
    pub fn count_of(&self, w: u64) -> usize {
        self.0.iter().filter(|&&x| x == w).count()
    }

    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }

    /// Any `n` of the `n + 1` weights are coprime.
    pub fn is_well_formed(&self) -> bool {
        if self.0.len() < 2 {
            return true;
        }
        (0..self.0.len()).all(|skip| {
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .fold(0u64, |g, (_, &w)| g.gcd(&w))
                .is_one()
        })
    }

    /// `other ⊑ self` as multisets.
    pub fn contains(&self, other: &WeightSystem) -> bool {
        self.complement(other).is_some()
    }

    /// `self ∖ other` as a sorted multiset, or `None` if `other` is not contained.
    pub fn complement(&self, other: &WeightSystem) -> Option<Vec<u64>> {
        let mut counts: BTreeMap<u64, i64> = BTreeMap::new();
        for &w in &self.0 {
            *counts.entry(w).or_default() += 1;
        }
        for &w in &other.0 {
            *counts.entry(w).or_default() -= 1;
        }
        if counts.values().any(|&c| c < 0) {
            return None;
        }
        Some(
            counts
                .into_iter()
                .flat_map(|(w, c)| std::iter::repeat(w).take(c as usize))
                .collect(),
        )
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&w| w == 1) {
            return write!(f, "P^{}", self.dimension());
        }
        f.write_str("P(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for WeightSystem {
    type Err = FamilyError;

    /// Comma separated weights, e.g. `4,5,6,7,23`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(parse_u64_list(s)?)
    }
}

pub(crate) fn parse_u64_list(s: &str) -> Result<Vec<u64>, FamilyError> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<u64>()
                .map_err(|_| FamilyError::Syntax(format!("not a nonnegative integer: {x:?}")))
        })
        .collect()
}
