use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{Integer, One};

use super::FamilyError;
use crate::series::{ratio, Rational};

/// Cyclic quotient point `1/r(a, -a)` on a surface, or the 3-fold point
/// `1/r(a, -a, 1)` it induces, with a multiplicity.
///
/// `a` and `r - a` name the same type; the stored `a` is the smaller one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasketEntry {
    pub r: u64,
    pub a: u64,
    pub multiplicity: u32,
}

impl BasketEntry {
    pub fn new(r: u64, a: u64, multiplicity: u32) -> Result<Self, FamilyError> {
        if r < 2 || a == 0 || a >= r || !r.gcd(&a).is_one() || multiplicity == 0 {
            return Err(FamilyError::InvalidBasketEntry { r, a });
        }
        Ok(Self {
            r,
            a: a.min(r - a),
            multiplicity,
        })
    }

    pub fn single(r: u64, a: u64) -> Result<Self, FamilyError> {
        Self::new(r, a, 1)
    }

    /// `b ≡ a^{-1} (mod r)`: the local index of the polarising sheaf once the
    /// point is written as `1/r(1, -1, b)`. The periodic Riemann–Roch terms
    /// depend on `b`, not on `a`.
    pub fn local_index(&self) -> u64 {
        let e = (self.a as i64).extended_gcd(&(self.r as i64));
        e.x.rem_euclid(self.r as i64) as u64
    }

    /// `(r^2 - 1) / r` times the multiplicity: this entry's share of `24 - δ(S)`.
    pub fn delta_defect(&self) -> Rational {
        let r = self.r as i64;
        ratio(r * r - 1, r) * Rational::from_integer(self.multiplicity.into())
    }
}

impl fmt::Display for BasketEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*({}/{})", self.multiplicity, self.a, self.r)
    }
}

/// Multiset of [`BasketEntry`], merged by type and sorted by `(r, a)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Basket {
    entries: Vec<BasketEntry>,
}

impl Basket {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = BasketEntry>>(entries: I) -> Self {
        let mut merged: BTreeMap<(u64, u64), u32> = BTreeMap::new();
        for e in entries {
            *merged.entry((e.r, e.a)).or_default() += e.multiplicity;
        }
        Self {
            entries: merged
                .into_iter()
                .map(|((r, a), multiplicity)| BasketEntry { r, a, multiplicity })
                .collect(),
        }
    }

    /// `m` points of type `1/r(a, -a)`.
    pub fn of(points: &[(u32, u64, u64)]) -> Result<Self, FamilyError> {
        points
            .iter()
            .map(|&(m, a, r)| BasketEntry::new(r, a, m))
            .collect::<Result<Vec<_>, _>>()
            .map(Self::from_entries)
    }

    pub fn entries(&self) -> &[BasketEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn point_count(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity as u64).sum()
    }

    /// Multiset union (multiplicities add).
    pub fn union(&self, other: &Basket) -> Basket {
        Self::from_entries(self.entries.iter().chain(&other.entries).copied())
    }

    /// Lowest common multiple of the indices, 1 when empty.
    pub fn index_lcm(&self) -> u64 {
        self.entries.iter().fold(1, |l, e| l.lcm(&e.r))
    }
}

impl fmt::Display for Basket {
    /// `3*(1/2),1*(1/4)`, or `none`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("none");
        }
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl FromStr for Basket {
    type Err = FamilyError;

    /// Accepts `none` or comma separated `m*(a/r)`, `(a/r)` or `a/r` items.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "none" || s == "-" {
            return Ok(Self::empty());
        }
        let bad = |item: &str| FamilyError::Syntax(format!("bad basket item {item:?}"));
        let mut entries = Vec::new();
        for item in s.split(',').map(str::trim) {
            let (mult, point) = match item.split_once(['*', 'x', '×']) {
                Some((m, p)) => (m.trim().parse::<u32>().map_err(|_| bad(item))?, p.trim()),
                None => (1, item),
            };
            let point = point
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .unwrap_or(point);
            let (a, r) = point.split_once('/').ok_or_else(|| bad(item))?;
            let a = a.trim().parse::<u64>().map_err(|_| bad(item))?;
            let r = r.trim().parse::<u64>().map_err(|_| bad(item))?;
            entries.push(BasketEntry::new(r, a, mult)?);
        }
        Ok(Self::from_entries(entries))
    }
}
