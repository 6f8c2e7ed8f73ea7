//! K3 transitions between canonical 3-folds: Hilbert series, orbifold
//! Riemann–Roch, transition candidates and the graph they span.

pub mod dataio;
pub mod families;
pub mod rr;
pub mod series;
pub mod transitions;
pub mod web;

pub use families::{Basket, BasketEntry, Family, FamilyError, Format, WeightSystem};
pub use series::{Polynomial, Rational, RationalFunction, SeriesError, SeriesPrefix};
