//! Candidate K3 transitions `X → Y`: the K3 series forced by
//! `P_X = P_Y + t/(1-t) P_S`, matching against a K3 table, the failing
//! transition filters and the invariant cross-checks.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use num::{One, Zero};
use rayon::prelude::*;

use crate::families::{embedded_generator_degrees, weighted_bezout, Family, FamilyError, WeightSystem};
use crate::rr::{k3_invariants, kc2_delta, threefold_invariants};
use crate::series::{Polynomial, Rational, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransitionError {
    #[error("not a candidate: {0}")]
    NotACandidate(&'static str),
    #[error("non-integral node count {0}: points meet singular strata")]
    NonIntegralNodeCount(Rational),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// `(1 - t)(P_X - P_Y) / t`, with no condition on the constant term.
/// Antisymmetric in `X` and `Y`.
pub fn transition_quotient(px: &RationalFunction, py: &RationalFunction) -> Result<RationalFunction, TransitionError> {
    let one_minus_t = RationalFunction::from_polynomial(Polynomial::from_integers(&[1, -1]));
    let diff = &(px - py) * &one_minus_t;
    // dividing by t: the numerator must vanish at 0
    let num = diff.numerator();
    if !num.coeff(0).is_zero() {
        return Err(TransitionError::NotACandidate("pole at 0"));
    }
    let shifted: Vec<Rational> = num.coeffs().iter().skip(1).cloned().collect();
    Ok(
        RationalFunction::new(Polynomial::from_coeffs(shifted), diff.denominator().clone())
            .expect("nonzero denominator"),
    )
}

/// `Q = (1 - t)(P_X - P_Y) / t`, the Hilbert series a transition K3 must have.
pub fn candidate_k3_series(px: &RationalFunction, py: &RationalFunction) -> Result<RationalFunction, TransitionError> {
    let q = transition_quotient(px, py)?;
    let q0 = q.expand(0).map_err(|_| TransitionError::NotACandidate("pole at 0"))?;
    if !q0.coefficients()[0].is_one() {
        return Err(TransitionError::NotACandidate("Q(0) is not 1"));
    }
    Ok(q)
}

/// Outcome of one filter or check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Not applicable; recorded as a pass.
    Vacuous(String),
    Fail(String),
    /// Missing data; never a failure.
    Skipped(String),
}

impl Outcome {
    pub fn is_fail(&self) -> bool {
        matches!(self, Outcome::Fail(_))
    }

    fn from_bool(ok: bool, reason: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(reason())
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Pass => f.write_str("pass"),
            Outcome::Vacuous(r) => write!(f, "pass (vacuous: {r})"),
            Outcome::Fail(r) => write!(f, "fail: {r}"),
            Outcome::Skipped(r) => write!(f, "skipped: {r}"),
        }
    }
}

/// Coefficient of `t` of `P_X` is one more than that of `P_Y`.
pub fn pg_step_filter(px: &RationalFunction, py: &RationalFunction) -> Outcome {
    match (px.expand(1), py.expand(1)) {
        (Ok(a), Ok(b)) => {
            let (ga, gb) = (&a.coefficients()[1], &b.coefficients()[1]);
            Outcome::from_bool(*ga == gb + Rational::one(), || {
                format!("p_g step: {ga} is not {gb} + 1")
            })
        }
        _ => Outcome::Fail("p_g step: series has a pole at 0".into()),
    }
}

/// Fails when `S` needs more variables than the ambient space of `Y` has.
/// A sufficient criterion only: it ignores non-minimal embeddings.
pub fn embedding_dimension_filter(s: &Family, y: &Family) -> Outcome {
    Outcome::from_bool(s.ambient.len() <= y.ambient.len(), || {
        format!(
            "embedding dimension: S needs {} variables, Y has {}",
            s.ambient.len(),
            y.ambient.len()
        )
    })
}

/// Fails when some equation of `Y` of degree `d` could only involve a single
/// generator of the ideal of `S` of degree `d' < d`, which then divides it.
pub fn irreducibility_filter(s: &Family, y: &Family) -> Outcome {
    let gens = match embedded_generator_degrees(s, &y.ambient) {
        Ok(g) => g,
        Err(_) => return Outcome::Vacuous("ambient of S is not contained in that of Y".into()),
    };
    for &d in &y.equation_degrees {
        let below: Vec<u64> = gens.iter().copied().filter(|&g| g <= d).collect();
        if let [only] = below[..] {
            if only < d {
                return Outcome::Fail(format!(
                    "irreducibility: every degree {d} equation is divisible by the degree {only} generator"
                ));
            }
        }
    }
    Outcome::Pass
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    TypeI,
    TypeII,
    UnknownFormat,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::TypeI => "type-I",
            Classification::TypeII => "type-II",
            Classification::UnknownFormat => "unknown-format",
        })
    }
}

/// Type I when the weights of `S` sit inside those of `Y`; advisory only.
pub fn classify(s: &Family, y: &Family) -> Classification {
    if y.ambient.contains(&s.ambient) {
        Classification::TypeI
    } else {
        Classification::TypeII
    }
}

/// The four cross-checks on the invariants of `X`, `Y` and `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    /// `K^3(X) = K^3(Y) + A^2(S)`.
    pub degree: Outcome,
    /// `χ(O_Y) = χ(O_X) + 1`.
    pub chi: Outcome,
    /// `B(Y) = B(X) ∪ B(S)`.
    pub basket: Outcome,
    /// `K·c_2(X) = K·c_2(Y) + δ(S)`.
    pub kc2: Outcome,
}

impl InvariantReport {
    pub fn outcomes(&self) -> [(&'static str, &Outcome); 4] {
        [
            ("K^3", &self.degree),
            ("chi", &self.chi),
            ("basket", &self.basket),
            ("K.c2", &self.kc2),
        ]
    }
}

pub fn invariant_checks(x: &Family, y: &Family, s: &Family) -> InvariantReport {
    let basket = {
        let union = x.basket.union(&s.basket);
        Outcome::from_bool(union == y.basket, || {
            format!("basket: {} ∪ {} = {union}, but Y has {}", x.basket, s.basket, y.basket)
        })
    };
    let (ix, iy, is) = match (threefold_invariants(x), threefold_invariants(y), k3_invariants(s)) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (a, b, c) => {
            let why = [a.err(), b.err(), c.err()]
                .into_iter()
                .flatten()
                .map(|e| e.to_string())
                .next()
                .unwrap_or_default();
            let skipped = Outcome::Skipped(format!("invariants unavailable: {why}"));
            return InvariantReport {
                degree: skipped.clone(),
                chi: skipped.clone(),
                basket,
                kc2: skipped,
            };
        }
    };
    let degree = Outcome::from_bool(ix.k_cubed == &iy.k_cubed + &is.a_squared, || {
        format!("K^3: {} is not {} + {}", ix.k_cubed, iy.k_cubed, is.a_squared)
    });
    let chi = Outcome::from_bool(iy.chi == ix.chi + 1, || {
        format!("chi: {} is not {} + 1", iy.chi, ix.chi)
    });
    let kc2 = match (&ix.kc2, &iy.kc2) {
        (Some(a), Some(b)) => {
            let want = b + kc2_delta(&is.delta);
            Outcome::from_bool(*a == want, || format!("K.c2: {a} is not {b} + {}", is.delta))
        }
        _ => Outcome::Skipped("K.c2 not recorded".into()),
    };
    InvariantReport {
        degree,
        chi,
        basket,
        kc2,
    }
}

/// Indices of the K3 records whose Hilbert series equals `q`.
pub fn match_k3(q: &RationalFunction, k3_table: &[Family]) -> Vec<usize> {
    k3_table
        .iter()
        .enumerate()
        .filter(|(_, s)| s.hilbert_series().map(|p| p == *q).unwrap_or(false))
        .map(|(i, _)| i)
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Accepted,
    NumericalOnly,
    Rejected,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Accepted => "accepted",
            Status::NumericalOnly => "numerical-only",
            Status::Rejected => "rejected",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateTransition {
    pub x: Family,
    pub y: Family,
    pub k3_series: Option<RationalFunction>,
    pub k3_match: Option<Family>,
    pub classification: Classification,
    pub filter_report: Vec<(&'static str, Outcome)>,
    pub invariant_report: Option<InvariantReport>,
    pub status: Status,
}

impl CandidateTransition {
    /// Reason text of the first failing filter or check.
    pub fn rejection_reason(&self) -> Option<String> {
        let filters = self.filter_report.iter().map(|(_, o)| o);
        let checks = self.invariant_report.iter().flat_map(|r| r.outcomes().map(|(_, o)| o));
        filters.chain(checks).find_map(|o| match o {
            Outcome::Fail(r) => Some(r.clone()),
            _ => None,
        })
    }

    /// One-line verdict, e.g. `accepted, type-I, K3 = S_4 ⊂ P^3`.
    pub fn summary(&self) -> String {
        match (self.status, &self.k3_match) {
            (Status::Rejected, _) => format!("rejected: {}", self.rejection_reason().unwrap_or_default()),
            (status, Some(s)) => format!("{status}, {}, K3 = {}", self.classification, s.label),
            (status, None) => status.to_string(),
        }
    }

    /// Multi-line report.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} -> {}", self.x, self.y);
        let _ = writeln!(out, "  verdict: {}", self.summary());
        if let Some(q) = &self.k3_series {
            let _ = writeln!(out, "  K3 series: {q}");
        }
        for (name, o) in &self.filter_report {
            let _ = writeln!(out, "  filter {name}: {o}");
        }
        if let Some(r) = &self.invariant_report {
            for (name, o) in r.outcomes() {
                let _ = writeln!(out, "  check {name}: {o}");
            }
        }
        out
    }
}

/// Runs every filter and check on the ordered pair `X → Y`.
///
/// `numerical` lists `(X id, Y id)` pairs known only numerically; a match on
/// such a pair is reported as numerical-only rather than accepted.
pub fn candidate(x: &Family, y: &Family, k3_table: &[Family], numerical: &BTreeSet<(u32, u32)>) -> CandidateTransition {
    let mut report = CandidateTransition {
        x: x.clone(),
        y: y.clone(),
        k3_series: None,
        k3_match: None,
        classification: Classification::UnknownFormat,
        filter_report: Vec::new(),
        invariant_report: None,
        status: Status::Rejected,
    };
    let (px, py) = match (x.hilbert_series(), y.hilbert_series()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            report
                .filter_report
                .push(("presentation", Outcome::Fail(format!("presentation: {e}"))));
            return report;
        }
    };
    let step = pg_step_filter(&px, &py);
    let step_failed = step.is_fail();
    report.filter_report.push(("p_g step", step));
    if step_failed {
        return report;
    }
    let q = match candidate_k3_series(&px, &py) {
        Ok(q) => q,
        Err(e) => {
            report
                .filter_report
                .push(("candidate series", Outcome::Fail(e.to_string())));
            return report;
        }
    };
    let matches = match_k3(&q, k3_table);
    report.k3_series = Some(q);
    if matches.is_empty() {
        report
            .filter_report
            .push(("K3 match", Outcome::Fail("no K3 match".into())));
        return report;
    }
    report.filter_report.push(("K3 match", Outcome::Pass));
    // prefer the first match that survives every filter
    let evaluated: Vec<_> = matches
        .iter()
        .map(|&i| {
            let s = &k3_table[i];
            let filters = vec![
                ("embedding dimension", embedding_dimension_filter(s, y)),
                ("irreducibility", irreducibility_filter(s, y)),
            ];
            (s, filters)
        })
        .collect();
    let (s, filters) = evaluated
        .iter()
        .find(|(_, f)| f.iter().all(|(_, o)| !o.is_fail()))
        .unwrap_or(&evaluated[0])
        .clone();
    report.filter_report.extend(filters);
    report.classification = classify(s, y);
    report.invariant_report = Some(invariant_checks(x, y, s));
    report.k3_match = Some(s.clone());
    report.status = if report.rejection_reason().is_some() {
        Status::Rejected
    } else if matches!((x.id, y.id), (Some(a), Some(b)) if numerical.contains(&(a, b))) {
        Status::NumericalOnly
    } else {
        Status::Accepted
    };
    report
}

/// All ordered pairs `(X, Y)` of 3-folds with `p_g(X) = p_g(Y) + 1`, sorted by
/// `(X.id, Y.id)`. Pairs failing the `p_g` step are not reported.
pub fn search_all(
    families: &[Family],
    k3_table: &[Family],
    numerical: &BTreeSet<(u32, u32)>,
) -> Vec<CandidateTransition> {
    let genus: Vec<Option<Rational>> = families
        .iter()
        .map(|f| {
            f.hilbert_series()
                .ok()
                .and_then(|p| p.expand(1).ok())
                .map(|s| s.coefficients()[1].clone())
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..families.len())
        .flat_map(|i| (0..families.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| match (&genus[i], &genus[j]) {
            (Some(a), Some(b)) => i != j && *a == b + Rational::one(),
            _ => false,
        })
        .collect();
    let mut out: Vec<CandidateTransition> = pairs
        .par_iter()
        .map(|&(i, j)| candidate(&families[i], &families[j], k3_table, numerical))
        .collect();
    out.sort_by(|a, b| (a.x.id, &a.x.label, a.y.id, &a.y.label).cmp(&(b.x.id, &b.x.label, b.y.id, &b.y.label)));
    out
}

/// Plain-text rendering of a search, one block per candidate.
pub fn render_search(results: &[CandidateTransition]) -> String {
    let mut out = String::new();
    for c in results {
        out.push_str(&c.render());
    }
    let count = |s: Status| results.iter().filter(|c| c.status == s).count();
    let _ = writeln!(
        out,
        "{} candidates: {} accepted, {} numerical-only, {} rejected",
        results.len(),
        count(Status::Accepted),
        count(Status::NumericalOnly),
        count(Status::Rejected)
    );
    out
}

/// Number of ordinary double points cut out by `dim` general forms.
pub fn node_count(ambient: &WeightSystem, cutting_degrees: &[u64]) -> Result<u64, TransitionError> {
    let n = weighted_bezout(ambient, cutting_degrees)?;
    if !n.is_integer() {
        return Err(TransitionError::NonIntegralNodeCount(n));
    }
    u64::try_from(n.to_integer()).map_err(|_| TransitionError::NonIntegralNodeCount(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Basket;

    fn hyp(w: &[u64], d: u64, dim: u32, basket: &str) -> Family {
        Family::complete_intersection(w, &[d], dim)
            .unwrap()
            .with_basket(basket.parse().unwrap())
    }

    fn x6() -> Family {
        hyp(&[1; 5], 6, 3, "none").with_id(1)
    }
    fn y10() -> Family {
        hyp(&[1, 1, 1, 1, 5], 10, 3, "none").with_id(6)
    }
    fn s4() -> Family {
        hyp(&[1; 4], 4, 2, "none")
    }
    fn x7() -> Family {
        hyp(&[1, 1, 1, 1, 2], 7, 3, "1/2").with_id(2)
    }
    fn y8() -> Family {
        hyp(&[1, 1, 1, 2, 2], 8, 3, "4*(1/2)").with_id(3)
    }
    fn s6() -> Family {
        hyp(&[1, 1, 2, 2], 6, 2, "3*(1/2)")
    }

    #[test]
    fn candidate_series_examples() {
        let q = candidate_k3_series(&x6().hilbert_series().unwrap(), &y10().hilbert_series().unwrap()).unwrap();
        assert_eq!(q, s4().hilbert_series().unwrap());
        let q = candidate_k3_series(&x7().hilbert_series().unwrap(), &y8().hilbert_series().unwrap()).unwrap();
        assert_eq!(q, s6().hilbert_series().unwrap());
        let p = x6().hilbert_series().unwrap();
        assert!(matches!(
            candidate_k3_series(&p, &p),
            Err(TransitionError::NotACandidate(_))
        ));
    }

    #[test]
    fn pg_step() {
        let (a, b) = (x6().hilbert_series().unwrap(), y10().hilbert_series().unwrap());
        assert_eq!(pg_step_filter(&a, &b), Outcome::Pass);
        assert!(pg_step_filter(&a, &a).is_fail());
    }

    #[test]
    fn filters() {
        let s222 = Family::complete_intersection(&[1; 6], &[2, 2, 2], 2).unwrap();
        assert!(embedding_dimension_filter(&s222, &x6()).is_fail());
        assert_eq!(embedding_dimension_filter(&s4(), &y10()), Outcome::Pass);
        assert_eq!(
            embedding_dimension_filter(&s4(), &hyp(&[1; 4], 4, 2, "none")),
            Outcome::Pass
        );

        let y310 = Family::complete_intersection(&[1, 1, 1, 2, 2, 5], &[3, 10], 3).unwrap();
        let out = irreducibility_filter(&s6(), &y310);
        assert!(matches!(&out, Outcome::Fail(r) if r.contains("degree 1 generator")));
        assert_eq!(irreducibility_filter(&s4(), &y10()), Outcome::Pass);
        // equal degree is not dominated
        let y4 = hyp(&[1, 1, 1, 1, 2], 4, 3, "none");
        assert_eq!(
            irreducibility_filter(&hyp(&[1, 1, 1, 1], 4, 2, "none"), &y4),
            Outcome::Pass
        );
        let s20 = hyp(&[2, 5, 6, 7], 20, 2, "none");
        let y46 = hyp(&[4, 5, 6, 7, 23], 46, 3, "none");
        assert!(matches!(irreducibility_filter(&s20, &y46), Outcome::Vacuous(_)));
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&s4(), &y10()), Classification::TypeI);
        let s20 = hyp(&[2, 5, 6, 7], 20, 2, "none");
        let y46 = hyp(&[4, 5, 6, 7, 23], 46, 3, "none");
        assert_eq!(classify(&s20, &y46), Classification::TypeII);
        let own = hyp(&[1, 1, 1, 1, 2], 7, 3, "none");
        assert_eq!(classify(&hyp(&[1, 1, 1, 1], 4, 2, "none"), &own), Classification::TypeI);
    }

    #[test]
    fn invariant_checks_on_x7_y8() {
        let r = invariant_checks(&x7(), &y8(), &s6());
        assert_eq!(r.degree, Outcome::Pass);
        assert_eq!(r.chi, Outcome::Pass);
        assert_eq!(r.basket, Outcome::Pass);
        assert!(matches!(r.kc2, Outcome::Skipped(_)));
        let r = invariant_checks(&x6(), &y10(), &s4());
        assert_eq!(r.degree, Outcome::Pass);
    }

    #[test]
    fn matching() {
        let table = vec![s6(), s4()];
        let q = s4().hilbert_series().unwrap();
        assert_eq!(match_k3(&q, &table), vec![1]);
        let q = RationalFunction::new(Polynomial::one(), Polynomial::from_integers(&[1, -1])).unwrap();
        assert!(match_k3(&q, &table).is_empty());
    }

    #[test]
    fn search_examples() {
        let none = BTreeSet::new();
        let res = search_all(&[y10(), x6()], &[s4()], &none);
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].status, Status::Accepted);
        assert_eq!(res[0].classification, Classification::TypeI);
        assert_eq!((res[0].x.id, res[0].y.id), (Some(1), Some(6)));
        assert_eq!(res[0].summary(), "accepted, type-I, K3 = S_4 ⊂ P^3");

        let res = search_all(&[x7(), y8()], &[s6()], &none);
        assert_eq!(res.len(), 1);
        assert_eq!(res[0].status, Status::Accepted);

        assert!(search_all(&[x6(), x6()], &[s4()], &none).is_empty());

        let numerical: BTreeSet<_> = [(1, 6)].into_iter().collect();
        let res = search_all(&[x6(), y10()], &[s4()], &numerical);
        assert_eq!(res[0].status, Status::NumericalOnly);
    }

    #[test]
    fn wrong_basket_rejects() {
        let y = y8().with_basket(Basket::empty());
        let c = candidate(&x7(), &y, &[s6()], &BTreeSet::new());
        assert_eq!(c.status, Status::Rejected);
        assert!(c.rejection_reason().unwrap().starts_with("basket"));
    }

    #[test]
    fn node_counts() {
        let w = WeightSystem::new(vec![1, 1, 1, 2, 2]).unwrap();
        assert_eq!(node_count(&w, &[1, 2, 7, 6]).unwrap(), 21);
        assert_eq!(node_count(&WeightSystem::projective(3), &[4, 5, 6]).unwrap(), 120);
        let w = WeightSystem::new(vec![1, 1, 2]).unwrap();
        assert!(matches!(
            node_count(&w, &[1, 3]),
            Err(TransitionError::NonIntegralNodeCount(_))
        ));
    }
}
