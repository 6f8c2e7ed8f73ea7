use std::fmt::Write as _;

use super::FamilyError;

/// Rank-two toric weight matrix: an `H` row and a `-E` row over named variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricWeightMatrix {
    pub variable_names: Vec<String>,
    pub rows: [Vec<i64>; 2],
    /// Free text only; no fan or GIT computation is attempted.
    pub irrelevant_ideal_note: String,
}

impl ToricWeightMatrix {
    pub fn new(
        variable_names: Vec<String>,
        h_row: Vec<i64>,
        e_row: Vec<i64>,
        irrelevant_ideal_note: impl Into<String>,
    ) -> Result<Self, FamilyError> {
        if h_row.len() != variable_names.len() || e_row.len() != variable_names.len() {
            return Err(FamilyError::ToricShape {
                variables: variable_names.len(),
                h: h_row.len(),
                e: e_row.len(),
            });
        }
        Ok(Self {
            variable_names,
            rows: [h_row, e_row],
            irrelevant_ideal_note: irrelevant_ideal_note.into(),
        })
    }

    pub fn bidegree(&self, m: &Monomial) -> (i64, i64) {
        let dot = |row: &[i64]| -> i64 { row.iter().zip(&m.exponents).map(|(w, &e)| w * e as i64).sum() };
        (dot(&self.rows[0]), dot(&self.rows[1]))
    }

    /// Like [`Monomial::render`], but variables of `H`-weight zero (the
    /// exceptional section) are written first, as in `ue`.
    pub fn render(&self, m: &Monomial) -> String {
        let mut order: Vec<usize> = (0..self.variable_names.len()).collect();
        order.sort_by_key(|&i| self.rows[0][i] != 0);
        let names: Vec<String> = order.iter().map(|&i| self.variable_names[i].clone()).collect();
        let exponents = order.iter().map(|&i| m.exponents[i]).collect();
        Monomial { exponents }.render(&names)
    }
}

/// Exponent vector over the matrix's variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    /// `true` if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Juxtaposed names, e.g. `ue` or `a^2b`.
    pub fn render(&self, names: &[String]) -> String {
        let mut out = String::new();
        for (name, &e) in names.iter().zip(&self.exponents) {
            match e {
                0 => {}
                1 => out.push_str(name),
                _ => {
                    let _ = write!(out, "{name}^{e}");
                }
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

/// All monomials of bidegree `n · class`, found by exhaustive search with
/// every exponent at most `degree_bound`. Sorted with larger exponent vectors
/// first, so earlier variables lead.
pub fn toric_sections(m: &ToricWeightMatrix, class: (i64, i64), n: u64, degree_bound: u32) -> Vec<Monomial> {
    let target = (class.0 * n as i64, class.1 * n as i64);
    let h_nonneg = m.rows[0].iter().all(|&w| w >= 0);
    let mut out = Vec::new();
    let mut exps = vec![0u32; m.variable_names.len()];
    search(m, target, h_nonneg, degree_bound, 0, (0, 0), &mut exps, &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

#[allow(clippy::too_many_arguments)]
fn search(
    m: &ToricWeightMatrix,
    target: (i64, i64),
    h_nonneg: bool,
    bound: u32,
    var: usize,
    acc: (i64, i64),
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if var == exps.len() {
        if acc == target {
            out.push(Monomial {
                exponents: exps.clone(),
            });
        }
        return;
    }
    let (wh, we) = (m.rows[0][var], m.rows[1][var]);
    for e in 0..=bound {
        let next = (acc.0 + wh * e as i64, acc.1 + we * e as i64);
        if h_nonneg && next.0 > target.0 {
            break;
        }
        exps[var] = e;
        search(m, target, h_nonneg, bound, var + 1, next, exps, out);
    }
    exps[var] = 0;
}

/// Minimal generators of the section ring `⊕ H^0(n · class)` up to `max_n`:
/// sections of degree `n` not divisible by a generator of lower degree.
pub fn toric_generators(
    m: &ToricWeightMatrix,
    class: (i64, i64),
    max_n: u64,
    degree_bound: u32,
) -> Vec<(u64, Monomial)> {
    let mut gens: Vec<(u64, Monomial)> = Vec::new();
    for n in 1..=max_n {
        for s in toric_sections(m, class, n, degree_bound) {
            if !gens.iter().any(|(_, g)| g.divides(&s)) {
                gens.push((n, s));
            }
        }
    }
    gens
}
