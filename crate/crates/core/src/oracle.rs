//! Brute-force computations of `dim_K M_r` that bypass the Kolchin formula.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bernstein::{bernstein_polynomial, BernsteinReport, ModulePresentation};
use crate::free_module::{ModuleElement, ModuleMonomial};
use crate::groebner::{reduce_full, Basis};
use crate::weyl::{Rational, WeylMonomial};

/// All monomials `θ e_i` with `deg θ ≤ r`, `1 ≤ i ≤ m`.
pub fn module_monomials(n: usize, m: usize, r: u32) -> Vec<ModuleMonomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; 2 * n];
    fn walk(exps: &mut Vec<u32>, i: usize, budget: u32, n: usize, m: usize, out: &mut Vec<ModuleMonomial>) {
        if i == exps.len() {
            let mono = WeylMonomial::from_exponents(&exps[..n], &exps[n..]);
            for gen in 1..=m {
                out.push(ModuleMonomial::new(mono.clone(), gen));
            }
            return;
        }
        for e in 0..=budget {
            exps[i] = e;
            walk(exps, i + 1, budget - e, n, m, out);
        }
        exps[i] = 0;
    }
    walk(&mut exps, 0, r, n, m, &mut out);
    out
}

/// `Card U_r`: monomials of degree `≤ r` that are not multiples of any `LM(g_j)`.
pub fn count_standard_monomials(g: &Basis, n: usize, m: usize, r: u32) -> u64 {
    let lms = g.leading_monomials();
    module_monomials(n, m, r)
        .iter()
        .filter(|w| !lms.iter().any(|lm| lm.divides(w)))
        .count() as u64
}

/// Rank over `Q` of the remainders of all `θ e_i` (`deg θ ≤ r`) modulo `G`.
pub fn rank_dimension(g: &Basis, n: usize, m: usize, r: u32) -> u64 {
    let mut echelon = SparseEchelon::default();
    for w in module_monomials(n, m, r) {
        let f = ModuleElement::term(w, Rational::one());
        let rem = reduce_full(&f, g).remainder;
        echelon.insert(integer_row(&rem));
    }
    echelon.rank() as u64
}

type Row = BTreeMap<ModuleMonomial, BigInt>;

/// Clear denominators and divide out the content.
fn integer_row(f: &ModuleElement) -> Row {
    let lcm = f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let row: Row = f
        .terms()
        .map(|(m, c)| (m.clone(), (c * Rational::from_integer(lcm.clone())).to_integer()))
        .collect();
    primitive(row)
}

fn primitive(row: Row) -> Row {
    let g = row.values().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        return row;
    }
    row.into_iter().map(|(k, v)| (k, v / &g)).collect()
}

/// Fraction-free row echelon form keyed by leading column.
#[derive(Default)]
struct SparseEchelon {
    pivots: BTreeMap<ModuleMonomial, Row>,
}

impl SparseEchelon {
    fn insert(&mut self, mut row: Row) {
        loop {
            let Some((lead, lead_coeff)) = row.last_key_value().map(|(k, v)| (k.clone(), v.clone())) else {
                return;
            };
            let Some(pivot) = self.pivots.get(&lead) else {
                self.pivots.insert(lead, row);
                return;
            };
            let p = &pivot[&lead];
            let mut next: Row = BTreeMap::new();
            for (k, v) in &row {
                next.insert(k.clone(), v * p);
            }
            for (k, v) in pivot {
                let e = next.entry(k.clone()).or_insert_with(BigInt::zero);
                *e -= v * &lead_coeff;
            }
            next.retain(|_, v| !v.is_zero());
            debug_assert!(!next.contains_key(&lead));
            row = primitive(next);
            if let Some(v) = row.values().next_back() {
                if v.is_negative() {
                    row.values_mut().for_each(|x| *x = -x.clone());
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionRow {
    pub r: u64,
    pub dim: u64,
    pub chi_at_r: BigInt,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionTable {
    pub rows: Vec<DimensionRow>,
    /// Beyond this `r` the two sides must agree.
    pub threshold: u64,
}

impl DimensionTable {
    /// First `r` from which every remaining row agrees.
    pub fn agreement_from(&self) -> Option<u64> {
        let mut start = None;
        for row in &self.rows {
            match (row.agree, start) {
                (true, None) => start = Some(row.r),
                (false, _) => start = None,
                _ => {}
            }
        }
        start
    }

    /// Rows at or past the threshold that disagree.
    pub fn mismatches(&self) -> Vec<&DimensionRow> {
        self.rows
            .iter()
            .filter(|row| row.r >= self.threshold && !row.agree)
            .collect()
    }

    pub fn is_consistent(&self) -> bool {
        self.mismatches().is_empty()
    }
}

/// Default verification horizon: `max(10, 2 · max deg LM(g_j))`.
pub fn default_rmax(g: &Basis) -> u64 {
    let max_deg = g
        .leading_monomials()
        .iter()
        .map(|lm| lm.degree() as u64)
        .max()
        .unwrap_or(0);
    (2 * max_deg).max(10)
}

/// Compare `χ(r)` against the direct count of standard monomials for `r = 0..=r_max`.
pub fn verify_presentation(p: &ModulePresentation, r_max: u64) -> DimensionTable {
    verify_report(&bernstein_polynomial(p), r_max)
}

pub fn verify_report(report: &BernsteinReport, r_max: u64) -> DimensionTable {
    let rows = (0..=r_max)
        .map(|r| {
            let dim = count_standard_monomials(&report.groebner_basis, report.n, report.m, r as u32);
            let chi_at_r = report.chi.evaluate(r as i64);
            DimensionRow {
                r,
                dim,
                agree: chi_at_r == BigInt::from(dim),
                chi_at_r,
            }
        })
        .collect();
    DimensionTable {
        rows,
        threshold: report.exactness_threshold(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_module::element_from_ints;
    use crate::groebner::buchberger;

    fn example_one() -> ModulePresentation {
        ModulePresentation::new(
            1,
            1,
            vec![element_from_ints(
                1,
                &[(1, &[2], &[0], 1), (1, &[0], &[2], 1), (1, &[1], &[1], 1)],
            )],
        )
        .unwrap()
    }

    #[test]
    fn counts_for_first_example() {
        let g = buchberger(&example_one().relation_basis());
        assert_eq!(count_standard_monomials(&g, 1, 1, 3), 7);
        assert_eq!(rank_dimension(&g, 1, 1, 3), 7);
    }

    #[test]
    fn counts_for_free_module() {
        assert_eq!(count_standard_monomials(&Basis::empty(), 1, 1, 2), 6);
        assert_eq!(rank_dimension(&Basis::empty(), 1, 1, 1), 3);
    }

    #[test]
    fn unit_relation_kills_everything() {
        let g = Basis::new(vec![element_from_ints(1, &[(1, &[0], &[0], 1)])]).unwrap();
        for r in 0..5 {
            assert_eq!(count_standard_monomials(&g, 1, 1, r), 0);
            assert_eq!(rank_dimension(&g, 1, 1, r), 0);
        }
    }

    #[test]
    fn third_example_rank() {
        let g = Basis::new(vec![
            element_from_ints(3, &[(1, &[0, 1, 0], &[0, 0, 0], 1), (1, &[0, 0, 0], &[0, 0, 0], 1)]),
            element_from_ints(3, &[(1, &[1, 0, 0], &[0, 0, 0], 1)]),
            element_from_ints(3, &[(1, &[0, 0, 0], &[0, 0, 1], 1), (-1, &[0, 0, 0], &[0, 0, 0], 1)]),
        ])
        .unwrap();
        assert_eq!(rank_dimension(&g, 3, 1, 2), 10);
    }

    #[test]
    fn verify_first_example() {
        let table = verify_presentation(&example_one(), 10);
        assert!(table.rows.iter().all(|row| row.agree));
        assert_eq!(table.agreement_from(), Some(0));
        assert!(table.is_consistent());
    }

    #[test]
    fn verify_free_module() {
        let table = verify_presentation(&ModulePresentation::free(2, 1), 5);
        for row in &table.rows {
            assert!(row.agree);
            assert_eq!(row.chi_at_r, crate::weyl::binomial(row.r as u32 + 4, 4));
        }
    }

    #[test]
    fn echelon_rank_of_dependent_rows() {
        let mono = |a: u32| ModuleMonomial::new(WeylMonomial::from_exponents(&[a], &[0]), 1);
        let mut e = SparseEchelon::default();
        let row = |cs: &[(u32, i64)]| -> Row { cs.iter().map(|&(a, c)| (mono(a), BigInt::from(c))).collect() };
        e.insert(row(&[(2, 2), (1, 4)]));
        e.insert(row(&[(2, 3), (1, 6)]));
        e.insert(row(&[(2, 1), (0, 1)]));
        e.insert(row(&[(1, 4), (0, -2)]));
        assert_eq!(e.rank(), 2);
    }
}
