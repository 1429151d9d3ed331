//! Bernstein polynomial of a finitely presented `A_n`-module and its invariants.
//!
//! A presentation lists relations `g_j ∈ E = ⊕ A_n e_i`. After a Gröbner basis
//! `G` of the relation module is computed, the monomials `θ e_i` of degree `≤ r`
//! that are not multiples of any `LM(g_j)` form a basis of the `r`-th filtered
//! piece. Counting them per generator is a Kolchin-polynomial problem in `N^{2n}`,
//! and `χ(t)` is the sum of those polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::free_module::ModuleElement;
use crate::groebner::{buchberger_with, Basis, BuchbergerOptions};
use crate::numpoly::{factorial, kolchin_polynomial, NumericalPolynomial, PointSet};

/// `M = E / N` with `N` generated by `relations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    n: usize,
    m: usize,
    relations: Vec<ModuleElement>,
}

impl ModulePresentation {
    pub fn new(n: usize, m: usize, relations: Vec<ModuleElement>) -> Result<Self> {
        for (i, rel) in relations.iter().enumerate() {
            if rel.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: rel.n(),
                });
            }
            if rel.is_zero() {
                return Err(Error::ZeroRelation(i + 1));
            }
            let g = rel.max_generator();
            if g > m {
                return Err(Error::GeneratorOutOfRange { index: g, m });
            }
        }
        Ok(ModulePresentation { n, m, relations })
    }

    /// The free module of rank `m`.
    pub fn free(n: usize, m: usize) -> Self {
        ModulePresentation {
            n,
            m,
            relations: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn relations(&self) -> &[ModuleElement] {
        &self.relations
    }

    pub fn relation_basis(&self) -> Basis {
        Basis::new(self.relations.clone()).expect("relations validated on construction")
    }
}

/// Per generator `e_i`, the exponent vectors `(α, β) ∈ N^{2n}` of the leading
/// monomials of `G` lying on `e_i`. Their complement is the set of standard
/// exponents counted by `ω_{V_i}`.
pub fn leading_exponent_sets(g: &Basis, n: usize, m: usize) -> Vec<PointSet> {
    let mut per_gen: Vec<Vec<Vec<u32>>> = vec![Vec::new(); m];
    for lm in g.leading_monomials() {
        per_gen[lm.gen - 1].push(lm.mono.exponent_vector());
    }
    per_gen
        .into_iter()
        .map(|pts| PointSet::new(2 * n, pts).expect("exponent vectors have length 2n"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KrullType {
    /// `type = 2n`
    Equal(usize),
    /// `type < 2n`
    Below(usize),
}

impl fmt::Display for KrullType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KrullType::Equal(k) => write!(f, "= {}", k),
            KrullType::Below(k) => write!(f, "< {}", k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrullReport {
    pub krull_type: KrullType,
    /// `None` when only the strict bound on the type is known.
    pub dim: Option<BigInt>,
}

/// Type and dimension over the family of all submodules, from `δ(M)`.
pub fn krull_report(delta: &BigInt, n: usize) -> KrullReport {
    if delta.is_positive() {
        KrullReport {
            krull_type: KrullType::Equal(2 * n),
            dim: Some(delta.clone()),
        }
    } else {
        KrullReport {
            krull_type: KrullType::Below(2 * n),
            dim: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    /// Bernstein dimension `deg χ`, `-1` for the zero module.
    pub d: i64,
    /// Binomial-basis coefficient of `C(t+d, d)`.
    pub a_d: BigInt,
    pub a_2n: BigInt,
    /// `m(M) := a_d`.
    pub multiplicity: BigInt,
    /// `d! · a_d`.
    pub literal_paper_multiplicity: BigInt,
    /// `a_{2n}`, i.e. `m(M)` when `d = 2n` and `0` otherwise.
    pub delta: BigInt,
}

pub fn invariants(chi: &NumericalPolynomial, n: usize) -> Invariants {
    let d = chi.degree();
    if d < 0 {
        return Invariants {
            d,
            a_d: BigInt::zero(),
            a_2n: BigInt::zero(),
            multiplicity: BigInt::zero(),
            literal_paper_multiplicity: BigInt::zero(),
            delta: BigInt::zero(),
        };
    }
    let a_d = chi.coefficient(d as usize);
    let a_2n = chi.coefficient(2 * n);
    let delta = if d as usize == 2 * n {
        a_d.clone()
    } else {
        BigInt::zero()
    };
    Invariants {
        d,
        literal_paper_multiplicity: factorial(d as u32) * &a_d,
        multiplicity: a_d.clone(),
        a_d,
        a_2n,
        delta,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernsteinReport {
    pub n: usize,
    pub m: usize,
    pub groebner_basis: Basis,
    pub leading_exponent_sets: Vec<PointSet>,
    pub chi: NumericalPolynomial,
    pub invariants: Invariants,
    pub krull: KrullReport,
}

impl BernsteinReport {
    /// From this `r` on, `χ(r)` is guaranteed to equal the number of standard
    /// monomials of degree `≤ r`.
    pub fn exactness_threshold(&self) -> u64 {
        self.leading_exponent_sets
            .iter()
            .map(PointSet::exactness_threshold)
            .max()
            .unwrap_or(0)
    }
}

pub fn bernstein_polynomial(p: &ModulePresentation) -> BernsteinReport {
    bernstein_polynomial_with(p, BuchbergerOptions::default())
}

pub fn bernstein_polynomial_with(p: &ModulePresentation, options: BuchbergerOptions) -> BernsteinReport {
    let g = buchberger_with(&p.relation_basis(), options);
    report_from_basis(p.n, p.m, g)
}

/// Assemble the report from an already computed Gröbner basis.
pub fn report_from_basis(n: usize, m: usize, g: Basis) -> BernsteinReport {
    let sets = leading_exponent_sets(&g, n, m);
    let chi: NumericalPolynomial = sets.iter().map(kolchin_polynomial).sum();
    let inv = invariants(&chi, n);
    let krull = krull_report(&inv.delta, n);
    BernsteinReport {
        n,
        m,
        groebner_basis: g,
        leading_exponent_sets: sets,
        chi,
        invariants: inv,
        krull,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_module::element_from_ints;

    fn example_two() -> ModulePresentation {
        ModulePresentation::new(
            2,
            2,
            vec![
                element_from_ints(2, &[(1, &[2, 0], &[3, 0], 1), (1, &[0, 0], &[5, 0], 1)]),
                element_from_ints(2, &[(1, &[0, 2], &[0, 0], 1), (-1, &[1, 0], &[0, 0], 2)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn exponent_sets_of_two_generator_example() {
        let report = bernstein_polynomial(&example_two());
        let sets = &report.leading_exponent_sets;
        assert_eq!(
            sets[0],
            PointSet::new(4, vec![vec![2, 0, 3, 0], vec![0, 2, 0, 0]]).unwrap()
        );
        assert_eq!(sets[1], PointSet::new(4, vec![vec![3, 0, 3, 0]]).unwrap());
        assert_eq!(leading_exponent_sets(&Basis::empty(), 1, 1), vec![PointSet::empty(2)]);
    }

    #[test]
    fn chi_of_examples() {
        let p1 = ModulePresentation::new(
            1,
            1,
            vec![element_from_ints(
                1,
                &[(1, &[2], &[0], 1), (1, &[0], &[2], 1), (1, &[1], &[1], 1)],
            )],
        )
        .unwrap();
        assert_eq!(
            bernstein_polynomial(&p1).chi,
            NumericalPolynomial::from_binomial_i64(&[-1, 2])
        );
        assert_eq!(
            bernstein_polynomial(&example_two()).chi,
            NumericalPolynomial::from_binomial_i64(&[15, -5, -5, 6])
        );
        for n in 1..=3 {
            let r = bernstein_polynomial(&ModulePresentation::free(n, 1));
            assert_eq!(r.chi, NumericalPolynomial::basis(2 * n));
        }
    }

    #[test]
    fn invariants_examples() {
        let inv = invariants(&NumericalPolynomial::from_binomial_i64(&[-1, 2]), 1);
        assert_eq!(
            (inv.d, inv.a_d.clone(), inv.a_2n.clone(), inv.delta.clone()),
            (1, 2.into(), 0.into(), 0.into())
        );
        let inv = invariants(&NumericalPolynomial::from_binomial_i64(&[15, -5, -5, 6]), 2);
        assert_eq!((inv.d, inv.a_d.clone(), inv.delta.clone()), (3, 6.into(), 0.into()));
        assert_eq!(inv.literal_paper_multiplicity, 36.into());
        let inv = invariants(&NumericalPolynomial::basis(4), 2);
        assert_eq!((inv.d, inv.a_d.clone(), inv.delta.clone()), (4, 1.into(), 1.into()));
        let inv = invariants(&NumericalPolynomial::zero(), 2);
        assert_eq!(inv.d, -1);
        assert!(inv.multiplicity.is_zero() && inv.delta.is_zero());
    }

    #[test]
    fn krull_examples() {
        assert_eq!(
            krull_report(&1.into(), 1),
            KrullReport {
                krull_type: KrullType::Equal(2),
                dim: Some(1.into())
            }
        );
        assert_eq!(
            krull_report(&0.into(), 3),
            KrullReport {
                krull_type: KrullType::Below(6),
                dim: None
            }
        );
        let r = krull_report(&3.into(), 2);
        assert_eq!(r.krull_type.to_string(), "= 4");
        assert_eq!(r.dim, Some(3.into()));
    }

    #[test]
    fn presentation_validation() {
        let rel = element_from_ints(1, &[(1, &[1], &[0], 2)]);
        assert_eq!(
            ModulePresentation::new(1, 1, vec![rel]).unwrap_err(),
            Error::GeneratorOutOfRange { index: 2, m: 1 }
        );
        assert_eq!(
            ModulePresentation::new(1, 1, vec![ModuleElement::zero(1)]).unwrap_err(),
            Error::ZeroRelation(1)
        );
        let rel = element_from_ints(2, &[(1, &[1, 0], &[0, 0], 1)]);
        assert!(matches!(
            ModulePresentation::new(1, 1, vec![rel]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
