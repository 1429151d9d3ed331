//! Division with remainder in `E`, S-polynomials and Buchberger's algorithm.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::free_module::{ModuleElement, ModuleMonomial};
use crate::scaled::{Quotient, ScaledElement};
use crate::weyl::WeylElement;

/// An ordered list of nonzero elements of `E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    elements: Vec<ModuleElement>,
}

impl Basis {
    pub fn new(elements: Vec<ModuleElement>) -> Result<Self> {
        if let Some(i) = elements.iter().position(ModuleElement::is_zero) {
            return Err(Error::ZeroRelation(i + 1));
        }
        if let Some(first) = elements.first() {
            if let Some(bad) = elements.iter().find(|e| e.n() != first.n()) {
                return Err(Error::DimensionMismatch {
                    expected: first.n(),
                    found: bad.n(),
                });
            }
        }
        Ok(Basis { elements })
    }

    pub fn empty() -> Self {
        Basis { elements: Vec::new() }
    }

    pub fn elements(&self) -> &[ModuleElement] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<ModuleElement> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ModuleElement> {
        self.elements.iter()
    }

    pub fn leading_monomials(&self) -> Vec<&ModuleMonomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
            .collect()
    }

    fn push(&mut self, g: ModuleElement) {
        debug_assert!(!g.is_zero());
        self.elements.push(g);
    }
}

impl<'a> IntoIterator for &'a Basis {
    type Item = &'a ModuleElement;
    type IntoIter = std::slice::Iter<'a, ModuleElement>;
    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// `f = Σ q_i g_i + r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<WeylElement>,
    pub remainder: ModuleElement,
    /// The monomial eliminated at each step, in order.
    pub leaders: Vec<ModuleMonomial>,
}

/// Which reducible term is eliminated next.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReductionStrategy {
    /// The greatest reducible monomial, reduced by the first basis element whose
    /// leading monomial divides it.
    #[default]
    GreatestTerm,
    /// The first basis element whose leading monomial divides some term; its
    /// greatest such term is eliminated.
    FirstDivisor,
}

/// One reduction step `f → f − (a w / LT(g)) g` on the greatest term `w` of `f`
/// divisible by `LM(g)`.
pub fn reduce_step(f: &ModuleElement, g: &ModuleElement) -> Result<ModuleElement> {
    let (lm, lc) = g.leading()?;
    let (w, a) = f.terms().find(|(w, _)| lm.divides(w)).ok_or(Error::AlreadyReduced)?;
    let theta = lm.quotient_of(w)?;
    let c = -(a / lc);
    let mut h = f.clone();
    h.add_scaled_monomial_multiple(&c, &theta, g);
    Ok(h)
}

/// Division of `f` by `G`, eliminating the greatest reducible term first.
pub fn reduce_full(f: &ModuleElement, basis: &Basis) -> DivisionResult {
    reduce_with_strategy(f, basis, ReductionStrategy::GreatestTerm)
}

pub fn reduce_with_strategy(f: &ModuleElement, basis: &Basis, strategy: ReductionStrategy) -> DivisionResult {
    let n = f.n();
    let scaled: Vec<ScaledElement> = basis.iter().map(ScaledElement::new).collect();
    let leads: Vec<&ModuleMonomial> = basis
        .iter()
        .map(|g| g.leading_monomial().expect("basis elements are nonzero"))
        .collect();
    let mut quotients: Vec<Quotient> = (0..basis.len()).map(|_| Quotient::new()).collect();
    let mut leaders = Vec::new();
    let mut g = ScaledElement::new(f);

    loop {
        let pick = match strategy {
            ReductionStrategy::GreatestTerm => g
                .terms()
                .find_map(|(w, _)| leads.iter().position(|lm| lm.divides(w)).map(|k| (k, w.clone()))),
            ReductionStrategy::FirstDivisor => leads
                .iter()
                .enumerate()
                .find_map(|(k, lm)| g.terms().find(|(w, _)| lm.divides(w)).map(|(w, _)| (k, w.clone()))),
        };
        let Some((k, w)) = pick else { break };
        let gk = &scaled[k];
        let lk = gk.coefficient(leads[k]);
        let a = g.coefficient(&w).clone();
        let theta = leads[k].quotient_of(&w).expect("divisibility checked");
        quotients[k].add(theta.clone(), g.ratio(&a, gk, lk));
        g.subtract_multiple(&a, &theta, gk, lk);
        leaders.push(w);
    }

    DivisionResult {
        quotients: quotients.into_iter().map(|q| q.into_weyl(n)).collect(),
        remainder: g.into_element(n),
        leaders,
    }
}

/// `S(f, g) = (L / LT(f)) f − (L / LT(g)) g` with `L = lcm(LM f, LM g)`.
///
/// Returns zero when the leading monomials sit on different generators.
pub fn s_polynomial(f: &ModuleElement, g: &ModuleElement) -> Result<ModuleElement> {
    let (lm_f, lc_f) = f.leading()?;
    let (lm_g, lc_g) = g.leading()?;
    let Some(l) = lm_f.lcm(lm_g) else {
        return Ok(ModuleElement::zero(f.n()));
    };
    let theta_f = lm_f.quotient_of(&l)?;
    let theta_g = lm_g.quotient_of(&l)?;
    let mut s = ModuleElement::zero(f.n());
    s.add_scaled_monomial_multiple(&lc_f.recip(), &theta_f, f);
    s.add_scaled_monomial_multiple(&-lc_g.recip(), &theta_g, g);
    Ok(s)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerOptions {
    /// Drop elements whose leading monomial is a multiple of another one's.
    pub reduce_basis: bool,
    /// Discard pairs made redundant by the chain criterion (Gebauer–Möller).
    /// With `false` every pair on a common generator is reduced.
    pub chain_criterion: bool,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            reduce_basis: false,
            chain_criterion: true,
        }
    }
}

/// Gröbner basis of the submodule generated by `input`.
pub fn buchberger(input: &Basis) -> Basis {
    buchberger_with(input, BuchbergerOptions::default())
}

/// Pending S-pair `(i, j)`, `i < j`, with the lcm of the two leading monomials.
struct Pair {
    i: usize,
    j: usize,
    lcm: ModuleMonomial,
}

/// Pairs are taken first in, first out. New elements are appended as they are
/// found, so the input comes first and the output is deterministic.
pub fn buchberger_with(input: &Basis, options: BuchbergerOptions) -> Basis {
    let mut basis = Basis::empty();
    let mut pairs: VecDeque<Pair> = VecDeque::new();
    for f in input {
        add_element(&mut basis, &mut pairs, f.clone(), options.chain_criterion);
    }
    while let Some(Pair { i, j, .. }) = pairs.pop_front() {
        let s = s_polynomial(&basis.elements()[i], &basis.elements()[j]).expect("basis elements are nonzero");
        if s.is_zero() {
            continue;
        }
        let h = reduce_full(&s, &basis).remainder;
        if let Ok((_, lc)) = h.leading() {
            let h = h.scale(&lc.recip());
            add_element(&mut basis, &mut pairs, h, options.chain_criterion);
        }
    }
    if options.reduce_basis {
        minimalize(&basis)
    } else {
        basis
    }
}

fn add_element(basis: &mut Basis, pairs: &mut VecDeque<Pair>, h: ModuleElement, chain: bool) {
    let t = basis.len();
    let lm_h = h.leading_monomial().expect("nonzero").clone();
    let lms: Vec<ModuleMonomial> = basis.leading_monomials().into_iter().cloned().collect();
    let mut fresh: Vec<Pair> = lms
        .iter()
        .enumerate()
        .filter_map(|(i, lm)| lm.lcm(&lm_h).map(|lcm| Pair { i, j: t, lcm }))
        .collect();
    if chain {
        // (i, j) is covered by (i, t) and (j, t) when LM(h) divides its lcm.
        pairs.retain(|p| {
            let covered = lm_h.divides(&p.lcm)
                && lms[p.i].lcm(&lm_h).as_ref() != Some(&p.lcm)
                && lms[p.j].lcm(&lm_h).as_ref() != Some(&p.lcm);
            !covered
        });
        // Among the new pairs keep only those with a minimal lcm, one per lcm.
        let keep: Vec<bool> = fresh
            .iter()
            .enumerate()
            .map(|(a, p)| {
                !fresh
                    .iter()
                    .enumerate()
                    .any(|(b, o)| (o.lcm != p.lcm && o.lcm.divides(&p.lcm)) || (o.lcm == p.lcm && b < a))
            })
            .collect();
        let mut flags = keep.into_iter();
        fresh.retain(|_| flags.next().unwrap_or(false));
    }
    pairs.extend(fresh);
    basis.push(h);
}

/// Remove every element whose leading monomial is divisible by the leading
/// monomial of another kept element. Among equal leading monomials the first
/// one is kept.
pub fn minimalize(basis: &Basis) -> Basis {
    let lms = basis.leading_monomials();
    let keep: Vec<ModuleElement> = basis
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            !lms.iter()
                .enumerate()
                .any(|(j, lm)| j != *i && lm.divides(lms[*i]) && (lm != &lms[*i] || j < *i))
        })
        .map(|(_, g)| g.clone())
        .collect();
    Basis { elements: keep }
}

/// Membership test; only meaningful when `basis` is a Gröbner basis.
pub fn is_member(f: &ModuleElement, basis: &Basis) -> bool {
    reduce_full(f, basis).remainder.is_zero()
}

/// `Σ q_i g_i + r`, used to check division results.
pub fn reconstruct(result: &DivisionResult, basis: &Basis) -> ModuleElement {
    let mut acc = result.remainder.clone();
    for (q, g) in result.quotients.iter().zip(basis.iter()) {
        for (theta, c) in q.terms() {
            acc.add_scaled_monomial_multiple(c, theta, g);
        }
    }
    acc
}

/// True when no term of `f` is divisible by a leading monomial of `basis`.
pub fn is_reduced(f: &ModuleElement, basis: &Basis) -> bool {
    let lms = basis.leading_monomials();
    f.terms().all(|(w, _)| !lms.iter().any(|lm| lm.divides(w)))
}

/// `LM(f) = max{LM(q_i g_i), LM(r)}` over the nonzero entries.
pub fn leading_identity_holds(f: &ModuleElement, result: &DivisionResult, basis: &Basis) -> bool {
    let mut candidates: Vec<ModuleMonomial> = Vec::new();
    for (q, g) in result.quotients.iter().zip(basis.iter()) {
        if let Some((qm, _)) = q.leading() {
            let gm = g.leading_monomial().expect("nonzero");
            candidates.push(ModuleMonomial::new(qm.commutative_product(&gm.mono), gm.gen));
        }
    }
    if let Ok(r) = result.remainder.leading_monomial() {
        candidates.push(r.clone());
    }
    match (f.leading_monomial(), candidates.into_iter().max()) {
        (Err(_), None) => true,
        (Ok(lm), Some(max)) => *lm == max,
        _ => false,
    }
}

impl DivisionResult {
    pub fn is_trivial(&self) -> bool {
        self.quotients.iter().all(WeylElement::is_zero) && self.remainder.is_zero()
    }
}
