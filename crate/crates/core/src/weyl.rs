//! Exact arithmetic in the Weyl algebra `A_n(Q)`.
//!
//! Elements are stored in the normal-form basis `x^α ∂^β` (all `x` to the
//! left of all `∂`). Terms live in a `BTreeMap` keyed by the graded order
//! on monomials, so the leading term is the last entry.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// A multi-index in `N^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(SmallVec<[u32; 4]>);

impl MultiIndex {
    pub fn zeros(n: usize) -> Self {
        MultiIndex(SmallVec::from_elem(0, n))
    }

    pub fn from_slice(entries: &[u32]) -> Self {
        MultiIndex(SmallVec::from_slice(entries))
    }

    /// The multi-index with a single 1 at position `i` (zero-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut m = Self::zeros(n);
        m.0[i] = 1;
        m
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    /// `|α| = α_1 + … + α_n`.
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference; `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<SmallVec<_>>>()
            .map(MultiIndex)
    }

    pub fn join(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }
}

/// A normal-form monomial `x^α ∂^β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylMonomial {
    pub alpha: MultiIndex,
    pub beta: MultiIndex,
}

impl WeylMonomial {
    pub fn new(alpha: MultiIndex, beta: MultiIndex) -> Self {
        assert_eq!(alpha.len(), beta.len(), "alpha and beta must have the same length");
        WeylMonomial { alpha, beta }
    }

    pub fn from_exponents(alpha: &[u32], beta: &[u32]) -> Self {
        Self::new(MultiIndex::from_slice(alpha), MultiIndex::from_slice(beta))
    }

    pub fn one(n: usize) -> Self {
        Self::new(MultiIndex::zeros(n), MultiIndex::zeros(n))
    }

    /// The generator `x_{i+1}`.
    pub fn x(n: usize, i: usize) -> Self {
        Self::new(MultiIndex::unit(n, i), MultiIndex::zeros(n))
    }

    /// The generator `∂_{i+1}`.
    pub fn d(n: usize, i: usize) -> Self {
        Self::new(MultiIndex::zeros(n), MultiIndex::unit(n, i))
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    /// Bernstein degree `|α| + |β|`.
    pub fn degree(&self) -> u32 {
        self.alpha.degree() + self.beta.degree()
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0
    }

    pub fn divides(&self, other: &WeylMonomial) -> bool {
        self.alpha.divides(&other.alpha) && self.beta.divides(&other.beta)
    }

    /// The monomial `other / self`, i.e. the componentwise exponent difference.
    pub fn quotient_of(&self, other: &WeylMonomial) -> Result<WeylMonomial> {
        match (other.alpha.checked_sub(&self.alpha), other.beta.checked_sub(&self.beta)) {
            (Some(alpha), Some(beta)) => Ok(WeylMonomial { alpha, beta }),
            _ => Err(Error::NotDivisible),
        }
    }

    pub fn lcm(&self, other: &WeylMonomial) -> WeylMonomial {
        WeylMonomial {
            alpha: self.alpha.join(&other.alpha),
            beta: self.beta.join(&other.beta),
        }
    }

    /// Exponent addition, ignoring the commutation relations.
    pub fn commutative_product(&self, other: &WeylMonomial) -> WeylMonomial {
        WeylMonomial {
            alpha: self.alpha.add(&other.alpha),
            beta: self.beta.add(&other.beta),
        }
    }

    /// The exponent vector `(α_1..α_n, β_1..β_n)` in `N^{2n}`.
    pub fn exponent_vector(&self) -> Vec<u32> {
        self.alpha
            .entries()
            .iter()
            .chain(self.beta.entries())
            .copied()
            .collect()
    }

    /// Expand the Weyl product `self · other` into normal form.
    ///
    /// Per variable, `∂^b x^a = Σ_k C(b,k) C(a,k) k! x^{a-k} ∂^{b-k}`; distinct
    /// variables commute, so the full product is the Cartesian combination.
    pub fn product(&self, other: &WeylMonomial) -> Vec<(WeylMonomial, BigInt)> {
        let n = self.n();
        let mut out: Vec<(SmallVec<[u32; 4]>, BigInt)> = vec![(SmallVec::new(), BigInt::one())];
        for i in 0..n {
            let b = self.beta.0[i];
            let a = other.alpha.0[i];
            let kmax = a.min(b);
            let factors: Vec<BigInt> = (0..=kmax).map(|k| commutation_coefficient(a, b, k)).collect();
            let mut next = Vec::with_capacity(out.len() * factors.len());
            for (ks, c) in &out {
                for (k, f) in factors.iter().enumerate() {
                    let mut ks2 = ks.clone();
                    ks2.push(k as u32);
                    next.push((ks2, c * f));
                }
            }
            out = next;
        }
        let sum = self.commutative_product(other);
        out.into_iter()
            .map(|(ks, c)| {
                let k = MultiIndex(ks);
                let mono = WeylMonomial {
                    alpha: sum.alpha.checked_sub(&k).expect("k bounded by exponents"),
                    beta: sum.beta.checked_sub(&k).expect("k bounded by exponents"),
                };
                (mono, c)
            })
            .collect()
    }
}

fn commutation_coefficient(a: u32, b: u32, k: u32) -> BigInt {
    let mut c = binomial(a, k) * binomial(b, k);
    for j in 2..=k {
        c *= BigInt::from(j);
    }
    c
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

impl Ord for WeylMonomial {
    /// Graded order: degree first, then `α_1..α_n`, then `β_1..β_n` lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

impl PartialOrd for WeylMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for WeylMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, idx) in [("x", &self.alpha), ("d", &self.beta)] {
            for (i, &e) in idx.entries().iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{}{}", name, i + 1)),
                    _ => parts.push(format!("{}{}^{}", name, i + 1, e)),
                }
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Write `Σ c·body` in the given order, e.g. `x1 d1 - 3/2 e1`.
///
/// `body` is the empty string for a bare coefficient.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut first = true;
    for (c, body) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        match (abs.is_one(), body.is_empty()) {
            (true, false) => write!(f, "{}", body)?,
            (_, true) => write!(f, "{}", abs)?,
            (false, false) => write!(f, "{} {}", abs, body)?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// An element `Σ k_{α,β} x^α ∂^β` of `A_n(Q)` in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    n: usize,
    terms: BTreeMap<WeylMonomial, Rational>,
}

impl WeylElement {
    pub fn zero(n: usize) -> Self {
        WeylElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(WeylMonomial::one(n), Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(WeylMonomial::one(n), c)
    }

    pub fn x(n: usize, i: usize) -> Self {
        Self::monomial(WeylMonomial::x(n, i), Rational::one())
    }

    pub fn d(n: usize, i: usize) -> Self {
        Self::monomial(WeylMonomial::d(n, i), Rational::one())
    }

    pub fn monomial(mono: WeylMonomial, c: Rational) -> Self {
        let mut e = Self::zero(mono.n());
        e.add_term(mono, c);
        e
    }

    /// Build from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (WeylMonomial, Rational)>,
    {
        let mut e = Self::zero(n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: m.n(),
                });
            }
            e.add_term(m, c);
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &WeylMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&WeylMonomial, &Rational)> {
        self.terms.last_key_value()
    }

    /// Bernstein degree; `-1` for the zero element.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    pub(crate) fn add_term(&mut self, m: WeylMonomial, c: Rational) {
        add_into(&mut self.terms, m, c);
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        WeylElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// The Weyl product `self · other` in normal form.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                for (m, k) in ma.product(mb) {
                    out.add_term(m, &c * Rational::from_integer(k));
                }
            }
        }
        Ok(out)
    }

    /// Act on a commutative polynomial as a differential operator.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if self.n != p.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.n,
            });
        }
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let mut q = p.clone();
            for (i, &b) in m.beta.entries().iter().enumerate() {
                for _ in 0..b {
                    q = q.derivative(i);
                }
            }
            for (e, v) in q.terms {
                out.add_term(e.add(&m.alpha), v * c);
            }
        }
        Ok(out)
    }
}

/// Weyl product of two elements.
pub fn weyl_mul(a: &WeylElement, b: &WeylElement) -> Result<WeylElement> {
    a.try_mul(b)
}

/// Bernstein degree, `-1` for zero.
pub fn bernstein_degree(a: &WeylElement) -> i64 {
    a.degree()
}

pub(crate) fn add_into<K: Ord>(terms: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(k) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

impl Neg for &WeylElement {
    type Output = WeylElement;
    fn neg(self) -> WeylElement {
        WeylElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Add for &WeylElement {
    type Output = WeylElement;
    fn add(self, rhs: &WeylElement) -> WeylElement {
        self.try_add(rhs).expect("Weyl algebras of different dimension")
    }
}

impl Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        self.try_sub(rhs).expect("Weyl algebras of different dimension")
    }
}

impl std::ops::Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.try_mul(rhs).expect("Weyl algebras of different dimension")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms()
                .map(|(m, c)| (c, if m.is_one() { String::new() } else { m.to_string() })),
        )
    }
}

/// A commutative polynomial in `Q[x_1, …, x_n]`, the space `A_n` acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n);
            p.add_term(e, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &MultiIndex) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: MultiIndex, c: Rational) {
        add_into(&mut self.terms, e, c);
    }

    /// `∂p/∂x_{i+1}`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (e, c) in &self.terms {
            let k = e.entries()[i];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2.0[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(BigInt::from(k)));
        }
        out
    }
}
