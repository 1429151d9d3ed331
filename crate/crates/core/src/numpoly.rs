//! Numerical polynomials in the binomial basis `C(t+i, i)` and Kolchin
//! dimension polynomials of subsets of `N^m`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weyl::{binomial, write_terms, Rational};

/// A polynomial with rational coefficients in the power basis `1, t, t², …`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Coefficients of `1, t, t², …`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn evaluate(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    fn add_scaled(&mut self, other: &RationalPolynomial, c: &Rational) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * c;
        }
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = Self::new(trimmed);
    }

    /// Multiply by `(t + c)`.
    fn mul_linear(&self, c: &Rational) -> RationalPolynomial {
        let mut out = vec![Rational::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] += a * c;
        }
        Self::new(out)
    }

    /// `C(t + shift, k) = (t+shift)(t+shift-1)…(t+shift-k+1) / k!` as a polynomial in `t`.
    pub fn binomial(shift: i64, k: u32) -> RationalPolynomial {
        let mut p = Self::new(vec![Rational::one()]);
        let mut fact = BigInt::one();
        for j in 0..k {
            p = p.mul_linear(&Rational::from_integer(BigInt::from(shift - j as i64)));
            fact *= BigInt::from(j + 1);
        }
        let inv = Rational::new(BigInt::one(), fact);
        Self::new(p.coeffs.iter().map(|c| c * &inv).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let body = match i {
                    0 => String::new(),
                    1 => "t".to_string(),
                    _ => format!("t^{}", i),
                };
                (c, body)
            });
        write_terms(f, terms)
    }
}

/// `Σ a_i C(t+i, i)` with integer coefficients `a_0, …, a_d`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct NumericalPolynomial {
    coeffs: Vec<BigInt>,
}

impl NumericalPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_binomial(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        NumericalPolynomial { coeffs }
    }

    pub fn from_binomial_i64(coeffs: &[i64]) -> Self {
        Self::from_binomial(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `C(t+k, k)`.
    pub fn basis(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self::from_binomial(coeffs)
    }

    pub fn binomial_coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `a_i`, zero beyond the degree.
    pub fn coefficient(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Degree, `-1` for zero.
    pub fn degree(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_monomial(&self) -> RationalPolynomial {
        let mut out = RationalPolynomial::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            out.add_scaled(
                &RationalPolynomial::binomial(i as i64, i as u32),
                &Rational::from_integer(a.clone()),
            );
        }
        out
    }

    /// Convert from the power basis; fails unless every binomial-basis
    /// coefficient is an integer.
    ///
    /// Uses `a_k = (∇^k f)(-1)` with the backward difference `∇f(t) = f(t) − f(t−1)`.
    pub fn from_monomial(p: &RationalPolynomial) -> Result<Self> {
        if p.is_zero() {
            return Ok(Self::zero());
        }
        let d = p.degree() as usize;
        let values: Vec<Rational> = (0..=d)
            .map(|j| p.evaluate(&Rational::from_integer(BigInt::from(-1 - j as i64))))
            .collect();
        let mut coeffs = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let mut a = Rational::zero();
            for (j, v) in values.iter().enumerate().take(k + 1) {
                let term = v * Rational::from_integer(binomial(k as u32, j as u32));
                if j % 2 == 0 {
                    a += term;
                } else {
                    a -= term;
                }
            }
            if !a.is_integer() {
                return Err(Error::NotNumerical(format!("coefficient of C(t+{k},{k}) is {a}")));
            }
            coeffs.push(a.to_integer());
        }
        Ok(Self::from_binomial(coeffs))
    }

    /// Exact value at an integer; `C(t+i, i)` is read as a polynomial.
    pub fn evaluate(&self, t: i64) -> BigInt {
        let mut total = BigInt::zero();
        // C(t+i, i) = C(t+i-1, i-1) · (t+i) / i
        let mut basis = Rational::one();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                basis = basis * Rational::from_integer(BigInt::from(t + i as i64))
                    / Rational::from_integer(BigInt::from(i));
            }
            total += a * basis.to_integer();
        }
        total
    }

    /// `Δ^k` with `Δf(t) = f(t+1) − f(t)`.
    ///
    /// Since `ΔC(t+i, i) = C(t+i, i−1) = Σ_{j<i} C(t+j, j)`, one step maps
    /// `a_j ↦ Σ_{i>j} a_i`.
    pub fn forward_difference(&self, k: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        for _ in 0..k {
            if coeffs.is_empty() {
                break;
            }
            let mut next = vec![BigInt::zero(); coeffs.len() - 1];
            let mut suffix = BigInt::zero();
            for j in (0..next.len()).rev() {
                suffix += &coeffs[j + 1];
                next[j] = suffix.clone();
            }
            coeffs = next;
        }
        Self::from_binomial(coeffs)
    }

    /// `∇^k` with `∇f(t) = f(t) − f(t−1)`, which shifts the basis:
    /// `∇^k Σ a_i C(t+i, i) = Σ_{i≥k} a_i C(t+i−k, i−k)`.
    pub fn backward_difference(&self, k: usize) -> Self {
        Self::from_binomial(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_binomial((0..len).map(|i| self.coefficient(i) + other.coefficient(i)).collect())
    }
}

impl std::iter::Sum for NumericalPolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc.add(&p))
    }
}

impl fmt::Display for NumericalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs: Vec<Rational> = self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect();
        let terms = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let body = if i == 0 {
                    "C(t,0)".to_string()
                } else {
                    format!("C(t+{i},{i})")
                };
                (c, body)
            });
        write_terms(f, terms)
    }
}

/// A finite subset of `N^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<Vec<u32>>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vec<u32>>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::PointLength { point: p.clone(), dim });
        }
        let mut points = points;
        points.sort();
        points.dedup();
        Ok(PointSet { dim, points })
    }

    pub fn empty(dim: usize) -> Self {
        PointSet {
            dim,
            points: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Largest coordinate sum of a point, 0 when empty.
    pub fn max_norm(&self) -> u64 {
        self.points.iter().map(|p| norm(p)).max().unwrap_or(0)
    }

    /// From this `s` on, `ω_A(s)` equals the count of `V_A(s)`: every
    /// inclusion–exclusion term `C(s+m−b, m)` is then a true lattice count.
    pub fn exactness_threshold(&self) -> u64 {
        let min = minimal_points(self);
        if min.is_empty() {
            return 0;
        }
        let join = min.points.iter().fold(vec![0u32; self.dim], |acc, p| {
            acc.iter().zip(p).map(|(a, b)| *a.max(b)).collect()
        });
        norm(&join).saturating_sub(self.dim as u64)
    }
}

fn norm(p: &[u32]) -> u64 {
    p.iter().map(|&x| x as u64).sum()
}

fn dominates(v: &[u32], a: &[u32]) -> bool {
    v.iter().zip(a).all(|(x, y)| x >= y)
}

/// The `≤_P`-minimal elements of `A`.
pub fn minimal_points(a: &PointSet) -> PointSet {
    let points = a
        .points
        .iter()
        .filter(|p| !a.points.iter().any(|q| q != *p && dominates(p, q)))
        .cloned()
        .collect();
    PointSet { dim: a.dim, points }
}

/// The Kolchin dimension polynomial `ω_A(t)` by inclusion–exclusion over the
/// subsets of the minimal points of `A`.
pub fn kolchin_polynomial(a: &PointSet) -> NumericalPolynomial {
    let min = minimal_points(a);
    let m = a.dim;
    let p = min.points.len();
    // signed multiplicity of each b_λ
    let mut weights: BTreeMap<u64, i64> = BTreeMap::new();
    let mut stack: Vec<(usize, Vec<u32>, bool)> = vec![(0, vec![0; m], false)];
    while let Some((next, join, odd)) = stack.pop() {
        *weights.entry(norm(&join)).or_insert(0) += if odd { -1 } else { 1 };
        for i in next..p {
            let j: Vec<u32> = join.iter().zip(&min.points[i]).map(|(x, y)| *x.max(y)).collect();
            stack.push((i + 1, j, !odd));
        }
    }
    let mut total = RationalPolynomial::zero();
    for (b, w) in weights {
        if w == 0 {
            continue;
        }
        let term = RationalPolynomial::binomial(m as i64 - b as i64, m as u32);
        total.add_scaled(&term, &Rational::from_integer(BigInt::from(w)));
    }
    NumericalPolynomial::from_monomial(&total).expect("Kolchin polynomials are numerical")
}

/// `Card V_A(s)`: points `v ∈ N^m` with `|v| ≤ s` that dominate no point of `A`,
/// by exhaustive enumeration.
pub fn count_v_points(a: &PointSet, s: u64) -> u64 {
    count_v_table(a, s)[s as usize]
}

/// `Card V_A(s)` for every `s` in `0..=s_max`, from one enumeration.
pub fn count_v_table(a: &PointSet, s_max: u64) -> Vec<u64> {
    let mut by_norm = vec![0u64; s_max as usize + 1];
    let mut v = vec![0u32; a.dim];
    fn walk(a: &PointSet, v: &mut Vec<u32>, i: usize, used: u64, s_max: u64, by_norm: &mut [u64]) {
        if i == v.len() {
            if !a.points.iter().any(|p| dominates(v, p)) {
                by_norm[used as usize] += 1;
            }
            return;
        }
        for x in 0..=(s_max - used) {
            v[i] = x as u32;
            walk(a, v, i + 1, used + x, s_max, by_norm);
        }
        v[i] = 0;
    }
    walk(a, &mut v, 0, 0, s_max, &mut by_norm);
    let mut acc = 0;
    by_norm
        .iter()
        .map(|c| {
            acc += c;
            acc
        })
        .collect()
}

/// `d!`.
pub fn factorial(d: u32) -> BigInt {
    (1..=d).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
