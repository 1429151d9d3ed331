//! The free module `E = A_n e_1 ⊕ … ⊕ A_n e_m`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::weyl::{add_into, write_terms, Rational, WeylElement, WeylMonomial};

/// A monomial `θ e_gen`. Generator indices are 1-based, as in `e_1, …, e_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleMonomial {
    pub mono: WeylMonomial,
    pub gen: usize,
}

impl ModuleMonomial {
    pub fn new(mono: WeylMonomial, gen: usize) -> Self {
        assert!(gen >= 1, "generator indices start at 1");
        ModuleMonomial { mono, gen }
    }

    pub fn degree(&self) -> u32 {
        self.mono.degree()
    }

    pub fn n(&self) -> usize {
        self.mono.n()
    }

    /// `self | other`: same generator and componentwise exponent dominance.
    pub fn divides(&self, other: &ModuleMonomial) -> bool {
        self.gen == other.gen && self.mono.divides(&other.mono)
    }

    /// `other / self` as a Weyl monomial.
    pub fn quotient_of(&self, other: &ModuleMonomial) -> Result<WeylMonomial> {
        if self.gen != other.gen {
            return Err(Error::NotDivisible);
        }
        self.mono.quotient_of(&other.mono)
    }

    /// `None` stands for the zero lcm of monomials on different generators.
    pub fn lcm(&self, other: &ModuleMonomial) -> Option<ModuleMonomial> {
        (self.gen == other.gen).then(|| ModuleMonomial::new(self.mono.lcm(&other.mono), self.gen))
    }
}

pub fn compare(u: &ModuleMonomial, v: &ModuleMonomial) -> Ordering {
    u.cmp(v)
}

pub fn divides(v: &ModuleMonomial, u: &ModuleMonomial) -> bool {
    v.divides(u)
}

pub fn quotient(u: &ModuleMonomial, v: &ModuleMonomial) -> Result<WeylMonomial> {
    v.quotient_of(u)
}

pub fn lcm_mono(u: &ModuleMonomial, v: &ModuleMonomial) -> Option<ModuleMonomial> {
    u.lcm(v)
}

impl Ord for ModuleMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mono.cmp(&other.mono).then(self.gen.cmp(&other.gen))
    }
}

impl PartialOrd for ModuleMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ModuleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            write!(f, "e{}", self.gen)
        } else {
            write!(f, "{} e{}", self.mono, self.gen)
        }
    }
}

/// A finite sum `Σ a_j θ_j e_{i_j}` with distinct monomials and nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleElement {
    n: usize,
    terms: BTreeMap<ModuleMonomial, Rational>,
}

impl ModuleElement {
    pub fn zero(n: usize) -> Self {
        ModuleElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector `e_gen`.
    pub fn generator(n: usize, gen: usize) -> Self {
        Self::term(ModuleMonomial::new(WeylMonomial::one(n), gen), Rational::one())
    }

    pub fn term(m: ModuleMonomial, c: Rational) -> Self {
        let mut e = Self::zero(m.n());
        e.add_term(m, c);
        e
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ModuleMonomial, Rational)>,
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

    /// `D e_gen` for a Weyl element `D`.
    pub fn from_weyl(d: &WeylElement, gen: usize) -> Self {
        let mut e = Self::zero(d.n());
        for (m, c) in d.terms() {
            e.add_term(ModuleMonomial::new(m.clone(), gen), c.clone());
        }
        e
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

    /// Largest generator index that appears, or 0 for the zero element.
    pub fn max_generator(&self) -> usize {
        self.terms.keys().map(|m| m.gen).max().unwrap_or(0)
    }

    pub fn coefficient(&self, m: &ModuleMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains(&self, m: &ModuleMonomial) -> bool {
        self.terms.contains_key(m)
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ModuleMonomial, &Rational)> {
        self.terms.iter().rev()
    }

    /// `(LM, LC)`.
    pub fn leading(&self) -> Result<(&ModuleMonomial, &Rational)> {
        self.terms.last_key_value().ok_or(Error::ZeroElement)
    }

    pub fn leading_monomial(&self) -> Result<&ModuleMonomial> {
        self.leading().map(|(m, _)| m)
    }

    /// The leading term `LC · LM` as a one-term element.
    pub fn leading_term(&self) -> Result<ModuleElement> {
        let (m, c) = self.leading()?;
        Ok(Self::term(m.clone(), c.clone()))
    }

    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree() as i64).max().unwrap_or(-1)
    }

    pub(crate) fn add_term(&mut self, m: ModuleMonomial, c: Rational) {
        add_into(&mut self.terms, m, c);
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        ModuleElement {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// `self += c · θ · g`, with the Weyl action of `θ` on `g`.
    pub(crate) fn add_scaled_monomial_multiple(&mut self, c: &Rational, theta: &WeylMonomial, g: &ModuleElement) {
        for (m, v) in &g.terms {
            let cv = c * v;
            for (p, k) in theta.product(&m.mono) {
                let coeff = if k.is_one() {
                    cv.clone()
                } else {
                    &cv * Rational::from_integer(k)
                };
                add_into(&mut self.terms, ModuleMonomial { mono: p, gen: m.gen }, coeff);
            }
        }
    }

    /// Left action `D · self`.
    pub fn act(&self, d: &WeylElement) -> Result<Self> {
        if d.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: d.n(),
            });
        }
        let mut out = Self::zero(self.n);
        for (theta, c) in d.terms() {
            out.add_scaled_monomial_multiple(c, theta, self);
        }
        Ok(out)
    }

    /// Convenience constructor for a monomial action with integer coefficient.
    pub fn act_monomial(&self, c: &Rational, theta: &WeylMonomial) -> Self {
        let mut out = Self::zero(self.n);
        out.add_scaled_monomial_multiple(c, theta, self);
        out
    }
}

/// `D · f` in `E`.
pub fn act(d: &WeylElement, f: &ModuleElement) -> Result<ModuleElement> {
    f.act(d)
}

impl Neg for &ModuleElement {
    type Output = ModuleElement;
    fn neg(self) -> ModuleElement {
        self.scale(&-Rational::one())
    }
}

impl Add for &ModuleElement {
    type Output = ModuleElement;
    fn add(self, rhs: &ModuleElement) -> ModuleElement {
        self.try_add(rhs)
            .expect("modules over Weyl algebras of different dimension")
    }
}

impl Sub for &ModuleElement {
    type Output = ModuleElement;
    fn sub(self, rhs: &ModuleElement) -> ModuleElement {
        self.try_add(&-rhs)
            .expect("modules over Weyl algebras of different dimension")
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms().map(|(m, c)| (c, m.to_string())))
    }
}

/// Shorthand used by tests and examples: integer-coefficient terms given as
/// `(coeff, alpha, beta, gen)`.
pub fn element_from_ints(n: usize, terms: &[(i64, &[u32], &[u32], usize)]) -> ModuleElement {
    ModuleElement::from_terms(
        n,
        terms.iter().map(|&(c, a, b, g)| {
            (
                ModuleMonomial::new(WeylMonomial::from_exponents(a, b), g),
                Rational::from_integer(BigInt::from(c)),
            )
        }),
    )
    .expect("consistent dimensions")
}
