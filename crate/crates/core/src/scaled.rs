//! Integer-numerator form of module elements used inside the division loop.
//!
//! Arithmetic runs on `malachite`, whose gcd is much faster than the one in
//! `num-bigint` at the sizes that show up in Buchberger runs.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use malachite_base::num::arithmetic::traits::{DivExact, DivExactAssign, Gcd};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::conversion::traits::PowerOf2Digits;
use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use num_bigint::{BigInt, BigUint, Sign};

use crate::free_module::{ModuleElement, ModuleMonomial};
use crate::weyl::{Rational, WeylElement, WeylMonomial};

pub(crate) fn natural_from(x: &BigUint) -> Natural {
    Natural::from_power_of_2_digits_asc(32, x.to_u32_digits().into_iter()).expect("32-bit digits")
}

pub(crate) fn integer_from(x: &BigInt) -> Integer {
    Integer::from_sign_and_abs(x.sign() != Sign::Minus, natural_from(x.magnitude()))
}

pub(crate) fn biguint_from(x: &Natural) -> BigUint {
    BigUint::new(PowerOf2Digits::<u32>::to_power_of_2_digits_asc(x, 32))
}

pub(crate) fn bigint_from(x: &Integer) -> BigInt {
    let sign = if *x < 0 { Sign::Minus } else { Sign::Plus };
    BigInt::from_biguint(sign, biguint_from(x.unsigned_abs_ref()))
}

fn rational_from(x: &malachite_q::Rational) -> Rational {
    let num = BigInt::from_biguint(
        if *x < 0 { Sign::Minus } else { Sign::Plus },
        biguint_from(x.numerator_ref()),
    );
    Rational::new_raw(num, BigInt::from(biguint_from(x.denominator_ref())))
}

/// `Σ c_w w / den` with integer `c_w` and `den > 0`.
pub(crate) struct ScaledElement {
    den: Natural,
    terms: BTreeMap<ModuleMonomial, Integer>,
}

impl ScaledElement {
    pub(crate) fn new(f: &ModuleElement) -> Self {
        let dens: Vec<Natural> = f.terms().map(|(_, c)| natural_from(c.denom().magnitude())).collect();
        let den = dens.iter().fold(Natural::ONE, |acc, d| {
            let g = (&acc).gcd(d);
            acc * d.div_exact(g)
        });
        let terms = f
            .terms()
            .zip(&dens)
            .map(|((w, c), d)| (w.clone(), integer_from(c.numer()) * Integer::from((&den).div_exact(d))))
            .collect();
        ScaledElement { den, terms }
    }

    /// Terms in decreasing order.
    pub(crate) fn terms(&self) -> impl Iterator<Item = (&ModuleMonomial, &Integer)> {
        self.terms.iter().rev()
    }

    pub(crate) fn coefficient(&self, w: &ModuleMonomial) -> &Integer {
        &self.terms[w]
    }

    /// The true coefficient ratio `(a / den) / (lk / gk.den)`.
    pub(crate) fn ratio(&self, a: &Integer, gk: &ScaledElement, lk: &Integer) -> malachite_q::Rational {
        malachite_q::Rational::from_integers(a * Integer::from(&gk.den), lk * Integer::from(&self.den))
    }

    /// `self −= (a/den) / (lk/gk.den) · θ · gk`, with `a` a coefficient of
    /// `self` and `lk` the leading coefficient of `gk`.
    pub(crate) fn subtract_multiple(&mut self, a: &Integer, theta: &WeylMonomial, gk: &ScaledElement, lk: &Integer) {
        let u = Integer::from(a.unsigned_abs_ref().gcd(lk.unsigned_abs_ref()));
        let (mut s, mut t) = (lk.div_exact(&u), a.div_exact(&u));
        if s < 0 {
            s = -s;
            t = -t;
        }
        if s != Integer::ONE {
            self.terms.values_mut().for_each(|v| *v *= &s);
            self.den *= s.unsigned_abs_ref();
        }
        for (m, v) in &gk.terms {
            let tv = &t * v;
            for (p, c) in theta.product(&m.mono) {
                let key = ModuleMonomial { mono: p, gen: m.gen };
                let delta = if c == BigInt::from(1) {
                    tv.clone()
                } else {
                    &tv * integer_from(&c)
                };
                match self.terms.entry(key) {
                    Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if *e.get() == 0 {
                            e.remove();
                        }
                    }
                }
            }
        }
        self.remove_content();
    }

    fn remove_content(&mut self) {
        let mut g = self.den.clone();
        for v in self.terms.values() {
            if g == Natural::ONE {
                return;
            }
            g = g.gcd(v.unsigned_abs_ref());
        }
        if g != Natural::ONE {
            let gi = Integer::from(&g);
            self.terms.values_mut().for_each(|v| v.div_exact_assign(&gi));
            self.den.div_exact_assign(&g);
        }
    }

    pub(crate) fn into_element(self, n: usize) -> ModuleElement {
        let den = BigInt::from(biguint_from(&self.den));
        let terms = self
            .terms
            .into_iter()
            .map(|(w, c)| (w, Rational::new(bigint_from(&c), den.clone())));
        ModuleElement::from_terms(n, terms).expect("terms share the dimension of the input")
    }
}

/// Quotient accumulator with `malachite` rationals.
pub(crate) struct Quotient {
    terms: BTreeMap<WeylMonomial, malachite_q::Rational>,
}

impl Quotient {
    pub(crate) fn new() -> Self {
        Quotient { terms: BTreeMap::new() }
    }

    pub(crate) fn add(&mut self, theta: WeylMonomial, c: malachite_q::Rational) {
        match self.terms.entry(theta) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == malachite_q::Rational::ZERO {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn into_weyl(self, n: usize) -> WeylElement {
        WeylElement::from_terms(n, self.terms.iter().map(|(m, c)| (m.clone(), rational_from(c))))
            .expect("monomials share the dimension of the input")
    }
}
