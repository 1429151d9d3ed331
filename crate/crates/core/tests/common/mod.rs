#![allow(dead_code)]

use dmod_core::{
    ModuleElement, ModuleMonomial, ModulePresentation, MultiIndex, PointSet, Polynomial, Rational, WeylElement,
    WeylMonomial,
};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = rng.gen_range(1..=9i64);
    if rng.gen_bool(0.5) {
        num = -num;
    }
    let den = if rng.gen_bool(0.7) { 1 } else { rng.gen_range(2..=5i64) };
    q(num, den)
}

/// Exponents of a random monomial in `vars` variables with total degree `≤ max_deg`.
pub fn random_exponents(rng: &mut ChaCha8Rng, vars: usize, max_deg: u32) -> Vec<u32> {
    let total = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; vars];
    for _ in 0..total {
        e[rng.gen_range(0..vars)] += 1;
    }
    e
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_deg: u32) -> WeylMonomial {
    let e = random_exponents(rng, 2 * n, max_deg);
    WeylMonomial::from_exponents(&e[..n], &e[n..])
}

pub fn random_weyl(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, max_terms: usize) -> WeylElement {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..k)
        .map(|_| (random_monomial(rng, n, max_deg), small_rational(rng)))
        .collect();
    WeylElement::from_terms(n, terms).unwrap()
}

pub fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, max_deg: u32, max_terms: usize) -> Polynomial {
    let k = rng.gen_range(1..=max_terms);
    let terms: Vec<_> = (0..k)
        .map(|_| {
            (
                MultiIndex::from_slice(&random_exponents(rng, n, max_deg)),
                small_rational(rng),
            )
        })
        .collect();
    Polynomial::from_terms(n, terms)
}

pub fn random_module_element(
    rng: &mut ChaCha8Rng,
    n: usize,
    m: usize,
    max_deg: u32,
    max_terms: usize,
) -> ModuleElement {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms: Vec<_> = (0..k)
            .map(|_| {
                let gen = rng.gen_range(1..=m);
                (
                    ModuleMonomial::new(random_monomial(rng, n, max_deg), gen),
                    small_rational(rng),
                )
            })
            .collect();
        let f = ModuleElement::from_terms(n, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_point_set(rng: &mut ChaCha8Rng, max_dim: usize, max_coord: u32, max_points: usize) -> PointSet {
    let dim = rng.gen_range(1..=max_dim);
    let k = rng.gen_range(0..=max_points);
    let points = (0..k)
        .map(|_| (0..dim).map(|_| rng.gen_range(0..=max_coord)).collect())
        .collect();
    PointSet::new(dim, points).unwrap()
}

fn rel(n: usize, terms: &[(i64, &[u32], &[u32], usize)]) -> ModuleElement {
    dmod_core::free_module::element_from_ints(n, terms)
}

/// `x² + ∂² + x∂` acting on a single generator.
pub fn first_example() -> ModulePresentation {
    ModulePresentation::new(
        1,
        1,
        vec![rel(1, &[(1, &[2], &[0], 1), (1, &[0], &[2], 1), (1, &[1], &[1], 1)])],
    )
    .unwrap()
}

/// `{x₁²∂₁³e₁ + ∂₁⁵e₁, x₂²e₁ − x₁e₂}`.
pub fn second_example() -> ModulePresentation {
    ModulePresentation::new(
        2,
        2,
        vec![
            rel(2, &[(1, &[2, 0], &[3, 0], 1), (1, &[0, 0], &[5, 0], 1)]),
            rel(2, &[(1, &[0, 2], &[0, 0], 1), (-1, &[1, 0], &[0, 0], 2)]),
        ],
    )
    .unwrap()
}

/// `x₂ + 1`, `x₁`, `∂₃ − 1` on a single generator in three variables.
pub fn third_example() -> ModulePresentation {
    ModulePresentation::new(
        3,
        1,
        vec![
            rel(3, &[(1, &[0, 1, 0], &[0, 0, 0], 1), (1, &[0, 0, 0], &[0, 0, 0], 1)]),
            rel(3, &[(1, &[1, 0, 0], &[0, 0, 0], 1)]),
            rel(3, &[(1, &[0, 0, 0], &[0, 0, 1], 1), (-1, &[0, 0, 0], &[0, 0, 0], 1)]),
        ],
    )
    .unwrap()
}

/// Add `e_{m+1}` together with the relation `e_{m+1} − D·e_k`.
pub fn with_redundant_generator(p: &ModulePresentation, d: &WeylElement, k: usize) -> ModulePresentation {
    let n = p.n();
    let new_gen = p.m() + 1;
    let mut rels = p.relations().to_vec();
    let link = &ModuleElement::generator(n, new_gen) - &ModuleElement::from_weyl(d, k);
    rels.push(link);
    ModulePresentation::new(n, new_gen, rels).unwrap()
}
