mod common;

use std::cmp::Ordering;

use common::*;
use dmod_core::groebner::{is_reduced, leading_identity_holds, reconstruct, reduce_with_strategy, ReductionStrategy};
use dmod_core::numpoly::count_v_table;
use dmod_core::{
    buchberger, count_v_points, kolchin_polynomial, minimal_points, reduce_full, s_polynomial, Basis, ModuleElement,
    ModuleMonomial, NumericalPolynomial, PointSet, Rational, WeylElement,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_module_monomial(rng: &mut ChaCha8Rng, n: usize) -> ModuleMonomial {
    ModuleMonomial::new(random_monomial(rng, n, 4), rng.gen_range(1..=3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn module_order_is_total_and_transitive(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let (a, b, c) = (
            random_module_monomial(&mut rng, n),
            random_module_monomial(&mut rng, n),
            random_module_monomial(&mut rng, n),
        );
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
        if a <= b && b <= c {
            prop_assert!(a <= c);
        }
    }

    #[test]
    fn order_is_compatible_with_multiplication(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let u = random_module_monomial(&mut rng, n);
        let v = ModuleMonomial::new(random_monomial(&mut rng, n, 4), u.gen);
        let theta = random_monomial(&mut rng, n, 3);
        let tu = ModuleMonomial::new(theta.commutative_product(&u.mono), u.gen);
        let tv = ModuleMonomial::new(theta.commutative_product(&v.mono), v.gen);
        prop_assert_eq!(u.cmp(&v), tu.cmp(&tv));
    }

    #[test]
    fn leading_monomial_of_action(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let f = random_module_element(&mut rng, n, 2, 4, 4);
        let theta = random_monomial(&mut rng, n, 3);
        let d = WeylElement::monomial(theta.clone(), Rational::from_integer(1.into()));
        let g = f.act(&d).unwrap();
        let lm = f.leading_monomial().unwrap();
        prop_assert_eq!(
            g.leading_monomial().unwrap(),
            &ModuleMonomial::new(theta.commutative_product(&lm.mono), lm.gen)
        );
    }

    #[test]
    fn lcm_is_least_common_multiple(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let u = random_module_monomial(&mut rng, n);
        let v = ModuleMonomial::new(random_monomial(&mut rng, n, 4), u.gen);
        let l = u.lcm(&v).unwrap();
        prop_assert!(u.divides(&l) && v.divides(&l));
        let w = ModuleMonomial::new(random_monomial(&mut rng, n, 6), u.gen);
        if u.divides(&w) && v.divides(&w) {
            prop_assert!(l.divides(&w));
        }
        let other = ModuleMonomial::new(v.mono.clone(), u.gen % 3 + 1);
        prop_assert!(u.lcm(&other).is_none());
    }

    #[test]
    fn weyl_product_is_associative(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let a = random_weyl(&mut rng, n, 3, 3);
        let b = random_weyl(&mut rng, n, 3, 3);
        let c = random_weyl(&mut rng, n, 3, 3);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn product_acts_as_composition(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = seeded(seed);
        let a = random_weyl(&mut rng, n, 3, 3);
        let b = random_weyl(&mut rng, n, 3, 3);
        let p = random_polynomial(&mut rng, n, 5, 4);
        prop_assert_eq!((&a * &b).apply(&p).unwrap(), a.apply(&b.apply(&p).unwrap()).unwrap());
    }

    #[test]
    fn division_contract(seed in any::<u64>(), n in 1usize..=2, m in 1usize..=2) {
        let mut rng = seeded(seed);
        let k = rng.gen_range(1..=3);
        let basis = Basis::new((0..k).map(|_| random_module_element(&mut rng, n, m, 3, 3)).collect()).unwrap();
        let f = random_module_element(&mut rng, n, m, 5, 5);
        let result = reduce_full(&f, &basis);
        prop_assert_eq!(reconstruct(&result, &basis), f.clone());
        prop_assert!(is_reduced(&result.remainder, &basis));
        prop_assert!(leading_identity_holds(&f, &result, &basis));
        prop_assert!(result.leaders.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn normal_form_is_unique_modulo_groebner_basis(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let n = rng.gen_range(1..=2);
        let input: Vec<ModuleElement> = (0..rng.gen_range(1..=2)).map(|_| random_module_element(&mut rng, n, 1, 2, 2)).collect();
        let g = buchberger(&Basis::new(input).unwrap());
        let f = random_module_element(&mut rng, n, 1, 4, 4);
        let a = reduce_with_strategy(&f, &g, ReductionStrategy::GreatestTerm);
        let b = reduce_with_strategy(&f, &g, ReductionStrategy::FirstDivisor);
        prop_assert_eq!(a.remainder, b.remainder);
    }

    #[test]
    fn buchberger_output_passes_criterion(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let n = rng.gen_range(1..=2);
        let m = rng.gen_range(1..=2);
        let input: Vec<ModuleElement> = (0..rng.gen_range(1..=2)).map(|_| random_module_element(&mut rng, n, m, 2, 2)).collect();
        let g = buchberger(&Basis::new(input.clone()).unwrap());
        for f in &input {
            prop_assert!(reduce_full(f, &g).remainder.is_zero());
        }
        let els = g.elements();
        for j in 0..els.len() {
            for i in 0..j {
                let s = s_polynomial(&els[i], &els[j]).unwrap();
                prop_assert!(reduce_full(&s, &g).remainder.is_zero());
            }
        }
    }

    #[test]
    fn binomial_monomial_round_trip(coeffs in prop::collection::vec(-50i64..50, 0..7)) {
        let p = NumericalPolynomial::from_binomial_i64(&coeffs);
        prop_assert_eq!(NumericalPolynomial::from_monomial(&p.to_monomial()).unwrap(), p.clone());
        for t in -3i64..8 {
            let via_monomial = p.to_monomial().evaluate(&Rational::from_integer(t.into()));
            prop_assert_eq!(via_monomial, Rational::from_integer(p.evaluate(t)));
        }
    }

    #[test]
    fn differences_match_evaluation(coeffs in prop::collection::vec(-50i64..50, 0..7), t in -5i64..10) {
        let p = NumericalPolynomial::from_binomial_i64(&coeffs);
        prop_assert_eq!(p.forward_difference(1).evaluate(t), p.evaluate(t + 1) - p.evaluate(t));
        prop_assert_eq!(p.backward_difference(1).evaluate(t), p.evaluate(t) - p.evaluate(t - 1));
        let d = p.degree();
        if d >= 0 {
            prop_assert_eq!(p.forward_difference(d as usize), NumericalPolynomial::from_binomial(vec![p.coefficient(d as usize)]));
        }
    }

    #[test]
    fn kolchin_matches_count_past_threshold(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = random_point_set(&mut rng, 5, 4, 5);
        let omega = kolchin_polynomial(&a);
        prop_assert_eq!(&omega, &kolchin_polynomial(&minimal_points(&a)));
        let lo = a.exactness_threshold();
        let table = count_v_table(&a, lo + 10);
        for s in lo..=lo + 10 {
            prop_assert_eq!(omega.evaluate(s as i64), BigInt::from(table[s as usize]));
        }
        for s in 0..lo.min(6) {
            prop_assert_eq!(count_v_points(&a, s), table[s as usize]);
        }
    }

    #[test]
    fn kolchin_count_is_antitone_in_a(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = random_point_set(&mut rng, 4, 4, 4);
        let mut bigger = a.points().to_vec();
        bigger.push((0..a.dim()).map(|_| rng.gen_range(0..=4)).collect());
        let b = PointSet::new(a.dim(), bigger).unwrap();
        for s in 0..8 {
            prop_assert!(count_v_points(&b, s) <= count_v_points(&a, s));
        }
    }
}

#[test]
fn redundant_generator_keeps_leading_invariants() {
    let mut rng = seeded(99);
    for p in [first_example(), second_example(), third_example()] {
        let base = dmod_core::bernstein_polynomial(&p);
        let d = random_weyl(&mut rng, p.n(), 2, 2);
        let ext = dmod_core::bernstein_polynomial(&with_redundant_generator(&p, &d, 1));
        assert_eq!(base.invariants.d, ext.invariants.d);
        assert_eq!(base.invariants.a_d, ext.invariants.a_d);
        assert_eq!(base.invariants.a_2n, ext.invariants.a_2n);
    }
}

#[test]
fn oracles_agree_on_examples() {
    for p in [first_example(), second_example(), third_example()] {
        let report = dmod_core::bernstein_polynomial(&p);
        let table = dmod_core::oracle::verify_report(&report, report.exactness_threshold() + 6);
        assert!(table.is_consistent(), "{:?}", table.mismatches());
        for r in 0..=4 {
            let g = &report.groebner_basis;
            assert_eq!(
                dmod_core::rank_dimension(g, p.n(), p.m(), r),
                dmod_core::count_standard_monomials(g, p.n(), p.m(), r)
            );
        }
    }
}

#[test]
fn literal_threshold_counterexample() {
    let a = PointSet::new(2, vec![vec![5, 0], vec![0, 5]]).unwrap();
    let omega = kolchin_polynomial(&a);
    assert_eq!(omega, NumericalPolynomial::from_binomial_i64(&[25]));
    assert_eq!(a.max_norm(), 5);
    assert_eq!(count_v_points(&a, 5), 19);
    assert_eq!(a.exactness_threshold(), 8);
    assert_eq!(count_v_points(&a, 8), 25);
}
