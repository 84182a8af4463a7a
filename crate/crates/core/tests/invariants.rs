use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use fockvir::rep::{
    decomposition_report, h_eigenbasis, hw_weight, level_cell, singular_level,
    singular_vector_search, trace_character, DecompositionCase, SectorSpec, Selector,
};
use fockvir::series::{product_form, sum_form};
use fockvir::{vacuum_like, ModeEngine, OperatorSpec, ProductForm, State, SumForm, Surd};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn small_surd() -> impl Strategy<Value = Surd> {
    (
        -6i64..=6,
        1i64..=5,
        -4i64..=4,
        prop::sample::select(vec![1u64, 2, 3, 5]),
    )
        .prop_map(|(p, q, r, d)| Surd::new(rat(p, q), rat(r, 4), d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn highest_weight_vectors(lambda in small_surd(), b_rat in -8i64..=8, n in -3i64..=3) {
        // keep b in lambda's field
        let b = Surd::from_rational(rat(b_rat, 3)).try_add(&lambda.scale(&rat(1, 2))).unwrap();
        let engine = ModeEngine::new();
        let v = State::basis(vacuum_like(n));
        for j in 1..=3 {
            prop_assert!(engine.apply(&OperatorSpec::vir_lambda(j, &lambda, &b), &v).unwrap().is_zero());
        }
        let image = engine.apply(&OperatorSpec::vir_lambda(0, &lambda, &b), &v).unwrap();
        prop_assert_eq!(image, v.try_scale(&hw_weight(&lambda, &b, n).unwrap()).unwrap());
    }

    #[test]
    fn zero_mode_on_heisenberg_cells(lambda in small_surd(), n in -2i64..=2, level in 0u64..=4) {
        let b = lambda.scale(&rat(-1, 3));
        let engine = ModeEngine::new();
        let expected = hw_weight(&lambda, &b, n).unwrap().try_add(&Surd::from_integer(level as i64)).unwrap();
        for v in h_eigenbasis(&engine, n, level).unwrap() {
            let image = engine.apply(&OperatorSpec::vir_lambda(0, &lambda, &b), &v).unwrap();
            prop_assert_eq!(image, v.try_scale(&expected).unwrap());
        }
    }

    #[test]
    fn kernels_are_annihilated(lambda in small_surd(), n in -1i64..=1, level in 1u64..=4) {
        let b = lambda.scale(&rat(1, 2));
        let engine = ModeEngine::new();
        for v in singular_vector_search(&engine, &lambda, &b, n, level, 3).unwrap() {
            for j in 1..=5 {
                prop_assert!(engine.apply(&OperatorSpec::vir_lambda(j, &lambda, &b), &v).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn full_trace_matches_both_forms(q_order in 4i64..=36) {
        let engine = ModeEngine::new();
        let spec = SectorSpec::new(Selector::Full, OperatorSpec::VirHalf(0)).with_charge_variable();
        let trace = trace_character(&engine, &spec, q_order, 6).unwrap();
        prop_assert_eq!(&trace, &product_form(ProductForm::Jac1TwoVariable, q_order, 6));
        prop_assert_eq!(&trace, &sum_form(SumForm::Jac2TwoVariable, q_order, 6));
    }
}

#[test]
fn only_the_degenerate_sector_has_singular_vectors() {
    let engine = ModeEngine::new();
    let half = Surd::ratio(1, 2);
    for (n1, m) in [(0i64, 1i64), (1, -1), (-2, 2)] {
        let b = Surd::from_integer(n1)
            .try_add(&Surd::sqrt(2).scale(&rat(m, 2)))
            .unwrap();
        for n in n1 - 2..=n1 + 2 {
            for level in 1..=4u64 {
                let dim = singular_vector_search(&engine, &half, &b, n, level, 4)
                    .unwrap()
                    .len();
                let expected =
                    n == n1 && (0.max(-m)..=4).any(|k| singular_level(m, k) == level as i64);
                assert_eq!(
                    dim,
                    usize::from(expected),
                    "n1 = {n1}, m = {m}, n = {n}, level {level}"
                );
            }
        }
    }
}

#[test]
fn cell_dimensions_are_partition_numbers() {
    for n in -3i64..=3 {
        let dims: Vec<usize> = (0..=7).map(|l| level_cell(n, l).len()).collect();
        assert_eq!(dims, vec![1, 1, 2, 3, 5, 7, 11, 15]);
    }
}

#[test]
fn case_three_report() {
    let engine = ModeEngine::new();
    let b = Surd::from_integer(-1)
        .try_add(&Surd::sqrt(2).scale(&rat(-1, 2)))
        .unwrap();
    let report = decomposition_report(&engine, DecompositionCase::III, &b, 32, 3).unwrap();
    assert!(report.verdict);
    assert_eq!(report.reducible_charge, Some(-1));
    let again = decomposition_report(&engine, DecompositionCase::III, &b, 32, 3).unwrap();
    assert_eq!(
        serde_json::to_string(&report).unwrap(),
        serde_json::to_string(&again).unwrap()
    );
}
