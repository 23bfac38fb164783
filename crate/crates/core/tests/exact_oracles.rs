mod common;

use common::*;
use partial_vc::exact::{
    min_distinguishing_transversal, solve_max_partial_vc, solve_partial_vc_decision, vc_dimension, SearchConfig,
};
use partial_vc::{Error, Hypergraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn max_matches_brute_force(h in arb_hypergraph(10, 16)) {
        for k in 0..=h.n() {
            let r = solve_max_partial_vc(&h, k).unwrap();
            prop_assert_eq!(r.value, brute_max(&h, k), "k={}", k);
            prop_assert_eq!(r.witness.len(), k);
            prop_assert_eq!(h.class_count(&r.witness), r.value);
        }
    }

    #[test]
    fn decision_iff_max(h in arb_hypergraph(9, 14)) {
        for k in 0..=h.n() {
            let best = solve_max_partial_vc(&h, k).unwrap().value;
            for ell in 0..=h.m() + 1 {
                let d = solve_partial_vc_decision(&h, k, ell).unwrap();
                prop_assert_eq!(d.decided, Some(best >= ell), "k={} ell={}", k, ell);
                if best >= ell {
                    prop_assert!(d.witness.len() == k && h.class_count(&d.witness) >= ell);
                }
            }
        }
    }

    #[test]
    fn vc_dimension_from_max(h in arb_hypergraph(10, 20)) {
        let r = vc_dimension(&h).unwrap();
        let via_max = (0..=h.n())
            .filter(|&k| solve_max_partial_vc(&h, k).unwrap().value == 1usize << k)
            .max()
            .unwrap();
        prop_assert_eq!(r.value, via_max);
        prop_assert_eq!(r.value, brute_vcdim(&h));
        prop_assert!(h.is_shattered(&r.witness) && r.witness.len() == r.value);
    }

    #[test]
    fn transversal_from_max(h in arb_hypergraph(9, 12)) {
        let core = h.remove_twins().hypergraph;
        let r = min_distinguishing_transversal(&core).unwrap();
        let via_max = (0..=core.n())
            .find(|&k| solve_max_partial_vc(&core, k).unwrap().value == core.m())
            .unwrap();
        prop_assert_eq!(r.value, via_max);
        prop_assert_eq!(r.value, brute_dt(&core));
        prop_assert_eq!(core.class_count(&r.witness), core.m());
    }

    #[test]
    fn results_are_independent_of_ceiling_when_within_it(h in arb_hypergraph(8, 10), k in 0usize..5) {
        let k = k.min(h.n());
        let small = SearchConfig::with_ceiling(1 << 20).max_partial_vc(&h, k).unwrap();
        let big = SearchConfig::with_ceiling(u64::MAX).max_partial_vc(&h, k).unwrap();
        prop_assert_eq!(small.witness, big.witness);
    }
}

#[test]
fn sauer_cross_check() {
    use partial_vc::approx::sauer_threshold;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
    for _ in 0..100 {
        let n = rng.gen_range(2..=10);
        let m = rng.gen_range(1..=80);
        let masks: Vec<u64> = (0..m).map(|_| rng.gen_range(0..1u64 << n)).collect();
        let h = hypergraph_from_masks(n, &masks);
        let d = (0..=n)
            .filter(|&d| h.distinct_edge_count() as u128 > sauer_threshold(n, d))
            .max()
            .unwrap_or(0);
        assert!(vc_dimension(&h).unwrap().value >= d);
    }
}

#[test]
fn path_pair() {
    let p3 = Hypergraph::from_one_based(3, &[vec![1, 2], vec![1, 2, 3], vec![2, 3]]).unwrap();
    let p2 = Hypergraph::from_one_based(2, &[vec![1, 2], vec![1, 2]]).unwrap();
    assert_eq!(solve_partial_vc_decision(&p3, 1, 2).unwrap().decided, Some(true));
    assert_eq!(solve_partial_vc_decision(&p2, 1, 2).unwrap().decided, Some(false));
}

#[test]
fn tiny_ceiling_is_a_capacity_error() {
    let masks: Vec<u64> = (0..40).map(|i| (i * 2654435761u64) & 0xffff).collect();
    let h = hypergraph_from_masks(16, &masks);
    let err = SearchConfig::with_ceiling(10).max_partial_vc(&h, 6).unwrap_err();
    assert!(matches!(err, Error::Capacity(_)), "{err}");
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn bad_parameters_are_input_errors() {
    let h = Hypergraph::from_one_based(2, &[vec![1]]).unwrap();
    assert!(matches!(solve_max_partial_vc(&h, 3), Err(Error::Input(_))));
    let twins = Hypergraph::from_one_based(2, &[vec![1], vec![1]]).unwrap();
    assert!(matches!(min_distinguishing_transversal(&twins), Err(Error::Input(_))));
}

#[test]
fn edgeless_vc_dimension_is_zero() {
    let h = Hypergraph::new(4, vec![]).unwrap();
    let r = vc_dimension(&h).unwrap();
    assert_eq!(r.value, 0);
    assert!(r.witness.is_empty());
}
