//! Solver outputs checked against exhaustive enumeration and white-box
//! facts about the representation.

mod common;

use common::{binomial, brute_opt, brute_opt_oracle, submodular_by_marginals, white_box_maximal_cliques};
use proptest::prelude::*;
use xos_core::algorithms::{
    enumerate_maximal_cliques, grow_clique, preprocess, solve_brute_force, solve_enum_small_sets,
    solve_exact_2xos, solve_exact_star, solve_k_minus_1, solve_random_sampling, EnumParams,
    Epsilon, SamplingParams, DEFAULT_BRUTE_CAP,
};
use xos_core::classify::{check_class, materialize, DenseFunction, SetFunctionClass};
use xos_core::generate::{random_star_xos, random_xos};
use xos_core::hardness::{gen_hard_general, gen_hard_kxos, gen_needle, PlantedOptimum};
use xos_core::rng::SeededRng;
use xos_core::{CountingOracle, Subset, Value, ValueOracle, XosRepresentation};

fn rep_strategy(max_n: usize, max_k: usize) -> impl Strategy<Value = XosRepresentation> {
    (1..=max_n, 1..=max_k).prop_flat_map(|(n, k)| {
        prop::collection::vec(prop::collection::vec(-8i64..=8, n), k)
            .prop_map(|rows| XosRepresentation::from_rows(&rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn max_dominates_every_component(rep in rep_strategy(8, 4), mask in any::<u64>()) {
        let x = Subset(mask & rep.ground().full().bits());
        let f = rep.evaluate(x).unwrap();
        let mut attained = false;
        for c in rep.components() {
            let fi = c.evaluate(x).unwrap();
            prop_assert!(f >= fi);
            attained |= f == fi;
        }
        prop_assert!(attained);
        prop_assert_eq!(rep.evaluate(Subset::EMPTY).unwrap(), Value(0));
    }

    #[test]
    fn cliques_cover_the_ground_set(rep in rep_strategy(10, 4)) {
        let union = (0..rep.width())
            .map(|i| rep.clique_of(i).unwrap())
            .fold(Subset::EMPTY, Subset::union);
        prop_assert_eq!(union, rep.ground().full());
    }

    #[test]
    fn dropping_non_positive_elements_never_hurts(rep in rep_strategy(8, 3)) {
        let full = rep.ground().full();
        for v in (0..rep.n()).filter(|&v| rep.singleton(v) <= Value(0)) {
            for x in full.all_subsets().filter(|x| x.contains(v)) {
                prop_assert!(rep.evaluate(x).unwrap() <= rep.evaluate(x.without(v)).unwrap());
            }
        }
    }

    #[test]
    fn exact2_is_exact(rows in prop::collection::vec(prop::collection::vec(-8i64..=8, 9), 2)) {
        let rep = XosRepresentation::from_rows(&rows).unwrap();
        let mut oracle = CountingOracle::new(&rep);
        let pre = preprocess(&mut oracle).unwrap();
        let r = solve_exact_2xos(&mut oracle, &pre).unwrap();
        prop_assert_eq!(r.value.get(), brute_opt(&rep));
        prop_assert!(r.verify(&oracle).unwrap());
        prop_assert!(r.oracle_calls <= 6 * 9 + 10);
    }

    #[test]
    fn kminus1_ratio(rep in rep_strategy(9, 5)) {
        prop_assume!(rep.width() >= 2);
        let mut oracle = CountingOracle::new(&rep);
        let pre = preprocess(&mut oracle).unwrap();
        let r = solve_k_minus_1(&mut oracle, &pre).unwrap();
        let k = rep.width() as i64;
        prop_assert!((k - 1) * r.value.get() >= brute_opt(&rep));
        prop_assert!(r.verify(&oracle).unwrap());
    }

    #[test]
    fn enum_ratio(rep in rep_strategy(9, 4), p in 1u64..4, q in 1u64..6) {
        let eps = Epsilon::new(p, q).unwrap();
        let mut oracle = CountingOracle::new(&rep);
        let pre = preprocess(&mut oracle).unwrap();
        let r = solve_enum_small_sets(&mut oracle, &pre, &EnumParams { epsilon: eps }).unwrap();
        // max(1, εn) · value >= OPT, multiplied through by q
        let n = rep.n() as i64;
        let scale = (p as i64 * n).max(q as i64);
        prop_assert!(scale * r.value.get() >= q as i64 * brute_opt(&rep));
    }

    #[test]
    fn grown_cliques_are_additive_and_true_cliques(rep in rep_strategy(9, 4)) {
        let mut oracle = CountingOracle::new(&rep);
        let pre = preprocess(&mut oracle).unwrap();
        for start in pre.retained {
            let c = grow_clique(&mut oracle, &pre, start, pre.retained).unwrap();
            prop_assert!(c.contains(start));
            let additive = Value::try_sum(c.iter().map(|v| rep.singleton(v))).unwrap();
            prop_assert_eq!(rep.evaluate(c).unwrap(), additive);
            // c equals V_i* ∩ kept for every maximizing component
            for i in rep.maximizer_indices(c).unwrap() {
                prop_assert_eq!(rep.clique_of(i).unwrap().intersection(pre.retained), c);
            }
        }
    }

    #[test]
    fn maximal_clique_enumeration(rep in rep_strategy(8, 4)) {
        let mut oracle = CountingOracle::new(&rep);
        let pre = preprocess(&mut oracle).unwrap();
        let mut found = enumerate_maximal_cliques(&mut oracle, &pre).unwrap();
        for &c in &found {
            let additive = Value::try_sum(c.iter().map(|v| rep.singleton(v))).unwrap();
            prop_assert_eq!(rep.evaluate(c).unwrap(), additive);
        }
        found.sort();
        prop_assert_eq!(found, white_box_maximal_cliques(&rep));
    }

    #[test]
    fn counting_is_exact_and_replays(rep in rep_strategy(8, 3), seed in any::<u64>()) {
        let params = SamplingParams {
            sample_budget_override: Some(5),
            allow_fallback: false,
            ..SamplingParams::new(Epsilon::new(1, 1).unwrap(), seed)
        };
        let run = || {
            let mut oracle = CountingOracle::new(&rep);
            let pre = preprocess(&mut oracle).unwrap();
            let r = solve_random_sampling(&mut oracle, &pre, &params).unwrap();
            (r, oracle.calls())
        };
        let (a, calls_a) = run();
        let (b, _) = run();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.oracle_calls, calls_a);
        let m = params.max_size(a_retained(&rep)).min(a_retained(&rep)) as u64;
        if a_retained(&rep) > 0 {
            prop_assert_eq!(calls_a, rep.n() as u64 + 5 * m);
        }
    }

    #[test]
    fn dense_submodularity_agrees_with_marginals(table in prop::collection::vec(-6i64..=6, 32)) {
        let f = DenseFunction::from_table(5, table.iter().copied().map(Value).collect()).unwrap();
        let verdict = check_class(&f, SetFunctionClass::Submodular).unwrap();
        prop_assert_eq!(verdict.holds, submodular_by_marginals(5, &table));
    }
}

fn a_retained(rep: &XosRepresentation) -> usize {
    (0..rep.n()).filter(|&v| rep.singleton(v) > Value(0)).count()
}

#[test]
fn enum_needle_example() {
    // The needle function is not XOS, so no ratio is promised: every set of
    // size <= 2 scores 0 when t = 3.
    let eps = Epsilon::new(1, 2).unwrap();
    for seed in 0..20 {
        let needle = gen_needle(8, 4, 3, seed).unwrap();
        let mut oracle = CountingOracle::new(&needle);
        let pre = preprocess(&mut oracle).unwrap();
        let r = solve_enum_small_sets(&mut oracle, &pre, &EnumParams { epsilon: eps }).unwrap();
        assert_eq!(r.value, Value(0));
        assert_eq!(brute_opt_oracle(&needle), 1);
    }
}

#[test]
fn star_solver_matches_brute_force() {
    for seed in 0..100 {
        let rep = random_star_xos(9, 3, -8, 8, seed).unwrap();
        let mut oracle = CountingOracle::new(&rep);
        let pre = preprocess(&mut oracle).unwrap();
        let r = solve_exact_star(&mut oracle, &pre).unwrap();
        assert_eq!(r.value.get(), brute_opt(&rep), "seed {seed}");
    }
}

#[test]
fn brute_force_solver_agrees_with_reference() {
    for seed in 0..50 {
        let rep = random_xos(10, 3, -8, 8, seed).unwrap();
        let mut oracle = CountingOracle::new(&rep);
        let r = solve_brute_force(&mut oracle, DEFAULT_BRUTE_CAP).unwrap();
        assert_eq!(r.value.get(), brute_opt(&rep));
        assert_eq!(r.oracle_calls, 1 << 10);
    }
}

#[test]
fn enum_query_count_formula() {
    for seed in 0..30 {
        let rep = random_xos(11, 3, -8, 8, seed).unwrap();
        let mut oracle = CountingOracle::new(&rep);
        let pre = preprocess(&mut oracle).unwrap();
        let params = EnumParams { epsilon: Epsilon::new(1, 2).unwrap() };
        let r = solve_enum_small_sets(&mut oracle, &pre, &params).unwrap();
        let kept = pre.retained.len() as u64;
        let expected: u64 = if kept == 0 { 0 } else { (0..=2).map(|i| binomial(kept, i)).sum() };
        assert_eq!(r.oracle_calls, 11 + expected);
    }
}

#[test]
fn planted_optima_match_brute_force() {
    for seed in 0..10 {
        for (n, tau) in [(8, 2), (10, 3), (12, 1), (16, 5)] {
            for remark in [false, true] {
                let inst = gen_hard_general(n, tau, seed, remark).unwrap();
                let (set, value) = inst.planted_optimum();
                assert_eq!(inst.value(set).unwrap(), value);
                assert_eq!(brute_opt_oracle(&inst), value.get());
            }
        }
        for (n_hat, s, t) in [(8, 4, 2), (12, 5, 5), (16, 3, 1)] {
            let inst = gen_needle(n_hat, s, t, seed).unwrap();
            assert_eq!(brute_opt_oracle(&inst), inst.planted_optimum().1.get());
        }
        for (k, nt, a) in [(3, 3, 1), (3, 3, 2), (4, 2, 1), (3, 2, 1)] {
            let inst = gen_hard_kxos(k, nt, a, seed).unwrap();
            let (set, value) = inst.planted_optimum();
            assert_eq!(inst.value(set).unwrap(), value);
            assert_eq!(brute_opt_oracle(&inst), value.get(), "k={k} nt={nt} a={a}");
        }
    }
}

#[test]
fn kxos_closed_form_matches_materialized_exhaustively() {
    for (k, nt, a) in [(3, 3, 1), (3, 3, 2), (4, 2, 1)] {
        for seed in 0..3 {
            let inst = gen_hard_kxos(k, nt, a, seed).unwrap();
            assert!(inst.n() <= 14);
            let rep = inst.to_representation();
            for x in inst.ground().full().all_subsets() {
                assert_eq!(inst.value(x).unwrap(), rep.evaluate(x).unwrap());
            }
        }
    }
}

#[test]
fn planted_component_sets_hide_in_a_later_block() {
    // k = 3, ñ = 3, γ = 1/3: any nonempty X with f(X) = f_k(X) has
    // X ∩ V_2 ⊆ S_2 and |X ∩ V_2| >= γñ/(k-2) = 1.
    for seed in 0..5 {
        let inst = gen_hard_kxos(3, 3, 1, seed).unwrap();
        let (v2, s2) = (inst.blocks()[1], inst.planted_sets()[1]);
        for x in inst.ground().full().all_subsets().skip(1) {
            if inst.value(x).unwrap() == inst.component_value(2, x).unwrap() {
                let part = x.intersection(v2);
                assert!(part.is_subset_of(s2) && !part.is_empty(), "{x}");
            }
        }
    }
}

#[test]
fn blind_probing_rarely_finds_the_needle() {
    // P = 10 size-6 queries against (24, 12, 6): bound 10/64.
    let (n_hat, s, t, queries, seeds) = (24usize, 12usize, 6usize, 10u64, 2000u64);
    let mut hits = 0;
    for seed in 0..seeds {
        let inst = gen_needle(n_hat, s, t, seed).unwrap();
        let mut rng = SeededRng::new(seed ^ 0x5eed);
        hits += (0..queries)
            .any(|_| inst.value(rng.subset_of_size(inst.ground().full(), t)).unwrap() == Value(1))
            as u64;
    }
    let freq = hits as f64 / seeds as f64;
    let bound = xos_core::hardness::probe_hit_bound(queries, n_hat, s, t);
    let slack = 3.0 * (bound.min(1.0) * (1.0 - bound.min(1.0)) / seeds as f64).sqrt();
    assert!(freq <= bound + slack, "freq {freq} bound {bound}");
    assert!(freq > 0.0);
}

#[test]
fn classifier_hierarchy_spot_checks() {
    for seed in 0..40 {
        let additive = random_xos(7, 1, 0, 9, seed).unwrap();
        let f = materialize(&additive).unwrap();
        for class in SetFunctionClass::ALL {
            assert!(check_class(&f, class).unwrap().holds);
        }
        let xos = random_xos(6, 3, -5, 5, seed).unwrap();
        let g = materialize(&xos).unwrap();
        assert!(check_class(&g, SetFunctionClass::Normalized).unwrap().holds);
        let nonneg = random_xos(6, 3, 0, 5, seed).unwrap();
        let h = materialize(&nonneg).unwrap();
        assert!(check_class(&h, SetFunctionClass::Monotone).unwrap().holds);
        assert!(check_class(&h, SetFunctionClass::Subadditive).unwrap().holds);
    }
    let hard = gen_hard_general(8, 2, 1, false).unwrap();
    let f = materialize(&hard).unwrap();
    assert!(check_class(&f, SetFunctionClass::Normalized).unwrap().holds);
    assert!(!check_class(&f, SetFunctionClass::Monotone).unwrap().holds);
}
