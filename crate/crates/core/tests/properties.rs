use hx_core::constructions::{build_starlike_random, msh_spec};
use hx_core::maximality::{
    admits_edge, greedy_maximalize_traced, is_kl_edge_maximal_with, property_a, property_a_with, Method,
};
use hx_core::{kappa_flow, kappa_oracle, Hypergraph};
use itertools::Itertools;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Random hypergraph: `n` vertices, `r`-uniform, each r-subset kept per mask bit.
fn hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (2usize..=3, 3usize..=max_n).prop_flat_map(|(r, n)| {
        let all: Vec<Vec<usize>> = (0..n).combinations(r).collect();
        proptest::collection::vec(any::<bool>(), all.len()).prop_map(move |keep| {
            let edges = all.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| e.clone());
            Hypergraph::build(n, r, edges).unwrap()
        })
    })
}

/// Connectivity of `Y` by brute force over every side, independent of the library.
fn dense_exists(h: &Hypergraph, k: usize, l: usize) -> bool {
    let n = h.n();
    (0u32..1 << n).filter(|y| y.count_ones() as usize >= l.max(2)).any(|y| {
        let inner: Vec<u32> =
            h.edges().iter().map(|e| e.iter().fold(0u32, |m, &v| m | 1 << v)).filter(|&m| m & !y == 0).collect();
        let mut sub = (y - 1) & y;
        while sub != 0 {
            if inner.iter().filter(|&&m| m & sub != 0 && m & !sub & y != 0).count() <= k {
                return false;
            }
            sub = (sub - 1) & y;
        }
        true
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn flow_matches_oracle(h in hypergraph(8)) {
        prop_assert_eq!(kappa_flow(&h), kappa_oracle(&h).unwrap());
    }

    #[test]
    fn property_a_agrees_with_brute_force(h in hypergraph(7), k in 1usize..4, l in 2usize..6) {
        let want = !dense_exists(&h, k, l);
        prop_assert_eq!(property_a_with(&h, k, l, Method::Fast).unwrap().holds, want);
        prop_assert_eq!(property_a_with(&h, k, l, Method::Oracle).unwrap().holds, want);
    }

    #[test]
    fn cut_is_symmetric(h in hypergraph(8), mask in 1u32..255) {
        let n = h.n();
        let side: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let rest: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
        prop_assume!(!side.is_empty() && !rest.is_empty());
        prop_assert_eq!(h.cut_value(&side).unwrap().value, h.cut_value(&rest).unwrap().value);
    }

    #[test]
    fn degrees_sum_to_r_m(h in hypergraph(8)) {
        prop_assert_eq!(h.degree_list().iter().sum::<usize>(), h.r() * h.edge_count());
    }

    #[test]
    fn incremental_check_matches_full(seed in any::<u64>(), n in 4usize..9, r in 2usize..4, k in 1usize..4) {
        let l = 3.max(r);
        prop_assume!(n >= l);
        let h0 = Hypergraph::empty(n, r).unwrap();
        let (_, added) = greedy_maximalize_traced(&h0, k, l, seed).unwrap();
        // replay a prefix and compare the shortcut to a full check on every candidate
        let cut = (seed as usize) % (added.len() + 1);
        let mut h = h0;
        for e in &added[..cut] {
            h = h.with_edge(e).unwrap();
        }
        for e in h.complement_edges().collect::<Vec<_>>() {
            let full = property_a(&h.with_edge(&e).unwrap(), k, l).unwrap().holds;
            prop_assert_eq!(admits_edge(&h, &e, k, l), full);
        }
    }

    #[test]
    fn maximality_paths_agree(seed in any::<u64>(), n in 4usize..9, k in 1usize..4, extra in 0usize..3) {
        let (r, l) = (2, 4);
        let g = greedy_maximalize_traced(&Hypergraph::empty(n, r).unwrap(), k, l, seed).unwrap().0;
        // drop a few edges so that non-maximal inputs are covered as well
        let kept = g.edges().iter().skip(extra).map(|e| e.to_vec());
        let h = Hypergraph::build(n, r, kept).unwrap();
        let fast = is_kl_edge_maximal_with(&h, k, l, Method::Fast).unwrap();
        let oracle = is_kl_edge_maximal_with(&h, k, l, Method::Oracle).unwrap();
        prop_assert_eq!(fast.maximal, oracle.maximal);
        prop_assert_eq!(fast.addable_edge, oracle.addable_edge);
        prop_assert_eq!(extra == 0, fast.maximal);
    }

    #[test]
    fn greedy_keeps_property_a(seed in any::<u64>(), n in 4usize..10) {
        let (k, l, r) = (2, 4, 3);
        let mut h = Hypergraph::empty(n, r).unwrap();
        let (g, added) = greedy_maximalize_traced(&h, k, l, seed).unwrap();
        for e in &added {
            h = h.with_edge(e).unwrap();
            prop_assert!(property_a(&h, k, l).unwrap().holds);
        }
        prop_assert_eq!(h, g);
    }
}

#[test]
fn randomly_attached_msh_is_maximal() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (n, k, l, r) in [(10, 2, 4, 2), (11, 2, 6, 2), (9, 3, 5, 3), (12, 4, 6, 3)] {
        let spec = msh_spec(n, k, l, r).unwrap();
        for _ in 0..5 {
            let h = build_starlike_random(&spec, &mut rng).unwrap();
            let rep = is_kl_edge_maximal_with(&h, k, l, Method::Oracle).unwrap();
            assert!(rep.maximal, "n={n} k={k} l={l} r={r}: {rep:?}");
        }
    }
}
