//! Randomized invariants of the metric engine and the solvers.

mod common;

use common::{connected_graphs, profile_of, property_violations};
use ktmd::edge_list::{parse_edge_list, to_edge_list};
use ktmd::solver::{generators_of_size, TieBreak};
use ktmd::{
    brute_force_dimension, exact_dimension, greedy_generator, is_generator,
    min_distinguishing_number, DistanceMatrix, Graph, SolverConfig, Status, Truncation,
};
use proptest::prelude::*;

fn tt(t: usize) -> Truncation {
    Truncation::new(t).unwrap()
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n)
        .prop_flat_map(|n| {
            (
                Just(n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
                0..n,
            )
        })
        .prop_map(|(n, bits, _)| {
            let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
            let mut i = 0;
            for v in 0..n {
                for u in 0..v {
                    if bits[i] && u + 1 != v {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            let g = Graph::new(n, edges).unwrap();
            // relabel so the spanning path is not always 0-1-...-(n-1)
            let perm: Vec<usize> = (0..n).map(|v| (v * 5 + 1) % n).collect();
            if perm.iter().collect::<std::collections::HashSet<_>>().len() == n {
                Graph::new(n, g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
            } else {
                g
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn profiles_satisfy_the_structural_properties(g in connected_graph(9)) {
        let v = property_violations(&g, &SolverConfig::default());
        prop_assert!(v.is_empty(), "{v:?}");
    }

    #[test]
    fn exact_matches_brute_force(g in connected_graph(8), t in 1usize..5, k in 1usize..5) {
        let dm = DistanceMatrix::new(&g);
        let a = exact_dimension(&dm, tt(t), k, &SolverConfig::default()).unwrap();
        let b = brute_force_dimension(&dm, tt(t), k).unwrap();
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(a.status, b.status);
    }

    #[test]
    fn solver_configurations_agree(g in connected_graph(10), t in 1usize..4, k in 1usize..4) {
        let dm = DistanceMatrix::new(&g);
        let base = exact_dimension(&dm, tt(t), k, &SolverConfig::default()).unwrap();
        for cfg in [
            SolverConfig { threads: 3, ..SolverConfig::default() },
            SolverConfig { forced_pruning: false, ..SolverConfig::default() },
            SolverConfig { tie_break: TieBreak::HighestIndex, ..SolverConfig::default() },
        ] {
            let r = exact_dimension(&dm, tt(t), k, &cfg).unwrap();
            prop_assert_eq!(r.value, base.value);
            if let Some(b) = &r.basis {
                prop_assert!(is_generator(&dm, tt(r.t), k, b).ok);
            }
        }
    }

    #[test]
    fn greedy_is_a_valid_upper_bound(g in connected_graph(10), t in 1usize..4, k in 1usize..4) {
        let dm = DistanceMatrix::new(&g);
        let exact = exact_dimension(&dm, tt(t), k, &SolverConfig::default()).unwrap();
        let greedy = greedy_generator(&dm, tt(t), k).unwrap();
        match (exact.value, greedy.value) {
            (None, None) => prop_assert_eq!(greedy.status, Status::NoGenerator),
            (Some(e), Some(h)) => {
                prop_assert!(h >= e);
                prop_assert!(is_generator(&dm, tt(t), k, greedy.basis.as_ref().unwrap()).ok);
            }
            other => prop_assert!(false, "feasibility disagrees: {other:?}"),
        }
    }

    #[test]
    fn truncation_is_monotone_and_symmetric(g in connected_graph(9), t in 1usize..6) {
        let dm = DistanceMatrix::new(&g);
        let n = g.order();
        for x in 0..n {
            for y in 0..n {
                let a = dm.truncated(tt(t), x, y);
                prop_assert_eq!(a, dm.truncated(tt(t), y, x));
                prop_assert!(a <= dm.truncated(tt(t + 1), x, y));
                prop_assert_eq!(a == 0, x == y);
            }
        }
        let (d_lo, _) = min_distinguishing_number(&dm, tt(t)).unwrap();
        let (d_hi, _) = min_distinguishing_number(&dm, tt(t + 1)).unwrap();
        prop_assert!(d_lo >= 2 && d_lo <= d_hi);
    }

    #[test]
    fn edge_lists_round_trip(g in connected_graph(12)) {
        let text = to_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(to_edge_list(&back), text);
        prop_assert_eq!(back, g.without_labels());
    }
}

#[test]
fn every_connected_graph_up_to_order_six() {
    let cfg = SolverConfig::default();
    for n in 2..=6 {
        for g in connected_graphs(n) {
            let v = property_violations(&g, &cfg);
            assert!(v.is_empty(), "{:?}: {v:?}", g.edges().collect::<Vec<_>>());
        }
    }
}

#[test]
fn generator_counts_are_monotone_in_size() {
    let dm = DistanceMatrix::new(&ktmd::generators::cycle(7).unwrap());
    let counts: Vec<usize> = (0..=7)
        .map(|s| generators_of_size(&dm, tt(2), 2, s).unwrap())
        .collect();
    let first = counts.iter().position(|&c| c > 0).unwrap();
    assert_eq!(first, 4);
    assert_eq!(counts[7], 1);
    assert!(profile_of(&ktmd::generators::cycle(7).unwrap(), 3)
        .chain_violations()
        .is_empty());
}
