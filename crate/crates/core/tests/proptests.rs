//! Property tests for the statistic and codec invariants.

use graph_dispersion::dispersion::{
    ce_product, cv_squared, ksum_brute_force, ksum_l1, ksum_l2sq,
};
use graph_dispersion::graph::DegreeMultiset;
use graph_dispersion::spectral::principal_eigenpair_default;
use graph_dispersion::{graph6, Graph};
use proptest::prelude::*;

proptest! {
    #[test]
    fn handshake_on_arbitrary_graphs(
        n in 1usize..20,
        pairs in prop::collection::vec((0usize..20, 0usize..20), 0..40),
    ) {
        let edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(u, v)| u != v && u < n && v < n)
            .collect();
        let g = Graph::build(n, &edges).unwrap();
        let degree_sum: usize = (0..n).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn cv_squared_is_scale_invariant(
        xs in prop::collection::vec(1e-3f64..1e3, 1..40),
        scale in 1e-3f64..1e3,
    ) {
        let scaled: Vec<f64> = xs.iter().map(|v| v * scale).collect();
        let a = cv_squared(&xs).unwrap();
        let b = cv_squared(&scaled).unwrap();
        prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
    }

    #[test]
    fn cv_squared_bounded_by_extreme_ratio(
        xs in prop::collection::vec(1e-3f64..1e3, 1..40),
    ) {
        let c = cv_squared(&xs).unwrap();
        let max = xs.iter().cloned().fold(f64::MIN, f64::max);
        let min = xs.iter().cloned().fold(f64::MAX, f64::min);
        let bound = (max / min) * (max / min) - 1.0;
        prop_assert!(c <= bound + 1e-9 * (1.0 + bound));
    }

    #[test]
    fn cv_squared_matches_norm_formula(
        xs in prop::collection::vec(1e-2f64..1e2, 1..30),
    ) {
        let n = xs.len() as f64;
        let l1: f64 = xs.iter().sum();
        let l2: f64 = xs.iter().map(|v| v * v).sum();
        let by_norms = n * l2 / (l1 * l1) - 1.0;
        let c = cv_squared(&xs).unwrap();
        prop_assert!((c - by_norms).abs() <= 1e-10 * (1.0 + c.abs()));
    }

    #[test]
    fn graph6_round_trip(
        n in 1usize..30,
        pairs in prop::collection::vec((0usize..30, 0usize..30), 0..80),
    ) {
        let edges: Vec<(usize, usize)> = pairs
            .into_iter()
            .filter(|&(u, v)| u != v && u < n && v < n)
            .collect();
        let g = Graph::build(n, &edges).unwrap();
        let encoded = graph6::encode(&g).unwrap();
        prop_assert_eq!(graph6::decode(&encoded).unwrap(), g);
    }

    #[test]
    fn ksum_closed_forms_match_enumeration(
        values in prop::collection::vec(1u64..=5, 1..=4),
        k in 1u32..=4,
    ) {
        let a = DegreeMultiset::from_values(values.into_iter());
        let (l1, l2) = ksum_brute_force(&a, k);
        prop_assert_eq!(ksum_l1(&a, k), l1);
        prop_assert_eq!(ksum_l2sq(&a, k), l2);
    }

    #[test]
    fn product_eigenvalue_adds_and_ce_composes(
        na in 2usize..7,
        nb in 2usize..7,
        seed in any::<u64>(),
    ) {
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        // Random connected graph: spanning path in shuffled order plus
        // coin-flip extras.
        let mut random_connected = |n: usize| {
            let mut order: Vec<usize> = (0..n).collect();
            for i in (1..n).rev() {
                order.swap(i, (next() % (i as u64 + 1)) as usize);
            }
            let mut edges: Vec<(usize, usize)> =
                order.windows(2).map(|w| (w[0], w[1])).collect();
            for u in 0..n {
                for v in u + 1..n {
                    if next().is_multiple_of(3) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::build(n, &edges).unwrap()
        };
        let a = random_connected(na);
        let b = random_connected(nb);
        let p = a.cartesian_product(&b);
        let ea = principal_eigenpair_default(&a).unwrap();
        let eb = principal_eigenpair_default(&b).unwrap();
        let ep = principal_eigenpair_default(&p).unwrap();
        prop_assert!((ea.lambda + eb.lambda - ep.lambda).abs() <= 1e-9);
        let law = ce_product(cv_squared(&ea.x).unwrap(), cv_squared(&eb.x).unwrap());
        prop_assert!((cv_squared(&ep.x).unwrap() - law).abs() <= 1e-9);
    }

    #[test]
    fn product_degree_law(
        na in 2usize..6,
        nb in 2usize..6,
        seed in any::<u64>(),
    ) {
        let mut state = seed | 1;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let random_graph = |n: usize, next: &mut dyn FnMut() -> u64| {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if next().is_multiple_of(2) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::build(n, &edges).unwrap()
        };
        let a = random_graph(na, &mut next);
        let b = random_graph(nb, &mut next);
        let p = a.cartesian_product(&b);
        for i in 0..na {
            for j in 0..nb {
                prop_assert_eq!(p.degree(i * nb + j), a.degree(i) + b.degree(j));
            }
        }
    }
}
