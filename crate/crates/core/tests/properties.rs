use proptest::prelude::*;

use specgraph::domination::{gamma, is_dominating_set};
use specgraph::families::{cycle, path};
use specgraph::spectral::{check_interlacing, q_min, q_spectrum, rayleigh, VertexVector};
use specgraph::{canonical_form, graph6, Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| {
            (u + 1..n)
                .filter(move |&v| g.has_edge(u, v))
                .map(move |v| (u, v))
        })
        .collect()
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let moved: Vec<_> = edges(g)
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::from_edges(g.order(), &moved).unwrap()
}

// Smallest dominating subset by exhaustive size-ordered search.
fn brute_gamma(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&mask| is_dominating_set(g, VertexSet::from_bits(mask)))
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trips(g in graph_strategy(20)) {
        let text = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(
        (g, perm) in graph_strategy(9).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn spectrum_trace_and_sign(g in graph_strategy(10)) {
        let spec = q_spectrum(&g).unwrap();
        let trace: f64 = spec.iter().sum();
        prop_assert!((trace - 2.0 * g.size() as f64).abs() < 1e-8);
        prop_assert!(spec.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(*spec.last().unwrap() >= -1e-9);
        let r = q_min(&g).unwrap();
        prop_assert!((r.q_min - spec.last().unwrap()).abs() < 1e-8);
        prop_assert!(r.residual <= 1e-8);
        prop_assert!(r.q_min >= 0.0);
    }

    #[test]
    fn rayleigh_quotient_bounds_qmin(
        g in graph_strategy(8),
        raw in proptest::collection::vec(-1.0f64..1.0, 8),
    ) {
        let x: Vec<f64> = raw[..g.order()].to_vec();
        prop_assume!(x.iter().any(|v| v.abs() > 1e-3));
        let q = q_min(&g).unwrap().q_min;
        let rq = rayleigh(&g, &VertexVector::new(x).normalized()).unwrap();
        prop_assert!(rq >= q - 1e-9, "{} < {}", rq, q);
    }

    #[test]
    fn connected_qmin_zero_iff_bipartite(g in graph_strategy(9)) {
        prop_assume!(g.is_connected());
        let q = q_min(&g).unwrap().q_min;
        prop_assert_eq!(q.abs() < 1e-8, g.is_bipartite());
    }

    #[test]
    fn edge_deletion_interlaces(g in graph_strategy(8), pick in any::<prop::sample::Index>()) {
        let e = edges(&g);
        prop_assume!(!e.is_empty());
        prop_assert!(check_interlacing(&g, e[pick.index(e.len())]).unwrap());
    }

    #[test]
    fn domination_matches_subset_search(g in graph_strategy(9)) {
        prop_assert_eq!(gamma(&g), brute_gamma(&g));
    }

    #[test]
    fn relabelling_keeps_invariants(
        (g, perm) in graph_strategy(8).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(gamma(&g), gamma(&h));
        let (a, b) = (q_min(&g).unwrap().q_min, q_min(&h).unwrap().q_min);
        prop_assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn solver_is_deterministic(g in graph_strategy(10)) {
        let a = q_min(&g).unwrap();
        let b = q_min(&g).unwrap();
        prop_assert_eq!(a.q_min.to_bits(), b.q_min.to_bits());
        prop_assert_eq!(a.eigenvector.values(), b.eigenvector.values());
    }

    #[test]
    fn paths_and_cycles_need_a_third(n in 3usize..40) {
        prop_assert_eq!(gamma(&path(n).unwrap().graph), n.div_ceil(3));
        prop_assert_eq!(gamma(&cycle(n).unwrap().graph), n.div_ceil(3));
    }
}
