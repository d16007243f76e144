use proptest::prelude::*;

use forest_sat::canon::{canonical_form, canonical_labeling};
use forest_sat::forest::{brute_force_contains, contains_linear_forest, LinearForestSpec};
use forest_sat::graph::Graph;
use forest_sat::graph6::{parse_graph6, to_graph6};
use forest_sat::matching::{matching_number, max_matching, verify_berge_tutte};
use forest_sat::saturation::{is_saturated, is_saturated_brute};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn graph_with_perm(max_order: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_order).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn small_spec() -> impl Strategy<Value = LinearForestSpec> {
    prop_oneof![
        Just("2P2"),
        Just("3P2"),
        Just("P3"),
        Just("P4"),
        Just("P5"),
        Just("P3+P2"),
        Just("P4+P2"),
        Just("P5+P2"),
        Just("2P3"),
    ]
    .prop_map(|s| s.parse().unwrap())
}

proptest! {
    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_with_perm(8)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        let lab = canonical_labeling(&h);
        prop_assert_eq!(h.permuted(&lab.relabel), lab.graph);
        for gamma in &lab.automorphisms {
            prop_assert_eq!(&h.permuted(gamma), &h);
        }
    }

    #[test]
    fn degree_sum_is_twice_the_size(g in graph(20)) {
        let total: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.size());
    }

    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let text = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn containment_is_monotone(g in graph(8), s in small_spec(), pick in any::<prop::sample::Index>()) {
        let non_edges = g.complement_edges();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[pick.index(non_edges.len())];
        if contains_linear_forest(&g, &s).is_some() {
            prop_assert!(contains_linear_forest(&g.with_edge(u, v), &s).is_some());
        }
    }

    #[test]
    fn matching_case_is_the_matching_number(g in graph(12), t in 1usize..=5) {
        let s = LinearForestSpec::matching(t).unwrap();
        prop_assert_eq!(contains_linear_forest(&g, &s).is_some(), matching_number(&g) >= t);
    }

    #[test]
    fn witnesses_are_genuine(g in graph(10), s in small_spec()) {
        match contains_linear_forest(&g, &s) {
            Some(e) => prop_assert!(e.is_valid_in(&g, &s)),
            None => prop_assert!(!brute_force_contains(&g, &s).unwrap()),
        }
    }

    #[test]
    fn saturation_agrees_with_brute_force(g in graph(7), s in small_spec()) {
        prop_assert_eq!(is_saturated(&g, &s).is_saturated(), is_saturated_brute(&g, &s).unwrap());
    }

    #[test]
    fn matchings_are_valid_and_tight(g in graph(14)) {
        let m = max_matching(&g);
        prop_assert!(m.is_valid_in(&g));
        prop_assert!(verify_berge_tutte(&g).unwrap());
    }
}
