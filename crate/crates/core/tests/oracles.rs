//! Library results compared with independent brute-force references.

mod common;

use std::collections::HashMap;

use common::{labeled_graph, pairs, PermutationOracle};
use forest_sat::canon::canonical_form;
use forest_sat::enumerate::{count_graphs, enumerate_graphs, EnumFilter};
use forest_sat::forest::{brute_force_contains, contains_linear_forest, LinearForestSpec};
use forest_sat::graph::Graph;
use forest_sat::graph6::{parse_graph6, to_graph6};
use forest_sat::lemmas::{verify_book_fan_classification, verify_degree2_closure, verify_isolated_implies_no_leaf};
use forest_sat::saturation::{is_saturated, is_saturated_brute};

fn spec(s: &str) -> LinearForestSpec {
    s.parse().unwrap()
}

#[test]
fn class_counts_match_permutation_oracle() {
    for n in 0..=6 {
        let oracle = PermutationOracle::new(n);
        assert_eq!(
            count_graphs(n, EnumFilter::all()).unwrap(),
            oracle.classes().len(),
            "order {n}"
        );
    }
}

#[test]
fn enumerated_graphs_hit_every_class_once() {
    for n in 4..=6 {
        let oracle = PermutationOracle::new(n);
        let mut keys: Vec<u64> = enumerate_graphs(n, EnumFilter::all())
            .unwrap()
            .iter()
            .map(|g| oracle.key_of(g))
            .collect();
        keys.sort_unstable();
        let mut expected: Vec<u64> = oracle.classes().iter().map(|g| oracle.key_of(g)).collect();
        expected.sort_unstable();
        assert_eq!(keys, expected, "order {n}");
    }
}

#[test]
fn filtered_enumeration_matches_oracle() {
    let n = 6;
    let oracle = PermutationOracle::new(n);
    let classes = oracle.classes();
    let connected = classes.iter().filter(|g| g.is_connected()).count();
    assert_eq!(count_graphs(n, EnumFilter::all().connected()).unwrap(), connected);
    let sparse = classes.iter().filter(|g| g.size() <= 5 && g.min_degree() >= 1).count();
    assert_eq!(
        count_graphs(n, EnumFilter::all().with_max_edges(5).with_min_degree(1)).unwrap(),
        sparse
    );
}

#[test]
fn canonical_form_separates_classes() {
    for n in 1..=6 {
        let oracle = PermutationOracle::new(n);
        let mut by_form: HashMap<String, u64> = HashMap::new();
        for mask in 0..1u64 << pairs(n).len() {
            let g = labeled_graph(n, mask);
            let key = oracle.key(mask);
            let form = canonical_form(&g).into_string();
            let prev = *by_form.entry(form).or_insert(key);
            assert_eq!(prev, key, "order {n}, mask {mask:b}");
        }
        assert_eq!(by_form.len(), oracle.classes().len());
    }
}

#[test]
fn graph6_round_trip_on_labeled_graphs() {
    for n in 0..=6 {
        for mask in 0..1u64 << pairs(n).len() {
            let g = labeled_graph(n, mask);
            let text = to_graph6(&g);
            let back = parse_graph6(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(to_graph6(&back), text);
        }
    }
}

#[test]
fn containment_matches_brute_force_at_six() {
    let graphs = enumerate_graphs(6, EnumFilter::all()).unwrap();
    for s in ["P4", "P5", "P6", "P3+P2", "2P2", "3P2", "P4+P2", "2P3"] {
        let s = spec(s);
        for g in &graphs {
            assert_eq!(
                contains_linear_forest(g, &s).is_some(),
                brute_force_contains(g, &s).unwrap(),
                "{s} in {}",
                to_graph6(g)
            );
        }
    }
}

#[test]
fn saturation_matches_brute_force() {
    for n in 4..=6 {
        let graphs = enumerate_graphs(n, EnumFilter::all()).unwrap();
        for s in ["2P2", "P3+P2", "P4", "P3"] {
            let s = spec(s);
            for g in &graphs {
                assert_eq!(
                    is_saturated(g, &s).is_saturated(),
                    is_saturated_brute(g, &s).unwrap(),
                    "{s}: {}",
                    to_graph6(g)
                );
            }
        }
    }
}

/// Saturated classes of order `n`, found with the brute-force references.
fn saturated_census(n: usize, s: &LinearForestSpec) -> Vec<Graph> {
    PermutationOracle::new(n)
        .classes()
        .into_iter()
        .filter(|g| is_saturated_brute(g, s).unwrap())
        .collect()
}

#[test]
fn instance_counts_match_census() {
    for s in ["2P2", "P3+P2", "3P2"] {
        let s = spec(s);
        let closure = verify_degree2_closure(&s, 2..=6).unwrap();
        let isolated = verify_isolated_implies_no_leaf(&s, 2..=6).unwrap();
        for (i, n) in (2..=6).enumerate() {
            let census = saturated_census(n, &s);
            let with_deg2 = census.iter().filter(|g| (0..n).any(|v| g.degree(v) == 2)).count();
            let with_isolated = census.iter().filter(|g| (0..n).any(|v| g.degree(v) == 0)).count();
            assert_eq!(closure.cells[i].universe, census.len(), "{s} n={n}");
            assert_eq!(closure.cells[i].instances, with_deg2, "{s} n={n}");
            assert_eq!(isolated.cells[i].instances, with_isolated, "{s} n={n}");
        }
    }
}

#[test]
fn book_fan_census_at_six() {
    let report = verify_book_fan_classification(6..=6).unwrap();
    let qualifying = PermutationOracle::new(6)
        .classes()
        .into_iter()
        .filter(|g| {
            g.is_connected()
                && g.min_degree() >= 2
                && !brute_force_contains(g, &spec("P6")).unwrap()
                && brute_force_contains(g, &spec("P4")).unwrap()
                && (0..6).all(|x| {
                    let nb: Vec<usize> = (0..6).filter(|&y| g.has_edge(x, y)).collect();
                    nb.len() != 2 || g.has_edge(nb[0], nb[1])
                })
        })
        .count();
    assert_eq!(report.instances, qualifying);
    assert!(report.holds());
}
