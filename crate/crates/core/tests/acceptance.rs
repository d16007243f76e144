//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or runs over its time budget.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{labeled_graph, pairs, PermutationOracle};
use forest_sat::canon::{canonical_form, CanonicalForm};
use forest_sat::constructions::*;
use forest_sat::enumerate::{count_graphs, enumerate_graphs, with_jobs, EnumFilter};
use forest_sat::forest::{brute_force_contains, contains_linear_forest, contains_path, LinearForestSpec};
use forest_sat::graph::Graph;
use forest_sat::graph6::{parse_graph6, to_graph6};
use forest_sat::lemmas::*;
use forest_sat::matching::verify_berge_tutte;
use forest_sat::saturation::*;

type Outcome = Result<String, String>;

fn spec(s: &str) -> LinearForestSpec {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn forms(graphs: &[Graph]) -> BTreeSet<CanonicalForm> {
    graphs.iter().map(canonical_form).collect()
}

fn search(n: usize, s: &str) -> SearchReport {
    min_sat_search(n, &spec(s), SearchOptions::default(), CandidateSource::Enumeration).unwrap()
}

fn plus_isolated(g: Graph, n: usize) -> Graph {
    let k = n - g.order();
    g.disjoint_union(&empty(k).unwrap()).unwrap()
}

fn min_saturated_small_orders() -> Outcome {
    let mut cases: Vec<(usize, &str, usize, Vec<Graph>)> = vec![(
        4,
        "2P2",
        3,
        vec![plus_isolated(complete(3).unwrap(), 4), star(4).unwrap()],
    )];
    for n in 5..=8 {
        cases.push((n, "2P2", 3, vec![plus_isolated(complete(3).unwrap(), n)]));
    }
    for n in 8..=9 {
        let two_triangles = complete(3).unwrap().copies(2).unwrap();
        cases.push((n, "3P2", 6, vec![plus_isolated(two_triangles, n)]));
    }
    for (n, s, min, expected) in cases {
        let r = search(n, s);
        ensure(r.min_edges == Some(min), || format!("n={n} {s}: min {:?}, expected {min}", r.min_edges))?;
        let got: BTreeSet<CanonicalForm> = r.extremal.iter().map(|e| e.graph6.clone()).collect();
        ensure(got == forms(&expected), || format!("n={n} {s}: extremal {}", r.summary()))?;
    }
    Ok("n=4 gives {K3+K1, S4}; n=5..8 give K3 plus isolated; 3P2 at n=8,9 gives 2K3 plus isolated".into())
}

fn berge_tutte() -> Outcome {
    let order7 = enumerate_graphs(7, EnumFilter::all()).unwrap();
    ensure(order7.len() == 1044, || format!("{} graphs of order 7", order7.len()))?;
    for g in &order7 {
        ensure(verify_berge_tutte(g).unwrap(), || format!("fails on {}", to_graph6(g)))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=16);
        let p: f64 = rng.gen();
        let mut g = Graph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        ensure(verify_berge_tutte(&g).unwrap(), || format!("fails on {}", to_graph6(&g)))?;
    }
    Ok("1044 graphs of order 7 and 10000 random graphs of order <= 16".into())
}

fn book_fan() -> Outcome {
    let report = verify_book_fan_classification(6..=9).unwrap();
    ensure(report.holds(), || format!("{} violations", report.violations.len()))?;
    let expected: [&[&str]; 4] = [&["B4"], &["B5", "F3"], &["B6"], &["B7", "F4"]];
    for (cell, want) in report.cells.iter().zip(expected) {
        ensure(cell.qualifying == want, || format!("n={}: {:?}", cell.n, cell.qualifying))?;
    }
    Ok("qualifying sets {B4}, {B5,F3}, {B6}, {B7,F4}".into())
}

fn formula_grid() -> Outcome {
    let mut checked = 0;
    for t in 1..=4 {
        let lo = sat_formula_min_order(t);
        let s = LinearForestSpec::path_plus_matching(6, t).unwrap();
        for n in lo..=lo + 14 {
            let ext = p6_extremal(n, t).unwrap();
            ensure(is_saturated(&ext, &s).is_saturated() && ext.size() == 3 * t + 18, || {
                format!("p6_extremal({n},{t})")
            })?;
            let mut sizes = vec![ext.size()];
            if t <= g_star_max_t(n) {
                let gs = g_star(n).unwrap();
                ensure(is_saturated(&gs, &s).is_saturated() && gs.size() == n - n / 10, || {
                    format!("g_star({n}) for t={t}")
                })?;
                sizes.push(gs.size());
            }
            let formula = sat_formula(n, t).unwrap();
            let best = *sizes.iter().min().unwrap();
            ensure(best == formula, || format!("n={n} t={t}: constructions give {best}, formula {formula}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, t) pairs"))
}

fn g_star_sizes() -> Outcome {
    for n in 10..=40 {
        let g = g_star(n).unwrap();
        ensure(g.size() == n - n / 10, || format!("g_star({n}) has {} edges", g.size()))?;
        ensure(g.isolated_count() == 0, || format!("g_star({n}) has isolated vertices"))?;
        ensure(contains_path(&g, 6).is_none(), || format!("g_star({n}) contains P6"))?;
    }
    Ok("n = 10..40".into())
}

fn tstar_is_t() -> Outcome {
    ensure(
        canonical_form(&tree_tstar(10).unwrap()) == canonical_form(&tree_t()),
        || "canonical forms differ".into(),
    )?;
    Ok(format!("canonical form {}", canonical_form(&tree_t())))
}

fn containment_vs_brute() -> Outcome {
    let specs = ["P4", "P5", "P6", "P6+P2", "P5+P2", "P3+P2", "2P2", "3P2"];
    let mut pairs_checked = 0;
    for n in 0..=7 {
        for g in enumerate_graphs(n, EnumFilter::all()).unwrap() {
            for s in specs {
                let s = spec(s);
                let fast = contains_linear_forest(&g, &s).is_some();
                let slow = brute_force_contains(&g, &s).unwrap();
                ensure(fast == slow, || format!("{s} in {}: fast {fast}, brute {slow}", to_graph6(&g)))?;
                pairs_checked += 1;
            }
        }
    }
    Ok(format!("{pairs_checked} (graph, forest) pairs"))
}

fn lemma_reports() -> Outcome {
    let p6p2 = spec("P6+P2");
    let reports = [
        verify_degree2_closure(&p6p2, 9..=10).unwrap(),
        verify_isolated_implies_no_leaf(&p6p2, 9..=10).unwrap(),
        verify_two_isolated_shape(1, 9..=10).unwrap(),
    ];
    let mut parts = Vec::new();
    for r in &reports {
        ensure(r.holds(), || format!("{}: {:?}", r.lemma, r.violations))?;
        ensure(!r.universe_empty, || format!("{}: nothing to check", r.lemma))?;
        parts.push(format!("{} {} instances", r.lemma, r.instances));
    }
    Ok(format!(
        "{}; exhaustive lower bound above order 10 not reproducible, these checks stand in",
        parts.join(", ")
    ))
}

fn graph6_and_counts() -> Outcome {
    let mut total = 0usize;
    for n in 0..=7 {
        for mask in 0..1u64 << pairs(n).len() {
            let g = labeled_graph(n, mask);
            let text = to_graph6(&g);
            let back = parse_graph6(&text).map_err(|e| e.to_string())?;
            ensure(back == g && to_graph6(&back) == text, || format!("round trip of {text}"))?;
            total += 1;
        }
    }
    for (n, want) in [(4, 11), (5, 34), (6, 156)] {
        let got = count_graphs(n, EnumFilter::all()).unwrap();
        let oracle = PermutationOracle::new(n).classes().len();
        ensure(got == want && oracle == want, || format!("n={n}: enumerated {got}, oracle {oracle}"))?;
    }
    Ok(format!("{total} labelled graphs round-tripped; counts 11, 34, 156"))
}

fn outputs(jobs: usize) -> Vec<String> {
    with_jobs(jobs, || {
        let mut out = Vec::new();
        for (n, s) in [(4, "2P2"), (8, "3P2"), (9, "3P2")] {
            let r = search(n, s);
            out.push(r.to_text());
            out.push(serde_json::to_string(&r).unwrap());
        }
        let config = VerifyConfig::default();
        for (lemma, range) in [
            (Lemma::BookFan, 6..=9),
            (Lemma::TwoIsolatedShape(1), 9..=10),
            (Lemma::Degree2Closure(spec("P6+P2")), 8..=9),
        ] {
            let r = verify(&lemma, range, &config).unwrap();
            out.push(r.to_text());
            out.push(serde_json::to_string(&r).unwrap());
        }
        out
    })
}

fn determinism() -> Outcome {
    let one = outputs(1);
    let eight = outputs(8);
    ensure(one == eight, || "outputs differ between 1 and 8 workers".into())?;
    Ok(format!("{} outputs byte-identical", one.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 10] = [
        (1, "minimum saturated graphs at small orders", 300, min_saturated_small_orders),
        (2, "Berge-Tutte formula", 120, berge_tutte),
        (3, "book and fan classification", 600, book_fan),
        (4, "constructions meet the saturation formula", 600, formula_grid),
        (5, "g_star edge counts", 60, g_star_sizes),
        (6, "T* of order 10 is T", 60, tstar_is_t),
        (7, "fast containment equals brute force", 900, containment_vs_brute),
        (8, "lemma reports without violations", 600, lemma_reports),
        (9, "graph6 round trip and enumeration counts", 600, graph6_and_counts),
        (10, "worker count does not change output", 600, determinism),
    ];
    let mut failed = 0;
    for (id, title, budget, run) in criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let result = match result {
            Ok(d) if took > Duration::from_secs(budget) => Err(format!("{d}; over the {budget}s budget")),
            other => other,
        };
        match result {
            Ok(detail) => println!("criterion {id:>2} PASS  {title}: {detail} ({took:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {title}: {why} ({took:.2?})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
