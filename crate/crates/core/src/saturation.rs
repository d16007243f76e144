//! Saturation predicates and the exhaustive search for minimum saturated
//! graphs.
//!
//! `G` is H-saturated when it has no copy of H but `G + e` has one for every
//! non-edge `e`. The check runs in two phases: a containment test on `G`,
//! then one forced-edge search per non-edge, stopping at the first failure.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::canon::{canonical_graph, CanonicalForm};
use crate::enumerate::{dedup_by_isomorphism, enumerate_map, EnumFilter};
use crate::error::{Error, Result};
use crate::forest::{brute_force_contains, contains_linear_forest, contains_linear_forest_using, Embedding, LinearForestSpec};
use crate::graph::Graph;
use crate::names::describe;

/// Outcome of a saturation check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness")]
pub enum SaturationVerdict {
    Saturated,
    /// The graph already contains the forest.
    ContainsH(Embedding),
    /// Adding this non-edge leaves the graph free of the forest.
    NonSaturatingEdge((usize, usize)),
}

impl SaturationVerdict {
    pub fn is_saturated(&self) -> bool {
        matches!(self, SaturationVerdict::Saturated)
    }
}

impl fmt::Display for SaturationVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SaturationVerdict::Saturated => f.write_str("Saturated"),
            SaturationVerdict::ContainsH(e) => write!(f, "ContainsH: {e}"),
            SaturationVerdict::NonSaturatingEdge((u, v)) => write!(f, "NonSaturatingEdge: {u}-{v}"),
        }
    }
}

/// `g` has no copy of `spec`.
pub fn is_free(g: &Graph, spec: &LinearForestSpec) -> bool {
    contains_linear_forest(g, spec).is_none()
}

pub fn is_saturated(g: &Graph, spec: &LinearForestSpec) -> SaturationVerdict {
    if let Some(e) = contains_linear_forest(g, spec) {
        return SaturationVerdict::ContainsH(e);
    }
    for (u, v) in g.complement_edges() {
        let h = g.with_edge(u, v);
        if contains_linear_forest_using(&h, spec, (u, v)).is_none() {
            return SaturationVerdict::NonSaturatingEdge((u, v));
        }
    }
    SaturationVerdict::Saturated
}

/// Saturation decided with the brute-force containment reference only.
pub fn is_saturated_brute(g: &Graph, spec: &LinearForestSpec) -> Result<bool> {
    if brute_force_contains(g, spec)? {
        return Ok(false);
    }
    for (u, v) in g.complement_edges() {
        if !brute_force_contains(&g.with_edge(u, v), spec)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `n` covered by the `P6 + tP2` formula: `⌈10t/3⌉ + 10`.
pub fn sat_formula_min_order(t: usize) -> usize {
    (10 * t).div_ceil(3) + 10
}

/// `sat(n, P6 + tP2) = min{n − ⌊n/10⌋, 3t + 18}` for `n ≥ 10t/3 + 10`.
pub fn sat_formula(n: usize, t: usize) -> Result<usize> {
    if t == 0 || n < sat_formula_min_order(t) {
        return Err(Error::OutOfRange(format!(
            "formula needs t >= 1 and n >= {}, got n={n}, t={t}",
            sat_formula_min_order(t.max(1))
        )));
    }
    Ok((n - n / 10).min(3 * t + 18))
}

/// A published value to compare a search result against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Reference {
    pub formula: String,
    pub value: usize,
    /// Whether the formula's stated range of `n` covers this order. Outside
    /// it (or below an unspecified "large n" threshold) disagreement is
    /// informational only.
    pub in_range: bool,
}

/// Known saturation numbers for `P_k + tP2` families.
pub fn reference_value(n: usize, spec: &LinearForestSpec) -> Option<Reference> {
    let (k, t) = match (spec.paths(), spec.t()) {
        ([], s) => (2, s),
        ([k], t) if t >= 1 => (*k, t),
        _ => return None,
    };
    let r = |formula: &str, value: usize, in_range: bool| Reference {
        formula: formula.to_string(),
        value,
        in_range,
    };
    match k {
        2 if t >= 2 => Some(r("3t-3", 3 * t - 3, n >= 3 * t - 3)),
        3 => Some(r("3t", 3 * t, false)),
        4 => Some(r("3t+7", 3 * t + 7, false)),
        5 => Some(r(
            "min{ceil((5n-4)/6), 3t+12}",
            (5 * n).saturating_sub(4).div_ceil(6).min(3 * t + 12),
            n >= 3 * t + 8,
        )),
        6 => Some(r(
            "min{n-floor(n/10), 3t+18}",
            (n - n / 10).min(3 * t + 18),
            n >= sat_formula_min_order(t),
        )),
        _ => None,
    }
}

/// Where candidate graphs come from.
#[derive(Clone, Debug)]
pub enum CandidateSource {
    /// Built-in isomorph-free enumeration (order ≤ 10).
    Enumeration,
    /// Externally supplied graphs; deduplicated by isomorphism here.
    Graphs(Vec<Graph>),
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtremalGraph {
    pub graph6: CanonicalForm,
    pub name: String,
}

/// Result of [`min_sat_search`].
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub spec: LinearForestSpec,
    pub edge_bound: usize,
    /// `None` when no saturated graph exists within the bound.
    pub min_edges: Option<usize>,
    /// Every minimum attainer up to isomorphism, sorted by name then
    /// canonical form.
    pub extremal: Vec<ExtremalGraph>,
    /// Candidates whose saturation was decided.
    pub examined: u64,
    /// `n` is below the forest's vertex demand, so only `K_n` qualifies.
    pub vacuous: bool,
    pub source: &'static str,
    pub reference: Option<Reference>,
}

impl SearchReport {
    /// One-line summary: `min=3; extremal: K3+K1, S4`.
    pub fn summary(&self) -> String {
        match self.min_edges {
            Some(m) => {
                let names: Vec<&str> = self.extremal.iter().map(|e| e.name.as_str()).collect();
                format!("min={m}; extremal: {}", names.join(", "))
            }
            None => format!("min=none; no saturated graph with at most {} edges", self.edge_bound),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{}", self.summary());
        let _ = writeln!(s, "n={} spec={} edge_bound={} source={}", self.n, self.spec, self.edge_bound, self.source);
        let _ = writeln!(s, "examined={}", self.examined);
        if self.vacuous {
            let _ = writeln!(s, "vacuous: order below the forest's vertex demand; only K_n is saturated");
        }
        for e in &self.extremal {
            let _ = writeln!(s, "  {}  {}", e.graph6, e.name);
        }
        if let Some(r) = &self.reference {
            let verdict = match self.min_edges {
                Some(m) if m == r.value => "agrees",
                _ if !r.in_range => "differs (outside the formula's range)",
                _ => "DIFFERS",
            };
            let _ = writeln!(s, "reference {} = {}: {}", r.formula, r.value, verdict);
        }
        s
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SearchOptions {
    /// Largest edge count considered; defaults to the `P6 + tP2` formula
    /// value when it applies, else `C(n, 2)`.
    pub edge_bound: Option<usize>,
}

fn default_bound(n: usize, spec: &LinearForestSpec) -> usize {
    if let ([6], t) = (spec.paths(), spec.t()) {
        if let Ok(v) = sat_formula(n, t) {
            return v;
        }
    }
    n * n.saturating_sub(1) / 2
}

fn finish(
    n: usize,
    spec: &LinearForestSpec,
    edge_bound: usize,
    found: BTreeMap<CanonicalForm, Graph>,
    min_edges: Option<usize>,
    examined: u64,
    source: &'static str,
) -> SearchReport {
    let mut extremal: Vec<ExtremalGraph> = found
        .into_iter()
        .map(|(graph6, g)| ExtremalGraph {
            name: describe(&g),
            graph6,
        })
        .collect();
    extremal.sort_by(|a, b| (&a.name, &a.graph6).cmp(&(&b.name, &b.graph6)));
    SearchReport {
        n,
        spec: spec.clone(),
        edge_bound,
        min_edges,
        extremal,
        examined,
        vacuous: n < spec.vertex_demand(),
        source,
        reference: reference_value(n, spec),
    }
}

fn canonical_entry(g: &Graph) -> (CanonicalForm, Graph) {
    let c = canonical_graph(g);
    (CanonicalForm::from_canonical(&c), c)
}

/// Minimum edge count over `spec`-saturated graphs of order `n` within the
/// edge bound, with all attainers up to isomorphism.
///
/// With the built-in source, edge counts are searched in increasing order
/// and the search stops at the first count with a saturated graph; only the
/// graphs with at most that many edges are examined. Runs on the current
/// rayon pool; the report does not depend on its size.
pub fn min_sat_search(
    n: usize,
    spec: &LinearForestSpec,
    options: SearchOptions,
    source: CandidateSource,
) -> Result<SearchReport> {
    let bound = options.edge_bound.unwrap_or_else(|| default_bound(n, spec));
    match source {
        CandidateSource::Enumeration => {
            let mut examined = 0u64;
            if n < spec.vertex_demand() {
                // Nothing can ever contain the forest, so only K_n is
                // (vacuously) saturated.
                let full = n * n.saturating_sub(1) / 2;
                let mut found = BTreeMap::new();
                if full <= bound {
                    found.extend([canonical_entry(&Graph::complete(n)?)]);
                    examined = 1;
                }
                let min = (!found.is_empty()).then_some(full);
                return Ok(finish(n, spec, bound, found, min, examined, "enumeration"));
            }
            for m in 0..=bound {
                let hits = enumerate_map(n, EnumFilter::all().with_max_edges(m), None, |g| {
                    (g.size() == m).then(|| is_saturated(g, spec).is_saturated().then(|| canonical_entry(g)))
                })?;
                examined += hits.len() as u64;
                let found: BTreeMap<_, _> = hits.into_iter().flatten().collect();
                if !found.is_empty() {
                    return Ok(finish(n, spec, bound, found, Some(m), examined, "enumeration"));
                }
            }
            Ok(finish(n, spec, bound, BTreeMap::new(), None, examined, "enumeration"))
        }
        CandidateSource::Graphs(graphs) => {
            if let Some(g) = graphs.iter().find(|g| g.order() != n) {
                return Err(Error::InvalidGraph(format!(
                    "stream graph of order {} in a search for order {n}",
                    g.order()
                )));
            }
            let candidates: Vec<Graph> = dedup_by_isomorphism(graphs)
                .into_iter()
                .filter(|g| g.size() <= bound)
                .collect();
            let examined = candidates.len() as u64;
            use rayon::prelude::*;
            let saturated: Vec<(usize, (CanonicalForm, Graph))> = candidates
                .par_iter()
                .filter(|g| is_saturated(g, spec).is_saturated())
                .map(|g| (g.size(), canonical_entry(g)))
                .collect();
            let min = saturated.iter().map(|(m, _)| *m).min();
            let found: BTreeMap<_, _> = saturated
                .into_iter()
                .filter(|(m, _)| Some(*m) == min)
                .map(|(_, e)| e)
                .collect();
            Ok(finish(n, spec, bound, found, min, examined, "stream"))
        }
    }
}
