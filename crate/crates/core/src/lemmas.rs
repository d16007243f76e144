//! Exhaustive checks of structural statements over small graphs.
//!
//! Every statement has a universe (the graphs it talks about), a hypothesis
//! and a conclusion. A run enumerates the universe at each order of a range,
//! counts the graphs meeting the hypothesis and records those that miss the
//! conclusion. The per-graph check is the same one behind [`replay`], so any
//! reported violation can be re-examined on its own.

use std::fmt::{self, Write as _};
use std::fs;
use std::io::BufReader;
use std::ops::{ControlFlow, RangeInclusive};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_graph, is_isomorphic};
use crate::constructions::{is_book, is_fan, p6_extremal, tree_t};
use crate::enumerate::{enumerate_graphs, enumerate_map, read_graph6_stream, EnumFilter, ENUM_ORDER_LIMIT};
use crate::error::{Error, Result};
use crate::forest::{contains_path, embedding_from_assignment, for_each_brute_embedding, LinearForestSpec};
use crate::graph::{bit, members, Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::matching::{berge_tutte_min, matching_number, BERGE_TUTTE_LIMIT};
use crate::names::describe;
use crate::saturation::{is_free, is_saturated};

/// Environment variable naming the saturated-corpus cache directory.
pub const CACHE_ENV: &str = "FOREST_SAT_CACHE";

/// Identifiers accepted by [`Lemma::from_id`].
pub const LEMMA_IDS: &[&str] = &[
    "berge-tutte",
    "degree2-closure",
    "isolated-no-leaf",
    "neighborhood-capture",
    "book-fan",
    "downshift",
    "two-isolated-shape",
    "tree-components",
];

/// A checkable statement together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lemma {
    /// α′(G) equals the minimum of ½(|G| + |S| − o(G − S)).
    BergeTutte,
    /// In a saturated graph the two neighbours of a degree-2 vertex are
    /// adjacent.
    Degree2Closure(LinearForestSpec),
    /// A `P_k + tP2`-saturated graph with an isolated vertex has no leaf.
    IsolatedNoLeaf(LinearForestSpec),
    /// Every copy of the forest in `G + xw` (w isolated) covers `N[x] ∪ {w}`.
    NeighborhoodCapture(LinearForestSpec),
    /// Connected, δ ≥ 2, P6-free, contains P4, degree-2 closed: a book or a
    /// fan.
    BookFan,
    /// `(P6 + tP2)`-saturated with large fat components implies
    /// `(P4 + (t+1)P2)`-saturated, and many edges if there is an isolated
    /// vertex.
    Downshift(usize),
    /// `(P6 + tP2)`-saturated with two isolated vertices and at most
    /// `3t + 18` edges is `K7 + (t−1)K3 + K̄`.
    TwoIsolatedShape(usize),
    /// Two tree components of a `(P6 + tP2)`-saturated graph both have
    /// order at least 10 and one of them contains T.
    TreeComponents(LinearForestSpec),
}

impl Lemma {
    pub fn id(&self) -> &'static str {
        match self {
            Lemma::BergeTutte => "berge-tutte",
            Lemma::Degree2Closure(_) => "degree2-closure",
            Lemma::IsolatedNoLeaf(_) => "isolated-no-leaf",
            Lemma::NeighborhoodCapture(_) => "neighborhood-capture",
            Lemma::BookFan => "book-fan",
            Lemma::Downshift(_) => "downshift",
            Lemma::TwoIsolatedShape(_) => "two-isolated-shape",
            Lemma::TreeComponents(_) => "tree-components",
        }
    }

    /// Build from an identifier. Spec-based statements take `spec`, or
    /// `P6 + tP2` when only `t` is given; the `t`-based ones read `t` off a
    /// `P6 + tP2` spec when `t` is missing.
    pub fn from_id(id: &str, spec: Option<LinearForestSpec>, t: Option<usize>) -> Result<Self> {
        let p6 = |t: usize| LinearForestSpec::path_plus_matching(6, t);
        let need_spec = || -> Result<LinearForestSpec> {
            match (&spec, t) {
                (Some(s), _) => Ok(s.clone()),
                (None, Some(t)) => p6(t),
                (None, None) => Err(Error::OutOfRange(format!("{id} needs a spec"))),
            }
        };
        let need_t = || -> Result<usize> {
            if let Some(t) = t {
                return Ok(t);
            }
            match spec.as_ref().map(|s| (s.paths(), s.t())) {
                Some(([6], t)) => Ok(t),
                _ => Err(Error::OutOfRange(format!("{id} needs t"))),
            }
        };
        let lemma = match id {
            "berge-tutte" => Lemma::BergeTutte,
            "degree2-closure" => Lemma::Degree2Closure(need_spec()?),
            "isolated-no-leaf" => Lemma::IsolatedNoLeaf(need_spec()?),
            "neighborhood-capture" => Lemma::NeighborhoodCapture(need_spec()?),
            "book-fan" => Lemma::BookFan,
            "downshift" => Lemma::Downshift(need_t()?),
            "two-isolated-shape" => Lemma::TwoIsolatedShape(need_t()?),
            "tree-components" => Lemma::TreeComponents(need_spec()?),
            other => return Err(Error::UnknownLemma(other.to_string())),
        };
        lemma.validate()?;
        Ok(lemma)
    }

    fn validate(&self) -> Result<()> {
        match self {
            Lemma::IsolatedNoLeaf(s) | Lemma::NeighborhoodCapture(s) => match s.as_path_plus_matching() {
                Some((_, t)) if t >= 1 => Ok(()),
                _ => Err(Error::OutOfRange(format!(
                    "{} needs a forest of the form P_k + tP2 with t >= 1, got {s}",
                    self.id()
                ))),
            },
            Lemma::TreeComponents(s) if s.paths() != [6] => Err(Error::OutOfRange(format!(
                "tree-components needs a forest of the form P6 + tP2, got {s}"
            ))),
            _ => Ok(()),
        }
    }

    /// The forest whose saturated graphs form the universe, if any.
    pub fn universe_spec(&self) -> Option<LinearForestSpec> {
        match self {
            Lemma::Degree2Closure(s)
            | Lemma::IsolatedNoLeaf(s)
            | Lemma::NeighborhoodCapture(s)
            | Lemma::TreeComponents(s) => Some(s.clone()),
            Lemma::Downshift(t) | Lemma::TwoIsolatedShape(t) => {
                Some(LinearForestSpec::path_plus_matching(6, *t).expect("k = 6 is valid"))
            }
            Lemma::BergeTutte | Lemma::BookFan => None,
        }
    }

    fn t(&self) -> Option<usize> {
        match self {
            Lemma::Downshift(t) | Lemma::TwoIsolatedShape(t) => Some(*t),
            _ => None,
        }
    }

    fn universe_text(&self) -> String {
        match self {
            Lemma::BergeTutte => "all graphs".into(),
            Lemma::BookFan => "connected P6-free graphs with minimum degree >= 2".into(),
            Lemma::TwoIsolatedShape(t) => format!(
                "{}-saturated graphs with >= 2 isolated vertices and <= {} edges",
                self.universe_spec().unwrap(),
                3 * t + 18
            ),
            _ => format!("{}-saturated graphs", self.universe_spec().unwrap()),
        }
    }

    fn statement(&self) -> String {
        match self {
            Lemma::BergeTutte => "matching number equals the Berge-Tutte minimum".into(),
            Lemma::Degree2Closure(_) => "the two neighbours of a degree-2 vertex are adjacent".into(),
            Lemma::IsolatedNoLeaf(_) => "an isolated vertex rules out vertices of degree 1".into(),
            Lemma::NeighborhoodCapture(s) => {
                format!("every copy of {s} in G+xw (w isolated, x not) covers N[x] and w")
            }
            Lemma::BookFan => "containing P4 and degree-2 closed forces B_{n-2}, or F_{(n-1)/2} for odd n".into(),
            Lemma::Downshift(t) => format!(
                "fat components without books or fans force {}-saturation, and more than {} edges when a vertex is isolated",
                LinearForestSpec::path_plus_matching(4, t + 1).expect("valid"),
                3 * t + 18
            ),
            Lemma::TwoIsolatedShape(t) => match t {
                0 | 1 => "the graph is K7 plus isolated vertices, with exactly 21 edges".into(),
                2 => "the graph is K7 + K3 plus isolated vertices, with exactly 24 edges".into(),
                t => format!("the graph is K7 + {}K3 plus isolated vertices, with exactly {} edges", t - 1, 3 * t + 18),
            },
            Lemma::TreeComponents(_) => {
                "any two tree components have order >= 10 and one of them contains T".into()
            }
        }
    }

    /// Why `g` is outside the universe, or `None` if it belongs.
    fn exclusion(&self, g: &Graph) -> Option<String> {
        match self {
            Lemma::BergeTutte => (g.order() > BERGE_TUTTE_LIMIT)
                .then(|| format!("order {} exceeds the scan limit {BERGE_TUTTE_LIMIT}", g.order())),
            Lemma::BookFan => {
                if g.order() < 6 {
                    Some("order below 6".into())
                } else if !g.is_connected() {
                    Some("not connected".into())
                } else if g.min_degree() < 2 {
                    Some("minimum degree below 2".into())
                } else if contains_path(g, 6).is_some() {
                    Some("contains P6".into())
                } else {
                    None
                }
            }
            _ => {
                let spec = self.universe_spec().expect("spec-based");
                if let Lemma::TwoIsolatedShape(t) = self {
                    if g.order() < 3 * t + 6 {
                        return Some(format!("order below {}", 3 * t + 6));
                    }
                }
                let verdict = is_saturated(g, &spec);
                (!verdict.is_saturated()).then(|| format!("not {spec}-saturated ({verdict})"))
            }
        }
    }

    /// Check a graph already known to lie in the universe.
    fn assess(&self, g: &Graph) -> Result<Outcome> {
        Ok(match self {
            Lemma::BergeTutte => {
                let cert = berge_tutte_min(g)?;
                let nu = matching_number(g);
                if nu == cert.value {
                    Outcome::Holds
                } else {
                    Outcome::Violated(format!(
                        "matching number {nu} but the minimum is {} at S = {:?}",
                        cert.value, cert.witness_set
                    ))
                }
            }
            Lemma::Degree2Closure(_) => {
                if g.vertices_of_degree(2) == 0 {
                    return Ok(Outcome::Skipped("no vertex of degree 2".into()));
                }
                match open_degree2_vertex(g) {
                    None => Outcome::Holds,
                    Some((x, u, v)) => {
                        Outcome::Violated(format!("vertex {x} has non-adjacent neighbours {u} and {v}"))
                    }
                }
            }
            Lemma::IsolatedNoLeaf(_) => {
                let isolated = g.vertices_of_degree(0);
                if isolated == 0 {
                    return Ok(Outcome::Skipped("no isolated vertex".into()));
                }
                match members(g.vertices_of_degree(1)).next() {
                    None => Outcome::Holds,
                    Some(leaf) => Outcome::Violated(format!(
                        "isolated vertex {} and leaf {leaf}",
                        isolated.trailing_zeros()
                    )),
                }
            }
            Lemma::NeighborhoodCapture(spec) => {
                let isolated = g.vertices_of_degree(0);
                let others = g.vertex_set() & !isolated;
                if isolated == 0 || others == 0 {
                    return Ok(Outcome::Skipped("needs both isolated and non-isolated vertices".into()));
                }
                // Isolated vertices are interchangeable, so one w suffices.
                let w = isolated.trailing_zeros() as usize;
                for x in members(others) {
                    if let Some(detail) = uncovered_copy(g, spec, x, w)? {
                        return Ok(Outcome::Violated(detail));
                    }
                }
                Outcome::Holds
            }
            Lemma::BookFan => {
                if contains_path(g, 4).is_none() {
                    return Ok(Outcome::Skipped("P4-free".into()));
                }
                if open_degree2_vertex(g).is_some() {
                    return Ok(Outcome::Skipped("not degree-2 closed".into()));
                }
                let n = g.order();
                let book = is_book(g).is_some_and(|k| k >= 4);
                let fan = n % 2 == 1 && is_fan(g).is_some_and(|k| k >= 3);
                if book || fan {
                    Outcome::Holds
                } else {
                    Outcome::Violated(format!("qualifies but is {}", describe(g)))
                }
            }
            Lemma::Downshift(t) => {
                let t = *t;
                if let Some(reason) = downshift_hypothesis_failure(g, t) {
                    return Ok(Outcome::Skipped(reason));
                }
                let target = LinearForestSpec::path_plus_matching(4, t + 1)?;
                let verdict = is_saturated(g, &target);
                if !verdict.is_saturated() {
                    Outcome::Violated(format!("not {target}-saturated ({verdict})"))
                } else if g.isolated_count() > 0 && g.size() <= 3 * t + 18 {
                    Outcome::Violated(format!(
                        "has an isolated vertex and only {} edges",
                        g.size()
                    ))
                } else {
                    Outcome::Holds
                }
            }
            Lemma::TwoIsolatedShape(t) => {
                let t = *t;
                if g.isolated_count() < 2 {
                    return Ok(Outcome::Skipped("fewer than two isolated vertices".into()));
                }
                if g.size() > 3 * t + 18 {
                    return Ok(Outcome::Skipped(format!("more than {} edges", 3 * t + 18)));
                }
                let expected = p6_extremal(g.order(), t)?;
                if g.size() == 3 * t + 18 && is_isomorphic(g, &expected) {
                    Outcome::Holds
                } else {
                    Outcome::Violated(format!(
                        "{} with {} edges, expected {}",
                        describe(g),
                        g.size(),
                        describe(&expected)
                    ))
                }
            }
            Lemma::TreeComponents(_) => {
                let trees: Vec<Graph> = g
                    .component_masks()
                    .into_iter()
                    .filter(|c| c.count_ones() >= 2)
                    .map(|c| g.induced(c))
                    .filter(Graph::is_tree)
                    .collect();
                if trees.len() < 2 {
                    return Ok(Outcome::Skipped("fewer than two tree components".into()));
                }
                let t = tree_t();
                let has_t: Vec<bool> = trees.iter().map(|c| contains_subgraph(c, &t)).collect();
                for i in 0..trees.len() {
                    for j in i + 1..trees.len() {
                        let (a, b) = (trees[i].order(), trees[j].order());
                        if a < 10 || b < 10 || !(has_t[i] || has_t[j]) {
                            return Ok(Outcome::Violated(format!(
                                "tree components {} and {} (orders {a}, {b}; contain T: {}, {})",
                                describe(&trees[i]),
                                describe(&trees[j]),
                                has_t[i],
                                has_t[j]
                            )));
                        }
                    }
                }
                Outcome::Holds
            }
        })
    }

    fn lists_instances(&self) -> bool {
        matches!(self, Lemma::BookFan | Lemma::TwoIsolatedShape(_) | Lemma::TreeComponents(_))
    }

    fn check_order(&self, n: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::OutOfRange(format!("{}: {msg}", self.id())));
        match self {
            Lemma::BookFan if n < 6 => bad(format!("order must be at least 6, got {n}")),
            Lemma::TwoIsolatedShape(t) if n < 3 * t + 6 => bad(format!("order must be at least {}, got {n}", 3 * t + 6)),
            Lemma::TwoIsolatedShape(_) if n > ENUM_ORDER_LIMIT + 2 => {
                bad(format!("order must be at most {}, got {n}", ENUM_ORDER_LIMIT + 2))
            }
            Lemma::TwoIsolatedShape(_) => Ok(()),
            _ if n > ENUM_ORDER_LIMIT => bad(format!("order must be at most {ENUM_ORDER_LIMIT}, got {n}")),
            _ => Ok(()),
        }
    }

    /// The universe at order `n`, canonically labelled, in generation order.
    fn universe(&self, n: usize, config: &VerifyConfig) -> Result<Vec<Graph>> {
        match self {
            Lemma::BergeTutte => enumerate_graphs(n, EnumFilter::all()),
            Lemma::BookFan => {
                let p6_free = |g: &Graph| contains_path(g, 6).is_none();
                enumerate_map(
                    n,
                    EnumFilter::all().connected().with_min_degree(2),
                    Some(&p6_free),
                    |g| Some(g.clone()),
                )
            }
            Lemma::TwoIsolatedShape(t) => {
                // A graph with two isolated vertices is H + 2K1 for a unique
                // class H of order n - 2, so enumerate H instead.
                let spec = self.universe_spec().unwrap();
                let free = |h: &Graph| is_free(h, &spec);
                let pair = Graph::empty(2)?;
                enumerate_map(
                    n - 2,
                    EnumFilter::all().with_max_edges(3 * t + 18),
                    Some(&free),
                    |h| {
                        let g = h.disjoint_union(&pair).ok()?;
                        is_saturated(&g, &spec).is_saturated().then(|| canonical_graph(&g))
                    },
                )
            }
            _ => saturated_corpus(n, &self.universe_spec().unwrap(), config),
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())?;
        match self {
            Lemma::Degree2Closure(s)
            | Lemma::IsolatedNoLeaf(s)
            | Lemma::NeighborhoodCapture(s)
            | Lemma::TreeComponents(s) => write!(f, " [{s}]"),
            Lemma::Downshift(t) | Lemma::TwoIsolatedShape(t) => write!(f, " [t={t}]"),
            _ => Ok(()),
        }
    }
}

/// Result of checking one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", content = "detail", rename_all = "kebab-case")]
pub enum Outcome {
    OutOfUniverse(String),
    Skipped(String),
    Holds,
    Violated(String),
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::OutOfUniverse(r) => write!(f, "out of universe: {r}"),
            Outcome::Skipped(r) => write!(f, "hypothesis fails: {r}"),
            Outcome::Holds => f.write_str("holds"),
            Outcome::Violated(d) => write!(f, "VIOLATED: {d}"),
        }
    }
}

/// Check a single graph against `lemma`, universe membership included.
pub fn replay(lemma: &Lemma, g: &Graph) -> Result<Outcome> {
    lemma.validate()?;
    if let Some(reason) = lemma.exclusion(g) {
        return Ok(Outcome::OutOfUniverse(reason));
    }
    lemma.assess(g)
}

fn open_degree2_vertex(g: &Graph) -> Option<(usize, usize, usize)> {
    members(g.vertices_of_degree(2)).find_map(|x| {
        let mut nb = members(g.neighbors(x));
        let (u, v) = (nb.next()?, nb.next()?);
        (!g.has_edge(u, v)).then_some((x, u, v))
    })
}

/// A copy of `spec` in `g + xw` missing part of `N[x] ∪ {w}`, described.
fn uncovered_copy(g: &Graph, spec: &LinearForestSpec, x: usize, w: usize) -> Result<Option<String>> {
    let plus = g.with_edge(x, w);
    let need = g.closed_neighbors(x) | bit(w);
    let mut found = None;
    for_each_brute_embedding(&plus, spec, |assign| {
        let cover: VertexSet = assign.iter().fold(0, |m, &v| m | bit(v));
        if need & !cover == 0 {
            return ControlFlow::Continue(());
        }
        let missing: Vec<usize> = members(need & !cover).collect();
        found = Some(format!(
            "x={x}, w={w}: copy {} misses {missing:?}",
            embedding_from_assignment(spec, assign)
        ));
        ControlFlow::Break(())
    })?;
    Ok(found)
}

fn downshift_hypothesis_failure(g: &Graph, t: usize) -> Option<String> {
    let parts: Vec<Graph> = g
        .component_masks()
        .into_iter()
        .filter(|c| c.count_ones() >= 2)
        .map(|c| g.induced(c))
        .collect();
    let q: usize = parts.iter().map(Graph::order).sum();
    if q < 2 * t + 6 {
        return Some(format!("nontrivial part has order {q} < {}", 2 * t + 6));
    }
    if g.vertices_of_degree(1) != 0 {
        return Some("nontrivial part has a vertex of degree 1".into());
    }
    if let Some(c) = parts.iter().find(|c| c.order() < 6) {
        return Some(format!("component {} has order below 6", describe(c)));
    }
    if let Some(c) = parts.iter().find(|c| is_book(c).is_some() || is_fan(c).is_some()) {
        return Some(format!("component {} is a book or fan", describe(c)));
    }
    None
}

/// Whether `pattern` is isomorphic to a (not necessarily induced) subgraph
/// of `host`.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    if k > host.order() || pattern.size() > host.size() {
        return false;
    }
    // Visit pattern vertices so that each one, where possible, has an
    // already placed neighbour; this keeps the candidate sets small.
    let mut order = Vec::with_capacity(k);
    let mut placed: VertexSet = 0;
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((pattern.neighbors(v) & placed).count_ones(), pattern.degree(v), std::cmp::Reverse(v)))
            .expect("vertices remain");
        order.push(next);
        placed |= bit(next);
    }
    let mut image = vec![usize::MAX; k];
    place(host, pattern, &order, 0, 0, &mut image)
}

fn place(host: &Graph, pattern: &Graph, order: &[usize], i: usize, used: VertexSet, image: &mut [usize]) -> bool {
    let Some(&p) = order.get(i) else {
        return true;
    };
    let mut candidates = host.vertex_set() & !used;
    for q in members(pattern.neighbors(p)) {
        if image[q] != usize::MAX {
            candidates &= host.neighbors(image[q]);
        }
    }
    for h in members(candidates) {
        if host.degree(h) < pattern.degree(p) {
            continue;
        }
        image[p] = h;
        if place(host, pattern, order, i + 1, used | bit(h), image) {
            return true;
        }
    }
    image[p] = usize::MAX;
    false
}

/// Where saturated-graph corpora are cached.
#[derive(Clone, Debug, Default)]
pub struct VerifyConfig {
    /// No caching when `None`.
    pub cache_dir: Option<PathBuf>,
}

impl VerifyConfig {
    /// Cache directory from [`CACHE_ENV`], if set and non-empty.
    pub fn from_env() -> Self {
        let cache_dir = std::env::var_os(CACHE_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from);
        VerifyConfig { cache_dir }
    }
}

/// File name of the cached corpus for `(n, spec)`.
pub fn corpus_file_name(n: usize, spec: &LinearForestSpec) -> String {
    format!("saturated-n{n}-{spec}.g6")
}

/// Every `spec`-saturated graph of order `n` up to isomorphism, canonically
/// labelled, in generation order. Read from and written to the cache
/// directory when one is configured.
pub fn saturated_corpus(n: usize, spec: &LinearForestSpec, config: &VerifyConfig) -> Result<Vec<Graph>> {
    let Some(dir) = &config.cache_dir else {
        return compute_saturated(n, spec);
    };
    let path = dir.join(corpus_file_name(n, spec));
    if path.exists() {
        let file = BufReader::new(fs::File::open(&path)?);
        return read_graph6_stream(file).collect();
    }
    let graphs = compute_saturated(n, spec)?;
    write_corpus(&path, &graphs)?;
    Ok(graphs)
}

fn compute_saturated(n: usize, spec: &LinearForestSpec) -> Result<Vec<Graph>> {
    // Freeness survives edge deletion, so it is a valid subtree prune.
    let free = |g: &Graph| is_free(g, spec);
    enumerate_map(n, EnumFilter::all(), Some(&free), |g| {
        is_saturated(g, spec).is_saturated().then(|| canonical_graph(g))
    })
}

fn write_corpus(path: &Path, graphs: &[Graph]) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let mut text = String::new();
    for g in graphs {
        text.push_str(&to_graph6(g));
        text.push('\n');
    }
    // Write then rename so a concurrent reader never sees a partial file.
    let tmp = path.with_extension(format!("g6.{}.tmp", std::process::id()));
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Parse `a..b` or `a..=b` (both inclusive) or a single order `a`.
pub fn parse_n_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::OutOfRange(format!("expected an order range like 4..8, got {s:?}"));
    let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad());
    let range = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let a = num(s)?;
            a..=a
        }
    };
    if range.is_empty() {
        return Err(bad());
    }
    Ok(range)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub n: usize,
    /// Canonical graph6; vertex numbers in `detail` refer to this labelling.
    pub graph6: String,
    pub detail: String,
}

/// Counts at one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellReport {
    pub n: usize,
    /// Size of the enumerated universe.
    pub universe: usize,
    /// Graphs meeting the hypothesis.
    pub instances: usize,
    pub skipped: usize,
    /// Names of the instances, for statements where they are few.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub qualifying: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub lemma: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub statement: String,
    pub universe: String,
    pub n_min: usize,
    pub n_max: usize,
    pub cells: Vec<CellReport>,
    pub instances: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
    /// No graph in the range met the hypothesis, so nothing was verified.
    pub universe_empty: bool,
}

impl LemmaReport {
    /// No violation was found.
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "lemma: {}", self.lemma);
        if let Some(spec) = &self.spec {
            let _ = writeln!(s, "spec: {spec}");
        }
        if let Some(t) = self.t {
            let _ = writeln!(s, "t: {t}");
        }
        let _ = writeln!(s, "statement: {}", self.statement);
        let _ = writeln!(s, "universe: {}, order {}..={}", self.universe, self.n_min, self.n_max);
        for c in &self.cells {
            let _ = write!(
                s,
                "  n={}: universe {}, instances {}, skipped {}",
                c.n, c.universe, c.instances, c.skipped
            );
            if !c.qualifying.is_empty() {
                let _ = write!(s, ", qualifying: {}", c.qualifying.join(", "));
            }
            s.push('\n');
        }
        let _ = writeln!(s, "instances: {}", self.instances);
        let _ = writeln!(s, "skipped: {}", self.skipped);
        let _ = writeln!(s, "violations: {}", self.violations.len());
        for v in &self.violations {
            let _ = writeln!(s, "  n={} {}  {}", v.n, v.graph6, v.detail);
        }
        let verdict = if !self.holds() {
            "REFUTED"
        } else if self.universe_empty {
            "VACUOUS (no graph meets the hypothesis in this range; nothing verified)"
        } else {
            "VERIFIED"
        };
        let _ = writeln!(s, "result: {verdict}");
        s
    }
}

struct Cell {
    report: CellReport,
    violations: Vec<Violation>,
}

fn run_cell(lemma: &Lemma, n: usize, config: &VerifyConfig) -> Result<Cell> {
    let universe = lemma.universe(n, config)?;
    let outcomes: Vec<Outcome> = universe
        .par_iter()
        .map(|g| lemma.assess(g))
        .collect::<Result<_>>()?;
    let mut report = CellReport {
        n,
        universe: universe.len(),
        instances: 0,
        skipped: 0,
        qualifying: Vec::new(),
    };
    let mut violations = Vec::new();
    for (g, outcome) in universe.iter().zip(outcomes) {
        match outcome {
            Outcome::Skipped(_) => report.skipped += 1,
            Outcome::OutOfUniverse(r) => unreachable!("enumerated graph outside the universe: {r}"),
            Outcome::Holds | Outcome::Violated(_) => {
                report.instances += 1;
                if lemma.lists_instances() {
                    report.qualifying.push(describe(g));
                }
                if matches!(outcome, Outcome::Violated(_)) {
                    // Re-run on the canonical labelling so the detail matches
                    // the reported graph6.
                    let c = canonical_graph(g);
                    let detail = match lemma.assess(&c)? {
                        Outcome::Violated(d) => d,
                        other => unreachable!("violation vanished under relabelling: {other}"),
                    };
                    violations.push(Violation {
                        n,
                        graph6: to_graph6(&c),
                        detail,
                    });
                }
            }
        }
    }
    report.qualifying.sort();
    violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(Cell { report, violations })
}

/// Check `lemma` over its universe at every order in `n_range`.
///
/// Orders run in parallel on the current rayon pool; the report does not
/// depend on its size.
pub fn verify(lemma: &Lemma, n_range: RangeInclusive<usize>, config: &VerifyConfig) -> Result<LemmaReport> {
    lemma.validate()?;
    if n_range.is_empty() {
        return Err(Error::OutOfRange("empty order range".into()));
    }
    for n in n_range.clone() {
        lemma.check_order(n)?;
    }
    let orders: Vec<usize> = n_range.clone().collect();
    let cells: Vec<Cell> = orders
        .par_iter()
        .map(|&n| run_cell(lemma, n, config))
        .collect::<Result<_>>()?;
    let instances = cells.iter().map(|c| c.report.instances).sum();
    let skipped = cells.iter().map(|c| c.report.skipped).sum();
    let (cells, violations): (Vec<_>, Vec<_>) = cells.into_iter().map(|c| (c.report, c.violations)).unzip();
    Ok(LemmaReport {
        lemma: lemma.id(),
        spec: match lemma {
            Lemma::Degree2Closure(s)
            | Lemma::IsolatedNoLeaf(s)
            | Lemma::NeighborhoodCapture(s)
            | Lemma::TreeComponents(s) => Some(s.to_string()),
            _ => None,
        },
        t: lemma.t(),
        statement: lemma.statement(),
        universe: lemma.universe_text(),
        n_min: *n_range.start(),
        n_max: *n_range.end(),
        cells,
        instances,
        skipped,
        violations: violations.into_iter().flatten().collect(),
        universe_empty: instances == 0,
    })
}

pub fn verify_berge_tutte_exhaustive(n_range: RangeInclusive<usize>) -> Result<LemmaReport> {
    verify(&Lemma::BergeTutte, n_range, &VerifyConfig::default())
}

pub fn verify_degree2_closure(spec: &LinearForestSpec, n_range: RangeInclusive<usize>) -> Result<LemmaReport> {
    verify(&Lemma::Degree2Closure(spec.clone()), n_range, &VerifyConfig::default())
}

pub fn verify_isolated_implies_no_leaf(spec: &LinearForestSpec, n_range: RangeInclusive<usize>) -> Result<LemmaReport> {
    verify(&Lemma::IsolatedNoLeaf(spec.clone()), n_range, &VerifyConfig::default())
}

pub fn verify_neighborhood_capture(spec: &LinearForestSpec, n_range: RangeInclusive<usize>) -> Result<LemmaReport> {
    verify(&Lemma::NeighborhoodCapture(spec.clone()), n_range, &VerifyConfig::default())
}

pub fn verify_book_fan_classification(n_range: RangeInclusive<usize>) -> Result<LemmaReport> {
    verify(&Lemma::BookFan, n_range, &VerifyConfig::default())
}

pub fn verify_downshift(t: usize, n_range: RangeInclusive<usize>) -> Result<LemmaReport> {
    verify(&Lemma::Downshift(t), n_range, &VerifyConfig::default())
}

pub fn verify_two_isolated_shape(t: usize, n_range: RangeInclusive<usize>) -> Result<LemmaReport> {
    verify(&Lemma::TwoIsolatedShape(t), n_range, &VerifyConfig::default())
}

pub fn verify_tree_components(spec: &LinearForestSpec, n_range: RangeInclusive<usize>) -> Result<LemmaReport> {
    verify(&Lemma::TreeComponents(spec.clone()), n_range, &VerifyConfig::default())
}
