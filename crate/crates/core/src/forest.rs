//! Linear forest targets `P_{k1} + … + P_{km} + tP2` and exact containment.
//!
//! The fast path embeds the long paths by backtracking and then settles the
//! `tP2` residue with a maximum matching on the unused vertices. An
//! independent brute-force embedder is kept alongside as the reference.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};
use crate::matching::{matching_number_within, max_matching_within};

/// `P_{k1} + … + P_{km} + tP2`, with every `ki ≥ 3`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForestSpec {
    /// Path orders, non-increasing.
    paths: Vec<usize>,
    t: usize,
}

impl LinearForestSpec {
    /// Build a spec from path orders (any order, each ≥ 2) and a count of
    /// extra `P2` components. Orders equal to 2 are folded into `t`.
    pub fn new(paths: impl IntoIterator<Item = usize>, t: usize) -> Result<Self> {
        let mut long = Vec::new();
        let mut t = t;
        for k in paths {
            match k {
                0 | 1 => {
                    return Err(Error::OutOfRange(format!(
                        "path order {k} is not a linear forest component"
                    )))
                }
                2 => t += 1,
                _ => long.push(k),
            }
        }
        long.sort_unstable_by(|a, b| b.cmp(a));
        if long.is_empty() && t == 0 {
            return Err(Error::OutOfRange("empty linear forest".into()));
        }
        Ok(LinearForestSpec { paths: long, t })
    }

    /// `P_k + tP2`.
    pub fn path_plus_matching(k: usize, t: usize) -> Result<Self> {
        Self::new([k], t)
    }

    /// `tP2`.
    pub fn matching(t: usize) -> Result<Self> {
        Self::new([], t)
    }

    /// Path orders of at least 3, non-increasing.
    pub fn paths(&self) -> &[usize] {
        &self.paths
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Σ kᵢ + 2t.
    pub fn vertex_demand(&self) -> usize {
        self.paths.iter().sum::<usize>() + 2 * self.t
    }

    /// Edges in the forest.
    pub fn edge_count(&self) -> usize {
        self.paths.iter().map(|k| k - 1).sum::<usize>() + self.t
    }

    /// Matching number of the forest itself.
    pub fn matching_demand(&self) -> usize {
        self.paths.iter().map(|k| k / 2).sum::<usize>() + self.t
    }

    /// Every component order, including the `P2`s, non-increasing.
    pub fn component_orders(&self) -> Vec<usize> {
        let mut all = self.paths.clone();
        all.extend(std::iter::repeat(2).take(self.t));
        all
    }

    /// Read as `P_k + tP2` with `k ≥ 2` and `t ≥ 1`: returns `(k, t)`.
    /// `sP2` with `s ≥ 2` reads as `k = 2, t = s − 1`.
    pub fn as_path_plus_matching(&self) -> Option<(usize, usize)> {
        match (self.paths.as_slice(), self.t) {
            ([k], t) if t >= 1 => Some((*k, t)),
            ([], s) if s >= 2 => Some((2, s - 1)),
            _ => None,
        }
    }

    /// The forest as a graph: paths first (in the stored order), then pairs.
    pub fn pattern(&self) -> Result<Graph> {
        let mut g = Graph::empty(self.vertex_demand())?;
        let mut next = 0;
        for k in self.component_orders() {
            for i in 1..k {
                g.add_edge(next + i - 1, next + i);
            }
            next += k;
        }
        Ok(g)
    }
}

impl fmt::Display for LinearForestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.paths.iter().map(|k| format!("P{k}")).collect();
        match self.t {
            0 => {}
            1 => parts.push("P2".into()),
            t => parts.push(format!("{t}P2")),
        }
        f.write_str(&parts.join("+"))
    }
}

impl fmt::Debug for LinearForestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearForestSpec({self})")
    }
}

impl Serialize for LinearForestSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for LinearForestSpec {
    type Err = Error;

    /// Terms joined by `+`; each term is an optional multiplicity followed by
    /// `P<k>`. Examples: `P6+2P2`, `P5+P2`, `3P2`, `P4`.
    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let fail = |i: usize, message: &str| Error::SpecParse {
            column: i + 1,
            message: message.into(),
        };
        let number = |i: &mut usize| -> Option<usize> {
            let start = *i;
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
            s[start..*i].parse().ok()
        };
        if bytes.is_empty() {
            return Err(fail(0, "empty spec"));
        }
        let mut paths = Vec::new();
        let mut i = 0;
        loop {
            let term_start = i;
            let count = if bytes.get(i).is_some_and(u8::is_ascii_digit) {
                let c = number(&mut i).ok_or_else(|| fail(term_start, "bad multiplicity"))?;
                if c == 0 {
                    return Err(fail(term_start, "multiplicity must be positive"));
                }
                c
            } else {
                1
            };
            if bytes.get(i) != Some(&b'P') {
                return Err(fail(i, "expected 'P'"));
            }
            i += 1;
            let k_start = i;
            let k = number(&mut i).ok_or_else(|| fail(k_start, "expected path order"))?;
            if k < 2 {
                return Err(fail(k_start, "path order must be at least 2"));
            }
            paths.extend(std::iter::repeat(k).take(count));
            match bytes.get(i) {
                None => break,
                Some(b'+') => i += 1,
                Some(_) => return Err(fail(i, "expected '+' or end of input")),
            }
        }
        LinearForestSpec::new(paths, 0)
    }
}

/// An image of a linear forest in a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// One vertex sequence per long path, in spec order.
    pub path_images: Vec<Vec<usize>>,
    pub pair_images: Vec<(usize, usize)>,
}

impl Embedding {
    /// All vertices used by the image.
    pub fn vertex_set(&self) -> VertexSet {
        let mut set = 0;
        for p in &self.path_images {
            for &v in p {
                set |= bit(v);
            }
        }
        for &(u, v) in &self.pair_images {
            set |= bit(u) | bit(v);
        }
        set
    }

    /// Checks shape against `spec`, adjacency in `g`, and disjointness.
    pub fn is_valid_in(&self, g: &Graph, spec: &LinearForestSpec) -> bool {
        if self.pair_images.len() != spec.t() || self.path_images.len() != spec.paths().len() {
            return false;
        }
        let mut used = 0u64;
        let mut claim = |v: usize| {
            let fresh = v < g.order() && used & bit(v) == 0;
            used |= bit(v);
            fresh
        };
        for (img, &k) in self.path_images.iter().zip(spec.paths()) {
            if img.len() != k || !img.iter().all(|&v| claim(v)) {
                return false;
            }
            if !img.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                return false;
            }
        }
        self.pair_images
            .iter()
            .all(|&(u, v)| claim(u) && claim(v) && g.has_edge(u, v))
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .path_images
            .iter()
            .map(|p| {
                p.iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join("-")
            })
            .collect();
        parts.extend(self.pair_images.iter().map(|(u, v)| format!("{u}-{v}")));
        f.write_str(&parts.join(" "))
    }
}

/// Visit every `k`-vertex path inside `avail` once, in the orientation whose
/// first vertex is smaller than its last. The visitor may stop the walk.
fn for_each_path<F>(g: &Graph, k: usize, avail: VertexSet, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k == 0 {
        return ControlFlow::Continue(());
    }
    let mut stack = Vec::with_capacity(k);
    for start in members(avail) {
        stack.push(start);
        extend(g, k, avail & !bit(start), &mut stack, visit)?;
        stack.pop();
    }
    ControlFlow::Continue(())
}

fn extend<F>(
    g: &Graph,
    k: usize,
    avail: VertexSet,
    stack: &mut Vec<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let last = *stack.last().unwrap();
    if stack.len() == k {
        if k == 1 || stack[0] < last {
            return visit(stack);
        }
        return ControlFlow::Continue(());
    }
    let mut next = g.neighbors(last) & avail;
    if stack.len() + 1 == k && k > 1 {
        // The closing vertex must exceed the first one.
        next &= !crate::graph::full_mask(stack[0] + 1);
    }
    for w in members(next) {
        stack.push(w);
        extend(g, k, avail & !bit(w), stack, visit)?;
        stack.pop();
    }
    ControlFlow::Continue(())
}

/// Visit every `k`-vertex path in `avail` that uses the edge `ab`, traversed
/// with `a` before `b`. Each such path is visited exactly once.
fn for_each_path_through<F>(
    g: &Graph,
    k: usize,
    avail: VertexSet,
    (a, b): (usize, usize),
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if k < 2 || avail & bit(a) == 0 || avail & bit(b) == 0 || !g.has_edge(a, b) {
        return ControlFlow::Continue(());
    }
    let rest = avail & !bit(a) & !bit(b);
    // `left` grows away from a, stored a-first.
    let mut left = vec![a];
    for left_len in 1..k {
        let right_len = k - left_len;
        walk(g, left_len, rest, &mut left, &mut |l: &[usize]| {
            let used: VertexSet = l.iter().fold(0, |acc, &v| acc | bit(v));
            let mut right = vec![b];
            walk(g, right_len, rest & !used, &mut right, &mut |r: &[usize]| {
                let mut path: Vec<usize> = l.iter().rev().copied().collect();
                path.extend_from_slice(r);
                visit(&path)
            })
        })?;
    }
    ControlFlow::Continue(())
}

/// Simple walks of exactly `len` vertices starting with the current stack.
fn walk<F>(
    g: &Graph,
    len: usize,
    avail: VertexSet,
    stack: &mut Vec<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if stack.len() == len {
        return visit(stack);
    }
    let last = *stack.last().unwrap();
    for w in members(g.neighbors(last) & avail) {
        stack.push(w);
        walk(g, len, avail & !bit(w), stack, visit)?;
        stack.pop();
    }
    ControlFlow::Continue(())
}

/// A `k`-vertex path in `g`, if any.
pub fn contains_path(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k == 0 || k > g.order() {
        return None;
    }
    let mut found = None;
    let _ = for_each_path(g, k, g.vertex_set(), &mut |p: &[usize]| {
        found = Some(p.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Order of a longest path (0 for the null graph).
pub fn longest_path_order(g: &Graph) -> usize {
    let mut k = 0;
    while k < g.order() && contains_path(g, k + 1).is_some() {
        k += 1;
    }
    k
}

struct Embedder<'a> {
    g: &'a Graph,
    spec: &'a LinearForestSpec,
    images: Vec<Vec<usize>>,
}

impl Embedder<'_> {
    /// Remaining paths from index `i`, then the matching residue.
    fn place(&mut self, i: usize, avail: VertexSet, min_first: usize) -> Option<Embedding> {
        let paths = self.spec.paths();
        let rest_demand: usize = paths[i..].iter().map(|k| k / 2).sum::<usize>() + self.spec.t();
        if matching_number_within(self.g, avail) < rest_demand {
            return None;
        }
        if i == paths.len() {
            let m = max_matching_within(self.g, avail);
            return Some(Embedding {
                path_images: self.images.clone(),
                pair_images: m.edges.into_iter().take(self.spec.t()).collect(),
            });
        }
        let k = paths[i];
        let same_as_next = paths.get(i + 1) == Some(&k);
        let mut result = None;
        let g = self.g;
        let _ = for_each_path(g, k, avail, &mut |p: &[usize]| {
            let low = *p.iter().min().unwrap();
            if low < min_first {
                return ControlFlow::Continue(());
            }
            let used = p.iter().fold(0u64, |acc, &v| acc | bit(v));
            self.images.push(p.to_vec());
            let next_min = if same_as_next { low + 1 } else { 0 };
            let r = self.place(i + 1, avail & !used, next_min);
            self.images.pop();
            match r {
                Some(e) => {
                    result = Some(e);
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        });
        result
    }
}

/// A copy of `spec` in `g`, if one exists.
pub fn contains_linear_forest(g: &Graph, spec: &LinearForestSpec) -> Option<Embedding> {
    contains_within(g, spec, g.vertex_set())
}

fn contains_within(g: &Graph, spec: &LinearForestSpec, avail: VertexSet) -> Option<Embedding> {
    if spec.vertex_demand() > avail.count_ones() as usize {
        return None;
    }
    Embedder {
        g,
        spec,
        images: Vec::new(),
    }
    .place(0, avail, 0)
}

/// A copy of `spec` in `g` that uses the edge `(a, b)`, if one exists.
///
/// Every copy in `G + e` of a forest that `G` lacks must use `e`, so the
/// saturation check only needs this restricted search.
pub fn contains_linear_forest_using(
    g: &Graph,
    spec: &LinearForestSpec,
    (a, b): (usize, usize),
) -> Option<Embedding> {
    if !g.has_edge(a, b) || spec.vertex_demand() > g.order() {
        return None;
    }
    let all = g.vertex_set();
    // The edge is one of the pairs.
    if spec.t() > 0 {
        let reduced = LinearForestSpec {
            paths: spec.paths.clone(),
            t: spec.t - 1,
        };
        let found = if reduced.paths.is_empty() && reduced.t == 0 {
            Some(Embedding {
                path_images: Vec::new(),
                pair_images: Vec::new(),
            })
        } else {
            contains_within(g, &reduced, all & !bit(a) & !bit(b))
        };
        if let Some(mut e) = found {
            e.pair_images.insert(0, (a.min(b), a.max(b)));
            return Some(e);
        }
    }
    // The edge lies on one of the long paths; try each distinct length once.
    let paths = spec.paths();
    for (j, &k) in paths.iter().enumerate() {
        if j > 0 && paths[j - 1] == k {
            continue;
        }
        let mut others = paths.to_vec();
        others.remove(j);
        let rest_spec = LinearForestSpec {
            paths: others,
            t: spec.t,
        };
        let mut result = None;
        let _ = for_each_path_through(g, k, all, (a, b), &mut |p: &[usize]| {
            let used = p.iter().fold(0u64, |acc, &v| acc | bit(v));
            let found = if rest_spec.paths.is_empty() && rest_spec.t == 0 {
                Some(Embedding {
                    path_images: Vec::new(),
                    pair_images: Vec::new(),
                })
            } else {
                contains_within(g, &rest_spec, all & !used)
            };
            match found {
                Some(mut e) => {
                    e.path_images.insert(j, p.to_vec());
                    result = Some(e);
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        });
        if result.is_some() {
            return result;
        }
    }
    None
}

/// Vertex-demand cap of the brute-force reference.
pub const BRUTE_DEMAND_LIMIT: usize = 12;
/// Host-order cap of the brute-force reference.
pub const BRUTE_ORDER_LIMIT: usize = 10;

fn check_brute_limits(g: &Graph, spec: &LinearForestSpec) -> Result<()> {
    if spec.vertex_demand() > BRUTE_DEMAND_LIMIT || g.order() > BRUTE_ORDER_LIMIT {
        return Err(Error::OutOfRange(format!(
            "brute force needs demand <= {BRUTE_DEMAND_LIMIT} and order <= {BRUTE_ORDER_LIMIT}, got {} and {}",
            spec.vertex_demand(),
            g.order()
        )));
    }
    Ok(())
}

/// Visit every injective map from the forest's vertices (as laid out by
/// [`LinearForestSpec::pattern`]) into `g` that sends edges to edges.
pub fn for_each_brute_embedding<F>(g: &Graph, spec: &LinearForestSpec, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    check_brute_limits(g, spec)?;
    let pattern = spec.pattern()?;
    let mut assign = Vec::with_capacity(pattern.order());
    let _ = assign_next(g, &pattern, 0, &mut assign, &mut visit);
    Ok(())
}

fn assign_next<F>(
    g: &Graph,
    pattern: &Graph,
    used: VertexSet,
    assign: &mut Vec<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let i = assign.len();
    if i == pattern.order() {
        return visit(assign);
    }
    for host in 0..g.order() {
        if used & bit(host) != 0 {
            continue;
        }
        let ok = members(pattern.neighbors(i) & crate::graph::full_mask(i))
            .all(|j| g.has_edge(assign[j], host));
        if !ok {
            continue;
        }
        assign.push(host);
        assign_next(g, pattern, used | bit(host), assign, visit)?;
        assign.pop();
    }
    ControlFlow::Continue(())
}

/// Reference containment test by exhaustive injective assignment.
pub fn brute_force_contains(g: &Graph, spec: &LinearForestSpec) -> Result<bool> {
    let mut found = false;
    for_each_brute_embedding(g, spec, |_| {
        found = true;
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Convert a brute-force assignment into an [`Embedding`].
pub fn embedding_from_assignment(spec: &LinearForestSpec, assign: &[usize]) -> Embedding {
    let mut next = 0;
    let mut path_images = Vec::new();
    for &k in spec.paths() {
        path_images.push(assign[next..next + k].to_vec());
        next += k;
    }
    let pair_images = (0..spec.t())
        .map(|i| (assign[next + 2 * i], assign[next + 2 * i + 1]))
        .collect();
    Embedding {
        path_images,
        pair_images,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> LinearForestSpec {
        s.parse().unwrap()
    }

    fn tree_t() -> Graph {
        Graph::from_edges(
            10,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7), (3, 8), (3, 9)],
        )
        .unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(spec("P6+2P2").to_string(), "P6+2P2");
        assert_eq!(spec("P2+P5").to_string(), "P5+P2");
        assert_eq!(spec("3P2").t(), 3);
        assert!(spec("3P2").paths().is_empty());
        assert_eq!(spec("P4").paths(), &[4]);
        assert_eq!(spec("2P3+P2").paths(), &[3, 3]);
        assert_eq!(spec("P6+2P2").vertex_demand(), 10);
    }

    #[test]
    fn parse_errors_cite_columns() {
        let col = |s: &str| match s.parse::<LinearForestSpec>() {
            Err(Error::SpecParse { column, .. }) => column,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(col("Q6"), 1);
        assert_eq!(col("P6+"), 4);
        assert_eq!(col("P6 +P2"), 3);
        assert_eq!(col("P1"), 2);
        assert_eq!(col("P6+0P2"), 4);
        assert_eq!(col(""), 1);
    }

    #[test]
    fn paths_in_tree_t() {
        assert!(contains_path(&tree_t(), 6).is_none());
        let p = contains_path(&tree_t(), 5).unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.windows(2).all(|w| tree_t().has_edge(w[0], w[1])));
        assert_eq!(longest_path_order(&tree_t()), 5);
        assert!(contains_path(&Graph::complete(6).unwrap(), 6).is_some());
    }

    #[test]
    fn forest_examples() {
        let k7 = Graph::complete(7).unwrap();
        let g = k7.disjoint_union(&Graph::empty(5).unwrap()).unwrap();
        assert!(contains_linear_forest(&g, &spec("P6+P2")).is_none());
        assert!(!brute_force_contains(&k7, &spec("P6+P2")).unwrap());

        let k8 = Graph::complete(8).unwrap();
        let e = contains_linear_forest(&k8, &spec("P6+P2")).unwrap();
        assert!(e.is_valid_in(&k8, &spec("P6+P2")));

        let k3 = Graph::complete(3).unwrap();
        let g = k3.copies(2).unwrap().disjoint_union(&Graph::empty(3).unwrap()).unwrap();
        assert!(contains_linear_forest(&g, &spec("3P2")).is_none());
        assert!(contains_linear_forest(&g, &spec("2P2")).is_some());
    }

    #[test]
    fn brute_examples() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(brute_force_contains(&p5, &spec("P5")).unwrap());
        assert!(!brute_force_contains(&Graph::empty(4).unwrap(), &spec("P2")).unwrap());
        assert!(brute_force_contains(&Graph::empty(11).unwrap(), &spec("P2")).is_err());
        assert!(brute_force_contains(&Graph::empty(4).unwrap(), &spec("P6+4P2")).is_err());
    }

    #[test]
    fn equal_paths_are_not_double_counted_away() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let two = p3.copies(2).unwrap();
        let e = contains_linear_forest(&two, &spec("2P3")).unwrap();
        assert!(e.is_valid_in(&two, &spec("2P3")));
        assert!(contains_linear_forest(&p3, &spec("2P3")).is_none());
    }

    #[test]
    fn forced_edge_search() {
        let k7 = Graph::complete(7).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let g = k7
            .disjoint_union(&k3)
            .unwrap()
            .disjoint_union(&Graph::empty(2).unwrap())
            .unwrap();
        let s = spec("P6+2P2");
        assert!(contains_linear_forest(&g, &s).is_none());
        for (u, v) in g.complement_edges() {
            let h = g.with_edge(u, v);
            let e = contains_linear_forest_using(&h, &s, (u, v)).unwrap();
            assert!(e.is_valid_in(&h, &s));
            let vs = e.vertex_set();
            assert!(vs & bit(u) != 0 && vs & bit(v) != 0);
        }
    }

    #[test]
    fn embedding_validation_rejects_overlap() {
        let k4 = Graph::complete(4).unwrap();
        let s = spec("P3+P2");
        let bad = Embedding {
            path_images: vec![vec![0, 1, 2]],
            pair_images: vec![(2, 3)],
        };
        assert!(!bad.is_valid_in(&k4, &s));
        let short = Embedding {
            path_images: vec![vec![0, 1]],
            pair_images: vec![(2, 3)],
        };
        assert!(!short.is_valid_in(&k4, &s));
    }
}
