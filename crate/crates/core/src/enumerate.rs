//! Isomorph-free generation of all graphs of a given order by canonical
//! edge augmentation.
//!
//! Each graph `G'` has a canonical deletion edge `e*`: among the edges with
//! the largest `(deg u + deg v, |N(u) ∩ N(v)|)`, the one whose canonical image
//! is lexicographically last. A child `G + e` is kept only when
//! `G' − e* ≅ G`, which makes `G` the unique parent class of `G'`. Children
//! of one parent are further deduplicated by canonical form, so no global
//! seen-set is needed and disjoint subtrees can be walked independently.

use std::collections::HashSet;
use std::io::BufRead;

use rayon::prelude::*;

use crate::canon::{canonical_labeling, Labeling};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// Largest order the built-in generator accepts.
pub const ENUM_ORDER_LIMIT: usize = 10;

/// Filters applied to the generated stream.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumFilter {
    pub max_edges: Option<usize>,
    pub min_degree: usize,
    pub connected_only: bool,
}

impl EnumFilter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn with_max_edges(mut self, m: usize) -> Self {
        self.max_edges = Some(m);
        self
    }

    pub fn with_min_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.max_edges.map_or(true, |m| g.size() <= m)
            && g.min_degree() >= self.min_degree
            && (!self.connected_only || g.is_connected())
    }

    /// False when no supergraph within the edge budget can pass.
    fn subtree_viable(&self, g: &Graph) -> bool {
        let Some(max) = self.max_edges else {
            return true;
        };
        let m = g.size();
        if m > max {
            return false;
        }
        let deficit: usize = (0..g.order())
            .map(|v| self.min_degree.saturating_sub(g.degree(v)))
            .sum();
        deficit <= 2 * (max - m)
    }
}

/// Subtree pruning hook. It must be closed under edge deletion: if it
/// rejects `G` it must reject every supergraph of `G` on the same vertices.
pub type Prune<'a> = &'a (dyn Fn(&Graph) -> bool + Sync);

struct Node {
    graph: Graph,
    labeling: Labeling,
}

impl Node {
    fn new(graph: Graph) -> Self {
        let labeling = canonical_labeling(&graph);
        Node { graph, labeling }
    }
}

fn edge_key(g: &Graph, u: usize, v: usize) -> (usize, u32) {
    (
        g.degree(u) + g.degree(v),
        (g.neighbors(u) & g.neighbors(v)).count_ones(),
    )
}

/// Representatives of the non-edges of `g` under the known automorphisms,
/// each the lexicographically first member of its orbit.
fn non_edge_representatives(node: &Node) -> Vec<(usize, usize)> {
    let g = &node.graph;
    let n = g.order();
    let non_edges = g.complement_edges();
    if node.labeling.automorphisms.is_empty() {
        return non_edges;
    }
    let idx = |u: usize, v: usize| u.min(v) * n + u.max(v);
    let mut parent: Vec<usize> = (0..n * n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gamma in &node.labeling.automorphisms {
        for &(u, v) in &non_edges {
            let a = find(&mut parent, idx(u, v));
            let b = find(&mut parent, idx(gamma[u], gamma[v]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    non_edges
        .into_iter()
        .filter(|&(u, v)| find(&mut parent, idx(u, v)) == idx(u, v))
        .collect()
}

fn children(node: &Node) -> Vec<Node> {
    let mut seen: HashSet<Graph> = HashSet::new();
    let mut out = Vec::new();
    for (u, v) in non_edge_representatives(node) {
        let child = node.graph.with_edge(u, v);
        let key = edge_key(&child, u, v);
        let edges = child.edges();
        if edges.iter().any(|&(a, b)| edge_key(&child, a, b) > key) {
            continue;
        }
        let labeling = canonical_labeling(&child);
        let relabel = &labeling.relabel;
        let image = |a: usize, b: usize| {
            let (x, y) = (relabel[a], relabel[b]);
            (x.max(y), x.min(y))
        };
        let star = edges
            .iter()
            .copied()
            .filter(|&(a, b)| edge_key(&child, a, b) == key)
            .max_by_key(|&(a, b)| image(a, b))
            .expect("the added edge is a candidate");
        let accept = if star == (u, v) {
            true
        } else {
            let mut parent = child.clone();
            parent.remove_edge(star.0, star.1);
            canonical_labeling(&parent).graph == node.labeling.graph
        };
        if accept && seen.insert(labeling.graph.clone()) {
            out.push(Node {
                graph: child,
                labeling,
            });
        }
    }
    out
}

fn check_order(n: usize) -> Result<()> {
    if n > ENUM_ORDER_LIMIT {
        return Err(Error::OutOfRange(format!(
            "built-in enumeration supports order <= {ENUM_ORDER_LIMIT}, got {n}"
        )));
    }
    Ok(())
}

fn viable(node: &Node, filter: &EnumFilter, prune: Option<Prune<'_>>) -> bool {
    filter.subtree_viable(&node.graph) && prune.map_or(true, |p| p(&node.graph))
}

fn dfs<F: FnMut(&Graph)>(node: &Node, filter: &EnumFilter, prune: Option<Prune<'_>>, visit: &mut F) {
    if filter.accepts(&node.graph) {
        visit(&node.graph);
    }
    for child in children(node) {
        if viable(&child, filter, prune) {
            dfs(&child, filter, prune, visit);
        }
    }
}

fn root(n: usize) -> Node {
    Node::new(Graph::empty(n).expect("order checked"))
}

/// Visit one graph per isomorphism class of order `n` passing `filter`, in
/// depth-first generation order.
pub fn for_each_graph<F: FnMut(&Graph)>(n: usize, filter: EnumFilter, mut visit: F) -> Result<()> {
    check_order(n)?;
    let r = root(n);
    if viable(&r, &filter, None) {
        dfs(&r, &filter, None, &mut visit);
    }
    Ok(())
}

/// All graphs of order `n` passing `filter`, one per isomorphism class.
pub fn enumerate_graphs(n: usize, filter: EnumFilter) -> Result<Vec<Graph>> {
    enumerate_map(n, filter, None, |g| Some(g.clone()))
}

pub fn count_graphs(n: usize, filter: EnumFilter) -> Result<usize> {
    enumerate_map(n, filter, None, |_| Some(())).map(|v| v.len())
}

enum Task {
    Emit(Graph),
    Subtree(Node),
}

/// Depth at which the generation tree is cut into independent subtrees.
const SPLIT_DEPTH: usize = 3;

fn collect_tasks(node: Node, depth: usize, filter: &EnumFilter, prune: Option<Prune<'_>>, out: &mut Vec<Task>) {
    if depth == SPLIT_DEPTH {
        out.push(Task::Subtree(node));
        return;
    }
    if filter.accepts(&node.graph) {
        out.push(Task::Emit(node.graph.clone()));
    }
    for child in children(&node) {
        if viable(&child, filter, prune) {
            collect_tasks(child, depth + 1, filter, prune, out);
        }
    }
}

/// Apply `f` to every generated graph, in parallel on the current rayon
/// pool, and return the `Some` results in generation order. The result does
/// not depend on the number of worker threads.
pub fn enumerate_map<T, F>(n: usize, filter: EnumFilter, prune: Option<Prune<'_>>, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Graph) -> Option<T> + Sync,
{
    check_order(n)?;
    let r = root(n);
    if !viable(&r, &filter, prune) {
        return Ok(Vec::new());
    }
    let mut tasks = Vec::new();
    collect_tasks(r, 0, &filter, prune, &mut tasks);
    let parts: Vec<Vec<T>> = tasks
        .into_par_iter()
        .map(|task| match task {
            Task::Emit(g) => f(&g).into_iter().collect(),
            Task::Subtree(node) => {
                let mut out = Vec::new();
                dfs(&node, &filter, prune, &mut |g: &Graph| {
                    if let Some(x) = f(g) {
                        out.push(x);
                    }
                });
                out
            }
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Run `work` on a rayon pool with `jobs` threads (0 means the default).
pub fn with_jobs<R: Send>(jobs: usize, work: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        return work();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(work)
}

/// Parse graph6 lines in order. Blank lines are skipped; errors carry the
/// 1-based line number.
pub fn read_graph6_stream<R: BufRead>(source: R) -> impl Iterator<Item = Result<Graph>> {
    source.lines().enumerate().filter_map(|(i, line)| {
        let line = match line {
            Ok(l) => l,
            Err(e) => return Some(Err(Error::Io(e))),
        };
        if line.trim().is_empty() {
            return None;
        }
        Some(parse_graph6(&line).map_err(|e| Error::Line {
            line: i + 1,
            source: Box::new(e),
        }))
    })
}

/// Graphs from an external stream, keeping the first of each isomorphism
/// class. External corpora are not assumed to be isomorph-free.
pub fn dedup_by_isomorphism(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert(canonical_labeling(g).graph))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| count_graphs(n, EnumFilter::all()).unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| count_graphs(n, EnumFilter::all().connected()).unwrap())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn no_duplicates_at_six() {
        let gs = enumerate_graphs(6, EnumFilter::all()).unwrap();
        let forms: HashSet<_> = gs.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), gs.len());
    }

    #[test]
    fn order_limit() {
        assert!(enumerate_graphs(11, EnumFilter::all()).is_err());
    }

    #[test]
    fn stream_reading() {
        let text = "Bw\n\nBg\n@\n";
        let gs: Vec<_> = read_graph6_stream(text.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(gs.len(), 3);
        assert_eq!(read_graph6_stream("".as_bytes()).count(), 0);
        let bad: Vec<_> = read_graph6_stream("Bw\nB!\n".as_bytes()).collect();
        match &bad[1] {
            Err(Error::Line { line, .. }) => assert_eq!(*line, 2),
            other => panic!("{other:?}"),
        }
    }
}
