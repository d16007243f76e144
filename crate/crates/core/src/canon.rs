//! Canonical labelling by partition refinement and a pruned search over
//! individualisation sequences.
//!
//! The search keeps the lexicographically largest relabelled adjacency
//! matrix seen at a leaf. Equal leaves expose automorphisms; those are used
//! to skip children lying in an already explored orbit, and to abandon a
//! subtree as soon as it is known to be the image of one already searched.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{bit, members, Graph};
use crate::graph6::to_graph6;

/// The graph6 string of the canonically relabelled graph. Two graphs have
/// the same form exactly when they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }

    /// Wrap a graph that is already canonically labelled.
    pub(crate) fn from_canonical(g: &Graph) -> Self {
        CanonicalForm(to_graph6(g))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `relabel[v]` is the canonical label of vertex `v`.
    pub relabel: Vec<usize>,
    /// The relabelled graph. Isomorphic inputs give equal values.
    pub graph: Graph,
    /// Automorphisms discovered during the search (each as an image table).
    /// They generate a subgroup of the automorphism group.
    pub automorphisms: Vec<Vec<usize>>,
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling {
            relabel: Vec::new(),
            graph: g.clone(),
            automorphisms: Vec::new(),
        };
    }
    let mut cells = vec![g.vertex_set()];
    refine(g, &mut cells, VecDeque::from([g.vertex_set()]));
    let mut search = Search {
        g,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    search.descend(cells, &mut prefix);
    let best = search.best.expect("at least one leaf");
    let mut relabel = vec![0; n];
    for (i, &v) in best.order.iter().enumerate() {
        relabel[v] = i;
    }
    Labeling {
        relabel,
        graph: best.graph,
        automorphisms: search.automorphisms,
    }
}

/// The canonically relabelled graph.
pub fn canonical_graph(g: &Graph) -> Graph {
    canonical_labeling(g).graph
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(to_graph6(&canonical_graph(g)))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_vector() == b.degree_vector()
        && canonical_graph(a) == canonical_graph(b)
}

/// Split every cell by neighbour counts into the queued splitters until the
/// ordered partition is equitable. Depends only on the cell order, so it
/// commutes with relabelling.
fn refine(g: &Graph, cells: &mut Vec<u64>, mut queue: VecDeque<u64>) {
    let mut counts: Vec<(u32, usize)> = Vec::with_capacity(g.order());
    while let Some(splitter) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell.count_ones() < 2 {
                i += 1;
                continue;
            }
            counts.clear();
            counts.extend(members(cell).map(|v| ((g.neighbors(v) & splitter).count_ones(), v)));
            let lo = counts.iter().map(|c| c.0).min().unwrap();
            let hi = counts.iter().map(|c| c.0).max().unwrap();
            if lo == hi {
                i += 1;
                continue;
            }
            counts.sort_unstable();
            let mut pieces: Vec<u64> = Vec::new();
            let mut current = counts[0].0;
            let mut piece = 0u64;
            for &(c, v) in counts.iter() {
                if c != current {
                    pieces.push(piece);
                    piece = 0;
                    current = c;
                }
                piece |= bit(v);
            }
            pieces.push(piece);
            let k = pieces.len();
            cells.splice(i..=i, pieces.iter().copied());
            queue.extend(pieces);
            i += k;
        }
    }
}

struct Leaf {
    order: Vec<usize>,
    graph: Graph,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

/// Where to resume after a leaf: `None` continues normally, `Some(d)`
/// unwinds to the node at depth `d`.
type Jump = Option<usize>;

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) -> Jump {
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            return self.leaf(&cells, prefix);
        };
        let depth = prefix.len();
        let mut explored: Vec<usize> = Vec::new();
        let mut orbit_gens = 0;
        let mut orbits: Vec<usize> = Vec::new();
        for v in members(cells[target]) {
            if !explored.is_empty() {
                if orbit_gens != self.automorphisms.len() {
                    orbits = self.stabiliser_orbits(prefix);
                    orbit_gens = self.automorphisms.len();
                }
                if !orbits.is_empty() && explored.iter().any(|&u| orbits[u] == orbits[v]) {
                    continue;
                }
            }
            let mut child = cells.clone();
            child.splice(target..=target, [bit(v), cells[target] & !bit(v)]);
            refine(self.g, &mut child, VecDeque::from([bit(v)]));
            prefix.push(v);
            let jump = self.descend(child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < depth {
                    return jump;
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Jump {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let mut relabel = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            relabel[v] = i;
        }
        let graph = self.g.permuted(&relabel);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                order,
                graph,
                path: prefix.to_vec(),
            };
            self.best = Some(Leaf {
                order: leaf.order.clone(),
                graph: leaf.graph.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if graph == first.graph {
            let gamma = map_between(&first.order, &order);
            let d = common_prefix(&first.path, prefix);
            self.automorphisms.push(gamma);
            return Some(d);
        }
        let best = self.best.as_ref().unwrap();
        match graph.cmp(&best.graph) {
            std::cmp::Ordering::Greater => {
                self.best = Some(Leaf {
                    order,
                    graph,
                    path: prefix.to_vec(),
                });
                None
            }
            std::cmp::Ordering::Equal => {
                let gamma = map_between(&best.order, &order);
                let d = common_prefix(&best.path, prefix);
                self.automorphisms.push(gamma);
                Some(d)
            }
            std::cmp::Ordering::Less => None,
        }
    }

    /// Orbit representatives under the discovered automorphisms that fix
    /// `prefix` pointwise. Empty when there are none.
    fn stabiliser_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            any = true;
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        if !any {
            return Vec::new();
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn map_between(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::parse_graph6;

    #[test]
    fn relabelled_paths_agree() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn triangle_plus_point_differs_from_star() {
        let k3k1 = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let s4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&k3k1), canonical_form(&s4));
    }

    #[test]
    fn automorphisms_are_automorphisms() {
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        let lab = canonical_labeling(&petersen);
        assert!(!lab.automorphisms.is_empty());
        for gamma in &lab.automorphisms {
            assert_eq!(petersen.permuted(gamma), petersen);
        }
        assert_eq!(petersen.permuted(&lab.relabel), lab.graph);
    }

    #[test]
    fn highly_symmetric_graphs_are_fast() {
        for n in [0, 1, 20, 40, 64] {
            let e = Graph::empty(n).unwrap();
            assert_eq!(canonical_graph(&e), e);
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_graph(&k), k);
        }
        let k3 = Graph::complete(3).unwrap();
        let many = k3.copies(12).unwrap();
        let shuffled = many.permuted(&(0..36).map(|v| (v * 7) % 36).collect::<Vec<_>>());
        assert!(is_isomorphic(&many, &shuffled));
    }
}
