//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Vertices are the dense indices `0..order`. Each adjacency row is a single
//! `u64`, so neighbourhood and vertex-set operations are word operations.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order: one adjacency row per machine word.
pub const MAX_ORDER: usize = 64;

/// A set of vertices as a bit mask.
pub type VertexSet = u64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterate the members of a vertex set in increasing order.
#[inline]
pub fn members(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// A simple undirected graph.
///
/// Adjacency is symmetric, loop-free and confined to `0..order`; every
/// constructor and mutator maintains that.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderOverflow {
                order,
                cap: MAX_ORDER,
            });
        }
        Ok(Graph {
            order,
            adj: [0; MAX_ORDER],
        })
    }

    /// Build a graph from an edge list. Duplicate edges are merged.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Build a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let mut g = Graph::empty(rows.len())?;
        let mask = full_mask(rows.len());
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 || row & bit(v) != 0 {
                return Err(Error::InvalidGraph(format!("bad adjacency row {v}")));
            }
            g.adj[v] = row;
        }
        for u in 0..g.order {
            for v in members(g.adj[u]) {
                if !g.has_edge(v, u) {
                    return Err(Error::InvalidGraph(format!("asymmetric pair {u},{v}")));
                }
            }
        }
        Ok(g)
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        let all = full_mask(order);
        for v in 0..order {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        full_mask(self.order)
    }

    /// Adjacency rows, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order]
    }

    /// Open neighbourhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood N[v].
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v] | bit(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Insert an edge. Panics on a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v || u >= self.order || v >= self.order {
            return Err(Error::InvalidGraph(format!(
                "edge {u}-{v} invalid for order {}",
                self.order
            )));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            for v in members(self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn complement_edges(&self) -> Vec<(usize, usize)> {
        let all = self.vertex_set();
        let mut out = Vec::new();
        for u in 0..self.order {
            for v in members(all & !self.adj[u] & !full_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Degrees sorted non-increasingly.
    pub fn degree_vector(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// δ(G); zero for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// V_i(G): vertices of degree exactly `i`.
    pub fn vertices_of_degree(&self, i: usize) -> VertexSet {
        (0..self.order)
            .filter(|&v| self.degree(v) == i)
            .fold(0, |acc, v| acc | bit(v))
    }

    /// Number of isolated vertices, |V_0(G)|.
    pub fn isolated_count(&self) -> usize {
        self.vertices_of_degree(0).count_ones() as usize
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// smallest member.
    pub fn component_masks_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertex_set();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let c = self.reach(v, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    pub fn component_masks(&self) -> Vec<VertexSet> {
        self.component_masks_within(self.vertex_set())
    }

    /// Partition of the vertex set into maximal connected sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.component_masks()
            .into_iter()
            .map(|m| members(m).collect())
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.reach(0, self.vertex_set()) == self.vertex_set()
    }

    /// Number of edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        members(set)
            .map(|v| (self.adj[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` preserving order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = members(set & self.vertex_set()).collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(verts.len()).expect("subset of a valid order");
        for (i, &v) in verts.iter().enumerate() {
            g.adj[i] = members(self.adj[v] & set).fold(0, |acc, w| acc | bit(index[w]));
        }
        g
    }

    /// Disjoint union: `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let order = self.order + other.order;
        let mut g = Graph::empty(order)?;
        g.adj[..self.order].copy_from_slice(self.rows());
        for (i, &row) in other.rows().iter().enumerate() {
            g.adj[self.order + i] = row << self.order;
        }
        Ok(g)
    }

    /// Join: the disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_set();
        let right = other.vertex_set() << self.order;
        for v in members(left) {
            g.adj[v] |= right;
        }
        for v in members(right) {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// `count` disjoint copies of `self`.
    pub fn copies(&self, count: usize) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for _ in 0..count {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length");
        let mut g = Graph::empty(self.order).expect("same order");
        for v in 0..self.order {
            g.adj[perm[v]] = members(self.adj[v]).fold(0, |acc, w| acc | bit(perm[w]));
        }
        g
    }

    /// A connected graph with `order - 1` edges; the null graph is not a tree.
    pub fn is_tree(&self) -> bool {
        self.order >= 1 && self.is_connected() && self.size() + 1 == self.order
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.order, self.edges())
    }
}

/// Degree-sorted list, exposed as a free function for symmetry with the
/// other graph queries.
pub fn degree_vector(g: &Graph) -> Vec<usize> {
    g.degree_vector()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn degree_vectors() {
        assert_eq!(Graph::complete(3).unwrap().degree_vector(), vec![2, 2, 2]);
        assert_eq!(Graph::empty(5).unwrap().degree_vector(), vec![0; 5]);
    }

    #[test]
    fn components_of_unions() {
        let g = Graph::complete(3)
            .unwrap()
            .disjoint_union(&Graph::empty(2).unwrap())
            .unwrap();
        let mut sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 3]);

        let k3 = Graph::complete(3).unwrap();
        let g = Graph::complete(7)
            .unwrap()
            .disjoint_union(&k3.copies(2).unwrap())
            .unwrap()
            .disjoint_union(&Graph::empty(3).unwrap())
            .unwrap();
        let mut sizes: Vec<usize> = g.components().iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(sizes, vec![7, 3, 3, 1, 1, 1]);

        assert_eq!(path(6).components().len(), 1);
    }

    #[test]
    fn complement_edges_counts() {
        assert!(Graph::complete(4).unwrap().complement_edges().is_empty());
        assert_eq!(Graph::empty(3).unwrap().complement_edges().len(), 3);
        assert_eq!(path(3).complement_edges(), vec![(0, 2)]);
    }

    #[test]
    fn union_and_join() {
        let k3 = Graph::complete(3).unwrap();
        let g = k3.disjoint_union(&k3).unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        assert_eq!(Graph::empty(0).unwrap().disjoint_union(&g).unwrap(), g);

        let ehm = Graph::complete(2)
            .unwrap()
            .join(&Graph::empty(4).unwrap())
            .unwrap();
        assert_eq!(ehm.size(), 9);
        let star = Graph::empty(1)
            .unwrap()
            .join(&Graph::empty(5).unwrap())
            .unwrap();
        assert_eq!(star.degree_vector(), vec![5, 1, 1, 1, 1, 1]);
        assert_eq!(Graph::empty(0).unwrap().join(&k3).unwrap(), k3);
    }

    #[test]
    fn order_overflow_is_an_error() {
        let big = Graph::empty(40).unwrap();
        assert!(matches!(
            big.disjoint_union(&big),
            Err(Error::OrderOverflow { order: 80, .. })
        ));
        assert!(Graph::empty(65).is_err());
        assert!(Graph::complete(64).is_ok());
    }

    #[test]
    fn induced_and_permuted() {
        let p = path(5);
        let mid = p.induced(0b01110);
        assert_eq!(mid, path(3));
        let q = p.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(q, p);
        assert!(p.is_tree());
        assert!(!Graph::empty(2).unwrap().is_tree());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(&[0b10, 0b00]).is_err());
        assert!(Graph::from_rows(&[0b01]).is_err());
        assert_eq!(Graph::from_rows(&[0b10, 0b01]).unwrap().size(), 1);
    }
}
