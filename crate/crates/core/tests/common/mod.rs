//! Reference implementations shared by the integration tests. They avoid
//! the library's canonical labelling and enumeration entirely.

#![allow(dead_code)]

use std::collections::HashSet;

use forest_sat::graph::Graph;

/// Vertex pairs of order `n` in a fixed order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The graph whose edge set is `mask` over [`pairs`].
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Labels every labelled graph of order `n` by the smallest edge mask in
/// its isomorphism class, found by trying all `n!` relabellings.
pub struct PermutationOracle {
    n: usize,
    /// For each permutation, the image of each pair index.
    maps: Vec<Vec<usize>>,
}

impl PermutationOracle {
    pub fn new(n: usize) -> Self {
        let ps = pairs(n);
        let index = |u: usize, v: usize| ps.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
        let maps = permutations(n)
            .into_iter()
            .map(|p| ps.iter().map(|&(u, v)| index(p[u], p[v])).collect())
            .collect();
        PermutationOracle { n, maps }
    }

    pub fn key(&self, mask: u64) -> u64 {
        self.maps
            .iter()
            .map(|m| {
                m.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u64, |acc, (_, &j)| acc | 1 << j)
            })
            .min()
            .unwrap()
    }

    pub fn key_of(&self, g: &Graph) -> u64 {
        let mask = pairs(self.n)
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| g.has_edge(u, v))
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        self.key(mask)
    }

    /// One representative per isomorphism class: the minimal mask.
    pub fn classes(&self) -> Vec<Graph> {
        let count = pairs(self.n).len();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for mask in 0..1u64 << count {
            let k = self.key(mask);
            if seen.insert(k) {
                out.push(labeled_graph(self.n, k));
            }
        }
        out
    }
}
