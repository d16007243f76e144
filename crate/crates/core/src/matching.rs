//! Maximum matching (Edmonds' blossom algorithm) and the Berge–Tutte
//! deficiency formula, computed independently by scanning every vertex
//! subset.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, members, Graph, VertexSet};

/// Largest order accepted by [`berge_tutte_min`]: it visits all 2^n subsets.
pub const BERGE_TUTTE_LIMIT: usize = 20;

const NONE: usize = usize::MAX;

/// A set of pairwise disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Checks that every pair is an edge of `g` and no vertex is reused.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = 0u64;
        self.edges.iter().all(|&(u, v)| {
            let ok = u < g.order()
                && v < g.order()
                && g.has_edge(u, v)
                && used & (bit(u) | bit(v)) == 0;
            used |= bit(u) | bit(v);
            ok
        })
    }
}

/// A witness set S for the Berge–Tutte minimum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeficiencyCertificate {
    pub witness_set: Vec<usize>,
    /// Number of odd-order components of G − S.
    pub odd_components: usize,
    /// ½(|G| + |S| − o(G − S)).
    pub value: usize,
}

/// Maximum matching of `g`.
pub fn max_matching(g: &Graph) -> Matching {
    max_matching_within(g, g.vertex_set())
}

/// Maximum matching of the subgraph induced by `alive`.
pub fn max_matching_within(g: &Graph, alive: VertexSet) -> Matching {
    let mate = Blossom::new(g, alive).run();
    let edges = (0..g.order())
        .filter(|&v| mate[v] != NONE && v < mate[v])
        .map(|v| (v, mate[v]))
        .collect();
    Matching { edges }
}

/// α′ of the subgraph induced by `alive`.
pub fn matching_number_within(g: &Graph, alive: VertexSet) -> usize {
    let mate = Blossom::new(g, alive).run();
    mate.iter().filter(|&&m| m != NONE).count() / 2
}

pub fn matching_number(g: &Graph) -> usize {
    matching_number_within(g, g.vertex_set())
}

struct Blossom<'a> {
    g: &'a Graph,
    alive: VertexSet,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph, alive: VertexSet) -> Self {
        let n = g.order();
        Blossom {
            g,
            alive: alive & g.vertex_set(),
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn run(mut self) -> Vec<usize> {
        // Greedy seed.
        let mut free = self.alive;
        for v in members(self.alive) {
            if free & bit(v) == 0 {
                continue;
            }
            let cand = self.g.neighbors(v) & free;
            if cand != 0 {
                let w = cand.trailing_zeros() as usize;
                self.mate[v] = w;
                self.mate[w] = v;
                free &= !(bit(v) | bit(w));
            }
        }
        for root in members(self.alive) {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_path(root) {
                self.augment(end);
            }
        }
        self.mate
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = 0u64;
        loop {
            a = self.base[a];
            seen |= bit(a);
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen & bit(b) != 0 {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        for v in members(self.alive) {
            self.used[v] = false;
            self.parent[v] = NONE;
            self.base[v] = v;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in members(self.g.neighbors(v) & self.alive) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    for u in members(self.alive) {
                        self.in_blossom[u] = false;
                    }
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in members(self.alive) {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                self.queue.push(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }
}

/// Number of odd-order components of the subgraph induced by `within`.
pub fn odd_components_within(g: &Graph, within: VertexSet) -> usize {
    let mut rest = within & g.vertex_set();
    let mut odd = 0;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        let c = g.reach(v, rest);
        odd += (c.count_ones() & 1) as usize;
        rest &= !c;
    }
    odd
}

/// Minimise ½(|G| + |S| − o(G − S)) over every S ⊆ V(G). Among minimisers
/// the numerically smallest bit mask is returned.
pub fn berge_tutte_min(g: &Graph) -> Result<DeficiencyCertificate> {
    berge_tutte_min_with_limit(g, BERGE_TUTTE_LIMIT)
}

pub fn berge_tutte_min_with_limit(g: &Graph, limit: usize) -> Result<DeficiencyCertificate> {
    let n = g.order();
    if n > limit {
        return Err(Error::OutOfRange(format!(
            "Berge-Tutte scan needs order <= {limit}, got {n}"
        )));
    }
    let all = g.vertex_set();
    let mut best: Option<(usize, u64, usize)> = None;
    for s in 0..(1u64 << n) {
        let odd = odd_components_within(g, all & !s);
        let twice = n + s.count_ones() as usize - odd;
        if best.map_or(true, |(b, _, _)| twice < b) {
            best = Some((twice, s, odd));
        }
    }
    let (twice, s, odd) = best.expect("at least the empty set");
    Ok(DeficiencyCertificate {
        witness_set: members(s).collect(),
        odd_components: odd,
        value: twice / 2,
    })
}

/// Both sides of the Berge–Tutte formula agree on `g`.
pub fn verify_berge_tutte(g: &Graph) -> Result<bool> {
    Ok(max_matching(g).size() == berge_tutte_min(g)?.value)
}
