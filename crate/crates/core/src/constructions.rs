//! Generators for the named graphs: complete/empty/star/path graphs, books,
//! fans, the Erdős–Hajnal–Moon graph, the extremal families for
//! `P_k + tP2` saturation, the spider trees `T` and `T*`, and `G*`.
//!
//! Labelling convention: the fixed dense part comes first, then the
//! triangles, then isolated vertices. Trees put the centre at 0, its
//! children next, and leaves last.

use std::fmt;
use std::str::FromStr;

use crate::canon::is_isomorphic;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn range_err(msg: String) -> Error {
    Error::OutOfRange(msg)
}

pub fn complete(n: usize) -> Result<Graph> {
    Graph::complete(n)
}

pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// The star `S_n` of order `n ≥ 1`, centre 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(range_err("star needs order >= 1".into()));
    }
    Graph::empty(1)?.join(&Graph::empty(n - 1)?)
}

/// The path `P_n`, vertices in path order.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// The cycle `C_n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(range_err(format!("cycle needs order >= 3, got {n}")));
    }
    let mut g = path(n)?;
    g.add_edge(0, n - 1);
    Ok(g)
}

/// Book `B_k`: `k` triangles on the common edge `01`.
pub fn book(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(range_err("book needs k >= 1".into()));
    }
    let mut g = Graph::empty(k + 2)?;
    g.add_edge(0, 1);
    for page in 2..k + 2 {
        g.add_edge(0, page);
        g.add_edge(1, page);
    }
    Ok(g)
}

/// Fan `F_k`: `k` triangles through vertex 0.
pub fn fan(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(range_err("fan needs k >= 1".into()));
    }
    let mut g = Graph::empty(2 * k + 1)?;
    for i in 0..k {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    Ok(g)
}

/// `K_{t−2} ∨ K̄_{n−t+2}`, the unique `K_t`-saturated graph with fewest
/// edges.
pub fn ehm(n: usize, t: usize) -> Result<Graph> {
    if t < 2 || n < t {
        return Err(range_err(format!("EHM graph needs 2 <= t <= n, got n={n}, t={t}")));
    }
    Graph::complete(t - 2)?.join(&Graph::empty(n - t + 2)?)
}

/// `K_core + copies·K3 + K̄_rest`, with `rest` isolated vertices.
fn clique_triangles_isolated(core: usize, copies: usize, n: usize) -> Result<Graph> {
    let used = core + 3 * copies;
    let rest = n
        .checked_sub(used)
        .ok_or_else(|| range_err(format!("order {n} is below the {used} vertices needed")))?;
    Graph::complete(core)?
        .disjoint_union(&Graph::complete(3)?.copies(copies)?)?
        .disjoint_union(&Graph::empty(rest)?)
}

fn need_t(t: usize) -> Result<()> {
    if t == 0 {
        return Err(range_err("t must be at least 1".into()));
    }
    Ok(())
}

/// `(t−1)K3 + K̄_{n−3t+3}`, for `n ≥ 3t − 3`.
pub fn tp2_extremal(n: usize, t: usize) -> Result<Graph> {
    need_t(t)?;
    if n + 3 < 3 * t {
        return Err(range_err(format!("tP2 extremal graph needs n >= 3t-3, got n={n}, t={t}")));
    }
    clique_triangles_isolated(0, t - 1, n)
}

/// `tK3 + K̄_{n−3t}`, for `n ≥ 3t + 2`.
///
/// Only `(P3 + tP2)`-saturated from `t = 3` on. With one or two triangles,
/// an edge from a triangle to an isolated vertex or to the other triangle
/// creates no copy.
pub fn p3_extremal(n: usize, t: usize) -> Result<Graph> {
    need_t(t)?;
    if n < 3 * t + 2 {
        return Err(range_err(format!("P3+tP2 extremal graph needs n >= 3t+2, got n={n}, t={t}")));
    }
    clique_triangles_isolated(0, t, n)
}

/// `K5 + (t−1)K3 + K̄_{n−3t−2}`, for `n ≥ 3t + 4`.
pub fn p4_extremal(n: usize, t: usize) -> Result<Graph> {
    need_t(t)?;
    if n < 3 * t + 4 {
        return Err(range_err(format!("P4+tP2 extremal graph needs n >= 3t+4, got n={n}, t={t}")));
    }
    clique_triangles_isolated(5, t - 1, n)
}

/// `K6 + (t−1)K3 + K̄_{n−3t−3}`, for `n ≥ 3t + 5`.
pub fn p5_extremal(n: usize, t: usize) -> Result<Graph> {
    need_t(t)?;
    if n < 3 * t + 5 {
        return Err(range_err(format!("P5+tP2 extremal graph needs n >= 3t+5, got n={n}, t={t}")));
    }
    clique_triangles_isolated(6, t - 1, n)
}

/// `K7 + (t−1)K3 + K̄_{n−3t−4}`, for `n ≥ 3t + 6`. It has `3t + 18` edges.
pub fn p6_extremal(n: usize, t: usize) -> Result<Graph> {
    need_t(t)?;
    if n < 3 * t + 6 {
        return Err(range_err(format!("P6+tP2 extremal graph needs n >= 3t+6, got n={n}, t={t}")));
    }
    clique_triangles_isolated(7, t - 1, n)
}

/// The spider of order 10: a centre with three children, each carrying two
/// leaves. Centre 0, children 1–3, leaves 4–9.
pub fn tree_t() -> Graph {
    let mut g = Graph::empty(10).expect("order 10");
    for child in 1..=3 {
        g.add_edge(0, child);
        g.add_edge(child, 2 + 2 * child);
        g.add_edge(child, 3 + 2 * child);
    }
    g
}

/// `T*` of order `n = 10 + r`, `0 ≤ r ≤ 9`: the star `S_{4+⌊r/3⌋}` with two
/// leaves hung on each of its first `2 + ⌊r/3⌋` leaves and the remaining
/// `n − (4+⌊r/3⌋) − 2(2+⌊r/3⌋)` vertices hung on its last leaf.
pub fn tree_tstar(n: usize) -> Result<Graph> {
    if !(10..=19).contains(&n) {
        return Err(range_err(format!("T* needs 10 <= n <= 19, got {n}")));
    }
    let s = (n - 10) / 3;
    let arms = 3 + s;
    let mut g = Graph::empty(n)?;
    let mut next = arms + 1;
    for arm in 1..=arms {
        g.add_edge(0, arm);
        let hang = if arm < arms {
            2
        } else {
            n - (4 + s) - 2 * (2 + s)
        };
        for _ in 0..hang {
            g.add_edge(arm, next);
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    Ok(g)
}

/// `G* = (q−1)T + T*` with `q = ⌊n/10⌋` and `T*` of order `10 + (n mod 10)`.
pub fn g_star(n: usize) -> Result<Graph> {
    if n < 10 {
        return Err(range_err(format!("G* needs n >= 10, got {n}")));
    }
    let q = n / 10;
    tree_t().copies(q - 1)?.disjoint_union(&tree_tstar(10 + n % 10)?)
}

/// Largest `t` for which `g_star(n)` is claimed `(P6 + tP2)`-saturated:
/// `3q + ⌊r/3⌋ − 3`.
pub fn g_star_max_t(n: usize) -> usize {
    let (q, r) = (n / 10, n % 10);
    (3 * q + r / 3).saturating_sub(3)
}

/// `k` with `g ≅ B_k`.
pub fn is_book(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 3 || g.size() != 2 * (n - 2) + 1 {
        return None;
    }
    let k = n - 2;
    is_isomorphic(g, &book(k).ok()?).then_some(k)
}

/// `k` with `g ≅ F_k`.
pub fn is_fan(g: &Graph) -> Option<usize> {
    let n = g.order();
    if n < 3 || n % 2 == 0 || g.size() != 3 * (n - 1) / 2 {
        return None;
    }
    let k = (n - 1) / 2;
    is_isomorphic(g, &fan(k).ok()?).then_some(k)
}

/// A named parametric graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructionRecipe {
    Complete { n: usize },
    Empty { n: usize },
    Star { n: usize },
    Path { n: usize },
    Book { k: usize },
    Fan { k: usize },
    Ehm { n: usize, t: usize },
    Tp2Extremal { n: usize, t: usize },
    P3Extremal { n: usize, t: usize },
    P4Extremal { n: usize, t: usize },
    P5Extremal { n: usize, t: usize },
    P6Extremal { n: usize, t: usize },
    TreeT,
    TreeTStar { n: usize },
    GStar { n: usize },
}

/// Recipe names accepted by [`ConstructionRecipe::from_name`].
pub const RECIPE_NAMES: &[&str] = &[
    "complete",
    "empty",
    "star",
    "path",
    "book",
    "fan",
    "ehm",
    "tp2-extremal",
    "p3-extremal",
    "p4-extremal",
    "p5-extremal",
    "p6-extremal",
    "tree-t",
    "tree-tstar",
    "g-star",
];

impl ConstructionRecipe {
    /// Resolve a recipe name with its parameters; missing required
    /// parameters are an error.
    pub fn from_name(name: &str, n: Option<usize>, t: Option<usize>, k: Option<usize>) -> Result<Self> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| range_err(format!("recipe {name} needs --{what}")))
        };
        use ConstructionRecipe::*;
        Ok(match name {
            "complete" => Complete { n: need(n, "n")? },
            "empty" => Empty { n: need(n, "n")? },
            "star" => Star { n: need(n, "n")? },
            "path" => Path { n: need(n, "n")? },
            "book" => Book { k: need(k, "k")? },
            "fan" => Fan { k: need(k, "k")? },
            "ehm" => Ehm { n: need(n, "n")?, t: need(t, "t")? },
            "tp2-extremal" => Tp2Extremal { n: need(n, "n")?, t: need(t, "t")? },
            "p3-extremal" => P3Extremal { n: need(n, "n")?, t: need(t, "t")? },
            "p4-extremal" => P4Extremal { n: need(n, "n")?, t: need(t, "t")? },
            "p5-extremal" => P5Extremal { n: need(n, "n")?, t: need(t, "t")? },
            "p6-extremal" => P6Extremal { n: need(n, "n")?, t: need(t, "t")? },
            "tree-t" => TreeT,
            "tree-tstar" => TreeTStar { n: need(n, "n")? },
            "g-star" => GStar { n: need(n, "n")? },
            other => return Err(Error::UnknownRecipe(other.to_string())),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        use ConstructionRecipe::*;
        match *self {
            Complete { n } => complete(n),
            Empty { n } => empty(n),
            Star { n } => star(n),
            Path { n } => path(n),
            Book { k } => book(k),
            Fan { k } => fan(k),
            Ehm { n, t } => ehm(n, t),
            Tp2Extremal { n, t } => tp2_extremal(n, t),
            P3Extremal { n, t } => p3_extremal(n, t),
            P4Extremal { n, t } => p4_extremal(n, t),
            P5Extremal { n, t } => p5_extremal(n, t),
            P6Extremal { n, t } => p6_extremal(n, t),
            TreeT => Ok(tree_t()),
            TreeTStar { n } => tree_tstar(n),
            GStar { n } => g_star(n),
        }
    }
}

impl fmt::Display for ConstructionRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ConstructionRecipe::*;
        match *self {
            Complete { n } => write!(f, "complete(n={n})"),
            Empty { n } => write!(f, "empty(n={n})"),
            Star { n } => write!(f, "star(n={n})"),
            Path { n } => write!(f, "path(n={n})"),
            Book { k } => write!(f, "book(k={k})"),
            Fan { k } => write!(f, "fan(k={k})"),
            Ehm { n, t } => write!(f, "ehm(n={n}, t={t})"),
            Tp2Extremal { n, t } => write!(f, "tp2-extremal(n={n}, t={t})"),
            P3Extremal { n, t } => write!(f, "p3-extremal(n={n}, t={t})"),
            P4Extremal { n, t } => write!(f, "p4-extremal(n={n}, t={t})"),
            P5Extremal { n, t } => write!(f, "p5-extremal(n={n}, t={t})"),
            P6Extremal { n, t } => write!(f, "p6-extremal(n={n}, t={t})"),
            TreeT => write!(f, "tree-t"),
            TreeTStar { n } => write!(f, "tree-tstar(n={n})"),
            GStar { n } => write!(f, "g-star(n={n})"),
        }
    }
}

impl FromStr for ConstructionRecipe {
    type Err = Error;

    /// Parameterless form only (`tree-t`); the CLI supplies parameters
    /// through [`ConstructionRecipe::from_name`].
    fn from_str(s: &str) -> Result<Self> {
        Self::from_name(s, None, None, None)
    }
}
