//! Human-readable names for small graphs, built from their components:
//! `K3+K1`, `S4`, `2K3+2K1`, `K7+K3+6K1`.

use std::collections::BTreeMap;

use crate::canon::canonical_form;
use crate::constructions::{is_book, is_fan, tree_t};
use crate::canon::is_isomorphic;
use crate::graph::Graph;

fn name_connected(g: &Graph) -> String {
    let n = g.order();
    let m = g.size();
    if m == n * (n - 1) / 2 {
        return format!("K{n}");
    }
    let degrees = g.degree_vector();
    if g.is_tree() {
        if degrees[0] == 2 || n <= 3 {
            return format!("P{n}");
        }
        if degrees[0] == n - 1 {
            return format!("S{n}");
        }
        if n == 10 && is_isomorphic(g, &tree_t()) {
            return "T".into();
        }
    }
    if m == n && degrees.iter().all(|&d| d == 2) {
        return format!("C{n}");
    }
    if let Some(k) = is_book(g) {
        return format!("B{k}");
    }
    if let Some(k) = is_fan(g) {
        return format!("F{k}");
    }
    format!("[{}]", canonical_form(g))
}

/// Name of `g` as a sum of named components, largest first, with repeated
/// components collapsed into a multiplicity.
pub fn describe(g: &Graph) -> String {
    if g.order() == 0 {
        return "K0".into();
    }
    // Keyed by (reverse order, name) so larger components print first.
    let mut counts: BTreeMap<(std::cmp::Reverse<usize>, String), usize> = BTreeMap::new();
    for c in g.component_masks() {
        let h = g.induced(c);
        *counts
            .entry((std::cmp::Reverse(h.order()), name_connected(&h)))
            .or_default() += 1;
    }
    counts
        .into_iter()
        .map(|((_, name), k)| if k == 1 { name } else { format!("{k}{name}") })
        .collect::<Vec<_>>()
        .join("+")
}
