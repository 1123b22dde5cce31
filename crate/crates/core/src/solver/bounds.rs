//! Necessary conditions on the palette size, by mode and condition.

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, Condition, ConstraintSet, Mode};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundComponent {
    pub name: String,
    pub value: Color,
}

fn binom(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Smallest `k` with `C(k, size) >= count`.
fn min_palette_for_subsets(size: u64, count: u64) -> Color {
    let mut k = size;
    while binom(k, size) < count {
        k += 1;
    }
    k as Color
}

fn adjacent_max_degree_pair(g: &Graph) -> bool {
    let delta = g.max_degree();
    g.edges()
        .iter()
        .any(|&(a, b)| g.degree(a) == delta && g.degree(b) == delta)
}

/// Every bound that applies to `(g, cs)`, with its value.
pub fn lower_bound_components(g: &Graph, cs: &ConstraintSet) -> Vec<BoundComponent> {
    let mut out = Vec::new();
    let mut push = |name: &str, value: usize| {
        out.push(BoundComponent {
            name: name.to_string(),
            value: value as Color,
        })
    };
    let delta = g.max_degree();
    let stats = g.degree_stats();
    match cs.mode() {
        Mode::Total => push("proper_total", if g.n() == 0 { 0 } else { delta + 1 }),
        Mode::EdgeOnly => push("proper_edge", delta),
        Mode::VertexOnly => push(
            "proper_vertex",
            if g.q() > 0 {
                2
            } else {
                usize::from(g.n() > 0)
            },
        ),
    }

    let per_degree = |extra: u64| {
        stats
            .degree_counts
            .iter()
            .filter(|(&d, _)| d > 0 || extra > 0)
            .map(|(&d, &count)| min_palette_for_subsets(d as u64 + extra, count as u64))
            .max()
            .unwrap_or(0) as usize
    };
    if cs.contains(Condition::C1) {
        push("c1_subset_count", per_degree(0));
    }
    if cs.contains(Condition::C5) {
        push("c5_subset_count", per_degree(1));
    }
    if cs.contains(Condition::C7) {
        let value = stats
            .degree_counts
            .iter()
            .filter(|(_, &count)| count >= 2)
            .map(|(&d, _)| d + 2)
            .max();
        if let Some(v) = value {
            push("c7_equal_degree_pair", v);
        }
    }
    if adjacent_max_degree_pair(g) {
        if cs.mode() == Mode::EdgeOnly && cs.contains(Condition::C2) {
            push("c2_adjacent_max_degree", delta + 1);
        }
        if cs.mode() == Mode::Total && (cs.contains(Condition::C6) || cs.contains(Condition::C8)) {
            push("c6_c8_adjacent_max_degree", delta + 2);
        }
    }
    out
}

pub fn lower_bound(g: &Graph, cs: &ConstraintSet) -> Color {
    lower_bound_components(g, cs)
        .iter()
        .map(|c| c.value)
        .max()
        .unwrap_or(0)
}
