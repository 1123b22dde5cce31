//! Reference solver for cross-checking the pruned search on small graphs.
//!
//! Elements are colored in index order (vertices, then edges) with only
//! properness pruning; every complete coloring is judged by
//! [`satisfies`]. Colors are introduced in first-use order, which loses
//! nothing since every predicate is invariant under renaming colors.
//!
//! Conditions C3 and C4 depend on vertex colors alone, so their
//! feasibility is settled first by trying every proper vertex coloring
//! with fresh edge colors.

use crate::coloring::{satisfies, Color, Condition, ConstraintSet, Mode, TotalColoring};
use crate::graph::Graph;

use super::palette_ceiling;

struct Enumerator<'a> {
    g: &'a Graph,
    cs: &'a ConstraintSet,
    k: Color,
    /// Element ids colored in this mode, in index order.
    elements: Vec<usize>,
    colors: Vec<Color>,
}

impl Enumerator<'_> {
    fn clashes(&self, x: usize, c: Color) -> bool {
        let n = self.g.n();
        let colored = |y: usize| self.colors[y] != 0 && self.colors[y] == c;
        if x < n {
            self.g.neighbors(x).iter().any(|&w| colored(w))
                || self.g.incident_edges(x).iter().any(|&e| colored(n + e))
        } else {
            let (a, b) = self.g.edge(x - n);
            colored(a)
                || colored(b)
                || [a, b].iter().any(|&end| {
                    self.g
                        .incident_edges(end)
                        .iter()
                        .any(|&e| n + e != x && colored(n + e))
                })
        }
    }

    fn coloring(&self) -> TotalColoring {
        let (vc, ec) = super::search::split(&self.colors, self.g.n(), self.cs.mode());
        TotalColoring::new(self.k, vc, ec).expect("colors within palette")
    }

    fn go(&mut self, i: usize, max_used: Color) -> Option<TotalColoring> {
        if i == self.elements.len() {
            let f = self.coloring();
            return satisfies(self.g, &f, self.cs).ok.then_some(f);
        }
        let x = self.elements[i];
        for c in 1..=(max_used + 1).min(self.k) {
            if self.clashes(x, c) {
                continue;
            }
            self.colors[x] = c;
            if let Some(f) = self.go(i + 1, max_used.max(c)) {
                return Some(f);
            }
        }
        self.colors[x] = 0;
        None
    }
}

/// A coloring with palette `k` satisfying `cs`, if one exists.
pub fn feasible_at(g: &Graph, k: Color, cs: &ConstraintSet) -> Option<TotalColoring> {
    let n = g.n();
    let elements = (0..n + g.q())
        .filter(|&x| match cs.mode() {
            Mode::Total => true,
            Mode::EdgeOnly => x >= n,
            Mode::VertexOnly => x < n,
        })
        .collect();
    let mut e = Enumerator {
        g,
        cs,
        k,
        elements,
        colors: vec![0; n + g.q()],
    };
    e.go(0, 0)
}

/// Whether any proper total coloring satisfies `condition`, which must be
/// C3 or C4. Edges get colors unused by vertices, which leaves every
/// neighborhood vertex-color set unchanged.
pub fn vertex_condition_attainable(g: &Graph, condition: Condition) -> bool {
    assert!(matches!(condition, Condition::C3 | Condition::C4));
    let n = g.n();
    let cs = ConstraintSet::total(&[condition]);
    let vertex_cs = ConstraintSet::new(Mode::VertexOnly, []).unwrap();
    let mut colors = vec![1 as Color; n];
    if n == 0 {
        return true;
    }
    // odometer over all of [1, n]^n
    loop {
        let f = TotalColoring::new(n as Color, colors.clone(), Vec::new()).unwrap();
        if satisfies(g, &f, &vertex_cs).ok {
            let edge_colors = (0..g.q()).map(|e| (n + 1 + e) as Color).collect();
            let total = TotalColoring::new((n + g.q()) as Color, colors.clone(), edge_colors).unwrap();
            if satisfies(g, &total, &cs).ok {
                return true;
            }
        }
        let mut i = 0;
        while i < n && colors[i] == n as Color {
            colors[i] = 1;
            i += 1;
        }
        if i == n {
            return false;
        }
        colors[i] += 1;
    }
}

/// The minimum palette for `cs`, or `None` if no palette up to every
/// element distinct works.
pub fn chromatic_number(g: &Graph, cs: &ConstraintSet) -> Option<Color> {
    for c in [Condition::C3, Condition::C4] {
        if cs.contains(c) && !vertex_condition_attainable(g, c) {
            return None;
        }
    }
    (0..=palette_ceiling(g, cs.mode())).find(|&k| feasible_at(g, k, cs).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::Preset;
    use crate::graph::{family, FamilyKind};

    #[test]
    fn small_values() {
        let p3 = family(FamilyKind::Path, &[3]).unwrap();
        assert_eq!(chromatic_number(&p3, &Preset::MuE.constraint_set()), Some(4));
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        assert_eq!(chromatic_number(&c5, &Preset::All8.constraint_set()), Some(5));
        assert_eq!(chromatic_number(&c5, &Preset::Chi.constraint_set()), Some(3));
        let k3 = family(FamilyKind::Complete, &[3]).unwrap();
        assert_eq!(chromatic_number(&k3, &Preset::VAvdtc.constraint_set()), None);
    }
}
