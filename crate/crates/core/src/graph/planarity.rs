//! Exact planarity for small graphs via Wagner's theorem: a graph is planar
//! iff it has neither K5 nor K3,3 as a minor. Minors are found by assigning
//! every vertex to a branch set (or deleting it) and checking that branch
//! sets are connected and pairwise joined as the target requires.

use serde::{Deserialize, Serialize};

use super::{Distance, Graph};
use crate::error::{Error, Result};

/// Vertex limit for the exhaustive minor test (after pruning low degrees).
pub const PLANARITY_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityGate {
    pub planar: bool,
    pub girth: Distance,
}

pub fn planarity_and_girth_gate(g: &Graph) -> Result<PlanarityGate> {
    Ok(PlanarityGate {
        planar: is_planar(g)?,
        girth: g.girth(),
    })
}

/// Strip vertices of degree <= 1 until none remain; they never lie in a
/// minimal Kuratowski minor.
fn core(g: &Graph) -> Graph {
    let mut g = g.clone();
    while let Some(v) = (0..g.n()).find(|&v| g.degree(v) <= 1) {
        g = g.without_vertex(v);
    }
    g
}

pub fn is_planar(g: &Graph) -> Result<bool> {
    let h = core(g);
    let n = h.n();
    if n <= 4 {
        return Ok(true);
    }
    if n >= 3 && h.q() > 3 * n - 6 {
        return Ok(false);
    }
    if n > PLANARITY_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: PLANARITY_LIMIT,
        });
    }
    Ok(!has_minor(&h, Target::K5) && !has_minor(&h, Target::K33))
}

#[derive(Clone, Copy)]
enum Target {
    K5,
    K33,
}

impl Target {
    fn sets(self) -> usize {
        match self {
            Target::K5 => 5,
            Target::K33 => 6,
        }
    }

    fn needs_edge(self, a: usize, b: usize) -> bool {
        match self {
            Target::K5 => a != b,
            Target::K33 => (a < 3) != (b < 3),
        }
    }
}

fn has_minor(g: &Graph, target: Target) -> bool {
    let mut assign = vec![usize::MAX; g.n()];
    assign_next(g, target, &mut assign, 0, 0)
}

// Labels are taken in first-use order within each group of interchangeable
// branch sets (all five for K5, each side for K3,3).
fn assign_next(g: &Graph, target: Target, assign: &mut [usize], v: usize, used: u32) -> bool {
    let t = target.sets();
    if v == g.n() {
        return used.count_ones() as usize == t && branch_sets_ok(g, target, assign);
    }
    // deleted
    assign[v] = usize::MAX;
    if assign_next(g, target, assign, v + 1, used) {
        return true;
    }
    for label in 0..t {
        if !label_allowed(target, label, used) {
            continue;
        }
        assign[v] = label;
        if assign_next(g, target, assign, v + 1, used | 1 << label) {
            return true;
        }
    }
    assign[v] = usize::MAX;
    false
}

fn label_allowed(target: Target, label: usize, used: u32) -> bool {
    let first_unused = |lo: usize, hi: usize| (lo..hi).find(|&l| used & (1 << l) == 0);
    match target {
        Target::K5 => first_unused(0, 5).is_none_or(|f| label <= f),
        Target::K33 => {
            let (lo, hi) = if label < 3 { (0, 3) } else { (3, 6) };
            first_unused(lo, hi).is_none_or(|f| label <= f)
        }
    }
}

fn branch_sets_ok(g: &Graph, target: Target, assign: &[usize]) -> bool {
    let t = target.sets();
    let mut members = vec![0u64; t];
    for (v, &l) in assign.iter().enumerate() {
        if l != usize::MAX {
            members[l] |= 1 << v;
        }
    }
    for &set in &members {
        if !connected_within(g, set) {
            return false;
        }
    }
    for a in 0..t {
        for b in a + 1..t {
            if target.needs_edge(a, b) && !joined(g, members[a], members[b]) {
                return false;
            }
        }
    }
    true
}

fn connected_within(g: &Graph, set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let start = set.trailing_zeros() as usize;
    let mut reached = 1u64 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = g.neighbor_mask(v) & set & !reached;
        reached |= fresh;
        frontier |= fresh;
    }
    reached == set
}

fn joined(g: &Graph, a: u64, b: u64) -> bool {
    let mut rest = a;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if g.neighbor_mask(v) & b != 0 {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};

    #[test]
    fn kuratowski_graphs() {
        let k5 = family(FamilyKind::Complete, &[5]).unwrap();
        assert!(!is_planar(&k5).unwrap());
        let k33 = family(FamilyKind::CompleteBipartite, &[3, 3]).unwrap();
        assert!(!is_planar(&k33).unwrap());
        let k4 = family(FamilyKind::Complete, &[4]).unwrap();
        assert!(is_planar(&k4).unwrap());
    }

    #[test]
    fn c6_gate() {
        let c6 = family(FamilyKind::Cycle, &[6]).unwrap();
        let gate = planarity_and_girth_gate(&c6).unwrap();
        assert!(gate.planar);
        assert_eq!(gate.girth, Distance::Finite(6));
    }

    #[test]
    fn petersen_is_not_planar_but_subdivided_k33_detected() {
        let petersen = Graph::new(
            10,
            [
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert!(!is_planar(&petersen).unwrap());

        // K3,3 with one edge subdivided: 7 vertices, 10 edges, still non-planar
        let mut edges: Vec<(usize, usize)> = (0..3)
            .flat_map(|a| (3..6).map(move |b| (a, b)))
            .filter(|&e| e != (0, 3))
            .collect();
        edges.extend([(0, 6), (6, 3)]);
        let sub = Graph::new(7, edges).unwrap();
        assert!(!is_planar(&sub).unwrap());
    }

    #[test]
    fn planar_examples() {
        // wheel W5 (hub + C5), octahedron K2,2,2
        let mut wheel: Vec<(usize, usize)> = (1..6).map(|i| (0, i)).collect();
        wheel.extend((1..6).map(|i| (i, if i == 5 { 1 } else { i + 1 })));
        assert!(is_planar(&Graph::new(6, wheel).unwrap()).unwrap());
        let octa = Graph::new(
            6,
            (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).filter(|&(a, b)| b != a + 3 || a >= 3),
        )
        .unwrap();
        assert_eq!(octa.q(), 12);
        assert!(is_planar(&octa).unwrap());
    }
}
