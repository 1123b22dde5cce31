//! Canonical forms and isomorphism-free enumeration of small graphs.
//!
//! The canonical form is the relabelling that minimises the adjacency
//! bit-string (graph6 pair order, first pair most significant) among all
//! vertex orders that list vertices by their colour-refinement class. The
//! refinement classes are isomorphism invariant, so the minimum is too.

use std::collections::HashSet;

use super::Graph;
use crate::error::{Error, Result};

/// Canonical forms are computed for graphs of at most this many vertices.
pub const CANONICAL_LIMIT: usize = 16;

const ENUMERATION_LIMIT: usize = 8;

fn pair_bit(i: usize, j: usize) -> u128 {
    // pair index in graph6 column order
    let t = j * (j - 1) / 2 + i;
    1u128 << (127 - t)
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour: Vec<usize> = g.degrees();
    let mut classes = {
        let mut c = colour.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    };
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|u| {
                let mut around: Vec<usize> = g.neighbors(u).iter().map(|&w| colour[w]).collect();
                around.sort_unstable();
                (colour[u], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

struct CanonSearch<'a> {
    g: &'a Graph,
    slot_colour: Vec<usize>,
    colour: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    best: Option<(u128, Vec<usize>)>,
}

impl CanonSearch<'_> {
    fn run(&mut self, p: usize, key: u128) {
        let n = self.g.n();
        if p == n {
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, self.perm.clone()));
            }
            return;
        }
        let upto = p * (p + 1) / 2;
        let mask = if upto == 0 { 0 } else { !0u128 << (128 - upto) };
        for v in 0..n {
            if self.used & (1 << v) != 0 || self.colour[v] != self.slot_colour[p] {
                continue;
            }
            let mut k = key;
            for i in 0..p {
                if self.g.has_edge(self.perm[i], v) {
                    k |= pair_bit(i, p);
                }
            }
            if let Some((best, _)) = &self.best {
                if k & mask > best & mask {
                    continue;
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.run(p + 1, k);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// Canonical adjacency key of `g` and the vertex order realising it
/// (`order[position] = original vertex`).
fn canonical_search(g: &Graph) -> Result<(u128, Vec<usize>)> {
    if g.n() > CANONICAL_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: CANONICAL_LIMIT,
        });
    }
    let colour = refine(g);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut search = CanonSearch {
        g,
        slot_colour,
        colour,
        perm: Vec::with_capacity(g.n()),
        used: 0,
        best: None,
    };
    search.run(0, 0);
    Ok(search.best.unwrap())
}

/// Isomorphism-invariant key: equal keys iff the graphs are isomorphic.
pub fn canonical_key(g: &Graph) -> Result<(usize, u128)> {
    canonical_search(g).map(|(key, _)| (g.n(), key))
}

/// The canonical relabelling of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_search(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(g.relabel(&perm))
}

fn extend(previous: &[Graph], connected_only: bool) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h in previous {
        let n = h.n();
        let first = if connected_only { 1u64 } else { 0 };
        for subset in first..(1u64 << n) {
            let edges = h
                .edges()
                .iter()
                .copied()
                .chain((0..n).filter(|i| subset & (1 << i) != 0).map(|i| (i, n)));
            let g = Graph::new(n + 1, edges).expect("extension of a simple graph is simple");
            let (key, order) = canonical_search(&g).expect("within canonical limit");
            if seen.insert(key) {
                let mut perm = vec![0; g.n()];
                for (pos, &v) in order.iter().enumerate() {
                    perm[v] = pos;
                }
                out.push((key, g.relabel(&perm)));
            }
        }
    }
    out.sort_by_key(|(key, _)| *key);
    out.into_iter().map(|(_, g)| g).collect()
}

fn enumerate(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(Error::Precondition(format!(
            "enumeration supports 1 <= n <= {ENUMERATION_LIMIT}, got {n}"
        )));
    }
    // Every connected graph has a vertex whose removal leaves it connected,
    // so growing connected graphs by one vertex reaches all of them.
    let mut layer = vec![Graph::empty(1)?];
    for _ in 1..n {
        layer = extend(&layer, connected_only);
    }
    Ok(layer)
}

/// All connected graphs on `n` vertices, one per isomorphism class, in
/// canonical form and canonical-key order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    enumerate(n, true)
}

/// All graphs on `n` vertices (connected or not), one per isomorphism class.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    enumerate(n, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};
    use itertools::Itertools;

    /// Independent oracle: dedup all labelled graphs by the minimum bit
    /// string over every permutation.
    fn brute_force_classes(n: usize, connected_only: bool) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let mut classes = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let g = Graph::new(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &p)| p),
            )
            .unwrap();
            if connected_only && !g.is_connected() {
                continue;
            }
            let min = perms.iter().map(|p| g.relabel(p).edges().to_vec()).min().unwrap();
            classes.insert(min);
        }
        classes.len()
    }

    #[test]
    fn counts_match_brute_force_for_small_n() {
        for n in 1..=5 {
            assert_eq!(
                enumerate_connected(n).unwrap().len(),
                brute_force_classes(n, true),
                "connected n={n}"
            );
            assert_eq!(
                enumerate_all(n).unwrap().len(),
                brute_force_classes(n, false),
                "all n={n}"
            );
        }
    }

    #[test]
    fn known_sequences() {
        let connected: Vec<usize> = (1..=7).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
        let all: Vec<usize> = (1..=6).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(9).is_err());
    }

    #[test]
    fn canonical_form_is_invariant() {
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        let shuffled = c5.relabel(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&shuffled).unwrap());
        let p5 = family(FamilyKind::Path, &[5]).unwrap();
        assert_ne!(canonical_key(&c5).unwrap(), canonical_key(&p5).unwrap());
    }
}
