//! Test-side reference code: a from-scratch condition checker, a
//! brute-force minimum-palette search built on it, and random generators.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use totalcolor::{Color, Condition, ConstraintSet, Graph, Mode, TotalColoring};

type Set = BTreeSet<Color>;

/// The four color sets of every vertex: incident edges, closed vertex
/// neighborhood, incident edges plus self, and the union of all.
pub fn sets(g: &Graph, vc: &[Color], ec: &[Color]) -> Vec<[Set; 4]> {
    (0..g.n())
        .map(|u| {
            let mut edge = Set::new();
            let mut closed = Set::new();
            for (i, &(a, b)) in g.edges().iter().enumerate() {
                if a == u || b == u {
                    if let Some(&c) = ec.get(i) {
                        edge.insert(c);
                    }
                    if let Some(&c) = vc.get(a + b - u) {
                        closed.insert(c);
                    }
                }
            }
            let own: Set = vc.get(u).copied().into_iter().collect();
            closed.extend(&own);
            let mut edge_closed = edge.clone();
            edge_closed.extend(&own);
            let all: Set = edge.union(&closed).copied().collect();
            [edge, closed, edge_closed, all]
        })
        .collect()
}

pub fn proper(g: &Graph, vc: &[Color], ec: &[Color]) -> bool {
    let edges = g.edges();
    for (i, &(a, b)) in edges.iter().enumerate() {
        if !vc.is_empty() && (vc[a] == vc[b]) {
            return false;
        }
        if !ec.is_empty() {
            if !vc.is_empty() && (ec[i] == vc[a] || ec[i] == vc[b]) {
                return false;
            }
            for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
                if (a == c || a == d || b == c || b == d) && ec[i] == ec[j] {
                    return false;
                }
            }
        }
    }
    true
}

/// Condition numbers 1..=8: odd ones compare every pair of vertices, even
/// ones only the ends of an edge; (c - 1) / 2 picks the set.
pub fn meets(g: &Graph, vc: &[Color], ec: &[Color], conditions: &[u32]) -> bool {
    if !proper(g, vc, ec) {
        return false;
    }
    let s = sets(g, vc, ec);
    conditions.iter().all(|&c| {
        let idx = ((c - 1) / 2) as usize;
        if c % 2 == 1 {
            (0..g.n()).all(|u| (u + 1..g.n()).all(|v| s[u][idx] != s[v][idx]))
        } else {
            g.edges().iter().all(|&(a, b)| s[a][idx] != s[b][idx])
        }
    })
}

pub fn numbers(cs: &ConstraintSet) -> Vec<u32> {
    cs.conditions().iter().map(|c| c.number() as u32).collect()
}

struct Brute<'a> {
    g: &'a Graph,
    conditions: &'a [u32],
    k: Color,
    /// (is_vertex, index) in coloring order
    order: Vec<(bool, usize)>,
    vc: Vec<Color>,
    ec: Vec<Color>,
}

impl Brute<'_> {
    fn go(&mut self, i: usize, used: Color) -> bool {
        if i == self.order.len() {
            return meets(self.g, &self.vc, &self.ec, self.conditions);
        }
        let (is_vertex, x) = self.order[i];
        for c in 1..=(used + 1).min(self.k) {
            if is_vertex {
                self.vc[x] = c;
            } else {
                self.ec[x] = c;
            }
            if self.partial_ok(is_vertex, x) && self.go(i + 1, used.max(c)) {
                return true;
            }
        }
        if is_vertex {
            self.vc[x] = 0;
        } else {
            self.ec[x] = 0;
        }
        false
    }

    fn partial_ok(&self, is_vertex: bool, x: usize) -> bool {
        let clash = |a: Color, b: Color| a != 0 && a == b;
        let edges = self.g.edges();
        if is_vertex {
            edges.iter().enumerate().all(|(i, &(a, b))| {
                if a != x && b != x {
                    return true;
                }
                let other = a + b - x;
                !(self.vc.get(other).is_some_and(|&c| clash(c, self.vc[x]))
                    || self.ec.get(i).is_some_and(|&c| clash(c, self.vc[x])))
            })
        } else {
            let (a, b) = edges[x];
            let c = self.ec[x];
            !(self.vc.get(a).is_some_and(|&v| clash(v, c))
                || self.vc.get(b).is_some_and(|&v| clash(v, c))
                || edges.iter().enumerate().any(|(j, &(p, q))| {
                    j != x && (p == a || p == b || q == a || q == b) && clash(self.ec[j], c)
                }))
        }
    }
}

/// Whether some vertex coloring makes the closed vertex neighborhoods
/// differ as `condition` (3 or 4) requires. Edge colors never enter those
/// sets beyond the vertex's own, so edges can take fresh colors.
pub fn closed_condition_possible(g: &Graph, condition: u32) -> bool {
    let n = g.n();
    let mut vc = vec![1 as Color; n];
    loop {
        let fresh: Vec<Color> = (0..g.q()).map(|e| (n + 1 + e) as Color).collect();
        if meets(g, &vc, &fresh, &[condition]) {
            return true;
        }
        let mut i = 0;
        while i < n && vc[i] == n as Color {
            vc[i] = 1;
            i += 1;
        }
        if i == n {
            return false;
        }
        vc[i] += 1;
    }
}

/// Exhaustive minimum palette for `cs`; `None` when no coloring exists.
pub fn brute_min(g: &Graph, cs: &ConstraintSet) -> Option<Color> {
    let conditions = numbers(cs);
    for c in [3, 4] {
        if conditions.contains(&c) && !closed_condition_possible(g, c) {
            return None;
        }
    }
    let mode = cs.mode();
    let with_v = mode != Mode::EdgeOnly;
    let with_e = mode != Mode::VertexOnly;
    let mut order = Vec::new();
    if with_v {
        order.extend((0..g.n()).map(|v| (true, v)));
    }
    if with_e {
        order.extend((0..g.q()).map(|e| (false, e)));
    }
    let ceiling = order.len() as Color;
    (0..=ceiling).find(|&k| {
        let mut b = Brute {
            g,
            conditions: &conditions,
            k,
            order: order.clone(),
            vc: if with_v { vec![0; g.n()] } else { Vec::new() },
            ec: if with_e { vec![0; g.q()] } else { Vec::new() },
        };
        b.go(0, 0)
    })
}

/// Whether `f` is a proper coloring of `g` within its palette meeting
/// `cs`, checked without the library.
pub fn certifies(g: &Graph, f: &TotalColoring, cs: &ConstraintSet) -> bool {
    let in_range = f
        .vertex_colors()
        .iter()
        .chain(f.edge_colors())
        .all(|&c| c >= 1 && c <= f.k());
    in_range && meets(g, f.vertex_colors(), f.edge_colors(), &numbers(cs))
}

pub fn random_graph(rng: &mut impl Rng, n_max: usize) -> Graph {
    let n = rng.gen_range(1..=n_max);
    let p: f64 = rng.gen_range(0.2..0.9);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("valid edges")
}

pub fn random_mode(rng: &mut impl Rng) -> Mode {
    match rng.gen_range(0..6) {
        0 => Mode::EdgeOnly,
        1 => Mode::VertexOnly,
        _ => Mode::Total,
    }
}

/// Greedy proper coloring in random order, each element taking a random
/// free color from a palette just large enough that one always exists.
pub fn random_proper(rng: &mut impl Rng, g: &Graph, mode: Mode) -> TotalColoring {
    let (n, q) = (g.n(), g.q());
    let with_v = mode != Mode::EdgeOnly;
    let with_e = mode != Mode::VertexOnly;
    let delta = g.max_degree() as Color;
    let k = 2 * delta + 1 + rng.gen_range(0..3);
    let mut vc = vec![0 as Color; if with_v { n } else { 0 }];
    let mut ec = vec![0 as Color; if with_e { q } else { 0 }];
    let mut order: Vec<(bool, usize)> = Vec::new();
    if with_v {
        order.extend((0..n).map(|v| (true, v)));
    }
    if with_e {
        order.extend((0..q).map(|e| (false, e)));
    }
    order.shuffle(rng);
    for (is_vertex, x) in order {
        let mut blocked = Set::new();
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            if is_vertex {
                if a == x || b == x {
                    if with_v {
                        blocked.insert(vc[a + b - x]);
                    }
                    if with_e {
                        blocked.insert(ec[i]);
                    }
                }
            } else {
                let (p, r) = g.edges()[x];
                if i != x && (a == p || a == r || b == p || b == r) {
                    blocked.insert(ec[i]);
                }
                if with_v && i == x {
                    blocked.insert(vc[a]);
                    blocked.insert(vc[b]);
                }
            }
        }
        let free: Vec<Color> = (1..=k).filter(|c| !blocked.contains(c)).collect();
        let c = *free.choose(rng).expect("palette exceeds conflicts");
        if is_vertex {
            vc[x] = c;
        } else {
            ec[x] = c;
        }
    }
    TotalColoring::new(k, vc, ec).expect("colors within palette")
}

pub fn random_constraints(rng: &mut impl Rng, mode: Mode) -> ConstraintSet {
    let allowed: &[Condition] = match mode {
        Mode::Total => &Condition::ALL,
        Mode::EdgeOnly => &[Condition::C1, Condition::C2],
        Mode::VertexOnly => &[],
    };
    let picked: Vec<Condition> = allowed.iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
    ConstraintSet::new(mode, picked).expect("allowed in mode")
}

pub fn random_permutation(rng: &mut impl Rng, k: Color) -> Vec<Color> {
    let mut perm: Vec<Color> = (1..=k).collect();
    perm.shuffle(rng);
    perm
}
