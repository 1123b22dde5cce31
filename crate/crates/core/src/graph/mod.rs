//! Simple undirected graphs with stable vertex and edge indices.
//!
//! Vertices are `0..n`. Edges are stored as `(u, v)` pairs with `u < v`,
//! sorted lexicographically; an edge's position in that order is its index,
//! which colorings use to address edge colors.

mod enumerate;
mod family;
mod graph6;
mod planarity;
mod structure;

pub use enumerate::{canonical_form, canonical_key, enumerate_all, enumerate_connected};
pub use family::{family, FamilyKind, FamilySpec};
pub use graph6::{parse_graph6, to_graph6};
pub use planarity::{is_planar, planarity_and_girth_gate, PlanarityGate};
pub use structure::{
    erdos_bipartition, hamilton_cycle, hamilton_path, lex_least_min_vertex_cover,
    max_independent_set_size, min_vertex_cover, spanning_tree, spanning_trees, Bipartition,
    SpanningTree, VertexSet,
};

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold (adjacency rows are `u64` masks
/// and graph6 output uses the one-byte size field).
pub const MAX_VERTICES: usize = 62;

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
    neighbors: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Raw<'a> {
            n: usize,
            edges: &'a [(usize, usize)],
        }
        Raw {
            n: self.n,
            edges: &self.edges,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let raw = Raw::deserialize(d)?;
        Graph::new(raw.n, raw.edges).map_err(serde::de::Error::custom)
    }
}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "parallel edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![0u64; n];
        let mut neighbors = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
            neighbors[a].push(b);
            neighbors[b].push(a);
            incident[a].push(i);
            incident[b].push(i);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            neighbors,
            incident,
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    /// Indices of the edges incident to `u`, ascending.
    pub fn incident_edges(&self, u: usize) -> &[usize] {
        &self.incident[u]
    }

    pub fn neighbor_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & (1 << v) != 0
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn other_end(&self, e: usize, u: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == u {
            b
        } else {
            a
        }
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for b in 0..self.n {
            for a in 0..b {
                if !self.has_edge(a, b) {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        Graph::from_sorted(self.n, edges)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if self.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("({u}, {v}) is already an edge")));
        }
        Graph::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    pub fn without_edges(&self, removed: &[usize]) -> Graph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, &e)| e)
            .collect();
        Graph::from_sorted(self.n, edges)
    }

    /// Spanning subgraph keeping only the listed edge indices.
    pub fn edge_subgraph(&self, kept: &[usize]) -> Graph {
        let mut edges: Vec<_> = kept.iter().map(|&i| self.edges[i]).collect();
        edges.sort_unstable();
        edges.dedup();
        Graph::from_sorted(self.n, edges)
    }

    /// Appends a new vertex `n` joined to `u`.
    pub fn with_leaf(&self, u: usize) -> Result<Graph> {
        if u >= self.n {
            return Err(Error::InvalidGraph(format!("vertex {u} out of range")));
        }
        Graph::new(self.n + 1, self.edges.iter().copied().chain([(u, self.n)]))
    }

    /// Induced subgraph on `vertices` (relabelled to `0..len` in the given
    /// order).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|(a, b)| pos[*a] != usize::MAX && pos[*b] != usize::MAX)
            .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
            .collect();
        edges.sort_unstable();
        Graph::from_sorted(vertices.len(), edges)
    }

    pub fn without_vertex(&self, w: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != w).collect();
        self.induced(&keep)
    }

    /// Applies `perm`, sending old vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
            .collect();
        edges.sort_unstable();
        Graph::from_sorted(self.n, edges)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift))),
        )
    }

    /// Breadth-first distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.neighbors[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let comp: Vec<usize> = self
                .distances_from(s)
                .iter()
                .enumerate()
                .filter_map(|(v, d)| d.map(|_| v))
                .collect();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// Proper 2-coloring (`true` = second side), choosing the lowest vertex
    /// of every component for the first side; `None` if not bipartite.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.neighbors[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_complete(&self) -> bool {
        self.q() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_odd_cycle(&self) -> bool {
        self.n >= 3
            && self.n % 2 == 1
            && self.q() == self.n
            && (0..self.n).all(|u| self.degree(u) == 2)
            && self.is_connected()
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.q() == self.n - 1 && self.is_connected()
    }

    /// Membership in the family of graphs with at least three vertices, no
    /// component that is a single edge, and at most one isolated vertex.
    pub fn is_in_f3s(&self) -> bool {
        if self.n < 3 {
            return false;
        }
        let isolated = (0..self.n).filter(|&u| self.degree(u) == 0).count();
        if isolated > 1 {
            return false;
        }
        !self
            .edges
            .iter()
            .any(|&(a, b)| self.degree(a) == 1 && self.degree(b) == 1)
    }

    /// Pairs `{u, v}` (with `u < v`) whose closed neighborhoods coincide.
    pub fn closed_twin_pairs(&self, adjacent_only: bool) -> Vec<(usize, usize)> {
        let closed: Vec<u64> = (0..self.n).map(|u| self.adj[u] | (1 << u)).collect();
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if closed[u] == closed[v] && (!adjacent_only || self.has_edge(u, v)) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees = self.degrees();
        let mut degree_counts = BTreeMap::new();
        for &d in &degrees {
            *degree_counts.entry(d).or_insert(0) += 1;
        }
        DegreeStats {
            max_degree: self.max_degree(),
            min_degree: self.min_degree(),
            degrees,
            degree_counts,
            diameter: self.diameter(),
            girth: self.girth(),
        }
    }

    pub fn diameter(&self) -> Distance {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                match d {
                    None => return Distance::Infinite,
                    Some(d) => best = best.max(d),
                }
            }
        }
        Distance::Finite(best)
    }

    pub fn girth(&self) -> Distance {
        // Shortest cycle through each BFS root: a non-tree edge (a, b) met
        // from root s closes a cycle of length <= dist(a) + dist(b) + 1, and
        // the minimum over all roots is exact.
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.neighbors[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best.map_or(Distance::Infinite, Distance::Finite)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(label) = &self.label {
            write!(f, "{label} ")?;
        }
        write!(f, "(n={}, edges=[", self.n)?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "])")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Distance {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(usize),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(v) => Ok(Distance::Finite(v)),
            Raw::S(s) if s == "inf" => Ok(Distance::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad distance {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
    pub degree_counts: BTreeMap<usize, usize>,
    pub diameter: Distance,
    pub girth: Distance,
}

impl DegreeStats {
    /// Number of vertices of degree `d`.
    pub fn count(&self, d: usize) -> usize {
        self.degree_counts.get(&d).copied().unwrap_or(0)
    }
}
