//! Structural subroutines: vertex covers, the local-move max-cut
//! bipartition, Hamilton paths and cycles, spanning trees.

use std::collections::VecDeque;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Exact cover search is limited to this many vertices.
pub const COVER_LIMIT: usize = 20;
const HAMILTON_NODE_BUDGET: u64 = 50_000_000;
const SPANNING_TREE_EDGE_LIMIT: usize = 24;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet {
    pub members: Vec<usize>,
}

impl VertexSet {
    pub fn from_mask(mask: u64) -> Self {
        VertexSet {
            members: (0..64).filter(|i| mask & (1 << i) != 0).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.members.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn covers(&self, g: &Graph) -> bool {
        let m = self.mask();
        g.edges()
            .iter()
            .all(|&(a, b)| m & (1 << a) != 0 || m & (1 << b) != 0)
    }
}

struct CoverSearch<'a> {
    g: &'a Graph,
    best: u64,
    best_len: u32,
}

impl CoverSearch<'_> {
    // `alive` is the vertex set of the residual graph, `taken` the partial
    // cover. Branch on the residual maximum-degree vertex: take it, or
    // take all of its residual neighbours.
    fn run(&mut self, alive: u64, taken: u64) {
        let size = taken.count_ones();
        if size >= self.best_len {
            return;
        }
        let mut pick = None;
        let mut pick_deg = 0;
        let mut residual_edges = 0;
        for v in 0..self.g.n() {
            if alive & (1 << v) == 0 {
                continue;
            }
            let d = (self.g.neighbor_mask(v) & alive).count_ones();
            residual_edges += d;
            if d > pick_deg {
                pick_deg = d;
                pick = Some(v);
            }
        }
        let Some(v) = pick else {
            self.best = taken;
            self.best_len = size;
            return;
        };
        // every cover of the residual graph needs at least |E| / Δ vertices
        let residual_edges = residual_edges / 2;
        if size + residual_edges.div_ceil(pick_deg) >= self.best_len {
            return;
        }
        self.run(alive & !(1 << v), taken | 1 << v);
        let nbrs = self.g.neighbor_mask(v) & alive;
        self.run(alive & !nbrs & !(1 << v), taken | nbrs);
    }
}

/// A minimum vertex cover by branch and bound.
pub fn min_vertex_cover(g: &Graph) -> Result<VertexSet> {
    if g.n() > COVER_LIMIT {
        return Err(Error::TooLarge {
            n: g.n(),
            limit: COVER_LIMIT,
        });
    }
    let all = if g.n() == 64 { !0 } else { (1u64 << g.n()) - 1 };
    let mut search = CoverSearch {
        g,
        best: all,
        best_len: g.n() as u32 + 1,
    };
    search.run(all, 0);
    Ok(VertexSet::from_mask(search.best))
}

/// The lexicographically least (as a sorted vertex list) minimum vertex
/// cover.
pub fn lex_least_min_vertex_cover(g: &Graph) -> Result<VertexSet> {
    let beta = min_vertex_cover(g)?.len();
    (0..g.n())
        .combinations(beta)
        .map(|members| VertexSet { members })
        .find(|s| s.covers(g))
        .ok_or_else(|| Error::Precondition("no cover of minimum size found".into()))
}

/// α(G), via α + β = n.
pub fn max_independent_set_size(g: &Graph) -> Result<usize> {
    Ok(g.n() - min_vertex_cover(g)?.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl Bipartition {
    fn side_of(&self, v: usize) -> bool {
        self.side_b.contains(v)
    }

    /// Indices of the edges crossing the partition.
    pub fn cut_edges(&self, g: &Graph) -> Vec<usize> {
        (0..g.q())
            .filter(|&e| {
                let (a, b) = g.edge(e);
                self.side_of(a) != self.side_of(b)
            })
            .collect()
    }

    pub fn cross_degree(&self, g: &Graph, v: usize) -> usize {
        g.neighbors(v)
            .iter()
            .filter(|&&w| self.side_of(w) != self.side_of(v))
            .count()
    }
}

/// Starts from a BFS 2-colouring of each component and moves, one at a
/// time, the lowest vertex with more neighbours on its own side than across.
/// Every move grows the cut, so this terminates with each vertex having at
/// least half of its neighbours across.
pub fn erdos_bipartition(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut side = vec![false; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    side[w] = !side[u];
                    queue.push_back(w);
                }
            }
        }
    }
    loop {
        let mover = (0..n).find(|&v| {
            let same = g.neighbors(v).iter().filter(|&&w| side[w] == side[v]).count();
            2 * same > g.degree(v)
        });
        match mover {
            Some(v) => side[v] = !side[v],
            None => break,
        }
    }
    Bipartition {
        side_a: VertexSet {
            members: (0..n).filter(|&v| !side[v]).collect(),
        },
        side_b: VertexSet {
            members: (0..n).filter(|&v| side[v]).collect(),
        },
    }
}

struct HamiltonSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    visited: u64,
    nodes: u64,
    closed: bool,
}

impl HamiltonSearch<'_> {
    fn run(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > HAMILTON_NODE_BUDGET {
            return Err(Error::Budget("Hamilton search node budget".into()));
        }
        let n = self.g.n();
        let last = *self.path.last().unwrap();
        if self.path.len() == n {
            return Ok(!self.closed || self.g.has_edge(last, self.path[0]));
        }
        for &w in self.g.neighbors(last) {
            if self.visited & (1 << w) != 0 {
                continue;
            }
            self.path.push(w);
            self.visited |= 1 << w;
            if self.run()? {
                return Ok(true);
            }
            self.visited &= !(1 << w);
            self.path.pop();
        }
        Ok(false)
    }
}

fn hamilton(g: &Graph, closed: bool) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    // A cycle may start anywhere; a path must be tried from every start.
    let starts: Vec<usize> = if closed { vec![0] } else { (0..n).collect() };
    let mut nodes = 0;
    for s in starts {
        let mut search = HamiltonSearch {
            g,
            path: vec![s],
            visited: 1 << s,
            nodes,
            closed,
        };
        if search.run()? {
            return Ok(Some(search.path));
        }
        nodes = search.nodes;
    }
    Ok(None)
}

/// A Hamilton path, if one exists.
pub fn hamilton_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    hamilton(g, false)
}

/// A Hamilton cycle (as a vertex sequence; the closing edge is implied),
/// if one exists. Graphs on fewer than three vertices have none.
pub fn hamilton_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    if g.n() < 3 {
        return Ok(None);
    }
    hamilton(g, true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpanningTree {
    /// Indices into the host graph's edge list.
    pub tree_edges: Vec<usize>,
    pub tree: Graph,
    /// The host graph minus the tree edges.
    pub cotree: Graph,
    /// Leaves of the tree, n₁(T).
    pub leaves: usize,
    /// Degree-two vertices of the tree, n₂(T).
    pub degree_two: usize,
}

impl SpanningTree {
    fn from_edges(g: &Graph, mut tree_edges: Vec<usize>) -> Self {
        tree_edges.sort_unstable();
        let tree = g.edge_subgraph(&tree_edges);
        let cotree = g.without_edges(&tree_edges);
        let leaves = (0..g.n()).filter(|&v| tree.degree(v) == 1).count();
        let degree_two = (0..g.n()).filter(|&v| tree.degree(v) == 2).count();
        SpanningTree {
            tree_edges,
            tree,
            cotree,
            leaves,
            degree_two,
        }
    }
}

/// Breadth-first spanning tree rooted at vertex 0.
pub fn spanning_tree(g: &Graph) -> Result<SpanningTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut seen = vec![false; g.n()];
    let mut tree_edges = Vec::new();
    if g.n() > 0 {
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &e in g.incident_edges(u) {
                let w = g.other_end(e, u);
                if !seen[w] {
                    seen[w] = true;
                    tree_edges.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(SpanningTree::from_edges(g, tree_edges))
}

/// Every spanning tree of a small connected graph.
pub fn spanning_trees(g: &Graph) -> Result<Vec<SpanningTree>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.q() > SPANNING_TREE_EDGE_LIMIT {
        return Err(Error::TooLarge {
            n: g.q(),
            limit: SPANNING_TREE_EDGE_LIMIT,
        });
    }
    let n = g.n();
    if n <= 1 {
        return Ok(vec![SpanningTree::from_edges(g, Vec::new())]);
    }
    let mut out = Vec::new();
    for combo in (0..g.q()).combinations(n - 1) {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let acyclic = combo.iter().all(|&e| {
            let (a, b) = g.edge(e);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
            ra != rb
        });
        if acyclic {
            out.push(SpanningTree::from_edges(g, combo));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_connected, family, FamilyKind};

    fn brute_cover_size(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .filter(|&m| VertexSet::from_mask(m).covers(g))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn brute_independence(g: &Graph) -> usize {
        (0u64..1 << g.n())
            .filter(|&m| g.edges().iter().all(|&(a, b)| m & (1 << a) == 0 || m & (1 << b) == 0))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn covers_of_small_families() {
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        let cover = min_vertex_cover(&c5).unwrap();
        assert!(cover.covers(&c5));
        assert_eq!(cover.len(), 3);
        assert_eq!(brute_cover_size(&c5), 3);

        let star = family(FamilyKind::Star, &[4]).unwrap();
        assert_eq!(min_vertex_cover(&star).unwrap().members, vec![0]);

        let k4 = family(FamilyKind::Complete, &[4]).unwrap();
        assert_eq!(min_vertex_cover(&k4).unwrap().len(), 3);
        assert_eq!(lex_least_min_vertex_cover(&k4).unwrap().members, vec![0, 1, 2]);
    }

    #[test]
    fn gallai_identity_on_enumerated_graphs() {
        for n in 1..=7 {
            for g in enumerate_connected(n).unwrap() {
                let beta = min_vertex_cover(&g).unwrap().len();
                assert_eq!(beta + brute_independence(&g), n, "{g}");
                if n <= 6 {
                    assert_eq!(beta, brute_cover_size(&g), "{g}");
                }
            }
        }
    }

    #[test]
    fn erdos_cut_properties() {
        for n in 2..=7 {
            for g in enumerate_connected(n).unwrap() {
                let b = erdos_bipartition(&g);
                for v in 0..n {
                    assert!(2 * b.cross_degree(&g, v) >= g.degree(v), "{g} vertex {v}");
                }
                assert!(2 * b.cut_edges(&g).len() >= g.q(), "{g}");
                assert_eq!(b.side_a.len() + b.side_b.len(), n);
            }
        }
    }

    #[test]
    fn erdos_examples() {
        let k4 = family(FamilyKind::Complete, &[4]).unwrap();
        let b = erdos_bipartition(&k4);
        assert_eq!((b.side_a.len(), b.side_b.len()), (2, 2));
        assert!((0..4).all(|v| b.cross_degree(&k4, v) == 2));

        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        let b = erdos_bipartition(&c5);
        assert!(b.cut_edges(&c5).len() >= 3);
        assert!((0..5).all(|v| b.cross_degree(&c5, v) >= 1));

        let k33 = family(FamilyKind::CompleteBipartite, &[3, 3]).unwrap();
        let b = erdos_bipartition(&k33);
        assert_eq!(b.cut_edges(&k33).len(), 9);
        assert_eq!(b.side_a.members, vec![0, 1, 2]);
    }

    #[test]
    fn hamilton_paths() {
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        assert!(hamilton_path(&c5).unwrap().is_some());
        assert!(hamilton_cycle(&c5).unwrap().is_some());
        let star = family(FamilyKind::Star, &[4]).unwrap();
        assert!(hamilton_path(&star).unwrap().is_none());
        let k4 = family(FamilyKind::Complete, &[4]).unwrap();
        let path = hamilton_path(&k4).unwrap().unwrap();
        assert_eq!(path.len(), 4);
        let p4 = family(FamilyKind::Path, &[4]).unwrap();
        assert!(hamilton_cycle(&p4).unwrap().is_none());
    }

    #[test]
    fn hamilton_path_matches_permutation_brute_force() {
        for n in 2..=5 {
            for g in enumerate_connected(n).unwrap() {
                let brute = (0..n)
                    .permutations(n)
                    .any(|p| p.windows(2).all(|w| g.has_edge(w[0], w[1])));
                let found = hamilton_path(&g).unwrap();
                assert_eq!(found.is_some(), brute, "{g}");
                if let Some(p) = found {
                    assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
                }
            }
        }
    }

    #[test]
    fn bfs_spanning_trees() {
        let k4 = family(FamilyKind::Complete, &[4]).unwrap();
        let t = spanning_tree(&k4).unwrap();
        assert_eq!(t.tree.degrees(), vec![3, 1, 1, 1]);
        assert_eq!((t.leaves, t.degree_two), (3, 0));
        assert_eq!(t.cotree.q(), 3);

        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        let t = spanning_tree(&c5).unwrap();
        assert!(t.tree.is_tree());
        assert_eq!((t.leaves, t.degree_two), (2, 3));

        let p5 = family(FamilyKind::Path, &[5]).unwrap();
        assert_eq!(spanning_tree(&p5).unwrap().tree, p5);

        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(spanning_tree(&split), Err(Error::Disconnected)));
    }

    #[test]
    fn spanning_tree_counts() {
        // Cayley: n^(n-2) spanning trees of K_n
        let k4 = family(FamilyKind::Complete, &[4]).unwrap();
        assert_eq!(spanning_trees(&k4).unwrap().len(), 16);
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        assert_eq!(spanning_trees(&c5).unwrap().len(), 5);
    }
}
