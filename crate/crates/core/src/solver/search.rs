//! Decision search for one palette size.
//!
//! Elements are laid out so that each vertex's star is finished soon after
//! the vertex itself: a BFS from a maximum-degree vertex emits the vertex,
//! then each incident edge followed by its far endpoint. Every signature
//! a condition needs is compared at the position where its last element
//! is colored.

use std::time::{Duration, Instant};

use crate::coloring::{Color, ColorSet, ConstraintSet, Mode, SignatureKind, TotalColoring};
use crate::graph::Graph;

use super::SearchBudget;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Witness(TotalColoring),
    Refuted,
    BudgetExhausted,
}

#[derive(Clone, Debug)]
pub struct FeasibleAt {
    pub outcome: Feasibility,
    pub nodes: u64,
    pub elapsed: Duration,
}

const NONE: usize = usize::MAX;

/// Per-kind checking requirements.
#[derive(Clone, Copy, Default)]
struct KindRule {
    all_pairs: bool,
    adjacent: bool,
}

impl KindRule {
    fn active(self) -> bool {
        self.all_pairs || self.adjacent
    }
}

struct Plan {
    /// Element ids in search order (vertex `u` is `u`, edge `e` is `n + e`).
    order: Vec<usize>,
    /// Earlier positions whose color must differ, per position.
    conflicts: Vec<Vec<usize>>,
    /// Signatures that become complete at each position.
    checks: Vec<Vec<(usize, SignatureKind)>>,
    /// Signatures with no colored elements at all.
    initial: Vec<(usize, SignatureKind)>,
    rules: [KindRule; 4],
}

pub(crate) fn element_order(g: &Graph, mode: Mode) -> Vec<usize> {
    let n = g.n();
    let with_vertices = mode != Mode::EdgeOnly;
    let with_edges = mode != Mode::VertexOnly;
    let mut placed = vec![false; n + g.q()];
    let mut order = Vec::with_capacity(n + g.q());
    let mut visited = vec![false; n];
    let place = |x: usize, order: &mut Vec<usize>, placed: &mut Vec<bool>| {
        if !placed[x] {
            placed[x] = true;
            let is_vertex = x < n;
            if (is_vertex && with_vertices) || (!is_vertex && with_edges) {
                order.push(x);
            }
        }
    };
    loop {
        let root = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)));
        let Some(root) = root else { break };
        visited[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            place(u, &mut order, &mut placed);
            for &e in g.incident_edges(u) {
                place(n + e, &mut order, &mut placed);
                let w = g.other_end(e, u);
                place(w, &mut order, &mut placed);
                if !visited[w] {
                    visited[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn signature_elements(g: &Graph, u: usize, kind: SignatureKind, mode: Mode) -> Vec<usize> {
    let n = g.n();
    let edges = g.incident_edges(u).iter().map(|&e| n + e);
    let own = std::iter::once(u);
    let around = g.neighbors(u).iter().copied();
    let all: Vec<usize> = match kind {
        SignatureKind::Edge => edges.collect(),
        SignatureKind::VertexClosed => own.chain(around).collect(),
        SignatureKind::EdgeClosed => own.chain(edges).collect(),
        SignatureKind::N2 => own.chain(around).chain(edges).collect(),
    };
    all.into_iter()
        .filter(|&x| match mode {
            Mode::Total => true,
            Mode::EdgeOnly => x >= n,
            Mode::VertexOnly => x < n,
        })
        .collect()
}

impl Plan {
    fn new(g: &Graph, cs: &ConstraintSet) -> Plan {
        let n = g.n();
        let mode = cs.mode();
        let order = element_order(g, mode);
        let mut pos = vec![NONE; n + g.q()];
        for (p, &x) in order.iter().enumerate() {
            pos[x] = p;
        }

        let conflicts = order
            .iter()
            .enumerate()
            .map(|(p, &x)| {
                let mut others: Vec<usize> = if x < n {
                    g.neighbors(x)
                        .iter()
                        .copied()
                        .chain(g.incident_edges(x).iter().map(|&e| n + e))
                        .collect()
                } else {
                    let (a, b) = g.edge(x - n);
                    let mut v = vec![a, b];
                    for end in [a, b] {
                        v.extend(g.incident_edges(end).iter().map(|&e| n + e).filter(|&y| y != x));
                    }
                    v
                };
                others.retain(|&y| pos[y] != NONE && pos[y] < p);
                let mut ps: Vec<usize> = others.into_iter().map(|y| pos[y]).collect();
                ps.sort_unstable();
                ps.dedup();
                ps
            })
            .collect();

        let mut rules = [KindRule::default(); 4];
        for c in cs.conditions() {
            let r = &mut rules[c.signature().index()];
            if c.all_pairs() {
                r.all_pairs = true;
            } else {
                r.adjacent = true;
            }
        }

        let mut checks = vec![Vec::new(); order.len()];
        let mut initial = Vec::new();
        for kind in SignatureKind::ALL {
            if !rules[kind.index()].active() {
                continue;
            }
            for u in 0..n {
                let deps = signature_elements(g, u, kind, mode);
                match deps.iter().map(|&x| pos[x]).max() {
                    Some(p) => checks[p].push((u, kind)),
                    None => initial.push((u, kind)),
                }
            }
        }
        Plan {
            order,
            conflicts,
            checks,
            initial,
            rules,
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    mode: Mode,
    plan: Plan,
    k: Color,
    /// Color per position (0 = unassigned).
    colors: Vec<Color>,
    /// Color per element id, mirrored from `colors`.
    by_element: Vec<Color>,
    sig: [Vec<Option<ColorSet>>; 4],
    done: [Vec<usize>; 4],
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
    exhausted: bool,
}

enum Step {
    Found,
    Exhausted,
    Refuted,
}

impl<'a> Search<'a> {
    fn signature(&self, u: usize, kind: SignatureKind) -> ColorSet {
        let n = self.g.n();
        let vertices = self.mode != Mode::EdgeOnly;
        let mut s = ColorSet::EMPTY;
        let want_edges = matches!(
            kind,
            SignatureKind::Edge | SignatureKind::EdgeClosed | SignatureKind::N2
        );
        let want_own = kind != SignatureKind::Edge;
        let want_around = matches!(kind, SignatureKind::VertexClosed | SignatureKind::N2);
        if want_edges && self.mode != Mode::VertexOnly {
            for &e in self.g.incident_edges(u) {
                s.insert(self.by_element[n + e]);
            }
        }
        if vertices {
            if want_own {
                s.insert(self.by_element[u]);
            }
            if want_around {
                for &w in self.g.neighbors(u) {
                    s.insert(self.by_element[w]);
                }
            }
        }
        s
    }

    /// Computes and records the signatures in `items`; on a clash, undoes
    /// what it recorded and returns false.
    fn record(&mut self, items: &[(usize, SignatureKind)]) -> bool {
        for (i, &(u, kind)) in items.iter().enumerate() {
            let s = self.signature(u, kind);
            let rule = self.plan.rules[kind.index()];
            let ki = kind.index();
            let clash = if rule.all_pairs {
                self.done[ki].iter().any(|&v| self.sig[ki][v] == Some(s))
            } else {
                self.g
                    .neighbors(u)
                    .iter()
                    .any(|&v| self.sig[ki][v] == Some(s))
            };
            if clash {
                self.unrecord(&items[..i]);
                return false;
            }
            self.sig[ki][u] = Some(s);
            self.done[ki].push(u);
        }
        true
    }

    fn unrecord(&mut self, items: &[(usize, SignatureKind)]) {
        for &(u, kind) in items.iter().rev() {
            let ki = kind.index();
            self.sig[ki][u] = None;
            self.done[ki].pop();
        }
    }

    fn over_budget(&mut self) -> bool {
        if self.nodes >= self.budget.max_nodes
            || (self.nodes.is_multiple_of(4096) && self.started.elapsed() >= self.budget.max_time)
        {
            self.exhausted = true;
        }
        self.exhausted
    }

    fn run(&mut self, p: usize, max_used: Color) -> Step {
        if p == self.plan.order.len() {
            return Step::Found;
        }
        let x = self.plan.order[p];
        let top = (max_used + 1).min(self.k);
        for c in 1..=top {
            if self.plan.conflicts[p].iter().any(|&q| self.colors[q] == c) {
                continue;
            }
            self.nodes += 1;
            if self.over_budget() {
                return Step::Exhausted;
            }
            self.colors[p] = c;
            self.by_element[x] = c;
            let items = std::mem::take(&mut self.plan.checks[p]);
            let ok = self.record(&items);
            let step = if ok {
                let step = self.run(p + 1, max_used.max(c));
                if !matches!(step, Step::Found) {
                    self.unrecord(&items);
                }
                step
            } else {
                Step::Refuted
            };
            self.plan.checks[p] = items;
            match step {
                Step::Found => return Step::Found,
                Step::Exhausted => return Step::Exhausted,
                Step::Refuted => {}
            }
        }
        self.colors[p] = 0;
        self.by_element[x] = 0;
        Step::Refuted
    }
}

/// Decides whether `g` has a coloring in `cs`'s mode with palette `k` that
/// satisfies `cs`.
pub fn feasible_at(g: &Graph, k: Color, cs: &ConstraintSet, budget: SearchBudget) -> FeasibleAt {
    let started = Instant::now();
    let plan = Plan::new(g, cs);
    let slots = plan.order.len();
    let n = g.n();
    let mut search = Search {
        g,
        mode: cs.mode(),
        plan,
        k,
        colors: vec![0; slots],
        by_element: vec![0; n + g.q()],
        sig: std::array::from_fn(|_| vec![None; n]),
        done: std::array::from_fn(|_| Vec::with_capacity(n)),
        nodes: 0,
        budget,
        started,
        exhausted: false,
    };
    let initial = std::mem::take(&mut search.plan.initial);
    let step = if search.record(&initial) {
        search.run(0, 0)
    } else {
        Step::Refuted
    };
    let outcome = match step {
        Step::Found => {
            let (vc, ec) = split(&search.by_element, n, cs.mode());
            Feasibility::Witness(TotalColoring::new(k, vc, ec).expect("search colors lie in 1..=k"))
        }
        Step::Exhausted => Feasibility::BudgetExhausted,
        Step::Refuted => Feasibility::Refuted,
    };
    FeasibleAt {
        outcome,
        nodes: search.nodes,
        elapsed: started.elapsed(),
    }
}

pub(crate) fn split(by_element: &[Color], n: usize, mode: Mode) -> (Vec<Color>, Vec<Color>) {
    let vc = if mode == Mode::EdgeOnly {
        Vec::new()
    } else {
        by_element[..n].to_vec()
    };
    let ec = if mode == Mode::VertexOnly {
        Vec::new()
    } else {
        by_element[n..].to_vec()
    };
    (vc, ec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{satisfies, Preset};
    use crate::graph::{family, FamilyKind};

    #[test]
    fn order_completes_stars() {
        let g = family(FamilyKind::Cycle, &[5]).unwrap();
        let order = element_order(&g, Mode::Total);
        assert_eq!(order.len(), 10);
        assert_eq!(order[0], 0);
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..10).collect::<Vec<_>>());
        assert_eq!(element_order(&g, Mode::EdgeOnly).len(), 5);
        assert_eq!(element_order(&g, Mode::VertexOnly).len(), 5);
    }

    #[test]
    fn order_covers_every_component() {
        let g = Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let order = element_order(&g, Mode::Total);
        assert_eq!(order.len(), 11);
    }

    #[test]
    fn c5_all8() {
        let g = family(FamilyKind::Cycle, &[5]).unwrap();
        let cs = Preset::All8.constraint_set();
        let run = feasible_at(&g, 5, &cs, SearchBudget::default());
        match run.outcome {
            Feasibility::Witness(f) => assert!(satisfies(&g, &f, &cs).ok),
            other => panic!("expected witness, got {other:?}"),
        }
        let run = feasible_at(&g, 4, &cs, SearchBudget::default());
        assert_eq!(run.outcome, Feasibility::Refuted);
    }

    #[test]
    fn p3_mu_e() {
        let g = family(FamilyKind::Path, &[3]).unwrap();
        let cs = Preset::MuE.constraint_set();
        assert_eq!(
            feasible_at(&g, 3, &cs, SearchBudget::default()).outcome,
            Feasibility::Refuted
        );
        assert!(matches!(
            feasible_at(&g, 4, &cs, SearchBudget::default()).outcome,
            Feasibility::Witness(_)
        ));
    }

    #[test]
    fn tiny_budget_is_reported() {
        let g = family(FamilyKind::Complete, &[5]).unwrap();
        let budget = SearchBudget::new(10, Duration::from_secs(60)).unwrap();
        let run = feasible_at(&g, 9, &Preset::Mu.constraint_set(), budget);
        assert_eq!(run.outcome, Feasibility::BudgetExhausted);
    }
}
