//! The bound registry: every inequality, its hypothesis gate, and how each
//! side is computed.

use itertools::Itertools;

use super::{reverify, BoundCheck, Evaluator, Expr, Relation, Side};
use crate::coloring::Preset;
use crate::graph::{
    erdos_bipartition, family, hamilton_cycle, hamilton_path, is_planar, lex_least_min_vertex_cover,
    max_independent_set_size, spanning_tree, spanning_trees, Distance, FamilyKind, Graph,
};
use crate::solver::structural_feasibility;

pub const BOUND_IDS: &[&str] = &[
    "L1.i", "L1.ii", "L1.iii", "L1.iv", "L3.i", "L3.ii", "L4.i", "L4.ii", "L5", "T6", "T7.i",
    "T7.ii", "T7.iii", "T7.iv", "T7.v", "T7.vi", "T7.vii", "T7.viii", "T7.viii-aux", "T8.i",
    "T8.ii", "T8.iii", "T8.iv", "T8.v", "T9", "T10.i", "T10.ii", "T10.iii", "Eq1", "Eq2",
];

type Gate = std::result::Result<(), String>;

fn gate(ok: bool, why: impl FnOnce() -> String) -> Gate {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

struct Ctx<'a> {
    g: &'a Graph,
    ev: &'a Evaluator,
    out: Vec<BoundCheck>,
}

impl Ctx<'_> {
    fn t(&self, p: Preset) -> Expr {
        self.ev.term(self.g, p).named(format!("{}(G)", p.name()))
    }

    fn on(&self, h: &Graph, p: Preset, name: &str) -> Expr {
        self.ev.term(h, p).named(format!("{}({name})", p.name()))
    }

    fn check(
        &mut self,
        id: &str,
        relation: Relation,
        gate: Gate,
        detail: Option<String>,
        build: impl FnOnce(&Self) -> (Expr, Expr),
    ) {
        let mut c = match gate {
            Ok(()) => {
                let (lhs, rhs) = build(self);
                BoundCheck::evaluate(id, lhs, relation, rhs)
            }
            Err(why) => BoundCheck::not_applicable(id, relation, why),
        };
        if let Some(d) = detail {
            c.detail = Some(match c.detail.take() {
                Some(why) => format!("{d}; {why}"),
                None => d,
            });
        }
        self.out.push(c);
    }
}

fn k(v: usize, text: &str) -> Expr {
    Expr::konst(v as i64, text)
}

fn not_special(g: &Graph) -> Gate {
    gate(!g.is_odd_cycle() && !g.is_complete(), || {
        "graph is an odd cycle or complete".into()
    })
}

/// Smallest `m` with `C(m, r) >= target`.
fn min_binom(r: u64, target: u64) -> usize {
    let binom = |n: u64| -> u64 {
        if r > n {
            return 0;
        }
        (0..r).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
    };
    let mut m = r;
    while binom(m) < target {
        m += 1;
    }
    m as usize
}

/// Evaluates every registry entry on `g`. Values come from `ev`, which
/// solves each (graph, constraint set) at most once per isomorphism class.
/// Violations are re-checked with the reference solver.
pub fn run_bound_suite(g: &Graph, ev: &Evaluator) -> Vec<BoundCheck> {
    let mut cx = Ctx {
        g,
        ev,
        out: Vec::new(),
    };
    if !g.is_in_f3s() {
        return BOUND_IDS
            .iter()
            .map(|id| BoundCheck::not_applicable(id, Relation::Le, "graph is outside F3s"))
            .collect();
    }
    l1_checks(&mut cx);
    l3_checks(&mut cx);
    l4_checks(&mut cx);
    l5_checks(&mut cx);
    t6_checks(&mut cx);
    t7_checks(&mut cx);
    t8_checks(&mut cx);
    t9_t10_checks(&mut cx);
    for c in cx.out.iter_mut().filter(|c| c.violated()) {
        let same = reverify(c);
        log::warn!(
            "{} violated: {} ({} vs {}), reference solver {}",
            c.bound_id,
            c.provenance,
            c.lhs,
            c.rhs,
            if same { "agrees" } else { "disagrees" }
        );
        c.reverified = Some(same);
    }
    cx.out
}

fn l1_checks(cx: &mut Ctx) {
    use Preset::*;
    use Relation::*;
    for (a, b) in [(EVdtc, ChiS), (EVdtc, EAvdtc), (EAvdtc, ChiAs)] {
        cx.check("L1.i", Ge, Ok(()), None, |c| (c.t(a), c.t(b)));
    }
    for (a, b) in [(Mu, MuE), (MuE, ChiTotal)] {
        cx.check("L1.ii", Ge, Ok(()), None, |c| (c.t(a), c.t(b)));
    }
    let stats = cx.g.degree_stats();
    let repeated: Vec<usize> = stats
        .degree_counts
        .iter()
        .filter(|(_, &count)| count >= 2)
        .map(|(&d, _)| d)
        .collect();
    if repeated.is_empty() {
        cx.check("L1.iii", Ge, Err("no degree is shared by two vertices".into()), None, |_| {
            unreachable!()
        });
    }
    for d in repeated {
        cx.check("L1.iii", Ge, Ok(()), Some(format!("d = {d}")), |c| {
            (c.t(Mu), k(d + 2, "d + 2"))
        });
    }

    let co = cx.g.complement();
    let n = cx.g.n();
    let kn = family(FamilyKind::Complete, &[n]).expect("n >= 3");
    for p in [EVdtc, EAvdtc, Mu, MuE] {
        let g8 = gate(co.is_in_f3s(), || "complement is outside F3s".into());
        cx.check("L1.iv", Ge, g8, Some(format!("variant {}", p.name())), |c| {
            (c.t(p).plus(c.on(&co, p, "co-G")), c.on(&kn, p, "K_n"))
        });
    }
}

fn l3_checks(cx: &mut Ctx) {
    use Preset::*;
    use Relation::*;
    for p in [EVdtc, EAvdtc, Vdtc, Avdtc, Mu, MuE] {
        cx.check("L3.i", Ge, Ok(()), None, |c| (c.t(Six), c.t(p)));
    }
    let admits = structural_feasibility(cx.g, &All8.constraint_set()).is_feasible();
    let why = || "graph has closed twins, so admits no (8)-coloring".to_string();
    for p in [EVdtc, EAvdtc, VVdtc, VAvdtc, Vdtc, Avdtc, Mu, MuE] {
        cx.check("L3.ii", Ge, gate(admits, why), None, |c| (c.t(All8), c.t(p)));
    }
    for p in [ChiS, EVdtc] {
        cx.check("L3.ii", Le, gate(admits, why), None, |c| {
            (c.t(All8), c.t(p).plus(c.t(VVdtc)))
        });
    }
}

fn l4_checks(cx: &mut Ctx) {
    use Preset::*;
    use Relation::*;
    for (a, b) in [(Mu, EVdtc), (MuE, EAvdtc)] {
        for extra in [Chi, ChiEdge] {
            cx.check("L4.i", Le, Ok(()), None, |c| (c.t(a), c.t(b).plus(c.t(extra))));
        }
    }
    for p in [EVdtc, EAvdtc, Vdtc, Avdtc, Mu, MuE] {
        cx.check("L4.ii", Le, Ok(()), None, |c| (c.t(p), c.t(ChiS).plus(c.t(Chi))));
    }
    for p in [EAvdtc, Avdtc, MuE] {
        cx.check("L4.ii", Le, Ok(()), None, |c| (c.t(p), c.t(ChiAs).plus(c.t(Chi))));
    }
}

/// The cover V*, the graph it induces, and the bipartite graph H of all
/// edges between V* and the rest.
fn cover_parts(g: &Graph) -> Option<(Vec<usize>, Graph, Graph)> {
    let cover = lex_least_min_vertex_cover(g).ok()?.members;
    let inner = g.induced(&cover);
    let h = crate::construct::cover_bipartite_part(g, &cover);
    Some((cover, inner, h))
}

fn l5_checks(cx: &mut Ctx) {
    use Preset::*;
    let Some((_, inner, h)) = cover_parts(cx.g) else {
        return;
    };
    for (lhs, edge) in [(Mu, ChiS), (MuE, ChiAs)] {
        let ok = gate(h.is_in_f3s(), || "cover bipartite graph H is outside F3s".into());
        cx.check("L5", Relation::Le, ok, None, |c| {
            let rhs = c.on(&inner, ChiTotal, "G[V*]").plus(c.on(&h, edge, "H")).offset(1);
            (c.t(lhs), rhs)
        });
    }
}

fn t6_checks(cx: &mut Ctx) {
    use Preset::*;
    use Relation::*;
    let delta = cx.g.max_degree();
    let bip = || gate(cx.g.is_bipartite(), || "graph is not bipartite".into());
    let (b1, b2, b3) = (bip(), bip(), bip());
    cx.check("T6", Le, b1, Some("e-partial reading".into()), |c| {
        (c.t(EAvdtc), k(delta + 3, "Δ + 3"))
    });
    cx.check("T6", Le, b2, Some("v-partial reading".into()), |c| {
        (c.t(VAvdtc), k(delta + 3, "Δ + 3"))
    });
    let chi_s = cx.ev.preset(cx.g, ChiS);
    let eps = match chi_s {
        Side::Exact(v) if v > delta as i64 => 1,
        _ => 2,
    };
    let ok = b3.and_then(|_| gate(chi_s.exact().is_some(), || "χ′ₛ not solved".into()));
    cx.check("T6", Le, ok, Some(format!("ε = {eps}")), |c| {
        (c.t(EVdtc), c.t(ChiS).offset(eps))
    });
}

fn t7_checks(cx: &mut Ctx) {
    use Preset::*;
    use Relation::*;
    let g = cx.g;
    let (n, delta, min_deg) = (g.n(), g.max_degree(), g.min_degree());

    cx.check("T7.i", Le, not_special(g), None, |c| (c.t(Mu), k(4 * delta, "4Δ")));

    for (label, ok) in [("δ > n/3", 3 * min_deg > n), ("δ > n/2", 2 * min_deg > n)] {
        let hyp = gate(ok, || format!("{label} fails")).and_then(|_| not_special(g));
        cx.check("T7.ii", Le, hyp, Some(format!("hypothesis {label}")), |c| {
            (c.t(Mu), k(2 * delta + 5, "2Δ + 5"))
        });
    }

    let alpha = max_independent_set_size(g).ok();
    if let (Some((_, _, h)), Some(alpha)) = (cover_parts(g), alpha) {
        let ok = gate(h.is_in_f3s(), || "cover bipartite graph H is outside F3s".into());
        cx.check("T7.iii", Le, ok, None, |c| {
            (c.t(Mu), k(n - alpha, "n - α").plus(c.on(&h, ChiS, "H")).offset(2))
        });
    }

    // pairs at distance >= 3
    let far: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| {
            let dist = g.distances_from(u);
            (u + 1..n)
                .filter(move |&v| dist[v].is_none_or(|d| d >= 3))
                .map(move |v| (u, v))
        })
        .collect();
    let diam_ok = matches!(g.diameter(), Distance::Finite(d) if d >= 3) && !far.is_empty();
    let target = far
        .iter()
        .map(|&(u, v)| g.degree(u) + g.degree(v) + 2)
        .max()
        .unwrap_or(0);
    let m = min_binom(min_deg as u64 + 1, target as u64);
    cx.check(
        "T7.iv",
        Ge,
        gate(diam_ok, || "diameter below 3".into()),
        Some(format!("m = {m}")),
        |c| (c.t(Mu), k(m, "m")),
    );

    if let Some(alpha) = alpha {
        let hyp = gate(3 * min_deg > 2 * n, || "δ > 2n/3 fails".into()).and_then(|_| not_special(g));
        cx.check("T7.v", Le, hyp, None, |c| {
            (c.t(Mu), k(n - alpha + delta + 7, "n - α + Δ + 7"))
        });
    }

    let complete = gate(g.is_complete(), || "graph is not complete".into());
    cx.check("T7.vi", Le, complete, None, |c| (c.t(Mu), k(2 * n - 1, "2n - 1")));

    let pn = family(FamilyKind::Path, &[n]).expect("n >= 3");
    let cycle = matches!(hamilton_cycle(g), Ok(Some(_)));
    let path = matches!(hamilton_path(g), Ok(Some(_)));
    for (label, ok) in [("Hamilton cycle", cycle), ("Hamilton path", path)] {
        let hyp = gate(ok, || format!("no {label}"));
        cx.check("T7.vii", Le, hyp, Some(format!("hypothesis {label}")), |c| {
            (c.t(Mu), c.on(&pn, Mu, "P_n").offset(delta as i64))
        });
    }

    // fewest leaves over spanning trees without degree-two vertices
    let best = spanning_trees(g)
        .ok()
        .and_then(|ts| ts.into_iter().filter(|t| t.degree_two == 0).min_by_key(|t| t.leaves));
    match best {
        Some(t) => {
            let n1 = t.leaves;
            let detail = Some(format!("n₁(T) = {n1}"));
            cx.check("T7.viii", Le, Ok(()), detail.clone(), |c| {
                (c.t(Mu), k(n1 + delta + 1, "n₁(T) + Δ + 1"))
            });
            cx.check("T7.viii-aux", Ge, Ok(()), detail.clone(), |c| {
                (c.on(&t.tree, Mu, "T"), k(n1, "n₁(T)"))
            });
            cx.check("T7.viii-aux", Le, Ok(()), detail, |c| {
                (c.on(&t.tree, Mu, "T"), k(n1 + 1, "n₁(T) + 1"))
            });
        }
        None => {
            let why = || Err("no spanning tree without degree-two vertices".to_string());
            cx.check("T7.viii", Le, why(), None, |_| unreachable!());
            cx.check("T7.viii-aux", Ge, why(), None, |_| unreachable!());
        }
    }

    if let Ok(t) = spanning_tree(g) {
        cx.check("Eq1", Le, Ok(()), Some("BFS tree".into()), |c| {
            (c.t(Mu), c.on(&t.tree, Mu, "T").plus(c.on(&t.cotree, ChiEdge, "G - E(T)")))
        });
        cx.check("Eq2", Le, Ok(()), Some("BFS tree".into()), |_| {
            (k(t.cotree.max_degree(), "Δ(G - E(T))"), k(delta, "Δ").offset(-1))
        });
        cx.check("Eq2", Le, Ok(()), Some("BFS tree".into()), |c| {
            (c.on(&t.cotree, ChiEdge, "G - E(T)"), k(delta, "Δ"))
        });
    }
}

fn t8_checks(cx: &mut Ctx) {
    use Preset::*;
    use Relation::*;
    let g = cx.g;
    let delta = g.max_degree();

    let hyp = gate(delta <= 3, || "Δ > 3".into()).and_then(|_| {
        gate(!g.is_odd_cycle() && !(g.is_complete() && g.n() == 3), || {
            "graph is an odd cycle or K3".into()
        })
    });
    cx.check("T8.i", Le, hyp, None, |c| (c.t(MuE), k(8, "8")));

    let bip = gate(g.is_bipartite(), || "graph is not bipartite".into());
    cx.check("T8.ii", Le, bip, None, |c| (c.t(MuE), k(delta + 4, "Δ + 4")));

    let three = matches!(cx.ev.preset(g, Chi), Side::Exact(v) if v <= 3);
    let ham = matches!(hamilton_cycle(g), Ok(Some(_)));
    let hyp = gate(three, || "not 3-colorable".into())
        .and_then(|_| gate(ham, || "no Hamilton cycle".into()))
        .and_then(|_| not_special(g));
    cx.check("T8.iii", Le, hyp, None, |c| (c.t(MuE), k(2 * delta + 3, "2Δ + 3")));

    let planar = is_planar(g).unwrap_or(false);
    let girth_ok = match g.girth() {
        Distance::Finite(girth) => girth >= 6,
        Distance::Infinite => true,
    };
    let hyp = gate(planar, || "not planar".into())
        .and_then(|_| gate(girth_ok, || "girth below 6".into()))
        .and_then(|_| gate(delta >= 3, || "Δ < 3".into()));
    cx.check("T8.iv", Le, hyp, None, |c| (c.t(MuE), k(2 * delta + 2, "2Δ + 2")));

    let cut = erdos_bipartition(g).cut_edges(g);
    let star = g.without_edges(&cut);
    let rhs_const = delta as i64 - star.min_degree() as i64 + 2;
    cx.check(
        "T8.v",
        Le,
        Ok(()),
        Some(format!("|E(G*)| = {} of {}", star.q(), g.q())),
        |c| (c.t(MuE), c.on(&star, ChiTotal, "G*").plus(Expr::konst(rhs_const, "Δ - δ(G*) + 2"))),
    );
}

fn t9_t10_checks(cx: &mut Ctx) {
    use Preset::*;
    use Relation::*;
    let g = cx.g;
    let n = g.n();

    let non_edges: Vec<(usize, usize)> = (0..n)
        .tuple_combinations()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    if non_edges.is_empty() {
        cx.check("T9", Le, Err("graph is complete".into()), None, |_| unreachable!());
    }
    for (u, v) in non_edges {
        let bigger = g.with_edge(u, v).expect("non-edge");
        cx.check("T9", Le, Ok(()), Some(format!("add {u}-{v}")), |c| {
            (c.on(&bigger, Mu, "G + uv"), c.t(Mu).offset(1))
        });
    }

    for u in 0..n {
        let bigger = g.with_leaf(u).expect("vertex in range");
        cx.check("T10.i", Le, Ok(()), Some(format!("leaf at {u}")), |c| {
            (c.on(&bigger, Mu, "G + leaf"), c.t(Mu).offset(1))
        });
    }

    for w in 0..n {
        let smaller = g.without_vertex(w);
        let m = g.degree(w);
        let hyp = gate(smaller.is_connected(), || "deletion disconnects".into())
            .and_then(|_| gate(smaller.is_in_f3s(), || "deletion leaves F3s".into()));
        cx.check("T10.ii", Le, hyp, Some(format!("delete {w}, m = {m}")), |c| {
            (c.on(&smaller, Mu, "G - w"), c.t(Mu).offset(m as i64))
        });
    }

    for size in 1..=2.min(n) {
        for attach in (0..n).combinations(size) {
            let mut bigger = g.clone();
            for &u in &attach {
                bigger = bigger.with_leaf(u).expect("vertex in range");
            }
            let detail = format!("leaves at {}", attach.iter().join(","));
            cx.check("T10.iii", Le, Ok(()), Some(detail), |c| {
                (c.on(&bigger, MuE, "G + leaves"), c.t(MuE).offset(1))
            });
        }
    }
}
