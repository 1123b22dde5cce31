//! Sweeps over enumerated graphs: the bound suite, the conjecture and
//! open-problem predicates, subgraph monotonicity, and randomized runs of
//! the extension recipes.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{run_bound_suite, BoundCheck, Evaluator, Side};
use crate::coloring::{Preset, TotalColoring};
use crate::construct::{extend_add_edge, extend_add_leaf, extend_add_leaves, FallbackOutcome};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_key, enumerate_connected, to_graph6, Distance, Graph};
use crate::solver::{chromatic_number, naive};

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_default()
}

/// Connected F3s graphs with `n_min <= n <= n_max`, one per isomorphism
/// class.
pub fn sweep_graphs(n_min: usize, n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in n_min.max(3)..=n_max {
        out.extend(enumerate_connected(n)?.into_iter().filter(Graph::is_in_f3s));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphChecks {
    pub graph6: String,
    pub checks: Vec<BoundCheck>,
}

/// Runs the bound suite on every graph in parallel; output is sorted by
/// graph6.
pub fn bound_sweep(graphs: &[Graph], ev: &Evaluator) -> Vec<GraphChecks> {
    let mut out: Vec<GraphChecks> = graphs
        .par_iter()
        .map(|g| GraphChecks {
            graph6: g6(g),
            checks: run_bound_suite(g, ev),
        })
        .collect();
    out.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    out
}

/// Every connected proper subgraph of `g` on at least three vertices, one
/// per isomorphism class, in canonical form. Connected graphs on three or
/// more vertices are automatically in F3s.
pub fn connected_subgraphs(g: &Graph) -> Result<Vec<Graph>> {
    const EDGE_LIMIT: usize = 20;
    let n = g.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for size in 3..=n {
        for vertices in (0..n).combinations(size) {
            let induced = g.induced(&vertices);
            let q = induced.q();
            if q > EDGE_LIMIT {
                return Err(Error::TooLarge { n: q, limit: EDGE_LIMIT });
            }
            if !induced.is_connected() {
                continue;
            }
            for mask in 1u32..(1 << q) {
                if size == n && mask == (1 << q) - 1 && q == g.q() {
                    continue;
                }
                if (mask.count_ones() as usize) < size - 1 {
                    continue;
                }
                let kept: Vec<usize> = (0..q).filter(|e| mask & (1 << e) != 0).collect();
                let sub = induced.edge_subgraph(&kept);
                if sub.is_connected() && seen.insert(canonical_key(&sub)?) {
                    out.push(canonical_form(&sub)?);
                }
            }
        }
    }
    out.sort_by_key(|h| (h.n(), h.q(), g6(h)));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConjectureId {
    #[serde(rename = "C1/BurrisSchelp")]
    BurrisSchelp,
    #[serde(rename = "C2/ZhangEtAl")]
    ZhangEtAl,
    #[serde(rename = "C3/sandwich")]
    Sandwich,
    #[serde(rename = "C4/subgraph8")]
    Subgraph8,
    #[serde(rename = "P1.1/interval")]
    P1Interval,
    #[serde(rename = "P1.2/diameter2")]
    P1Diameter2,
    #[serde(rename = "P1.3/diameter3")]
    P1Diameter3,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 7] = [
        ConjectureId::BurrisSchelp,
        ConjectureId::ZhangEtAl,
        ConjectureId::Sandwich,
        ConjectureId::Subgraph8,
        ConjectureId::P1Interval,
        ConjectureId::P1Diameter2,
        ConjectureId::P1Diameter3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConjectureId::BurrisSchelp => "C1/BurrisSchelp",
            ConjectureId::ZhangEtAl => "C2/ZhangEtAl",
            ConjectureId::Sandwich => "C3/sandwich",
            ConjectureId::Subgraph8 => "C4/subgraph8",
            ConjectureId::P1Interval => "P1.1/interval",
            ConjectureId::P1Diameter2 => "P1.2/diameter2",
            ConjectureId::P1Diameter3 => "P1.3/diameter3",
        }
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConjectureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let short = lower.split('/').next().unwrap_or("");
        Ok(match short {
            "c1" => ConjectureId::BurrisSchelp,
            "c2" => ConjectureId::ZhangEtAl,
            "c3" => ConjectureId::Sandwich,
            "c4" => ConjectureId::Subgraph8,
            "p1.1" => ConjectureId::P1Interval,
            "p1.2" => ConjectureId::P1Diameter2,
            "p1.3" => ConjectureId::P1Diameter3,
            _ => return Err(Error::Constraint(format!("unknown conjecture {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub graph6: String,
    pub preset: Preset,
    pub coloring: TotalColoring,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub graph6: String,
    pub values: BTreeMap<String, Side>,
    pub detail: String,
    /// Optimal colorings behind each value, for independent checking.
    pub witnesses: Vec<Witness>,
    /// Whether the reference solver reproduced every value.
    pub reverified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ConjectureStatus {
    NoCounterexampleFound,
    Counterexample,
    Inconclusive { timeouts: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture_id: ConjectureId,
    pub graphs_checked: usize,
    /// Graphs whose hypothesis held.
    pub applicable: usize,
    pub counterexamples: Vec<Counterexample>,
    pub status: ConjectureStatus,
}

enum Outcome {
    NotApplicable,
    Holds,
    Inconclusive,
    Fails {
        values: Vec<(String, Side)>,
        detail: String,
        involved: Vec<(Graph, Preset)>,
    },
}

fn smallest_palette(r: usize, target: usize) -> usize {
    let binom = |n: usize| -> u64 {
        if r > n {
            return 0;
        }
        (0..r as u64).fold(1u64, |acc, i| acc.saturating_mul(n as u64 - i) / (i + 1))
    };
    let mut k = r;
    while binom(k) < target as u64 {
        k += 1;
    }
    k
}

/// Evaluates a predicate over exact values; any non-exact input makes the
/// instance inconclusive.
fn judge(
    ev: &Evaluator,
    terms: &[(&Graph, Preset, &str)],
    pred: impl FnOnce(&[i64]) -> Option<String>,
) -> Outcome {
    let sides: Vec<Side> = terms.iter().map(|&(g, p, _)| ev.preset(g, p)).collect();
    if sides.iter().any(|s| matches!(s, Side::Infeasible | Side::Undefined)) {
        return Outcome::NotApplicable;
    }
    let Some(values): Option<Vec<i64>> = sides.iter().map(|s| s.exact()).collect() else {
        return Outcome::Inconclusive;
    };
    match pred(&values) {
        None => Outcome::Holds,
        Some(detail) => Outcome::Fails {
            values: terms
                .iter()
                .zip(&sides)
                .map(|(&(_, p, name), &s)| (format!("{}({name})", p.name()), s))
                .collect(),
            detail,
            involved: terms.iter().map(|&(g, p, _)| (g.clone(), p)).collect(),
        },
    }
}

struct SubgraphIndex {
    subs: HashMap<(usize, u128), Vec<Graph>>,
}

impl SubgraphIndex {
    fn of(&mut self, g: &Graph) -> Result<&[Graph]> {
        let key = canonical_key(g)?;
        if let std::collections::hash_map::Entry::Vacant(e) = self.subs.entry(key) {
            let list = connected_subgraphs(g)?;
            e.insert(list);
        }
        Ok(&self.subs[&key])
    }
}

fn conjecture_1(g: &Graph, ev: &Evaluator) -> Outcome {
    let stats = g.degree_stats();
    let k = stats
        .degree_counts
        .iter()
        .filter(|(&d, &count)| d > 0 && count > 0)
        .map(|(&d, &count)| smallest_palette(d, count))
        .max()
        .unwrap_or(0) as i64;
    judge(ev, &[(g, Preset::ChiS, "G")], |v| {
        (!(k <= v[0] && v[0] <= k + 1)).then(|| format!("k = {k}, χ′ₛ = {}", v[0]))
    })
}

fn conjecture_2(g: &Graph, ev: &Evaluator) -> Outcome {
    let n = g.n();
    let log = (usize::BITS - (n - 1).leading_zeros()) as i64;
    let bound = n as i64 + log + 1;
    judge(ev, &[(g, Preset::MuE, "G")], |v| {
        (v[0] > bound).then(|| format!("χ″₂ₐₛ = {} > n + ⌈log₂ n⌉ + 1 = {bound}", v[0]))
    })
}

fn conjecture_3(g: &Graph, ev: &Evaluator) -> Outcome {
    let mut inconclusive = false;
    for (edge, partial) in [(Preset::ChiS, Preset::EVdtc), (Preset::ChiAs, Preset::EAvdtc)] {
        let o = judge(ev, &[(g, edge, "G"), (g, partial, "G")], |v| {
            (!(v[0] <= v[1] && v[1] <= v[0] + 1)).then(|| {
                format!("{} = {}, {} = {}", edge.name(), v[0], partial.name(), v[1])
            })
        });
        match o {
            Outcome::Fails { .. } => return o,
            Outcome::Inconclusive => inconclusive = true,
            _ => {}
        }
    }
    if inconclusive {
        Outcome::Inconclusive
    } else {
        Outcome::Holds
    }
}

fn conjecture_4(g: &Graph, ev: &Evaluator, index: &mut SubgraphIndex) -> Result<Outcome> {
    let parent = ev.preset(g, Preset::All8);
    let Side::Exact(top) = parent else {
        return Ok(match parent {
            Side::Timeout(_) => Outcome::Inconclusive,
            _ => Outcome::NotApplicable,
        });
    };
    let mut inconclusive = false;
    for h in index.of(g)?.to_vec() {
        match ev.preset(&h, Preset::All8) {
            Side::Exact(v) if v > top => {
                return Ok(Outcome::Fails {
                    values: vec![("all8(G)".into(), parent), ("all8(H)".into(), Side::Exact(v))],
                    detail: format!("subgraph H = {}", g6(&h)),
                    involved: vec![(g.clone(), Preset::All8), (h, Preset::All8)],
                });
            }
            Side::Timeout(_) => inconclusive = true,
            _ => {}
        }
    }
    Ok(if inconclusive {
        Outcome::Inconclusive
    } else {
        Outcome::Holds
    })
}

/// Looks for G₁ ⊆ H ⊆ G with equal values at G₁ and G but not at H.
fn problem_1_interval(g: &Graph, ev: &Evaluator, index: &mut SubgraphIndex) -> Result<Outcome> {
    let mut inconclusive = false;
    for p in [Preset::Mu, Preset::MuE] {
        let Side::Exact(k) = ev.preset(g, p) else {
            inconclusive = true;
            continue;
        };
        let middles = index.of(g)?.to_vec();
        for h in middles {
            let vh = match ev.preset(&h, p) {
                Side::Exact(v) => v,
                Side::Timeout(_) => {
                    inconclusive = true;
                    continue;
                }
                _ => continue,
            };
            if vh == k {
                continue;
            }
            for g1 in index.of(&h)?.to_vec() {
                match ev.preset(&g1, p) {
                    Side::Exact(v) if v == k => {
                        return Ok(Outcome::Fails {
                            values: vec![
                                (format!("{}(G1)", p.name()), Side::Exact(v)),
                                (format!("{}(H)", p.name()), Side::Exact(vh)),
                                (format!("{}(G2)", p.name()), Side::Exact(k)),
                            ],
                            detail: format!("G1 = {}, H = {}", g6(&g1), g6(&h)),
                            involved: vec![(g1, p), (h, p), (g.clone(), p)],
                        });
                    }
                    Side::Timeout(_) => inconclusive = true,
                    _ => {}
                }
            }
        }
    }
    Ok(if inconclusive {
        Outcome::Inconclusive
    } else {
        Outcome::Holds
    })
}

fn problem_1_diameter(g: &Graph, ev: &Evaluator, three: bool) -> Outcome {
    let n = g.n();
    let (delta, min_deg) = (g.max_degree(), g.min_degree());
    let diameter = g.diameter();
    let k = smallest_palette(delta + 1, n) as i64;
    if !three {
        if diameter != Distance::Finite(2) {
            return Outcome::NotApplicable;
        }
        return judge(ev, &[(g, Preset::Mu, "G")], |v| {
            ((v[0] - k).abs() > 1).then(|| format!("k = {k}, χ″₂ₛ = {}", v[0]))
        });
    }
    let m = smallest_palette(min_deg + 1, n) as i64;
    let far = matches!(diameter, Distance::Finite(d) if d >= 3);
    if !far || delta == min_deg || m > k {
        return Outcome::NotApplicable;
    }
    judge(ev, &[(g, Preset::Mu, "G")], |v| {
        (!(m <= v[0] && v[0] <= k)).then(|| format!("m = {m}, k = {k}, χ″₂ₛ = {}", v[0]))
    })
}

fn witness_for(g: &Graph, p: Preset, ev: &Evaluator) -> Option<Witness> {
    let r = chromatic_number(g, &p.constraint_set(), ev.budget()).ok()?;
    Some(Witness {
        graph6: g6(g),
        preset: p,
        coloring: r.witness?,
    })
}

fn reference_agrees(g: &Graph, p: Preset, ev: &Evaluator) -> bool {
    match (ev.preset(g, p), naive::chromatic_number(g, &p.constraint_set())) {
        (Side::Exact(v), Some(r)) => v == r as i64,
        (Side::Infeasible, None) => true,
        _ => false,
    }
}

/// Evaluates each selected predicate on every connected F3s graph with
/// `n_min <= n <= n_max`. Timeouts count as inconclusive, never as
/// counterexamples.
pub fn conjecture_sweep(
    n_min: usize,
    n_max: usize,
    which: &[ConjectureId],
    ev: &Evaluator,
) -> Result<Vec<ConjectureReport>> {
    let graphs = sweep_graphs(n_min, n_max)?;
    let mut index = SubgraphIndex {
        subs: HashMap::new(),
    };
    if which.iter().any(|c| matches!(c, ConjectureId::Subgraph8 | ConjectureId::P1Interval)) {
        // fill the value cache in parallel before the sequential walk
        let all: Vec<Graph> = graphs
            .iter()
            .map(connected_subgraphs)
            .flatten_ok()
            .collect::<Result<_>>()?;
        all.par_iter().for_each(|h| {
            for p in [Preset::All8, Preset::Mu, Preset::MuE] {
                ev.preset(h, p);
            }
        });
    }
    let mut reports = Vec::new();
    for &id in which {
        let outcomes: Vec<Outcome> = match id {
            ConjectureId::Subgraph8 => graphs
                .iter()
                .map(|g| conjecture_4(g, ev, &mut index))
                .collect::<Result<_>>()?,
            ConjectureId::P1Interval => graphs
                .iter()
                .map(|g| problem_1_interval(g, ev, &mut index))
                .collect::<Result<_>>()?,
            _ => graphs
                .par_iter()
                .map(|g| match id {
                    ConjectureId::BurrisSchelp => conjecture_1(g, ev),
                    ConjectureId::ZhangEtAl => conjecture_2(g, ev),
                    ConjectureId::Sandwich => conjecture_3(g, ev),
                    ConjectureId::P1Diameter2 => problem_1_diameter(g, ev, false),
                    _ => problem_1_diameter(g, ev, true),
                })
                .collect(),
        };
        let mut report = ConjectureReport {
            conjecture_id: id,
            graphs_checked: graphs.len(),
            applicable: 0,
            counterexamples: Vec::new(),
            status: ConjectureStatus::NoCounterexampleFound,
        };
        let mut timeouts = 0;
        for (g, outcome) in graphs.iter().zip(outcomes) {
            match outcome {
                Outcome::NotApplicable => continue,
                Outcome::Holds => {}
                Outcome::Inconclusive => timeouts += 1,
                Outcome::Fails {
                    values,
                    detail,
                    involved,
                } => {
                    let reverified = involved.iter().all(|(h, p)| reference_agrees(h, *p, ev));
                    report.counterexamples.push(Counterexample {
                        graph6: g6(g),
                        values: values.into_iter().collect(),
                        detail,
                        witnesses: involved
                            .iter()
                            .filter_map(|(h, p)| witness_for(h, *p, ev))
                            .collect(),
                        reverified: Some(reverified),
                    });
                }
            }
            report.applicable += 1;
        }
        report.status = if !report.counterexamples.is_empty() {
            ConjectureStatus::Counterexample
        } else if timeouts > 0 {
            ConjectureStatus::Inconclusive { timeouts }
        } else {
            ConjectureStatus::NoCounterexampleFound
        };
        reports.push(report);
    }
    Ok(reports)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Anomaly {
    pub parent: String,
    pub child: String,
    pub deletion: String,
    pub parent_value: i64,
    pub child_value: i64,
}

/// Subgraphs of `g` obtained by one edge deletion (and, if asked, one
/// vertex deletion) that stay connected and in F3s, and whose exact value
/// exceeds the parent's.
pub fn subgraph_monotonicity_scan(
    g: &Graph,
    variant: Preset,
    ev: &Evaluator,
    vertex_deletions: bool,
) -> Vec<Anomaly> {
    let Side::Exact(top) = ev.preset(g, variant) else {
        return Vec::new();
    };
    let mut children: Vec<(String, Graph)> = (0..g.q())
        .map(|e| {
            let (a, b) = g.edge(e);
            (format!("edge {a}-{b}"), g.without_edges(&[e]))
        })
        .collect();
    if vertex_deletions {
        children.extend((0..g.n()).map(|w| (format!("vertex {w}"), g.without_vertex(w))));
    }
    children
        .into_iter()
        .filter(|(_, h)| h.is_connected() && h.is_in_f3s())
        .filter_map(|(deletion, h)| match ev.preset(&h, variant) {
            Side::Exact(v) if v > top => Some(Anomaly {
                parent: g6(g),
                child: g6(&h),
                deletion,
                parent_value: top,
                child_value: v,
            }),
            _ => None,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtensionKind {
    AddEdge,
    AddLeaf,
    AddLeaves,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FallbackInstance {
    pub base: String,
    pub operation: String,
    pub case_id: Option<String>,
    pub outcome: FallbackOutcome,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtensionRunReport {
    pub kind: ExtensionKind,
    pub seed: u64,
    pub instances: usize,
    /// Outputs verified within palette k + 1, whether by recipe or search.
    pub verified: usize,
    pub fallbacks: Vec<FallbackInstance>,
    pub case_counts: BTreeMap<String, usize>,
    /// Instances skipped because the base value was not solved exactly.
    pub skipped: usize,
    /// Each extended graph with the coloring produced for it.
    #[serde(skip)]
    pub certificates: Vec<(Graph, TotalColoring)>,
}

impl ExtensionRunReport {
    pub fn fallback_rate(&self) -> f64 {
        if self.instances == 0 {
            0.0
        } else {
            self.fallbacks.len() as f64 / self.instances as f64
        }
    }
}

/// Applies the extension recipe to `count` random bases drawn from the
/// connected F3s graphs with at most `n_max` vertices, each randomly
/// relabelled and colored optimally by the solver.
pub fn extension_property_run(
    kind: ExtensionKind,
    count: usize,
    seed: u64,
    n_max: usize,
    ev: &Evaluator,
) -> Result<ExtensionRunReport> {
    let pool: Vec<Graph> = sweep_graphs(3, n_max)?
        .into_iter()
        .filter(|g| kind != ExtensionKind::AddEdge || !g.is_complete())
        .collect();
    if pool.is_empty() {
        return Err(Error::Precondition("no base graphs".into()));
    }
    let preset = match kind {
        ExtensionKind::AddLeaves => Preset::MuE,
        _ => Preset::Mu,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = ExtensionRunReport {
        kind,
        seed,
        instances: 0,
        verified: 0,
        fallbacks: Vec::new(),
        case_counts: BTreeMap::new(),
        skipped: 0,
        certificates: Vec::new(),
    };
    for _ in 0..count {
        let base = pool.choose(&mut rng).expect("nonempty pool");
        let mut perm: Vec<usize> = (0..base.n()).collect();
        perm.shuffle(&mut rng);
        let h = base.relabel(&perm);
        let solved = chromatic_number(&h, &preset.constraint_set(), ev.budget())?;
        let exact = solved.exact().is_some();
        let Some(f) = solved.witness.filter(|_| exact) else {
            report.skipped += 1;
            continue;
        };
        let (operation, result, extended) = match kind {
            ExtensionKind::AddEdge => {
                let non_edges: Vec<(usize, usize)> = (0..h.n())
                    .tuple_combinations()
                    .filter(|&(u, v)| !h.has_edge(u, v))
                    .collect();
                let uv = *non_edges.choose(&mut rng).expect("not complete");
                let report = extend_add_edge(&h, &f, uv, ev.budget())?;
                (format!("add {}-{}", uv.0, uv.1), report, h.with_edge(uv.0, uv.1)?)
            }
            ExtensionKind::AddLeaf => {
                let u = rng.gen_range(0..h.n());
                let report = extend_add_leaf(&h, &f, u, ev.budget())?;
                (format!("leaf at {u}"), report, h.with_leaf(u)?)
            }
            ExtensionKind::AddLeaves => {
                let size = rng.gen_range(1..=h.n());
                let mut attach: Vec<usize> = (0..h.n()).collect();
                attach.shuffle(&mut rng);
                attach.truncate(size);
                let report = extend_add_leaves(&h, &f, &attach, ev.budget())?;
                let mut g = h.clone();
                for &u in &attach {
                    g = g.with_leaf(u)?;
                }
                (format!("leaves at {}", attach.iter().join(",")), report, g)
            }
        };
        report.instances += 1;
        let case = result.case_id.clone().unwrap_or_else(|| "-".into());
        *report.case_counts.entry(case).or_default() += 1;
        if result.certifies() && result.output.k() <= f.k() + 1 {
            report.verified += 1;
        }
        if let Some(fb) = &result.fallback {
            log::info!(
                "{}: recipe failed on {} ({operation}, case {:?})",
                result.method,
                g6(&h),
                result.case_id
            );
            report.fallbacks.push(FallbackInstance {
                base: g6(&h),
                operation,
                case_id: result.case_id.clone(),
                outcome: fb.outcome.clone(),
            });
        }
        report.certificates.push((extended, result.output));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};
    use crate::solver::SearchBudget;

    #[test]
    fn subgraphs_of_c4() {
        let c4 = family(FamilyKind::Cycle, &[4]).unwrap();
        let subs = connected_subgraphs(&c4).unwrap();
        // P3 and P4
        assert_eq!(subs.len(), 2);
        assert!(subs.iter().all(|h| h.is_tree()));
    }

    #[test]
    fn conjecture_1_on_c5() {
        let ev = Evaluator::new(SearchBudget::default());
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        assert!(matches!(conjecture_1(&c5, &ev), Outcome::Holds));
        assert_eq!(smallest_palette(2, 5), 4);
        let v = ev.preset(&c5, Preset::ChiS).exact().unwrap();
        assert!((4..=5).contains(&v));
    }

    #[test]
    fn ids_parse() {
        assert_eq!("c2".parse::<ConjectureId>().unwrap(), ConjectureId::ZhangEtAl);
        assert_eq!("P1.3".parse::<ConjectureId>().unwrap(), ConjectureId::P1Diameter3);
        assert!("c9".parse::<ConjectureId>().is_err());
    }

    #[test]
    fn deleting_into_an_isolated_edge_is_skipped() {
        // P4: deleting the middle edge leaves two isolated edges
        let p4 = family(FamilyKind::Path, &[4]).unwrap();
        let ev = Evaluator::new(SearchBudget::default());
        assert!(subgraph_monotonicity_scan(&p4, Preset::EVdtc, &ev, true).is_empty());
    }

    #[test]
    fn small_extension_run() {
        let ev = Evaluator::new(SearchBudget::default());
        let r = extension_property_run(ExtensionKind::AddLeaf, 10, 7, 4, &ev).unwrap();
        assert_eq!(r.instances, 10);
        assert_eq!(r.verified, 10);
        assert!(r.fallbacks.is_empty());
    }
}
