//! Exact chromatic numbers for every constraint set: a lower bound seeds an
//! ascending sequence of per-palette decision searches.

mod bounds;
pub mod naive;
mod search;

pub use bounds::{lower_bound, lower_bound_components, BoundComponent};
pub use search::{feasible_at, Feasibility, FeasibleAt};

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::{satisfies, Color, Condition, ConstraintSet, Mode, Preset, TotalColoring, MAX_COLOR};
use crate::error::{Error, Result};
use crate::graph::{to_graph6, Graph};

pub const DEFAULT_MAX_NODES: u64 = 10_000_000;
pub const DEFAULT_MAX_SECONDS: u64 = 60;

/// Limits applied to each single-palette search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_time: Duration) -> Result<Self> {
        if max_nodes == 0 || max_time.is_zero() {
            return Err(Error::Precondition("search budget must be positive".into()));
        }
        Ok(SearchBudget {
            max_nodes,
            max_time,
        })
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: DEFAULT_MAX_NODES,
            max_time: Duration::from_secs(DEFAULT_MAX_SECONDS),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Structural {
    Feasible,
    /// Some pair of closed twins makes `condition` unsatisfiable.
    Infeasible {
        condition: Condition,
        pairs: Vec<(usize, usize)>,
    },
}

impl Structural {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Structural::Feasible)
    }
}

/// Closed-twin test for C3 and C4. Every other constraint set is
/// attainable on graphs without isolated edges and with at most one
/// isolated vertex (all elements colored distinctly).
pub fn structural_feasibility(g: &Graph, cs: &ConstraintSet) -> Structural {
    if cs.contains(Condition::C3) {
        let pairs = g.closed_twin_pairs(false);
        if !pairs.is_empty() {
            return Structural::Infeasible {
                condition: Condition::C3,
                pairs,
            };
        }
    }
    if cs.contains(Condition::C4) {
        let pairs = g.closed_twin_pairs(true);
        if !pairs.is_empty() {
            return Structural::Infeasible {
                condition: Condition::C4,
                pairs,
            };
        }
    }
    Structural::Feasible
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Exact,
    LowerBoundOnly,
    InfeasibleStructurally,
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveStatus::Exact => "exact",
            SolveStatus::LowerBoundOnly => "lower_bound_only",
            SolveStatus::InfeasibleStructurally => "infeasible_structurally",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AttemptOutcome {
    Witness,
    Refuted,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attempt {
    pub k: Color,
    pub outcome: AttemptOutcome,
    pub nodes: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub millis: u64,
    pub lower_bound: Color,
    pub attempts: Vec<Attempt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// The chromatic number when exact, the largest palette not yet refuted
    /// when the budget ran out, `None` when no coloring exists.
    pub value: Option<Color>,
    pub witness: Option<TotalColoring>,
    /// Closed-twin pairs behind a structural infeasibility.
    pub twin_pairs: Vec<(usize, usize)>,
    pub stats: SolveStats,
}

impl SolveResult {
    pub fn exact(&self) -> Option<Color> {
        (self.status == SolveStatus::Exact).then_some(self.value).flatten()
    }

    pub fn record(&self, g: &Graph, cs: &ConstraintSet, with_witness: bool) -> Result<SolveRecord> {
        Ok(SolveRecord {
            graph6: to_graph6(g)?,
            constraint_set: constraint_label(cs),
            mode: cs.mode(),
            status: self.status,
            value: self.value,
            witness: if with_witness { self.witness.clone() } else { None },
            twin_pairs: self.twin_pairs.clone(),
            nodes: self.stats.nodes,
            millis: self.stats.millis,
        })
    }
}

/// Flat JSON form of a solve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveRecord {
    pub graph6: String,
    pub constraint_set: String,
    pub mode: Mode,
    pub status: SolveStatus,
    pub value: Option<Color>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<TotalColoring>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub twin_pairs: Vec<(usize, usize)>,
    pub nodes: u64,
    pub millis: u64,
}

/// Preset name when `cs` is one, otherwise the explicit form.
pub fn constraint_label(cs: &ConstraintSet) -> String {
    Preset::ALL
        .into_iter()
        .find(|p| p.constraint_set() == *cs)
        .map(|p| p.name().to_string())
        .unwrap_or_else(|| cs.to_string())
}

/// Largest palette ever needed: every element distinct.
pub fn palette_ceiling(g: &Graph, mode: Mode) -> Color {
    (match mode {
        Mode::Total => g.n() + g.q(),
        Mode::EdgeOnly => g.q(),
        Mode::VertexOnly => g.n(),
    }) as Color
}

pub fn chromatic_number(g: &Graph, cs: &ConstraintSet, budget: SearchBudget) -> Result<SolveResult> {
    let started = Instant::now();
    if !cs.is_empty() && !g.is_in_f3s() {
        return Err(Error::Precondition(format!(
            "{cs} needs n >= 3, no isolated edge and at most one isolated vertex"
        )));
    }
    let mut stats = SolveStats::default();
    if let Structural::Infeasible { pairs, .. } = structural_feasibility(g, cs) {
        stats.millis = started.elapsed().as_millis() as u64;
        return Ok(SolveResult {
            status: SolveStatus::InfeasibleStructurally,
            value: None,
            witness: None,
            twin_pairs: pairs,
            stats,
        });
    }
    let lb = lower_bound(g, cs);
    stats.lower_bound = lb;
    let ceiling = palette_ceiling(g, cs.mode()).max(lb);
    for k in lb..=ceiling {
        if k > MAX_COLOR {
            stats.millis = started.elapsed().as_millis() as u64;
            return Ok(SolveResult {
                status: SolveStatus::LowerBoundOnly,
                value: Some(k),
                witness: None,
                twin_pairs: Vec::new(),
                stats,
            });
        }
        let run = feasible_at(g, k, cs, budget);
        stats.nodes += run.nodes;
        let (outcome, done) = match run.outcome {
            Feasibility::Witness(f) => {
                debug_assert!(satisfies(g, &f, cs).ok);
                (AttemptOutcome::Witness, Some((SolveStatus::Exact, Some(f))))
            }
            Feasibility::Refuted => (AttemptOutcome::Refuted, None),
            Feasibility::BudgetExhausted => {
                (AttemptOutcome::BudgetExhausted, Some((SolveStatus::LowerBoundOnly, None)))
            }
        };
        stats.attempts.push(Attempt {
            k,
            outcome,
            nodes: run.nodes,
        });
        if let Some((status, witness)) = done {
            stats.millis = started.elapsed().as_millis() as u64;
            return Ok(SolveResult {
                status,
                value: Some(k),
                witness,
                twin_pairs: Vec::new(),
                stats,
            });
        }
    }
    Err(Error::Constraint(format!(
        "no {cs} coloring with at most {ceiling} colors"
    )))
}

pub fn solve_preset(g: &Graph, preset: Preset, budget: SearchBudget) -> Result<SolveResult> {
    chromatic_number(g, &preset.constraint_set(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, FamilyKind};

    fn exact(g: &Graph, p: Preset) -> Color {
        solve_preset(g, p, SearchBudget::default())
            .unwrap()
            .exact()
            .unwrap()
    }

    #[test]
    fn spec_examples() {
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        assert_eq!(exact(&c5, Preset::All8), 5);
        let star = family(FamilyKind::Star, &[5]).unwrap();
        assert_eq!(exact(&star, Preset::Mu), 5);
        let k32 = family(FamilyKind::CompleteBipartite, &[3, 2]).unwrap();
        assert_eq!(exact(&k32, Preset::ChiS), 4);
    }

    #[test]
    fn classical_values() {
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        assert_eq!(exact(&c5, Preset::Chi), 3);
        assert_eq!(exact(&c5, Preset::ChiEdge), 3);
        assert_eq!(exact(&c5, Preset::ChiTotal), 4);
        let k4 = family(FamilyKind::Complete, &[4]).unwrap();
        assert_eq!(exact(&k4, Preset::ChiTotal), 5);
        assert_eq!(exact(&k4, Preset::ChiEdge), 3);
        let k5 = family(FamilyKind::Complete, &[5]).unwrap();
        assert_eq!(exact(&k5, Preset::ChiTotal), 5);
    }

    #[test]
    fn structural_cases() {
        let k5 = family(FamilyKind::Complete, &[5]).unwrap();
        let r = solve_preset(&k5, Preset::VVdtc, SearchBudget::default()).unwrap();
        assert_eq!(r.status, SolveStatus::InfeasibleStructurally);
        assert_eq!(r.twin_pairs.len(), 10);
        let k33 = family(FamilyKind::CompleteBipartite, &[3, 3]).unwrap();
        assert!(structural_feasibility(&k33, &Preset::VAvdtc.constraint_set()).is_feasible());
        assert!(structural_feasibility(&k33, &Preset::VVdtc.constraint_set()).is_feasible());
    }

    #[test]
    fn distinguishing_needs_f3s() {
        let k2 = family(FamilyKind::Path, &[2]).unwrap();
        assert!(solve_preset(&k2, Preset::Mu, SearchBudget::default()).is_err());
        assert_eq!(exact(&k2, Preset::ChiTotal), 3);
    }

    #[test]
    fn budget_exhaustion_is_a_status() {
        let k5 = family(FamilyKind::Complete, &[5]).unwrap();
        let budget = SearchBudget::new(50, Duration::from_secs(5)).unwrap();
        let r = solve_preset(&k5, Preset::Mu, budget).unwrap();
        assert_eq!(r.status, SolveStatus::LowerBoundOnly);
        assert!(r.witness.is_none());
        assert!(SearchBudget::new(0, Duration::from_secs(1)).is_err());
    }

    #[test]
    fn record_shape() {
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        let cs = Preset::All8.constraint_set();
        let r = chromatic_number(&c5, &cs, SearchBudget::default()).unwrap();
        let rec = r.record(&c5, &cs, true).unwrap();
        assert_eq!(rec.graph6, "Dhc");
        assert_eq!(rec.constraint_set, "all8");
        let json = serde_json::to_value(&rec).unwrap();
        for key in ["graph6", "constraint_set", "mode", "status", "value", "witness", "nodes", "millis"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }
}
