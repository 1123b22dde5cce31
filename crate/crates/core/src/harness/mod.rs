//! Evaluates the bound registry and the report-only conjecture predicates
//! against exact solver values.

mod registry;
mod sweep;

pub use registry::{run_bound_suite, BOUND_IDS};
pub use sweep::{
    bound_sweep, conjecture_sweep, connected_subgraphs, extension_property_run,
    sweep_graphs, subgraph_monotonicity_scan, Anomaly, ConjectureId, ConjectureReport,
    ConjectureStatus, Counterexample, ExtensionKind, ExtensionRunReport, FallbackInstance,
    GraphChecks, Witness,
};

use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::coloring::{ConstraintSet, Preset};
use crate::graph::{canonical_key, to_graph6, Graph};
use crate::solver::{chromatic_number, naive, SearchBudget, SolveResult, SolveStatus};

/// One side of an inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Side {
    Exact(i64),
    /// The search ran out of budget; the payload is the best lower bound.
    Timeout(i64),
    /// No coloring exists (closed twins).
    Infeasible,
    /// The variant is not defined on this graph.
    Undefined,
}

impl Side {
    pub fn exact(self) -> Option<i64> {
        match self {
            Side::Exact(v) => Some(v),
            _ => None,
        }
    }

    fn combine(self, other: Side, op: impl Fn(i64, i64) -> i64) -> Side {
        use Side::*;
        match (self, other) {
            (Undefined, _) | (_, Undefined) => Undefined,
            (Infeasible, _) | (_, Infeasible) => Infeasible,
            (Exact(a), Exact(b)) => Exact(op(a, b)),
            (Exact(a) | Timeout(a), Exact(b) | Timeout(b)) => Timeout(op(a, b)),
        }
    }

    pub fn plus(self, other: Side) -> Side {
        self.combine(other, |a, b| a + b)
    }

    pub fn offset(self, c: i64) -> Side {
        self.plus(Side::Exact(c))
    }

    /// Larger of two sides; any non-exact side taints the result.
    pub fn max(self, other: Side) -> Side {
        self.combine(other, i64::max)
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Exact(v) => write!(f, "{v}"),
            Side::Timeout(v) => write!(f, "timeout(>={v})"),
            Side::Infeasible => f.write_str("infeasible"),
            Side::Undefined => f.write_str("undefined"),
        }
    }
}

impl From<&SolveResult> for Side {
    fn from(r: &SolveResult) -> Side {
        match (r.status, r.value) {
            (SolveStatus::Exact, Some(v)) => Side::Exact(v as i64),
            (SolveStatus::LowerBoundOnly, Some(v)) => Side::Timeout(v as i64),
            _ => Side::Infeasible,
        }
    }
}

/// A solver value a check depends on, kept for re-verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Source {
    pub graph6: String,
    pub preset: Preset,
    pub value: Side,
}

/// Solver-backed values with a cache keyed by isomorphism class.
pub struct Evaluator {
    budget: SearchBudget,
    cache: Mutex<HashMap<(usize, u128, ConstraintSet), Side>>,
}

impl Evaluator {
    pub fn new(budget: SearchBudget) -> Self {
        Evaluator {
            budget,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn budget(&self) -> SearchBudget {
        self.budget
    }

    pub fn value(&self, g: &Graph, cs: &ConstraintSet) -> Side {
        if !cs.is_empty() && !g.is_in_f3s() {
            return Side::Undefined;
        }
        let key = canonical_key(g).ok().map(|(n, k)| (n, k, *cs));
        if let Some(key) = &key {
            if let Some(&v) = self.cache.lock().unwrap().get(key) {
                return v;
            }
        }
        let side = match chromatic_number(g, cs, self.budget) {
            Ok(r) => Side::from(&r),
            Err(_) => Side::Undefined,
        };
        if let Some(key) = key {
            self.cache.lock().unwrap().insert(key, side);
        }
        side
    }

    pub fn preset(&self, g: &Graph, p: Preset) -> Side {
        self.value(g, &p.constraint_set())
    }

    /// Value plus its provenance record.
    pub(crate) fn term(&self, g: &Graph, p: Preset) -> Expr {
        let value = self.preset(g, p);
        Expr {
            side: value,
            text: p.symbol().to_string(),
            sources: vec![Source {
                graph6: to_graph6(g).unwrap_or_default(),
                preset: p,
                value,
            }],
        }
    }

    pub fn cached(&self) -> usize {
        self.cache.lock().unwrap().len()
    }
}

/// An arithmetic expression over solver values and graph invariants.
#[derive(Clone, Debug)]
pub(crate) struct Expr {
    pub side: Side,
    pub text: String,
    pub sources: Vec<Source>,
}

impl Expr {
    pub fn konst(v: i64, text: impl Into<String>) -> Expr {
        Expr {
            side: Side::Exact(v),
            text: text.into(),
            sources: Vec::new(),
        }
    }

    pub fn plus(mut self, other: Expr) -> Expr {
        self.side = self.side.plus(other.side);
        self.text = format!("{} + {}", self.text, other.text);
        self.sources.extend(other.sources);
        self
    }

    pub fn offset(mut self, c: i64) -> Expr {
        self.side = self.side.offset(c);
        self.text = if c >= 0 {
            format!("{} + {c}", self.text)
        } else {
            format!("{} - {}", self.text, -c)
        };
        self
    }

    pub fn named(mut self, text: impl Into<String>) -> Expr {
        self.text = text.into();
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Le,
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub bound_id: String,
    pub hypothesis_met: bool,
    pub lhs: Side,
    pub relation: Relation,
    pub rhs: Side,
    /// `None` unless the hypothesis is met and both sides are exact.
    pub holds: Option<bool>,
    /// How each side was obtained.
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    /// For violations: whether the reference solver reproduced every
    /// value involved.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reverified: Option<bool>,
    #[serde(skip)]
    pub sources: Vec<Source>,
}

impl BoundCheck {
    pub(crate) fn evaluate(id: &str, lhs: Expr, relation: Relation, rhs: Expr) -> BoundCheck {
        let holds = match (lhs.side, rhs.side) {
            (Side::Exact(a), Side::Exact(b)) => Some(match relation {
                Relation::Le => a <= b,
                Relation::Ge => a >= b,
            }),
            _ => None,
        };
        let mut sources = lhs.sources;
        sources.extend(rhs.sources);
        BoundCheck {
            bound_id: id.to_string(),
            hypothesis_met: true,
            lhs: lhs.side,
            relation,
            rhs: rhs.side,
            holds,
            provenance: format!("{} {relation} {}", lhs.text, rhs.text),
            detail: None,
            reverified: None,
            sources,
        }
    }

    pub(crate) fn not_applicable(id: &str, relation: Relation, why: impl Into<String>) -> BoundCheck {
        BoundCheck {
            bound_id: id.to_string(),
            hypothesis_met: false,
            lhs: Side::Undefined,
            relation,
            rhs: Side::Undefined,
            holds: None,
            provenance: String::new(),
            detail: Some(why.into()),
            reverified: None,
            sources: Vec::new(),
        }
    }

    pub fn violated(&self) -> bool {
        self.holds == Some(false)
    }
}

/// Recomputes every solver value behind `check` with the reference solver.
/// True when all of them agree, i.e. the violation is not a solver bug.
pub fn reverify(check: &BoundCheck) -> bool {
    check.sources.iter().all(|s| {
        let Ok(g) = crate::graph::parse_graph6(&s.graph6) else {
            return false;
        };
        let reference = naive::chromatic_number(&g, &s.preset.constraint_set());
        match (s.value, reference) {
            (Side::Exact(v), Some(r)) => v == r as i64,
            (Side::Infeasible, None) => true,
            (Side::Undefined, _) => true,
            _ => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn side_arithmetic() {
        assert_eq!(Side::Exact(3).plus(Side::Exact(4)), Side::Exact(7));
        assert_eq!(Side::Exact(3).plus(Side::Timeout(4)), Side::Timeout(7));
        assert_eq!(Side::Timeout(3).plus(Side::Infeasible), Side::Infeasible);
        assert_eq!(Side::Infeasible.plus(Side::Undefined), Side::Undefined);
        assert_eq!(Side::Exact(3).max(Side::Exact(5)), Side::Exact(5));
    }

    #[test]
    fn evaluate_relations() {
        let c = BoundCheck::evaluate("x", Expr::konst(3, "a"), Relation::Le, Expr::konst(4, "b"));
        assert_eq!(c.holds, Some(true));
        let c = BoundCheck::evaluate("x", Expr::konst(5, "a"), Relation::Le, Expr::konst(4, "b"));
        assert!(c.violated());
        let t = Expr {
            side: Side::Timeout(4),
            text: "t".into(),
            sources: vec![],
        };
        let c = BoundCheck::evaluate("x", t, Relation::Ge, Expr::konst(4, "b"));
        assert_eq!(c.holds, None);
    }

    #[test]
    fn evaluator_caches_isomorphic_graphs() {
        use crate::graph::{family, FamilyKind};
        let ev = Evaluator::new(SearchBudget::default());
        let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
        assert_eq!(ev.preset(&c5, Preset::All8), Side::Exact(5));
        let shuffled = c5.relabel(&[2, 4, 1, 0, 3]);
        assert_eq!(ev.preset(&shuffled, Preset::All8), Side::Exact(5));
        assert_eq!(ev.cached(), 1);
        let k2 = family(FamilyKind::Path, &[2]).unwrap();
        assert_eq!(ev.preset(&k2, Preset::Mu), Side::Undefined);
    }
}
