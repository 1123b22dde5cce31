use totalcolor::graph::{family, FamilyKind};
use totalcolor::harness::{
    bound_sweep, conjecture_sweep, run_bound_suite, sweep_graphs, ConjectureId, Evaluator,
};
use totalcolor::solver::SearchBudget;

#[test]
fn sweep_output_is_sorted_and_reproducible() {
    let graphs = sweep_graphs(3, 4).unwrap();
    let a = bound_sweep(&graphs, &Evaluator::new(SearchBudget::default()));
    let b = bound_sweep(&graphs, &Evaluator::new(SearchBudget::default()));
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| w[0].graph6 <= w[1].graph6));
}

#[test]
fn conjecture_reports_are_reproducible() {
    let which = ConjectureId::ALL;
    let a = conjecture_sweep(3, 5, &which, &Evaluator::new(SearchBudget::default())).unwrap();
    let b = conjecture_sweep(3, 5, &which, &Evaluator::new(SearchBudget::default())).unwrap();
    assert_eq!(a, b);
}

#[test]
fn check_json_shape() {
    let c5 = family(FamilyKind::Cycle, &[5]).unwrap();
    let checks = run_bound_suite(&c5, &Evaluator::new(SearchBudget::default()));
    let t71 = checks.iter().find(|c| c.bound_id == "T7.i").unwrap();
    let v: serde_json::Value = serde_json::to_value(t71).unwrap();
    assert_eq!(v["hypothesis_met"], false);
    assert_eq!(v["holds"], serde_json::Value::Null);
    let l1 = checks.iter().find(|c| c.bound_id == "L1.ii").unwrap();
    let v: serde_json::Value = serde_json::to_value(l1).unwrap();
    assert_eq!(v["lhs"]["kind"], "exact");
    assert_eq!(v["relation"], "ge");
}

#[test]
fn tiny_budget_marks_checks_inconclusive_not_violated() {
    let budget = SearchBudget::new(1, std::time::Duration::from_secs(5)).unwrap();
    let k5 = family(FamilyKind::Complete, &[5]).unwrap();
    let checks = run_bound_suite(&k5, &Evaluator::new(budget));
    assert!(checks.iter().all(|c| !c.violated()));
    assert!(checks.iter().any(|c| c.hypothesis_met && c.holds.is_none()));
}
