mod common;

use totalcolor::graph::{family, FamilyKind};
use totalcolor::harness::sweep_graphs;
use totalcolor::solver::{chromatic_number, SearchBudget, SolveStatus};
use totalcolor::Preset;

#[test]
fn every_witness_verifies_with_the_reference_checker() {
    for g in sweep_graphs(3, 5).unwrap() {
        for p in Preset::ALL {
            let cs = p.constraint_set();
            let r = chromatic_number(&g, &cs, SearchBudget::default()).unwrap();
            match r.status {
                SolveStatus::Exact => {
                    let f = r.witness.expect("exact results carry a witness");
                    assert_eq!(Some(f.k()), r.value);
                    assert!(common::certifies(&g, &f, &cs), "{} {}", g, p.name());
                }
                SolveStatus::InfeasibleStructurally => assert!(r.witness.is_none()),
                SolveStatus::LowerBoundOnly => panic!("budget exhausted on {g}"),
            }
        }
    }
}

#[test]
fn cycles_and_paths_agree_with_brute_force() {
    for n in 3..=6 {
        for kind in [FamilyKind::Cycle, FamilyKind::Path] {
            let g = family(kind, &[n]).unwrap();
            for p in [Preset::Mu, Preset::MuE, Preset::EVdtc, Preset::ChiS] {
                let cs = p.constraint_set();
                let r = chromatic_number(&g, &cs, SearchBudget::default()).unwrap();
                assert_eq!(r.value, common::brute_min(&g, &cs), "{kind:?} {n} {}", p.name());
            }
        }
    }
}

#[test]
fn six_vertex_graphs_are_solved_within_default_budget() {
    // a sample of n = 6 graphs under the strongest total preset
    let graphs = sweep_graphs(6, 6).unwrap();
    for g in graphs.iter().step_by(7) {
        let r = chromatic_number(g, &Preset::All8.constraint_set(), SearchBudget::default()).unwrap();
        assert_ne!(r.status, SolveStatus::LowerBoundOnly, "{g}");
    }
}
