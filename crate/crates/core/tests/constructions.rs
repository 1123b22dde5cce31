mod common;

use totalcolor::construct::{
    all_distinct, bipartite_lift, compose_exact, cover_composition, CoverTarget,
};
use totalcolor::harness::sweep_graphs;
use totalcolor::solver::{chromatic_number, SearchBudget};
use totalcolor::{ConstraintSet, Condition, Preset};

fn value(g: &totalcolor::Graph, p: Preset) -> u32 {
    chromatic_number(g, &p.constraint_set(), SearchBudget::default())
        .unwrap()
        .value
        .unwrap()
}

#[test]
fn composition_palette_is_edge_plus_vertex_chromatic_number() {
    for g in sweep_graphs(3, 5).unwrap() {
        for (edge, target) in [
            (Preset::ChiS, ConstraintSet::total(&[Condition::C1, Condition::C5, Condition::C7])),
            (Preset::ChiAs, ConstraintSet::total(&[Condition::C2, Condition::C6, Condition::C8])),
        ] {
            let r = compose_exact(&g, edge, SearchBudget::default()).unwrap();
            assert!(r.certifies() && !r.fell_back(), "{g}");
            assert_eq!(r.output.k(), value(&g, edge) + value(&g, Preset::Chi));
            assert!(common::certifies(&g, &r.output, &target), "{g}");
        }
    }
}

#[test]
fn all_distinct_meets_six_conditions() {
    for g in sweep_graphs(3, 5).unwrap() {
        let r = all_distinct(&g).unwrap();
        assert_eq!(r.output.k() as usize, g.n() + g.q());
        assert!(common::certifies(&g, &r.output, &Preset::Six.constraint_set()));
        let twin_free = g.closed_twin_pairs(false).is_empty();
        assert_eq!(r.also_checked, vec![(Condition::C3, twin_free)]);
    }
}

#[test]
fn cover_composition_respects_its_bound() {
    for g in sweep_graphs(3, 5).unwrap() {
        for target in [CoverTarget::Mu, CoverTarget::MuE] {
            match cover_composition(&g, target, SearchBudget::default()) {
                Ok(r) => {
                    assert!(r.certifies(), "{g}");
                    let cs = r.verified_against;
                    assert!(common::certifies(&g, &r.output, &cs));
                }
                Err(totalcolor::Error::Precondition(_)) => {}
                Err(e) => panic!("{g}: {e}"),
            }
        }
    }
}

#[test]
fn bipartite_lift_always_yields_a_coloring_within_delta_plus_three() {
    for g in sweep_graphs(3, 5).unwrap().into_iter().filter(|g| g.is_bipartite()) {
        let e = chromatic_number(&g, &Preset::ChiAs.constraint_set(), SearchBudget::default())
            .unwrap()
            .witness
            .unwrap();
        let r = bipartite_lift(&g, &e, SearchBudget::default()).unwrap();
        assert!(r.output.k() as usize <= g.max_degree() + 3);
        assert!(r.certifies(), "{g}: {:?}", r.case_id);
    }
}
