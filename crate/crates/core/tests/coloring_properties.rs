mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use totalcolor::{relabel_colors, satisfies, ConstraintSet, Mode};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn relabelling_keeps_the_verdict(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 6);
        let mode = common::random_mode(&mut rng);
        let f = common::random_proper(&mut rng, &g, mode);
        let cs = common::random_constraints(&mut rng, mode);
        let perm = common::random_permutation(&mut rng, f.k());
        let relabelled = relabel_colors(&f, &perm).unwrap();
        prop_assert_eq!(satisfies(&g, &f, &cs).ok, satisfies(&g, &relabelled, &cs).ok);
    }

    #[test]
    fn dropping_conditions_never_breaks_a_verdict(seed in any::<u64>(), keep in any::<u8>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 6);
        let mode = common::random_mode(&mut rng);
        let f = common::random_proper(&mut rng, &g, mode);
        let big = common::random_constraints(&mut rng, mode);
        let small = ConstraintSet::from_bits(mode, big.bits() & keep).unwrap();
        prop_assert!(small.is_subset_of(&big));
        if satisfies(&g, &f, &big).ok {
            prop_assert!(satisfies(&g, &f, &small).ok);
        }
    }

    #[test]
    fn library_verdict_matches_reference_checker(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 6);
        let f = common::random_proper(&mut rng, &g, Mode::Total);
        let cs = common::random_constraints(&mut rng, Mode::Total);
        prop_assert_eq!(satisfies(&g, &f, &cs).ok, common::certifies(&g, &f, &cs));
    }

    #[test]
    fn generated_colorings_are_proper(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, 6);
        let mode = common::random_mode(&mut rng);
        let f = common::random_proper(&mut rng, &g, mode);
        let empty = ConstraintSet::new(mode, []).unwrap();
        prop_assert!(satisfies(&g, &f, &empty).ok);
    }
}
