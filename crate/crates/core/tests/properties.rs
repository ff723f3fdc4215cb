//! Randomized properties at sizes beyond exhaustive enumeration.

use proptest::prelude::*;
use tamari::blossoming::{blossoming_to_interval, delta, gamma, interval_to_blossoming, rho};
use tamari::counting::classify;
use tamari::meandering::{phi_interval, psi_interval};
use tamari::sampler::{sample_blossoming, sample_interval, valid_shifts, vec, vec_inverse, RandomSource};
use tamari::{BinaryTree, DyckWalk, Step, TamariInterval};

/// Dyck words from random bits: at most `n` up steps, and an up step
/// whenever the walk is at height 0.
fn dyck(max: usize) -> impl Strategy<Value = DyckWalk> {
    (1..=max).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), 2 * n)).prop_map(|bits| {
        let n = bits.len() / 2;
        let (mut ups, mut height) = (0, 0);
        let mut steps = Vec::with_capacity(2 * n);
        for b in bits {
            let up = (b && ups < n) || height == 0;
            if up {
                ups += 1;
                height += 1;
                steps.push(Step::Up);
            } else {
                height -= 1;
                steps.push(Step::Down);
            }
        }
        DyckWalk::new(steps).expect("clamped walk is a Dyck word")
    })
}

fn interval() -> impl Strategy<Value = TamariInterval> {
    (1usize..40, any::<u64>()).prop_map(|(n, seed)| sample_interval(n, &mut RandomSource::new(seed)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tree_encodings_round_trip(w in dyck(30)) {
        let t = BinaryTree::from_dyck(&w);
        prop_assert_eq!(t.to_dyck(), w.clone());
        prop_assert_eq!(BinaryTree::from_bracket_vector(&t.bracket_vector()).unwrap(), t.clone());
        prop_assert_eq!(BinaryTree::from_dual_bracket_vector(&t.dual_bracket_vector()).unwrap(), t.clone());
        prop_assert_eq!(t.to_string().parse::<BinaryTree>().unwrap(), t.clone());
        prop_assert_eq!(t.mirror().mirror(), t.clone());
        prop_assert_eq!(w.contact_vector(), t.degree_vector());
    }

    #[test]
    fn bijections_round_trip(i in interval()) {
        let m = phi_interval(&i);
        prop_assert_eq!(psi_interval(&m).unwrap(), i.clone());
        let b = gamma(&m).unwrap();
        prop_assert_eq!(delta(&b).unwrap(), m);
        prop_assert_eq!(blossoming_to_interval(&b).unwrap(), i.clone());
        prop_assert_eq!(b.dual(), interval_to_blossoming(&i.dual()));
        prop_assert_eq!(i.to_string().parse::<TamariInterval>().unwrap(), i.clone());
    }

    #[test]
    fn classifiers_agree(i in interval()) {
        prop_assert!(classify(&i).is_ok());
        let r = rho(&i);
        prop_assert_eq!(rho(&r), i.clone());
        prop_assert_eq!(r.is_kreweras(), i.is_infinitely_modern());
    }

    #[test]
    fn marked_sequences_round_trip(n in 1usize..40, seed in any::<u64>(), e in any::<prop::sample::Index>()) {
        let mut rng = RandomSource::new(seed);
        let b = sample_blossoming(n, &mut rng).unwrap();
        let edge = e.index(n);
        let s = vec(&b, edge).unwrap();
        prop_assert!(s.is_marked());
        prop_assert_eq!(vec_inverse(&s).unwrap().tree, b);
        prop_assert_eq!(valid_shifts(&s).unwrap().len(), 2);
    }
}
