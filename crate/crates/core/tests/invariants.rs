//! Randomized invariants over arbitrary bijective `r`-tables: canonicalization
//! is stable under relabeling, orbits partition words, normal forms are
//! idempotent.

use proptest::prelude::*;

use quadset::set::QuadraticSet;
use quadset::words::{Engine, LetterOrder};

fn arb_set(n: usize) -> impl Strategy<Value = QuadraticSet> {
    Just((0..n * n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |slots| {
            let table = slots
                .iter()
                .map(|&s| ((s / n) as u8, (s % n) as u8))
                .collect();
            QuadraticSet::from_table(n, table).expect("permutation of slots")
        })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<u8>> {
    Just((0..n as u8).collect::<Vec<u8>>()).prop_shuffle()
}

fn arb_word(n: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0..n as u8, 1..5)
}

proptest! {
    #[test]
    fn canonical_form_is_idempotent(set in arb_set(3)) {
        let canon = set.canonical_form();
        let twice = canon.canonical_form();
        prop_assert_eq!(twice.r_table(), canon.r_table());
    }

    #[test]
    fn canonical_form_is_relabel_invariant(set in arb_set(3), perm in arb_perm(3)) {
        let a = set.canonical_form();
        let b = set.relabel(&perm).canonical_form();
        prop_assert_eq!(a.r_table(), b.r_table());
    }

    #[test]
    fn relabel_preserves_properties(set in arb_set(3), perm in arb_perm(3)) {
        let p = set.check_properties();
        let q = set.relabel(&perm).check_properties();
        prop_assert_eq!(p.involutive, q.involutive);
        prop_assert_eq!(p.square_free, q.square_free);
        prop_assert_eq!(p.braided, q.braided);
        prop_assert_eq!(p.lri, q.lri);
        prop_assert_eq!(p.relation_count, q.relation_count);
    }

    #[test]
    fn orbits_partition_words(set in arb_set(3), w in arb_word(3)) {
        let engine = Engine::new(&set);
        let orbit = engine.orbit(&w).unwrap();
        prop_assert!(orbit.contains(&w));
        // every member generates the same orbit, so equality is symmetric
        for m in orbit.iter() {
            let other = engine.orbit(m).unwrap();
            prop_assert_eq!(other.members(), orbit.members());
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_equal(set in arb_set(3), w in arb_word(3)) {
        let engine = Engine::new(&set);
        let id = LetterOrder::identity(3);
        let nf = engine.normal_form(&w, &id).unwrap();
        prop_assert_eq!(&engine.normal_form(&nf, &id).unwrap(), &nf);
        prop_assert!(engine.equal(&w, &nf).unwrap());
        prop_assert!(!engine.equal(&w, &[w.clone(), vec![0]].concat()).unwrap());
    }

    #[test]
    fn involutive_tables_give_adjacent_involutions(set in arb_set(4), w in arb_word(4)) {
        if set.check_properties().involutive {
            for i in 0..w.len() - 1 {
                let (u, v) = set.apply(w[i], w[i + 1]);
                prop_assert_eq!(set.apply(u, v), (w[i], w[i + 1]));
            }
        }
    }
}
