//! Closure generation and the pairwise-distributivity catalog, checked
//! against the full enumerations on two and three points.

use binact_core::{
    cyclic, distributive_pair_ops, enumerate_h2, generate_subgroup_closure, symmetric,
    BinaryAction, DistributiveCatalog, FinSet, SearchError, DEFAULT_CLOSURE_CAP,
};

fn set(n: usize) -> FinSet {
    FinSet::new(n).unwrap()
}

#[test]
fn every_two_point_singleton_seed_resolves() {
    let ops = enumerate_h2(set(2)).unwrap();
    // Self-distributive singletons (the unit and flip-second) generate
    // groups; the xor-like tables fail against themselves and are
    // rejected up front.
    for (i, op) in ops.iter().enumerate() {
        let result = generate_subgroup_closure(set(2), std::slice::from_ref(op), DEFAULT_CLOSURE_CAP);
        let self_ok = distributive_pair_ops(op, op).unwrap().holds();
        match result {
            Ok(closure) => {
                assert!(self_ok, "op {i}");
                // Closed, sorted, contains the unit and the seed.
                assert!(closure.windows(2).all(|w| w[0].entries() < w[1].entries()));
                assert!(closure.contains(&ops[0]));
                assert!(closure.contains(op));
                for f in &closure {
                    for g in &closure {
                        assert!(closure.contains(&f.compose(g).unwrap()), "op {i}");
                        assert!(distributive_pair_ops(f, g).unwrap().holds(), "op {i}");
                    }
                    assert!(closure.contains(&f.inverse().unwrap()), "op {i}");
                }
            }
            Err(SearchError::SeedNotDistributive { .. }) => assert!(!self_ok, "op {i}"),
            Err(other) => panic!("unexpected error for op {i}: {other}"),
        }
    }
}

#[test]
fn three_point_closures_stay_inside_the_invertible_tables() {
    let all = enumerate_h2(set(3)).unwrap();
    let keys: std::collections::BTreeSet<&[usize]> = all.iter().map(|f| f.entries()).collect();
    let self_distributive: Vec<_> = all
        .iter()
        .filter(|f| distributive_pair_ops(f, f).unwrap().holds())
        .collect();
    // The pool includes the six uniform tables g(x, y) = π(y) and more
    // besides.
    assert!(self_distributive.len() >= 6, "{}", self_distributive.len());
    for op in &self_distributive {
        match generate_subgroup_closure(set(3), &[(*op).clone()], DEFAULT_CLOSURE_CAP) {
            Ok(closure) => {
                assert!(closure.len() <= all.len());
                for f in &closure {
                    assert!(keys.contains(f.entries()));
                }
            }
            Err(SearchError::SeedNotDistributive { .. }) => {
                panic!("self-distributive seeds pass the pairwise screen")
            }
            Err(other) => panic!("unexpected error: {other}"),
        }
    }
}

#[test]
fn catalog_matrix_matches_direct_pair_checks_on_three_points() {
    let all = enumerate_h2(set(3)).unwrap();
    let catalog = DistributiveCatalog::build(&all).unwrap();
    assert_eq!(catalog.len(), 216);
    for (i, f) in all.iter().enumerate() {
        assert_eq!(catalog.index_of(f), Some(i));
        for (j, g) in all.iter().enumerate() {
            assert_eq!(
                catalog.pair(i, j).unwrap(),
                distributive_pair_ops(f, g).unwrap().holds()
            );
        }
    }
}

#[test]
fn maximal_subsets_are_maximal_and_distributive() {
    let all = enumerate_h2(set(2)).unwrap();
    let catalog = DistributiveCatalog::build(&all).unwrap();
    let subsets = catalog.maximal_distributive_subsets(None);
    assert_eq!(subsets, vec![vec![0, 3]]);
    for subset in &subsets {
        assert!(catalog.is_distributive_subset(subset).unwrap());
        // No outside vertex can be added.
        for v in 0..catalog.len() {
            if subset.contains(&v) {
                continue;
            }
            let mut extended = subset.clone();
            extended.push(v);
            assert!(!catalog.is_distributive_subset(&extended).unwrap());
        }
    }
}

#[test]
fn maximal_subsets_on_three_points_verify() {
    let all = enumerate_h2(set(3)).unwrap();
    let catalog = DistributiveCatalog::build(&all).unwrap();
    let subsets = catalog.maximal_distributive_subsets(Some(25));
    assert!(!subsets.is_empty());
    for subset in &subsets {
        assert!(catalog.is_distributive_subset(subset).unwrap());
        for v in 0..catalog.len() {
            if subset.contains(&v) {
                continue;
            }
            let mut extended = subset.clone();
            extended.push(v);
            assert!(!catalog.is_distributive_subset(&extended).unwrap());
        }
        // Each such set generates a distributive group no bigger than the
        // ambient 216.
        let seed: Vec<_> = subset.iter().map(|&i| catalog.ops()[i].clone()).collect();
        let closure = generate_subgroup_closure(set(3), &seed, DEFAULT_CLOSURE_CAP).unwrap();
        assert!(closure.len() >= subset.len());
        assert!(closure.len() <= 216);
    }
}

#[test]
fn action_images_are_distributive_subgroups_of_the_tables() {
    // The layers of a distributive action, deduplicated, form a set on
    // which every ordered pair distributes and which is closed under
    // composition and inversion.
    let cases = vec![
        BinaryAction::conjugate_translation(symmetric(3)),
        BinaryAction::conjugate_translation(cyclic(6)),
        {
            let s3 = symmetric(3);
            let a3 = s3.subgroup(&[0, 3, 4]).unwrap();
            BinaryAction::coset(&s3, &a3).unwrap().action
        },
    ];
    for action in cases {
        let ops: Vec<_> = action
            .group()
            .elements()
            .map(|g| action.op(g).unwrap())
            .collect();
        let catalog = DistributiveCatalog::build(&ops).unwrap();
        let indices: Vec<usize> = (0..catalog.len()).collect();
        assert!(catalog.is_distributive_subset(&indices).unwrap());
        let closure =
            generate_subgroup_closure(action.carrier(), &ops, DEFAULT_CLOSURE_CAP).unwrap();
        // Already a group: the closure adds nothing.
        assert_eq!(closure.len(), catalog.len());
    }
}

#[test]
fn closure_cap_and_carrier_mismatch_are_reported() {
    let two = enumerate_h2(set(2)).unwrap();
    let three = enumerate_h2(set(3)).unwrap();
    assert!(matches!(
        generate_subgroup_closure(set(2), &[three[0].clone()], DEFAULT_CLOSURE_CAP),
        Err(SearchError::CarrierMismatch { expected: 2, got: 3 })
    ));
    assert!(matches!(
        generate_subgroup_closure(set(2), &[two[3].clone()], 1),
        Err(SearchError::ClosureCapExceeded { cap: 1 })
    ));
}
