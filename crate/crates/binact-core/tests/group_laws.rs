//! Group fixtures against independent oracles: bitmask closure for
//! generated subgroups, direct conjugation sweeps for normality, and
//! partition checks for coset spaces.

use binact_core::{
    cyclic, dihedral_square, klein_four, named_group, quaternion, symmetric, validate_group,
    FiniteGroup, SubgroupElems,
};

fn fixtures() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z2", cyclic(2)),
        ("Z6", cyclic(6)),
        ("Z8", cyclic(8)),
        ("V4", klein_four()),
        ("S3", symmetric(3)),
        ("D4", dihedral_square()),
        ("Q8", quaternion()),
    ]
}

/// Smallest subset containing `seed` and the identity that is closed under
/// products and inverses, found by saturating a membership mask — a
/// different algorithm from the library's worklist.
fn closure_oracle(group: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let n = group.order();
    let mut member = vec![false; n];
    member[group.identity()] = true;
    for &s in seed {
        member[s] = true;
    }
    loop {
        let mut changed = false;
        for a in 0..n {
            if !member[a] {
                continue;
            }
            if !member[group.inv(a)] {
                member[group.inv(a)] = true;
                changed = true;
            }
            for b in 0..n {
                if member[b] && !member[group.mul(a, b)] {
                    member[group.mul(a, b)] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return (0..n).filter(|&a| member[a]).collect();
        }
    }
}

#[test]
fn generated_subgroups_match_the_bitmask_oracle() {
    for (name, group) in fixtures() {
        let n = group.order();
        for mask in 0u32..(1 << n) {
            let seed: Vec<usize> = (0..n).filter(|&a| mask & (1 << a) != 0).collect();
            let generated = group.subgroup_generated(&seed).unwrap();
            assert_eq!(
                generated.members(),
                closure_oracle(&group, &seed),
                "{name}, seed {seed:?}"
            );
            // Lagrange: the subgroup order divides the group order.
            assert_eq!(n % generated.len(), 0, "{name}, seed {seed:?}");
        }
    }
}

#[test]
fn subgroup_censuses_are_stable() {
    let census = |g: &FiniteGroup| {
        let subs = g.subgroups().unwrap();
        let normal = subs.iter().filter(|h| g.is_normal(h)).count();
        (subs.len(), normal)
    };
    assert_eq!(census(&symmetric(3)), (6, 3));
    assert_eq!(census(&dihedral_square()), (10, 6));
    assert_eq!(census(&quaternion()), (6, 6));
    assert_eq!(census(&klein_four()), (5, 5));
    // A cyclic group has exactly one subgroup per divisor of its order.
    assert_eq!(census(&cyclic(8)), (4, 4));
    assert_eq!(census(&cyclic(6)), (4, 4));
    assert_eq!(census(&cyclic(12)), (6, 6));
}

#[test]
fn every_enumerated_subgroup_is_closed_and_satisfies_lagrange() {
    for (name, group) in fixtures() {
        for sub in group.subgroups().unwrap() {
            assert!(sub.contains(group.identity()), "{name}");
            assert_eq!(group.order() % sub.len(), 0, "{name}");
            for &a in sub.members() {
                assert!(sub.contains(group.inv(a)), "{name}");
                for &b in sub.members() {
                    assert!(sub.contains(group.mul(a, b)), "{name}");
                }
            }
            // Regeneration from its own members reproduces it exactly.
            assert_eq!(
                group.subgroup_generated(sub.members()).unwrap().members(),
                sub.members(),
                "{name}"
            );
        }
    }
}

#[test]
fn cosets_partition_each_group() {
    for (name, group) in fixtures() {
        for sub in group.subgroups().unwrap() {
            let cosets = group.coset_space(&sub);
            assert_eq!(cosets.count() * sub.len(), group.order(), "{name}");
            let mut seen = vec![0usize; group.order()];
            for c in 0..cosets.count() {
                // The representative is the least member and maps back to
                // its own coset.
                let rep = cosets.rep(c);
                assert_eq!(cosets.coset_of(rep), c, "{name}");
                let members: Vec<usize> = cosets.members(c).collect();
                assert_eq!(members.len(), sub.len(), "{name}");
                assert_eq!(members[0], rep, "{name}");
                for &a in &members {
                    seen[a] += 1;
                    assert_eq!(cosets.coset_of(a), c, "{name}");
                }
                // Membership matches the definition a ∈ repH.
                for &h in sub.members() {
                    assert_eq!(cosets.coset_of(group.mul(rep, h)), c, "{name}");
                }
            }
            assert!(seen.iter().all(|&k| k == 1), "{name}: not a partition");
        }
    }
}

#[test]
fn normality_matches_a_direct_conjugation_sweep() {
    for (name, group) in fixtures() {
        for sub in group.subgroups().unwrap() {
            let oracle = group.elements().all(|g| {
                sub.members()
                    .iter()
                    .all(|&h| sub.contains(group.conjugate(g, h)))
            });
            assert_eq!(group.is_normal(&sub), oracle, "{name}");
            // Conjugating the whole subgroup never changes its size, and
            // fixes it exactly when it is normal.
            let stable = group
                .elements()
                .all(|g| group.conjugate_subgroup(g, &sub).members() == sub.members());
            assert_eq!(stable, oracle, "{name}");
            // The quotient exists exactly for normal subgroups, with the
            // order given by the index.
            match group.quotient(&sub) {
                Ok(q) => {
                    assert!(oracle, "{name}");
                    assert_eq!(q.order() * sub.len(), group.order(), "{name}");
                }
                Err(_) => assert!(!oracle, "{name}"),
            }
        }
    }
}

#[test]
fn centers_are_where_they_should_be() {
    let center = |g: &FiniteGroup| -> Vec<usize> {
        g.elements()
            .filter(|&a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a)))
            .collect()
    };
    assert_eq!(center(&symmetric(3)), vec![0]);
    assert_eq!(center(&dihedral_square()), vec![0, 2]);
    assert_eq!(center(&quaternion()), vec![0, 4]);
    assert_eq!(center(&cyclic(6)), (0..6).collect::<Vec<_>>());
}

#[test]
fn small_quotients_have_the_expected_shape() {
    let s3 = symmetric(3);
    let a3 = s3.subgroup(&[0, 3, 4]).unwrap();
    assert_eq!(s3.quotient(&a3).unwrap().cayley_rows(), vec![vec![0, 1], vec![1, 0]]);

    // D4 and Q8 both have a center of order two (the half-turn, and -1)
    // with Klein-four quotients: abelian, every element its own inverse.
    for (group, center) in [(dihedral_square(), 2), (quaternion(), 4)] {
        let z = group.subgroup(&[0, center]).unwrap();
        let q = group.quotient(&z).unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        assert!(q.elements().all(|a| q.mul(a, a) == 0));
    }
}

#[test]
fn validate_group_relabels_displaced_identities() {
    // Z3 written as (a, b) ↦ a + b + 2 mod 3, whose identity sits at
    // position 1; validation renumbers so it lands at 0.
    let rows = vec![vec![2, 0, 1], vec![0, 1, 2], vec![1, 2, 0]];
    let validated = validate_group(&rows).unwrap();
    assert!(validated.relabeling.is_some());
    assert_eq!(validated.group.identity(), 0);
    assert_eq!(validated.group.order(), 3);
}

#[test]
fn named_lookup_covers_the_fixture_set() {
    for name in ["Z2", "Z6", "Z8", "V4", "S3", "S4", "D4", "Q8", "z15"] {
        let g = named_group(name).unwrap();
        assert!(g.order() >= 1);
    }
    assert!(named_group("Z0").is_err());
    assert!(named_group("E8").is_err());
}

#[test]
fn subgroup_wrappers_reject_junk() {
    let s3 = symmetric(3);
    assert!(s3.subgroup(&[1, 2]).is_err()); // no identity
    assert!(s3.subgroup(&[0, 1, 2]).is_err()); // not closed
    assert!(s3.subgroup(&[0, 9]).is_err()); // out of range
    let ok: SubgroupElems = s3.subgroup(&[0, 3, 4]).unwrap();
    assert_eq!(ok.len(), 3);
}
