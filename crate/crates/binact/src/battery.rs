//! The `check` battery: every structural claim the library rests on, run
//! against built-in fixtures, with witnesses on failure.
//!
//! Entries are deterministic: fixed fixture order, fixed-seed sampling,
//! sorted iteration everywhere. Runs in well under a minute.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use binact_core::{
    classify, classify_effective, cyclic, dihedral_square, distributive_pair_ops,
    distributive_pair_sections, enumerate_c2, enumerate_h2, generate_subgroup_closure, h2_size,
    is_biequivariant, klein_four, mixed_identity_agreement, quaternion, symmetric,
    verify_kernel_stabilizer, BinOp, BinaryAction, DistributiveCatalog, FinSet, FiniteGroup,
    SearchError, SubgroupElems,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{distributivity_witness_json, pair_witness_json, CheckEntry};

pub struct FixtureAction {
    pub name: String,
    pub action: BinaryAction,
}

/// Everything the battery sweeps over, built once.
pub struct BatteryContext {
    pub two: DistributiveCatalog,
    pub three: DistributiveCatalog,
    pub groups: Vec<(&'static str, FiniteGroup)>,
    pub actions: Vec<FixtureAction>,
    pub closure_cap: usize,
}

pub fn fixture_groups() -> Vec<(&'static str, FiniteGroup)> {
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

/// The fixture actions: conjugate translation on every fixture group, the
/// inverted-conjugation rule on the two nonabelian counterexample groups,
/// two trivial actions, and the coset action of every normal subgroup of
/// every fixture group.
pub fn fixture_actions(groups: &[(&'static str, FiniteGroup)]) -> Vec<FixtureAction> {
    let mut actions = Vec::new();
    for (name, group) in groups {
        actions.push(FixtureAction {
            name: format!("conjugate translation {name}"),
            action: BinaryAction::conjugate_translation(group.clone()),
        });
    }
    for (name, group) in groups {
        if matches!(*name, "S3" | "D4") {
            actions.push(FixtureAction {
                name: format!("inverse conjugation {name}"),
                action: BinaryAction::inverse_conjugation(group.clone()),
            });
        }
    }
    actions.push(FixtureAction {
        name: "trivial Z2 on 2 points".into(),
        action: BinaryAction::trivial(cyclic(2), FinSet::new(2).unwrap()),
    });
    actions.push(FixtureAction {
        name: "trivial Z6 on 3 points".into(),
        action: BinaryAction::trivial(cyclic(6), FinSet::new(3).unwrap()),
    });
    for (name, group) in groups {
        for sub in group.subgroups().expect("fixture orders are within bounds") {
            if group.is_normal(&sub) {
                actions.push(FixtureAction {
                    name: format!("coset {name}/{:?}", sub.members()),
                    action: BinaryAction::coset(group, &sub)
                        .expect("normal subgroups induce coset actions")
                        .action,
                });
            }
        }
    }
    actions
}

pub fn battery_context(closure_cap: usize) -> BatteryContext {
    let two = DistributiveCatalog::build(&enumerate_h2(FinSet::new(2).unwrap()).unwrap())
        .expect("invertible tables");
    let three = DistributiveCatalog::build(&enumerate_h2(FinSet::new(3).unwrap()).unwrap())
        .expect("invertible tables");
    let groups = fixture_groups();
    let actions = fixture_actions(&groups);
    BatteryContext {
        two,
        three,
        groups,
        actions,
        closure_cap,
    }
}

/// Every check, in a fixed order.
pub fn checks() -> Vec<fn(&BatteryContext) -> CheckEntry> {
    vec![
        check_h2_order,
        check_section_splitting,
        check_pair_criterion_equivalence,
        check_mixed_index_identity,
        check_inverse_closure,
        check_product_closure,
        check_generated_subgroups,
        check_conjugate_translation,
        check_inverse_conjugation,
        check_distributivity_criterion,
        check_biequivariant_stabilizer_inclusion,
        check_stabilizer_conjugation,
        check_point_stabilizer_normality,
        check_stabilizer_translation_invariance,
        check_transitivity_fixtures,
        check_coset_action,
        check_classification_round_trip,
        check_effective_classification,
        check_kernel_point_stabilizer,
        check_kernel_normality,
    ]
}

pub fn run_battery(ctx: &BatteryContext) -> Vec<CheckEntry> {
    checks().into_iter().map(|check| check(ctx)).collect()
}

fn stab_table(action: &BinaryAction) -> Vec<Vec<SubgroupElems>> {
    let n = action.space_size();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| action.stabilizer_pair(x, y).expect("points in range"))
                .collect()
        })
        .collect()
}

pub fn check_h2_order(_ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "h2-order";
    const CLAIM: &str = "the invertible n-point operation tables number (n!)^n: \
                         1, 4, 216 for n = 1, 2, 3; cross-checked at n = 2 by \
                         two-sided-inverse search over all 16 tables";
    let mut counts = Vec::new();
    for n in 1..=3usize {
        let ops = enumerate_h2(FinSet::new(n).unwrap()).unwrap();
        if ops.len() as u128 != h2_size(n) {
            return CheckEntry::fail(
                NAME,
                CLAIM,
                json!({ "n": n, "enumerated": ops.len(), "formula": h2_size(n).to_string() }),
            );
        }
        counts.push(ops.len());
    }
    if counts != vec![1, 4, 216] {
        return CheckEntry::fail(NAME, CLAIM, json!({ "counts": counts }));
    }
    // Independent oracle: search the whole 16-element composition monoid
    // for two-sided inverses.
    let all = enumerate_c2(FinSet::new(2).unwrap()).unwrap();
    let is_unit = |f: &BinOp| {
        all.iter().any(|g| {
            (0..2).all(|x| (0..2).all(|y| f.at(x, g.at(x, y)) == y && g.at(x, f.at(x, y)) == y))
        })
    };
    let units: Vec<Vec<usize>> = all
        .iter()
        .filter(|f| is_unit(f))
        .map(|f| f.entries().to_vec())
        .collect();
    let expected: Vec<Vec<usize>> = enumerate_h2(FinSet::new(2).unwrap())
        .unwrap()
        .iter()
        .map(|f| f.entries().to_vec())
        .collect();
    if units != expected {
        return CheckEntry::fail(NAME, CLAIM, json!({ "searched_units": units.len() }));
    }
    CheckEntry::pass(
        NAME,
        CLAIM,
        "counts 1, 4, 216; inverse search over all 16 two-point tables finds exactly the 4 \
         permutation-row tables"
            .into(),
    )
}

pub fn check_section_splitting(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "section-splitting";
    const CLAIM: &str = "(f·g)_x = f_x ∘ g_x for every ordered pair of invertible tables \
                         on 2 and 3 points and every x";
    let mut pairs = 0usize;
    for catalog in [&ctx.two, &ctx.three] {
        let ops = catalog.ops();
        let n = ops[0].size();
        for f in ops {
            for g in ops {
                pairs += 1;
                let fg = f.compose(g).unwrap();
                for x in 0..n {
                    let split = f
                        .section_perm(x)
                        .unwrap()
                        .unwrap()
                        .compose(&g.section_perm(x).unwrap().unwrap())
                        .unwrap();
                    if fg.section_perm(x).unwrap().unwrap() != split {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({ "n": n, "f": f.entries(), "g": g.entries(), "x": x }),
                        );
                    }
                }
            }
        }
    }
    CheckEntry::pass(NAME, CLAIM, format!("{pairs} ordered pairs, every section"))
}

pub fn check_pair_criterion_equivalence(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "pair-criterion-equivalence";
    const CLAIM: &str = "the table sweep of g(x,h(y,z)) = h(g(x,y),g(x,z)) and the \
                         section-permutation identity g_x∘h_y = h_{g(x,y)}∘g_x give the \
                         same verdict and the same first witness on every ordered pair, \
                         n = 2 and n = 3";
    let mut pairs = 0usize;
    let mut holding = 0usize;
    for catalog in [&ctx.two, &ctx.three] {
        let ops = catalog.ops();
        for f in ops {
            for g in ops {
                pairs += 1;
                let direct = distributive_pair_ops(f, g).unwrap();
                let sections = distributive_pair_sections(f, g).unwrap();
                if direct.holds() != sections.holds() || direct.witness() != sections.witness() {
                    return CheckEntry::fail(
                        NAME,
                        CLAIM,
                        json!({
                            "f": f.entries(),
                            "g": g.entries(),
                            "direct": direct.witness().map(pair_witness_json),
                            "sections": sections.witness().map(pair_witness_json),
                        }),
                    );
                }
                if direct.holds() {
                    holding += 1;
                }
            }
        }
    }
    CheckEntry::pass(
        NAME,
        CLAIM,
        format!("{pairs} ordered pairs compared through both routes; {holding} distributive"),
    )
}

pub fn check_mixed_index_identity(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "mixed-index-identity";
    const CLAIM: &str = "informational: how often the variant g(x,h(y,z)) = h(g(x,y),g(y,z)) \
                         (inner index y, not x) agrees with the standard identity; reported, \
                         never assumed";
    let two = mixed_identity_agreement(&ctx.two);
    let three = mixed_identity_agreement(&ctx.three);
    let fmt = |label: &str, a: &binact_core::MixedIdentityAgreement| {
        let mismatch = a
            .first_mismatch
            .map(|(i, j)| format!("first mismatch at pair ({i}, {j})"))
            .unwrap_or_else(|| "no mismatches".into());
        format!("{label}: {}/{} pairs agree, {mismatch}", a.matching, a.total)
    };
    CheckEntry::pass(
        NAME,
        CLAIM,
        format!("{}; {}", fmt("n=2", &two), fmt("n=3", &three)),
    )
}

pub fn check_inverse_closure(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "inverse-closure";
    const CLAIM: &str = "if (g,h) is a distributive pair then so are (g,h⁻¹), (g⁻¹,h), \
                         and (g⁻¹,h⁻¹); exhaustive over all pairs, n = 2 and n = 3";
    let mut checked = 0usize;
    for catalog in [&ctx.two, &ctx.three] {
        let len = catalog.len();
        let inv: Vec<usize> = (0..len)
            .map(|i| {
                catalog
                    .index_of(&catalog.ops()[i].inverse().unwrap())
                    .expect("inverses of invertible tables are enumerated")
            })
            .collect();
        for i in 0..len {
            for j in 0..len {
                if !catalog.pair(i, j).unwrap() {
                    continue;
                }
                checked += 1;
                for (a, b) in [(i, inv[j]), (inv[i], j), (inv[i], inv[j])] {
                    if !catalog.pair(a, b).unwrap() {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({
                                "n": catalog.ops()[0].size(),
                                "pair": [i, j],
                                "failing_pair": [a, b],
                            }),
                        );
                    }
                }
            }
        }
    }
    CheckEntry::pass(NAME, CLAIM, format!("{checked} distributive pairs, 3 derived pairs each"))
}

pub fn check_product_closure(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "product-closure";
    const CLAIM: &str = "if (g,h) and (g,k) are distributive pairs then so is (g, h∘k); \
                         exhaustive over all triples, n = 2 and n = 3";
    let mut checked = 0usize;
    for catalog in [&ctx.two, &ctx.three] {
        let len = catalog.len();
        let ops = catalog.ops();
        // Index of every product, computed once.
        let mul: Vec<Vec<usize>> = (0..len)
            .map(|h| {
                (0..len)
                    .map(|k| {
                        catalog
                            .index_of(&ops[h].compose(&ops[k]).unwrap())
                            .expect("products of invertible tables are enumerated")
                    })
                    .collect()
            })
            .collect();
        let partners: Vec<Vec<usize>> = (0..len)
            .map(|g| (0..len).filter(|&h| catalog.pair(g, h).unwrap()).collect())
            .collect();
        for (g, partners_of_g) in partners.iter().enumerate() {
            for &h in partners_of_g {
                for &k in partners_of_g {
                    checked += 1;
                    if !catalog.pair(g, mul[h][k]).unwrap() {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({
                                "n": ops[0].size(),
                                "g": g, "h": h, "k": k,
                                "product": mul[h][k],
                            }),
                        );
                    }
                }
            }
        }
    }
    CheckEntry::pass(NAME, CLAIM, format!("{checked} triples"))
}

pub fn check_generated_subgroups(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "generated-subgroup-distributive";
    const CLAIM: &str = "a pairwise-distributive set of invertible tables generates, under \
                         composition and inversion, a set that is simultaneously a group and \
                         pairwise distributive; every subset of the 2-point tables, every \
                         distributive subset of the 3-point tables, and at least 100 sampled \
                         draws";
    // n = 2: the full dichotomy over all 16 subsets.
    let two = ctx.two.ops();
    let mut two_closed = 0usize;
    for mask in 0u32..16 {
        let subset: Vec<usize> = (0..4).filter(|&b| mask & (1 << b) != 0).collect();
        let seed: Vec<BinOp> = subset.iter().map(|&i| two[i].clone()).collect();
        let distributive = ctx.two.is_distributive_subset(&subset).unwrap();
        match generate_subgroup_closure(FinSet::new(2).unwrap(), &seed, ctx.closure_cap) {
            Ok(closure) => {
                if !distributive {
                    return CheckEntry::fail(
                        NAME,
                        CLAIM,
                        json!({ "n": 2, "subset": subset, "unexpected": "closure accepted" }),
                    );
                }
                two_closed += 1;
                if let Err(e) = verify_closure(&ctx.two, &closure) {
                    return CheckEntry::fail(NAME, CLAIM, json!({ "n": 2, "subset": subset, "violation": e }));
                }
            }
            Err(SearchError::SeedNotDistributive { .. }) if !distributive => {}
            Err(other) => {
                return CheckEntry::fail(
                    NAME,
                    CLAIM,
                    json!({ "n": 2, "subset": subset, "error": other.to_string() }),
                );
            }
        }
    }

    // n = 3: all pairwise-distributive subsets of the self-compatible pool,
    // then sampled draws with replacement (there are fewer than 100
    // distinct such subsets).
    let pool: Vec<usize> = (0..ctx.three.len())
        .filter(|&i| ctx.three.pair(i, i).unwrap())
        .collect();
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << pool.len()) {
        let subset: Vec<usize> = (0..pool.len())
            .filter(|&b| mask & (1 << b) != 0)
            .map(|b| pool[b])
            .collect();
        if ctx.three.is_distributive_subset(&subset).unwrap() {
            subsets.push(subset);
        }
    }
    subsets.sort();
    let mut largest_closure = 0usize;
    let close = |subset: &[usize]| -> Result<usize, serde_json::Value> {
        let seed: Vec<BinOp> = subset.iter().map(|&i| ctx.three.ops()[i].clone()).collect();
        let closure = generate_subgroup_closure(FinSet::new(3).unwrap(), &seed, ctx.closure_cap)
            .map_err(|e| json!({ "n": 3, "subset": subset, "error": e.to_string() }))?;
        verify_closure(&ctx.three, &closure)
            .map_err(|e| json!({ "n": 3, "subset": subset, "violation": e }))?;
        Ok(closure.len())
    };
    for subset in &subsets {
        match close(subset) {
            Ok(len) => largest_closure = largest_closure.max(len),
            Err(w) => return CheckEntry::fail(NAME, CLAIM, w),
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xB1AC7);
    let draws = 128usize;
    for _ in 0..draws {
        let subset = &subsets[rng.gen_range(0..subsets.len())];
        if let Err(w) = close(subset) {
            return CheckEntry::fail(NAME, CLAIM, w);
        }
    }
    CheckEntry::pass(
        NAME,
        CLAIM,
        format!(
            "n=2: all 16 subsets resolve ({two_closed} close, rest correctly rejected); \
             n=3: pool of {} self-distributive tables, {} distinct distributive subsets all \
             close, plus {draws} sampled draws; largest closure {largest_closure}",
            pool.len(),
            subsets.len(),
        ),
    )
}

/// Closure must be sorted, closed under composition and inversion, contain
/// the unit, and be pairwise distributive — checked against the catalog.
fn verify_closure(
    catalog: &DistributiveCatalog,
    closure: &[BinOp],
) -> Result<(), serde_json::Value> {
    if closure.is_empty() {
        return Err(json!("closure is empty"));
    }
    if !closure.windows(2).all(|w| w[0].entries() < w[1].entries()) {
        return Err(json!("closure is not sorted"));
    }
    let keys: BTreeSet<&[usize]> = closure.iter().map(|f| f.entries()).collect();
    let unit = BinOp::identity(closure[0].carrier());
    if !keys.contains(unit.entries()) {
        return Err(json!("closure lacks the unit"));
    }
    for f in closure {
        if catalog.index_of(f).is_none() {
            return Err(json!({ "not_invertible_member": f.entries() }));
        }
        let inv = f.inverse().unwrap();
        if !keys.contains(inv.entries()) {
            return Err(json!({ "inverse_escapes": f.entries() }));
        }
        for g in closure {
            let prod = f.compose(g).unwrap();
            if !keys.contains(prod.entries()) {
                return Err(json!({ "product_escapes": [f.entries(), g.entries()] }));
            }
            if let Some(w) = distributive_pair_ops(f, g).unwrap().witness() {
                return Err(json!({
                    "non_distributive_pair": [f.entries(), g.entries()],
                    "witness": pair_witness_json(w),
                }));
            }
        }
    }
    Ok(())
}

pub fn check_conjugate_translation(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "conjugate-translation";
    const CLAIM: &str = "g(x,y) = x·g·x⁻¹·y is a distributive, transitive, effective binary \
                         action on every fixture group";
    let mut names = Vec::new();
    for (name, group) in &ctx.groups {
        let action = BinaryAction::conjugate_translation(group.clone());
        if let Some(w) = action.distributivity().witness() {
            return CheckEntry::fail(
                NAME,
                CLAIM,
                json!({ "group": name, "distributivity": distributivity_witness_json(w) }),
            );
        }
        if !action.is_transitive() {
            return CheckEntry::fail(NAME, CLAIM, json!({ "group": name, "not": "transitive" }));
        }
        if !action.is_effective() {
            return CheckEntry::fail(NAME, CLAIM, json!({ "group": name, "not": "effective" }));
        }
        names.push(*name);
    }
    CheckEntry::pass(NAME, CLAIM, names.join(", "))
}

pub fn check_inverse_conjugation(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "inverse-conjugation-counterexample";
    const CLAIM: &str = "g(x,y) = x⁻¹·g·x·y is always a valid binary action, and it is \
                         distributive exactly when every y·b·y⁻¹·b is central; on S3 it \
                         fails with a concrete witness quintuple";
    let mut s3_detail = None;
    let mut distributive = Vec::new();
    for (name, group) in &ctx.groups {
        let action = BinaryAction::inverse_conjugation(group.clone());
        // Conjugation by y·b⁻¹ and by b⁻¹·y agree on every element exactly
        // when the action distributes; equivalently y·b·y⁻¹·b is central.
        let center: Vec<usize> = group
            .elements()
            .filter(|&z| group.elements().all(|a| group.mul(z, a) == group.mul(a, z)))
            .collect();
        let criterion = group.elements().all(|y| {
            group.elements().all(|b| {
                let v = group.mul(group.mul(group.mul(y, b), group.inv(y)), b);
                center.contains(&v)
            })
        });
        let report = action.distributivity();
        if report.holds() != criterion {
            return CheckEntry::fail(
                NAME,
                CLAIM,
                json!({ "group": name, "distributive": report.holds(), "criterion": criterion }),
            );
        }
        match (*name, report.witness()) {
            ("S3", Some(w)) => {
                // The witness must re-evaluate to a genuine violation.
                let lhs = action.at(w.g, w.x, action.at(w.h, w.y, w.z));
                let rhs = action.at(w.h, action.at(w.g, w.x, w.y), action.at(w.g, w.x, w.z));
                if lhs == rhs || lhs != w.lhs || rhs != w.rhs {
                    return CheckEntry::fail(
                        NAME,
                        CLAIM,
                        json!({ "group": name, "stale_witness": distributivity_witness_json(w) }),
                    );
                }
                s3_detail = Some(format!(
                    "S3 fails at g={}, h={}, (x,y,z)=({},{},{}), {} ≠ {}",
                    w.g, w.h, w.x, w.y, w.z, w.lhs, w.rhs
                ));
            }
            ("S3", None) => {
                return CheckEntry::fail(NAME, CLAIM, json!({ "group": name, "unexpected": "distributive" }));
            }
            (_, Some(_)) => distributive.push(format!("{name}: fails")),
            (_, None) => distributive.push(format!("{name}: distributive")),
        }
    }
    let Some(s3_detail) = s3_detail else {
        return CheckEntry::fail(NAME, CLAIM, json!({ "missing": "S3 fixture" }));
    };
    CheckEntry::pass(
        NAME,
        CLAIM,
        format!("{s3_detail}; criterion matches the sweep on every fixture group ({})", distributive.join(", ")),
    )
}

pub fn check_distributivity_criterion(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "distributivity-criterion";
    const CLAIM: &str = "for every fixture action, the direct quintuple sweep, the \
                         section-commutation sweep, and the pairwise check over the layer \
                         tables (both routes) all agree";
    let mut distributive = 0usize;
    for FixtureAction { name, action } in &ctx.actions {
        let direct = action.distributivity().holds();
        let sections = action.section_biequivariance().holds();
        let ops: Vec<BinOp> = action
            .group()
            .elements()
            .map(|g| action.op(g).unwrap())
            .collect();
        let mut pairwise = true;
        'outer: for f in &ops {
            for g in &ops {
                let a = distributive_pair_ops(f, g).unwrap().holds();
                let b = distributive_pair_sections(f, g).unwrap().holds();
                if a != b {
                    return CheckEntry::fail(
                        NAME,
                        CLAIM,
                        json!({ "action": name, "routes": "pair table vs pair sections" }),
                    );
                }
                if !a {
                    pairwise = false;
                    break 'outer;
                }
            }
        }
        if direct != sections || direct != pairwise {
            return CheckEntry::fail(
                NAME,
                CLAIM,
                json!({
                    "action": name,
                    "direct": direct, "sections": sections, "pairwise": pairwise,
                }),
            );
        }
        if direct {
            distributive += 1;
        }
    }
    CheckEntry::pass(
        NAME,
        CLAIM,
        format!("{} actions, {distributive} distributive", ctx.actions.len()),
    )
}

pub fn check_biequivariant_stabilizer_inclusion(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "biequivariant-stabilizer-inclusion";
    const CLAIM: &str = "a biequivariant map f sends stationary subgroups into stationary \
                         subgroups: G_(x,y) ⊆ G_(f(x),f(y)) for all pairs";
    let mut maps = 0usize;
    // For every fixture group: the identity map, the collapse onto a point,
    // and the quotient projection for every normal subgroup.
    for (name, group) in &ctx.groups {
        let translation = BinaryAction::conjugate_translation(group.clone());
        let src_stabs = stab_table(&translation);
        let mut cases: Vec<(String, BinaryAction, Vec<usize>)> = vec![
            (
                format!("{name} identity"),
                translation.clone(),
                (0..group.order()).collect(),
            ),
            (
                format!("{name} collapse"),
                BinaryAction::trivial(group.clone(), FinSet::new(1).unwrap()),
                vec![0; group.order()],
            ),
        ];
        for sub in group.subgroups().expect("fixture orders are within bounds") {
            if group.is_normal(&sub) {
                let built = BinaryAction::coset(group, &sub).expect("normal");
                let projection: Vec<usize> =
                    group.elements().map(|x| built.cosets.coset_of(x)).collect();
                cases.push((
                    format!("{name} projection mod {:?}", sub.members()),
                    built.action,
                    projection,
                ));
            }
        }
        for (case, target, map) in cases {
            if !is_biequivariant(&translation, &target, &map).unwrap() {
                return CheckEntry::fail(NAME, CLAIM, json!({ "map": case, "not": "biequivariant" }));
            }
            maps += 1;
            let dst_stabs = stab_table(&target);
            for x in 0..translation.space_size() {
                for y in 0..translation.space_size() {
                    let src = &src_stabs[x][y];
                    let dst = &dst_stabs[map[x]][map[y]];
                    if let Some(&g) = src.members().iter().find(|&&g| !dst.contains(g)) {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({ "map": case, "x": x, "y": y, "escaping_element": g }),
                        );
                    }
                }
            }
        }
    }
    CheckEntry::pass(NAME, CLAIM, format!("{maps} biequivariant maps, all pairs"))
}

pub fn check_stabilizer_conjugation(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "stabilizer-conjugation";
    const CLAIM: &str = "G_(x, g(x,y)) = g·G_(x,y)·g⁻¹ for every fixture action — \
                         distributive or not — and all g, x, y";
    let mut tuples = 0usize;
    for FixtureAction { name, action } in &ctx.actions {
        let group = action.group();
        let stabs = stab_table(action);
        let n = action.space_size();
        for g in group.elements() {
            for x in 0..n {
                for y in 0..n {
                    tuples += 1;
                    let lhs = &stabs[x][action.at(g, x, y)];
                    let rhs = group.conjugate_subgroup(g, &stabs[x][y]);
                    if lhs.members() != rhs.members() {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({ "action": name, "g": g, "x": x, "y": y }),
                        );
                    }
                }
            }
        }
    }
    CheckEntry::pass(NAME, CLAIM, format!("{tuples} (action, g, x, y) tuples"))
}

pub fn check_point_stabilizer_normality(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "point-stabilizer-normality";
    const CLAIM: &str = "in a distributive action every diagonal stationary subgroup \
                         G_(x,x) is normal";
    let mut swept = 0usize;
    for FixtureAction { name, action } in &ctx.actions {
        if !action.is_distributive() {
            continue;
        }
        for x in 0..action.space_size() {
            swept += 1;
            let stab = action.stabilizer_pair(x, x).unwrap();
            if !action.group().is_normal(&stab) {
                return CheckEntry::fail(
                    NAME,
                    CLAIM,
                    json!({ "action": name, "x": x, "stabilizer": stab.members() }),
                );
            }
        }
    }
    CheckEntry::pass(NAME, CLAIM, format!("{swept} diagonal stabilizers"))
}

pub fn check_stabilizer_translation_invariance(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "stabilizer-translation-invariance";
    const CLAIM: &str = "in a distributive action, G_(g(x,y), g(x,z)) = G_(y,z), and on \
                         the diagonal G_(x, g(x,x)) = G_(x,x) = G_(g(x,x), x)";
    let mut tuples = 0usize;
    for FixtureAction { name, action } in &ctx.actions {
        if !action.is_distributive() {
            continue;
        }
        let stabs = stab_table(action);
        let n = action.space_size();
        for g in action.group().elements() {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        tuples += 1;
                        let lhs = &stabs[action.at(g, x, y)][action.at(g, x, z)];
                        if lhs.members() != stabs[y][z].members() {
                            return CheckEntry::fail(
                                NAME,
                                CLAIM,
                                json!({
                                    "action": name, "identity": "pair-translation",
                                    "g": g, "x": x, "y": y, "z": z,
                                }),
                            );
                        }
                    }
                }
                let w = action.at(g, x, x);
                if stabs[x][w].members() != stabs[x][x].members()
                    || stabs[w][x].members() != stabs[x][x].members()
                {
                    return CheckEntry::fail(
                        NAME,
                        CLAIM,
                        json!({ "action": name, "identity": "diagonal", "g": g, "x": x }),
                    );
                }
            }
        }
    }
    CheckEntry::pass(NAME, CLAIM, format!("{tuples} (action, g, x, y, z) tuples"))
}

pub fn check_transitivity_fixtures(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "transitivity-fixtures";
    const CLAIM: &str = "the orbit condition {g(x,x)} = X for all x holds on every \
                         translation-style and coset fixture and fails on every trivial \
                         fixture with more than one point";
    let mut verdicts = Vec::new();
    for FixtureAction { name, action } in &ctx.actions {
        let expected = !name.starts_with("trivial");
        let report = action.transitivity();
        if report.holds() != expected {
            return CheckEntry::fail(
                NAME,
                CLAIM,
                json!({ "action": name, "expected": expected, "got": report.holds() }),
            );
        }
        // Witnesses must name a genuinely deficient orbit.
        if let Some(w) = report.witness() {
            if action.orbit_at(w.x) != w.orbit || w.orbit.len() == action.space_size() {
                return CheckEntry::fail(NAME, CLAIM, json!({ "action": name, "stale_witness": w.x }));
            }
        }
        verdicts.push(report.holds());
    }
    let transitive = verdicts.iter().filter(|&&b| b).count();
    CheckEntry::pass(
        NAME,
        CLAIM,
        format!("{} actions, {transitive} transitive", verdicts.len()),
    )
}

pub fn check_coset_action(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "coset-action";
    const CLAIM: &str = "g(kH, lH) = (k·g·k⁻¹·l)H is well defined, distributive, and \
                         transitive with kernel exactly H for every normal subgroup of every \
                         fixture group; for every non-normal subgroup the representative \
                         sweep fails with a witness";
    let mut normal_count = 0usize;
    let mut non_normal_count = 0usize;
    for (name, group) in &ctx.groups {
        for sub in group.subgroups().expect("fixture orders are within bounds") {
            let normal = group.is_normal(&sub);
            match BinaryAction::coset(group, &sub) {
                Ok(built) => {
                    if !normal {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({ "group": name, "subgroup": sub.members(), "unexpected": "accepted" }),
                        );
                    }
                    normal_count += 1;
                    let action = &built.action;
                    let kernel = action.kernel();
                    if !action.is_distributive()
                        || !action.is_transitive()
                        || kernel.members() != sub.members()
                    {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({
                                "group": name,
                                "subgroup": sub.members(),
                                "distributive": action.is_distributive(),
                                "transitive": action.is_transitive(),
                                "kernel": kernel.members(),
                            }),
                        );
                    }
                }
                Err(binact_core::ActionError::NotWellDefined { g, k, m, l, n }) => {
                    if normal {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({ "group": name, "subgroup": sub.members(), "unexpected": "rejected" }),
                        );
                    }
                    non_normal_count += 1;
                    // Cross-check the witness: same cosets, different images.
                    let cosets = group.coset_space(&sub);
                    let image = |k: usize, l: usize| {
                        cosets.coset_of(group.mul(group.mul(group.mul(k, g), group.inv(k)), l))
                    };
                    if cosets.coset_of(k) != cosets.coset_of(m)
                        || cosets.coset_of(l) != cosets.coset_of(n)
                        || image(k, l) == image(m, n)
                    {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({
                                "group": name, "subgroup": sub.members(),
                                "stale_witness": { "g": g, "k": k, "m": m, "l": l, "n": n },
                            }),
                        );
                    }
                }
                Err(other) => {
                    return CheckEntry::fail(
                        NAME,
                        CLAIM,
                        json!({ "group": name, "subgroup": sub.members(), "error": other.to_string() }),
                    );
                }
            }
        }
    }
    CheckEntry::pass(
        NAME,
        CLAIM,
        format!("{normal_count} normal subgroups build; {non_normal_count} non-normal rejected with verified witnesses"),
    )
}

pub fn check_classification_round_trip(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "classification-round-trip";
    const CLAIM: &str = "classifying the coset action of any normal subgroup H at any \
                         basepoint recovers H, rebuilds the same action, and verifies the \
                         relabeling bijective and biequivariant";
    let mut classified = 0usize;
    for (name, group) in &ctx.groups {
        for sub in group.subgroups().expect("fixture orders are within bounds") {
            if !group.is_normal(&sub) {
                continue;
            }
            let action = BinaryAction::coset(group, &sub).expect("normal").action;
            for basepoint in 0..action.space_size() {
                classified += 1;
                match classify(&action, basepoint) {
                    Ok(result) => {
                        if result.subgroup.members() != sub.members()
                            || result.model != action
                            || !result.checks.all_hold()
                        {
                            return CheckEntry::fail(
                                NAME,
                                CLAIM,
                                json!({
                                    "group": name,
                                    "subgroup": sub.members(),
                                    "basepoint": basepoint,
                                    "recovered": result.subgroup.members(),
                                }),
                            );
                        }
                    }
                    Err(e) => {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({
                                "group": name, "subgroup": sub.members(),
                                "basepoint": basepoint, "error": e.to_string(),
                            }),
                        );
                    }
                }
            }
        }
    }
    CheckEntry::pass(NAME, CLAIM, format!("{classified} (group, subgroup, basepoint) cases"))
}

pub fn check_effective_classification(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "effective-classification";
    const CLAIM: &str = "an effective transitive distributive action is conjugate \
                         translation: classification of g(x,y) = x·g·x⁻¹·y reproduces its \
                         own table on every fixture group, from every basepoint";
    let mut cases = 0usize;
    for (name, group) in &ctx.groups {
        let action = BinaryAction::conjugate_translation(group.clone());
        for basepoint in 0..action.space_size() {
            cases += 1;
            match classify_effective(&action, basepoint) {
                Ok(result) => {
                    if !result.subgroup.is_trivial() || result.model != action {
                        return CheckEntry::fail(
                            NAME,
                            CLAIM,
                            json!({ "group": name, "basepoint": basepoint }),
                        );
                    }
                }
                Err(e) => {
                    return CheckEntry::fail(
                        NAME,
                        CLAIM,
                        json!({ "group": name, "basepoint": basepoint, "error": e.to_string() }),
                    );
                }
            }
        }
    }
    CheckEntry::pass(NAME, CLAIM, format!("{cases} (group, basepoint) cases"))
}

pub fn check_kernel_point_stabilizer(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "kernel-point-stabilizer";
    const CLAIM: &str = "in a transitive distributive action every stationary subgroup \
                         G_(y,z) equals the kernel";
    let mut swept = 0usize;
    for FixtureAction { name, action } in &ctx.actions {
        if !action.is_distributive() || !action.is_transitive() {
            continue;
        }
        swept += 1;
        match verify_kernel_stabilizer(action) {
            Ok(report) if report.holds() => {}
            Ok(report) => {
                let (y, z) = report.witness().map(|w| (w.y, w.z)).unwrap();
                return CheckEntry::fail(
                    NAME,
                    CLAIM,
                    json!({ "action": name, "y": y, "z": z, "kernel": report.kernel }),
                );
            }
            Err(e) => {
                return CheckEntry::fail(NAME, CLAIM, json!({ "action": name, "error": e.to_string() }));
            }
        }
    }
    CheckEntry::pass(
        NAME,
        CLAIM,
        format!("{swept} transitive distributive fixture actions, all pairs"),
    )
}

pub fn check_kernel_normality(ctx: &BatteryContext) -> CheckEntry {
    const NAME: &str = "kernel-normality";
    const CLAIM: &str = "the set of elements acting as the unit is a normal subgroup in \
                         every fixture action";
    let mut detail = String::new();
    for FixtureAction { name, action } in &ctx.actions {
        let kernel = action.kernel();
        if !action.group().is_normal(&kernel) {
            return CheckEntry::fail(NAME, CLAIM, json!({ "action": name }));
        }
        // Membership re-checked from the table.
        for g in action.group().elements() {
            let trivial = (0..action.space_size())
                .all(|x| (0..action.space_size()).all(|y| action.at(g, x, y) == y));
            if kernel.contains(g) != trivial {
                return CheckEntry::fail(NAME, CLAIM, json!({ "action": name, "g": g }));
            }
        }
    }
    let _ = write!(detail, "{} fixture actions", ctx.actions.len());
    CheckEntry::pass(NAME, CLAIM, detail)
}
