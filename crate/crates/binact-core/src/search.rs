//! Catalogs of pairwise-distributive operations and closure searches.
//!
//! [`DistributiveCatalog`] precomputes, for a list of invertible operation
//! tables, which ordered pairs satisfy
//! `g(x, h(y, z)) = h(g(x, y), g(x, z))`, and finds the maximal subsets in
//! which every ordered pair (including each operation with itself) does.
//! [`generate_subgroup_closure`] grows a pairwise-distributive seed into the
//! group it generates under composition and inversion, verifying that the
//! result is again pairwise distributive.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::action::{distributive_pair_ops, mixed_section_pair, PairWitness};
use crate::binop::{BinOp, FinSet};

/// Default ceiling on closure size for [`generate_subgroup_closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// Errors from catalog construction and closure generation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    /// An input operation lives on the wrong carrier.
    CarrierMismatch { expected: usize, got: usize },
    /// An input operation has a non-bijective section at `x`.
    NotInvertible { index: usize, x: usize },
    /// A subset index is out of range for the catalog.
    IndexOutOfRange { index: usize, size: usize },
    /// Two seed operations fail the pair identity, so no distributive
    /// closure containing both exists.
    SeedNotDistributive {
        i: usize,
        j: usize,
        witness: PairWitness,
    },
    /// The closure exceeded the cap before stabilizing.
    ClosureCapExceeded { cap: usize },
    /// The finished closure is not a group under composition (unreachable
    /// for invertible seeds; kept as a checked invariant).
    ClosureNotGroup,
    /// The finished closure contains a non-distributive pair (unreachable
    /// for distributive seeds; kept as a checked invariant).
    ClosureNotDistributive {
        i: usize,
        j: usize,
        witness: PairWitness,
    },
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SearchError::CarrierMismatch { expected, got } => {
                write!(f, "operation on carrier of size {got}, expected {expected}")
            }
            SearchError::NotInvertible { index, x } => {
                write!(f, "operation {index} has a non-bijective section at {x}")
            }
            SearchError::IndexOutOfRange { index, size } => {
                write!(f, "operation index {index} outside 0..{size}")
            }
            SearchError::SeedNotDistributive { i, j, witness } => write!(
                f,
                "seed operations {i} and {j} fail the pair identity at \
                 ({}, {}, {}): {} != {}",
                witness.x, witness.y, witness.z, witness.lhs, witness.rhs
            ),
            SearchError::ClosureCapExceeded { cap } => {
                write!(f, "closure exceeded the cap of {cap} operations")
            }
            SearchError::ClosureNotGroup => {
                write!(f, "closure is not a group under composition")
            }
            SearchError::ClosureNotDistributive { i, j, witness } => write!(
                f,
                "closure operations {i} and {j} fail the pair identity at \
                 ({}, {}, {}): {} != {}",
                witness.x, witness.y, witness.z, witness.lhs, witness.rhs
            ),
        }
    }
}

impl core::error::Error for SearchError {}

/// A list of invertible operations with the pair identity precomputed for
/// every ordered pair.
#[derive(Clone, Debug)]
pub struct DistributiveCatalog {
    ops: Vec<BinOp>,
    /// `matrix[i * len + j]` records whether `(ops[i], ops[j])` satisfies
    /// the pair identity.
    matrix: Vec<bool>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl DistributiveCatalog {
    /// Builds the pair matrix. Duplicate tables are dropped (first
    /// occurrence kept); every operation must be invertible and share one
    /// carrier.
    pub fn build(ops: &[BinOp]) -> Result<Self, SearchError> {
        let mut kept: Vec<BinOp> = Vec::new();
        let mut index = BTreeMap::new();
        for (i, op) in ops.iter().enumerate() {
            if let Some(first) = kept.first() {
                if op.size() != first.size() {
                    return Err(SearchError::CarrierMismatch {
                        expected: first.size(),
                        got: op.size(),
                    });
                }
            }
            if let Some(x) = op.invertibility_violation() {
                return Err(SearchError::NotInvertible { index: i, x });
            }
            if !index.contains_key(op.entries()) {
                index.insert(op.entries().to_vec(), kept.len());
                kept.push(op.clone());
            }
        }
        let len = kept.len();
        let mut matrix = vec![false; len * len];
        for i in 0..len {
            for j in 0..len {
                matrix[i * len + j] = distributive_pair_ops(&kept[i], &kept[j])
                    .expect("one shared carrier")
                    .holds();
            }
        }
        Ok(DistributiveCatalog {
            ops: kept,
            matrix,
            index,
        })
    }

    pub fn ops(&self) -> &[BinOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Whether the ordered pair `(ops[i], ops[j])` satisfies the identity.
    pub fn pair(&self, i: usize, j: usize) -> Result<bool, SearchError> {
        let size = self.len();
        for index in [i, j] {
            if index >= size {
                return Err(SearchError::IndexOutOfRange { index, size });
            }
        }
        Ok(self.matrix[i * size + j])
    }

    /// Position of an operation in the catalog, if present.
    pub fn index_of(&self, op: &BinOp) -> Option<usize> {
        self.index.get(op.entries()).copied()
    }

    /// First ordered pair in `subset`, scanned in the given order with the
    /// diagonal included, that fails the identity.
    pub fn subset_violation(&self, subset: &[usize]) -> Result<Option<(usize, usize)>, SearchError> {
        let size = self.len();
        for &index in subset {
            if index >= size {
                return Err(SearchError::IndexOutOfRange { index, size });
            }
        }
        for &i in subset {
            for &j in subset {
                if !self.matrix[i * size + j] {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// Whether every ordered pair drawn from `subset` satisfies the
    /// identity.
    pub fn is_distributive_subset(&self, subset: &[usize]) -> Result<bool, SearchError> {
        Ok(self.subset_violation(subset)?.is_none())
    }

    /// All maximal subsets in which every ordered pair (diagonal included)
    /// satisfies the identity, as sorted index lists in lexicographic
    /// order. Stops early after `limit` subsets when a limit is given.
    pub fn maximal_distributive_subsets(&self, limit: Option<usize>) -> Vec<Vec<usize>> {
        let size = self.len();
        // Only operations compatible with themselves can appear at all.
        let vertices: Vec<usize> = (0..size)
            .filter(|&i| self.matrix[i * size + i])
            .collect();
        let compatible = |i: usize, j: usize| {
            i == j || (self.matrix[i * size + j] && self.matrix[j * size + i])
        };
        // Bron–Kerbosch over the symmetrized compatibility graph. Candidate
        // lists are kept ascending, so results come out in lexicographic
        // order.
        let mut found: Vec<Vec<usize>> = Vec::new();
        fn expand(
            current: &mut Vec<usize>,
            candidates: Vec<usize>,
            excluded: Vec<usize>,
            compatible: &dyn Fn(usize, usize) -> bool,
            found: &mut Vec<Vec<usize>>,
            limit: Option<usize>,
        ) -> bool {
            if candidates.is_empty() && excluded.is_empty() {
                found.push(current.clone());
                return limit.map(|cap| found.len() >= cap).unwrap_or(false);
            }
            let mut cands = candidates;
            let mut excl = excluded;
            while let Some(&v) = cands.first() {
                cands.remove(0);
                current.push(v);
                let next_c: Vec<usize> =
                    cands.iter().copied().filter(|&u| compatible(v, u)).collect();
                let next_x: Vec<usize> =
                    excl.iter().copied().filter(|&u| compatible(v, u)).collect();
                let stop = expand(current, next_c, next_x, compatible, found, limit);
                current.pop();
                if stop {
                    return true;
                }
                excl.push(v);
            }
            false
        }
        let mut current = Vec::new();
        expand(
            &mut current,
            vertices,
            Vec::new(),
            &compatible,
            &mut found,
            limit,
        );
        found
    }
}

/// How often the index-mixed variant `g(x, h(y, z)) = h(g(x, y), g(y, z))`
/// agrees with the pair identity across a catalog's ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedIdentityAgreement {
    /// Ordered pairs examined.
    pub total: usize,
    /// Pairs where both identities hold or both fail.
    pub matching: usize,
    /// First `(i, j)` where the verdicts differ, if any.
    pub first_mismatch: Option<(usize, usize)>,
}

/// Compares the pair identity with its index-mixed variant over every
/// ordered pair of catalog operations.
pub fn mixed_identity_agreement(catalog: &DistributiveCatalog) -> MixedIdentityAgreement {
    let ops = catalog.ops();
    let mut total = 0;
    let mut matching = 0;
    let mut first_mismatch = None;
    for (i, g) in ops.iter().enumerate() {
        for (j, h) in ops.iter().enumerate() {
            total += 1;
            let plain = catalog.pair(i, j).expect("in range");
            let mixed = mixed_section_pair(g, h).expect("one shared carrier").holds();
            if plain == mixed {
                matching += 1;
            } else if first_mismatch.is_none() {
                first_mismatch = Some((i, j));
            }
        }
    }
    MixedIdentityAgreement {
        total,
        matching,
        first_mismatch,
    }
}

/// Grows a pairwise-distributive set of invertible operations into the
/// group it generates under composition and inversion.
///
/// The seed is deduplicated and checked pairwise first; a failing pair is
/// returned as [`SearchError::SeedNotDistributive`] since no distributive
/// closure can contain it. The closure always includes the unit operation
/// and is returned sorted by table. The result is re-verified to be a group
/// under composition and pairwise distributive; either failure is reported
/// rather than trusted, though neither can occur for a valid seed.
pub fn generate_subgroup_closure(
    carrier: FinSet,
    seed: &[BinOp],
    cap: usize,
) -> Result<Vec<BinOp>, SearchError> {
    let n = carrier.size();
    let mut base: Vec<BinOp> = Vec::new();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, op) in seed.iter().enumerate() {
        if op.size() != n {
            return Err(SearchError::CarrierMismatch {
                expected: n,
                got: op.size(),
            });
        }
        if let Some(x) = op.invertibility_violation() {
            return Err(SearchError::NotInvertible { index: i, x });
        }
        if seen.insert(op.entries().to_vec()) {
            base.push(op.clone());
        }
    }
    for (i, g) in base.iter().enumerate() {
        for (j, h) in base.iter().enumerate() {
            let report = distributive_pair_ops(g, h).expect("one shared carrier");
            if let Some(&witness) = report.witness() {
                return Err(SearchError::SeedNotDistributive { i, j, witness });
            }
        }
    }

    let unit = BinOp::identity(carrier);
    let mut members: Vec<BinOp> = Vec::new();
    let mut keys: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut pending: Vec<BinOp> = Vec::new();
    let push = |op: BinOp,
                    members: &mut Vec<BinOp>,
                    keys: &mut BTreeSet<Vec<usize>>,
                    pending: &mut Vec<BinOp>| {
        if keys.insert(op.entries().to_vec()) {
            members.push(op.clone());
            pending.push(op);
        }
    };
    push(unit, &mut members, &mut keys, &mut pending);
    for op in base {
        push(op, &mut members, &mut keys, &mut pending);
    }
    while let Some(next) = pending.pop() {
        if members.len() > cap {
            return Err(SearchError::ClosureCapExceeded { cap });
        }
        let inv = next.inverse().expect("closure of invertible operations");
        push(inv, &mut members, &mut keys, &mut pending);
        // Products both ways against everything found so far. Snapshot the
        // current members to keep the borrow simple; new elements join
        // `pending` and get their turn later.
        let snapshot: Vec<BinOp> = members.clone();
        for other in &snapshot {
            let left = next.compose(other).expect("one shared carrier");
            push(left, &mut members, &mut keys, &mut pending);
            let right = other.compose(&next).expect("one shared carrier");
            push(right, &mut members, &mut keys, &mut pending);
            if members.len() > cap {
                return Err(SearchError::ClosureCapExceeded { cap });
            }
        }
    }
    members.sort();

    // Verify the invariants on the finished set rather than trusting the
    // construction.
    for (i, g) in members.iter().enumerate() {
        let inv = g.inverse().expect("closure of invertible operations");
        if !keys.contains(inv.entries()) {
            return Err(SearchError::ClosureNotGroup);
        }
        for (j, h) in members.iter().enumerate() {
            let prod = g.compose(h).expect("one shared carrier");
            if !keys.contains(prod.entries()) {
                return Err(SearchError::ClosureNotGroup);
            }
            let report = distributive_pair_ops(g, h).expect("one shared carrier");
            if let Some(&witness) = report.witness() {
                return Err(SearchError::ClosureNotDistributive { i, j, witness });
            }
        }
    }
    Ok(members)
}
