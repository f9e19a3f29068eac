//! Binary actions of a finite group on a finite carrier.
//!
//! A binary action assigns each group element `g` an operation table
//! `g(x, y)` so that the identity acts as `e(x, y) = y` and products act by
//! `(gh)(x, y) = g(x, h(x, y))`. Equivalently, `g ↦ g(·,·)` is a
//! homomorphism into the monoid of operation tables; its image lies in the
//! invertible operations automatically, but [`BinaryAction::validate`]
//! checks every axiom explicitly and reports the first violation.
//!
//! An action is *distributive* when `g(x, h(y, z)) = h(g(x, y), g(x, z))`
//! for all `g, h, x, y, z`. The module also provides the pairwise forms of
//! that identity on bare operation tables, stationary subgroups
//! `G_(x,y) = {g : g(x, y) = y}`, transitivity in the orbit sense
//! `{g(x, x)} = X`, biequivariant maps, and the canonical action
//! constructions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binop::{BinOp, FinSet, OpError};
use crate::group::{CosetSpace, FiniteGroup, SubgroupElems};

/// Errors from action validation and construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionError {
    /// The flat table has the wrong number of entries.
    BadShape { expected: usize, got: usize },
    /// A table entry is not a carrier point.
    EntryOutOfRange {
        g: usize,
        x: usize,
        y: usize,
        value: usize,
        size: usize,
    },
    /// The identity layer moves a point: `e(x, y) = value ≠ y`.
    IdentityAxiom { x: usize, y: usize, value: usize },
    /// `(g·h)(x, y) ≠ g(x, h(x, y))`.
    Cocycle {
        g: usize,
        h: usize,
        x: usize,
        y: usize,
        lhs: usize,
        rhs: usize,
    },
    /// Layer `g` has a non-bijective section at `x`.
    NonInvertibleLayer { g: usize, x: usize },
    /// A group index is out of range.
    GroupIndexOutOfRange { index: usize, size: usize },
    /// A carrier point is out of range.
    PointOutOfRange { index: usize, size: usize },
    /// The two actions are over different groups.
    GroupMismatch,
    /// A point map has the wrong length.
    MapShape { expected: usize, got: usize },
    /// A point map sends `x` outside the target carrier.
    MapOutOfRange { x: usize, value: usize, size: usize },
    /// The coset rule is representative-dependent: `kH = mH` and `lH = nH`
    /// but `(k g k⁻¹ l)H ≠ (m g m⁻¹ n)H`.
    NotWellDefined {
        g: usize,
        k: usize,
        m: usize,
        l: usize,
        n: usize,
    },
}

impl fmt::Display for ActionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ActionError::BadShape { expected, got } => {
                write!(f, "expected {expected} table entries, got {got}")
            }
            ActionError::EntryOutOfRange { g, x, y, value, size } => write!(
                f,
                "entry at layer {g}, ({x}, {y}) is {value}, outside the carrier of size {size}"
            ),
            ActionError::IdentityAxiom { x, y, value } => write!(
                f,
                "identity layer moves a point: e({x}, {y}) = {value}, expected {y}"
            ),
            ActionError::Cocycle { g, h, x, y, lhs, rhs } => write!(
                f,
                "composition fails at g={g}, h={h}, ({x}, {y}): (g·h)(x,y) = {lhs} \
                 but g(x, h(x,y)) = {rhs}"
            ),
            ActionError::NonInvertibleLayer { g, x } => {
                write!(f, "layer {g} has a non-bijective section at {x}")
            }
            ActionError::GroupIndexOutOfRange { index, size } => {
                write!(f, "group index {index} outside 0..{size}")
            }
            ActionError::PointOutOfRange { index, size } => {
                write!(f, "carrier point {index} outside 0..{size}")
            }
            ActionError::GroupMismatch => write!(f, "actions are over different groups"),
            ActionError::MapShape { expected, got } => {
                write!(f, "point map has {got} entries, expected {expected}")
            }
            ActionError::MapOutOfRange { x, value, size } => {
                write!(f, "point map sends {x} to {value}, outside 0..{size}")
            }
            ActionError::NotWellDefined { g, k, m, l, n } => write!(
                f,
                "coset rule depends on representatives at g={g}: \
                 ({k}, {l}) and ({m}, {n}) give different cosets"
            ),
        }
    }
}

impl core::error::Error for ActionError {}

/// Witness that distributivity fails:
/// `g(x, h(y, z)) = lhs ≠ rhs = h(g(x, y), g(x, z))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistributivityWitness {
    pub g: usize,
    pub h: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub lhs: usize,
    pub rhs: usize,
}

/// Outcome of a distributivity sweep; holds exactly when no witness exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributivityReport {
    witness: Option<DistributivityWitness>,
}

impl DistributivityReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&DistributivityWitness> {
        self.witness.as_ref()
    }
}

/// Witness that a point's orbit misses part of the carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityWitness {
    pub x: usize,
    /// The sorted orbit `{g(x, x)}`.
    pub orbit: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitivityReport {
    witness: Option<TransitivityWitness>,
}

impl TransitivityReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&TransitivityWitness> {
        self.witness.as_ref()
    }
}

/// Witness that a pair of operation tables is not distributive:
/// `g(x, h(y, z)) = lhs ≠ rhs = h(g(x, y), g(x, z))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairReport {
    witness: Option<PairWitness>,
}

impl PairReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&PairWitness> {
        self.witness.as_ref()
    }
}

/// Witness that a point map is not biequivariant:
/// `f(g(x, y)) = lhs ≠ rhs = g(f(x), f(y))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BiequivarianceWitness {
    pub g: usize,
    pub x: usize,
    pub y: usize,
    pub lhs: usize,
    pub rhs: usize,
}

/// Checks `g(x, h(y, z)) = h(g(x, y), g(x, z))` over all triples, scanning
/// `(x, y, z)` lexicographically and reporting the first violation.
pub fn distributive_pair_ops(g: &BinOp, h: &BinOp) -> Result<PairReport, OpError> {
    let n = g.size();
    if n != h.size() {
        return Err(OpError::CarrierMismatch {
            left: n,
            right: h.size(),
        });
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = g.at(x, h.at(y, z));
                let rhs = h.at(g.at(x, y), g.at(x, z));
                if lhs != rhs {
                    return Ok(PairReport {
                        witness: Some(PairWitness { x, y, z, lhs, rhs }),
                    });
                }
            }
        }
    }
    Ok(PairReport { witness: None })
}

/// The same check routed through section permutations: for each `(x, y)` it
/// compares `g_x ∘ h_y` with `h_{g(x,y)} ∘ g_x` as permutations. Requires
/// both operations invertible; agrees with [`distributive_pair_ops`].
pub fn distributive_pair_sections(g: &BinOp, h: &BinOp) -> Result<PairReport, OpError> {
    let n = g.size();
    if n != h.size() {
        return Err(OpError::CarrierMismatch {
            left: n,
            right: h.size(),
        });
    }
    if let Some(x) = g.invertibility_violation() {
        return Err(OpError::NotInvertible { x });
    }
    if let Some(x) = h.invertibility_violation() {
        return Err(OpError::NotInvertible { x });
    }
    let g_secs: Vec<_> = (0..n)
        .map(|x| g.section_perm(x).expect("in range").expect("checked invertible"))
        .collect();
    let h_secs: Vec<_> = (0..n)
        .map(|y| h.section_perm(y).expect("in range").expect("checked invertible"))
        .collect();
    for x in 0..n {
        for y in 0..n {
            let lhs = g_secs[x].compose(&h_secs[y]).expect("equal carriers");
            let rhs = h_secs[g.at(x, y)].compose(&g_secs[x]).expect("equal carriers");
            if lhs != rhs {
                let z = (0..n)
                    .find(|&z| lhs.apply(z) != rhs.apply(z))
                    .expect("permutations differ somewhere");
                return Ok(PairReport {
                    witness: Some(PairWitness {
                        x,
                        y,
                        z,
                        lhs: lhs.apply(z),
                        rhs: rhs.apply(z),
                    }),
                });
            }
        }
    }
    Ok(PairReport { witness: None })
}

/// Checks the index-mixed variant `g(x, h(y, z)) = h(g(x, y), g(y, z))`,
/// whose inner second argument is taken at `y` rather than `x`. Reported for
/// comparison with [`distributive_pair_ops`]; the two do not coincide.
pub fn mixed_section_pair(g: &BinOp, h: &BinOp) -> Result<PairReport, OpError> {
    let n = g.size();
    if n != h.size() {
        return Err(OpError::CarrierMismatch {
            left: n,
            right: h.size(),
        });
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = g.at(x, h.at(y, z));
                let rhs = h.at(g.at(x, y), g.at(y, z));
                if lhs != rhs {
                    return Ok(PairReport {
                        witness: Some(PairWitness { x, y, z, lhs, rhs }),
                    });
                }
            }
        }
    }
    Ok(PairReport { witness: None })
}

/// A validated binary action: a group, a carrier, and one operation table
/// per group element, stored flat as `table[(g·n + x)·n + y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryAction {
    group: FiniteGroup,
    n: usize,
    table: Vec<usize>,
}

/// A coset action together with the coset space that indexes its carrier.
#[derive(Clone, Debug)]
pub struct CosetAction {
    pub action: BinaryAction,
    pub cosets: CosetSpace,
}

impl BinaryAction {
    /// Validates a flat table against the three axioms, in order: entries in
    /// range, the identity layer fixes every point, products compose through
    /// the layers, and every layer has bijective sections. Witnesses are the
    /// lexicographically first violations.
    pub fn validate(
        group: FiniteGroup,
        carrier: FinSet,
        table: Vec<usize>,
    ) -> Result<Self, ActionError> {
        let m = group.order();
        let n = carrier.size();
        if table.len() != m * n * n {
            return Err(ActionError::BadShape {
                expected: m * n * n,
                got: table.len(),
            });
        }
        for (i, &value) in table.iter().enumerate() {
            if value >= n {
                let g = i / (n * n);
                let r = i % (n * n);
                return Err(ActionError::EntryOutOfRange {
                    g,
                    x: r / n,
                    y: r % n,
                    value,
                    size: n,
                });
            }
        }
        let at = |g: usize, x: usize, y: usize| table[(g * n + x) * n + y];
        for x in 0..n {
            for y in 0..n {
                let value = at(0, x, y);
                if value != y {
                    return Err(ActionError::IdentityAxiom { x, y, value });
                }
            }
        }
        for g in 0..m {
            for h in 0..m {
                let gh = group.mul(g, h);
                for x in 0..n {
                    for y in 0..n {
                        let lhs = at(gh, x, y);
                        let rhs = at(g, x, at(h, x, y));
                        if lhs != rhs {
                            return Err(ActionError::Cocycle { g, h, x, y, lhs, rhs });
                        }
                    }
                }
            }
        }
        // Unreachable once the two axioms hold (each layer has the layer of
        // the inverse element as a two-sided inverse), but checked anyway.
        let mut seen = vec![false; n];
        for g in 0..m {
            for x in 0..n {
                for s in seen.iter_mut() {
                    *s = false;
                }
                for y in 0..n {
                    let v = at(g, x, y);
                    if seen[v] {
                        return Err(ActionError::NonInvertibleLayer { g, x });
                    }
                    seen[v] = true;
                }
            }
        }
        Ok(BinaryAction { group, n, table })
    }

    /// The action in which every element acts as the unit: `g(x, y) = y`.
    pub fn trivial(group: FiniteGroup, carrier: FinSet) -> Self {
        let m = group.order();
        let n = carrier.size();
        let mut table = Vec::with_capacity(m * n * n);
        for _ in 0..m * n {
            table.extend(0..n);
        }
        Self::validate(group, carrier, table).expect("unit layers satisfy the axioms")
    }

    /// Conjugate left translation of a group on itself:
    /// `g(x, y) = x·g·x⁻¹·y`. Distributive, transitive, and effective.
    pub fn conjugate_translation(group: FiniteGroup) -> Self {
        let m = group.order();
        let mut table = Vec::with_capacity(m * m * m);
        for g in 0..m {
            for x in 0..m {
                let t = group.mul(group.mul(x, g), group.inv(x));
                for y in 0..m {
                    table.push(group.mul(t, y));
                }
            }
        }
        let carrier = FinSet::new(m).expect("groups are nonempty");
        Self::validate(group, carrier, table)
            .expect("conjugate translation satisfies the axioms")
    }

    /// The companion rule with the conjugation inverted:
    /// `g(x, y) = x⁻¹·g·x·y`. A valid action, but not distributive on
    /// nonabelian groups such as S3 or D4.
    pub fn inverse_conjugation(group: FiniteGroup) -> Self {
        let m = group.order();
        let mut table = Vec::with_capacity(m * m * m);
        for g in 0..m {
            for x in 0..m {
                let t = group.mul(group.mul(group.inv(x), g), x);
                for y in 0..m {
                    table.push(group.mul(t, y));
                }
            }
        }
        let carrier = FinSet::new(m).expect("groups are nonempty");
        Self::validate(group, carrier, table)
            .expect("inverse conjugation satisfies the axioms")
    }

    /// The coset action `g(kH, lH) = (k·g·k⁻¹·l)H` on `G/H`. Before the
    /// table is accepted, well-definedness is verified by sweeping every
    /// pair of representatives, not by trusting a normality check; the
    /// sweep fails exactly when `H` is not normal. The assembled action is
    /// then re-validated and must come out distributive.
    pub fn coset(group: &FiniteGroup, subgroup: &SubgroupElems) -> Result<CosetAction, ActionError> {
        let cosets = group.coset_space(subgroup);
        let m = group.order();
        let count = cosets.count();
        let mut table = Vec::with_capacity(m * count * count);
        for g in 0..m {
            for c1 in 0..count {
                let k0 = cosets.rep(c1);
                let t0 = group.mul(group.mul(k0, g), group.inv(k0));
                for c2 in 0..count {
                    let l0 = cosets.rep(c2);
                    let base = cosets.coset_of(group.mul(t0, l0));
                    for k in cosets.members(c1) {
                        let t = group.mul(group.mul(k, g), group.inv(k));
                        for l in cosets.members(c2) {
                            if cosets.coset_of(group.mul(t, l)) != base {
                                return Err(ActionError::NotWellDefined {
                                    g,
                                    k: k0,
                                    m: k,
                                    l: l0,
                                    n: l,
                                });
                            }
                        }
                    }
                    table.push(base);
                }
            }
        }
        let carrier = FinSet::new(count).expect("at least one coset");
        let action = Self::validate(group.clone(), carrier, table)
            .expect("a representative-independent coset rule satisfies the axioms");
        assert!(
            action.distributivity().holds(),
            "coset actions of normal subgroups are distributive"
        );
        Ok(CosetAction { action, cosets })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn carrier(&self) -> FinSet {
        FinSet::new(self.n).expect("validated carrier")
    }

    pub fn space_size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn at(&self, g: usize, x: usize, y: usize) -> usize {
        self.table[(g * self.n + x) * self.n + y]
    }

    /// Flat table entries, layer by layer.
    pub fn entries(&self) -> &[usize] {
        &self.table
    }

    /// The operation table of a single group element.
    pub fn op(&self, g: usize) -> Result<BinOp, ActionError> {
        if g >= self.group.order() {
            return Err(ActionError::GroupIndexOutOfRange {
                index: g,
                size: self.group.order(),
            });
        }
        let layer = self.table[g * self.n * self.n..(g + 1) * self.n * self.n].to_vec();
        Ok(BinOp::from_flat(self.carrier(), layer).expect("validated layer"))
    }

    /// Elements acting as the unit. The kernel is verified to be a normal
    /// subgroup; both hold for every validated action.
    pub fn kernel(&self) -> SubgroupElems {
        let members: Vec<usize> = self
            .group
            .elements()
            .filter(|&g| (0..self.n).all(|x| (0..self.n).all(|y| self.at(g, x, y) == y)))
            .collect();
        let kernel = self
            .group
            .subgroup(&members)
            .expect("the kernel is closed under products and inverses");
        assert!(
            self.group.is_normal(&kernel),
            "the kernel of an action is normal"
        );
        kernel
    }

    pub fn is_effective(&self) -> bool {
        self.kernel().is_trivial()
    }

    /// Sweeps `g(x, h(y, z)) = h(g(x, y), g(x, z))` over all quintuples in
    /// lexicographic `(g, h, x, y, z)` order.
    pub fn distributivity(&self) -> DistributivityReport {
        let m = self.group.order();
        for g in 0..m {
            for h in 0..m {
                for x in 0..self.n {
                    for y in 0..self.n {
                        for z in 0..self.n {
                            let lhs = self.at(g, x, self.at(h, y, z));
                            let rhs = self.at(h, self.at(g, x, y), self.at(g, x, z));
                            if lhs != rhs {
                                return DistributivityReport {
                                    witness: Some(DistributivityWitness {
                                        g,
                                        h,
                                        x,
                                        y,
                                        z,
                                        lhs,
                                        rhs,
                                    }),
                                };
                            }
                        }
                    }
                }
            }
        }
        DistributivityReport { witness: None }
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity().holds()
    }

    /// Distributivity in its section form: every map `y ↦ g(x, y)` commutes
    /// with every layer, `g_x(h(y, z)) = h(g_x(y), g_x(z))`. Scanned in
    /// `(g, x, h, y, z)` order; holds exactly when the action is
    /// distributive.
    pub fn section_biequivariance(&self) -> DistributivityReport {
        let m = self.group.order();
        for g in 0..m {
            for x in 0..self.n {
                for h in 0..m {
                    for y in 0..self.n {
                        for z in 0..self.n {
                            let lhs = self.at(g, x, self.at(h, y, z));
                            let rhs = self.at(h, self.at(g, x, y), self.at(g, x, z));
                            if lhs != rhs {
                                return DistributivityReport {
                                    witness: Some(DistributivityWitness {
                                        g,
                                        h,
                                        x,
                                        y,
                                        z,
                                        lhs,
                                        rhs,
                                    }),
                                };
                            }
                        }
                    }
                }
            }
        }
        DistributivityReport { witness: None }
    }

    /// The stationary subgroup `G_(x,y) = {g : g(x, y) = y}`, verified
    /// closed under products and inverses.
    pub fn stabilizer_pair(&self, x: usize, y: usize) -> Result<SubgroupElems, ActionError> {
        for index in [x, y] {
            if index >= self.n {
                return Err(ActionError::PointOutOfRange {
                    index,
                    size: self.n,
                });
            }
        }
        let members: Vec<usize> = self
            .group
            .elements()
            .filter(|&g| self.at(g, x, y) == y)
            .collect();
        Ok(self
            .group
            .subgroup(&members)
            .expect("stationary sets are closed under products and inverses"))
    }

    /// The sorted orbit `{g(x, x) : g ∈ G}`.
    pub fn orbit_at(&self, x: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        for g in self.group.elements() {
            seen[self.at(g, x, x)] = true;
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    /// Transitivity in the orbit sense: `{g(x, x)} = X` for every `x`.
    pub fn transitivity(&self) -> TransitivityReport {
        for x in 0..self.n {
            let orbit = self.orbit_at(x);
            if orbit.len() != self.n {
                return TransitivityReport {
                    witness: Some(TransitivityWitness { x, orbit }),
                };
            }
        }
        TransitivityReport { witness: None }
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity().holds()
    }
}

/// First `(g, x, y)` where `f(g(x, y)) ≠ g(f(x), f(y))`, for a point map
/// between two actions of the same group.
pub fn biequivariance_violation(
    src: &BinaryAction,
    dst: &BinaryAction,
    f: &[usize],
) -> Result<Option<BiequivarianceWitness>, ActionError> {
    if src.group != dst.group {
        return Err(ActionError::GroupMismatch);
    }
    if f.len() != src.n {
        return Err(ActionError::MapShape {
            expected: src.n,
            got: f.len(),
        });
    }
    for (x, &value) in f.iter().enumerate() {
        if value >= dst.n {
            return Err(ActionError::MapOutOfRange {
                x,
                value,
                size: dst.n,
            });
        }
    }
    for g in src.group.elements() {
        for x in 0..src.n {
            for y in 0..src.n {
                let lhs = f[src.at(g, x, y)];
                let rhs = dst.at(g, f[x], f[y]);
                if lhs != rhs {
                    return Ok(Some(BiequivarianceWitness { g, x, y, lhs, rhs }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_biequivariant(
    src: &BinaryAction,
    dst: &BinaryAction,
    f: &[usize],
) -> Result<bool, ActionError> {
    Ok(biequivariance_violation(src, dst, f)?.is_none())
}
