//! Finite groups presented by Cayley tables, with subgroups, cosets, and
//! quotients.
//!
//! Elements are `0..m-1` and the identity is always element 0;
//! [`validate_group`] renumbers tables that place the identity elsewhere and
//! reports the relabeling. Cosets are left cosets `aH` throughout.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::binop::Perm;

/// Errors from Cayley-table validation and subgroup arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    /// A group needs at least one element.
    Empty,
    /// A Cayley table row has the wrong length.
    BadShape { expected: usize, got: usize },
    /// A Cayley table entry is not an element.
    EntryOutOfRange {
        a: usize,
        b: usize,
        value: usize,
        size: usize,
    },
    /// `(a·b)·c ≠ a·(b·c)`.
    NotAssociative { a: usize, b: usize, c: usize },
    /// No two-sided identity element exists.
    NoIdentity,
    /// `element` has no two-sided inverse.
    MissingInverse { element: usize },
    /// A member list mentions an element outside the group.
    MemberOutOfRange { element: usize, size: usize },
    /// A subgroup must contain the identity.
    SubgroupMissingIdentity,
    /// The product `a·b` of two members falls outside the member list.
    SubgroupNotClosed { a: usize, b: usize },
    /// A member's inverse falls outside the member list.
    SubgroupMissingInverse { element: usize },
    /// `conjugator·member·conjugator⁻¹` leaves the subgroup, so it is not
    /// normal.
    NotNormal { conjugator: usize, member: usize },
    /// No fixture group goes by this name.
    UnknownName(String),
    /// Exhaustive subgroup enumeration is limited to small orders.
    OrderBound { order: usize, max: usize },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::Empty => write!(f, "group must be nonempty"),
            GroupError::BadShape { expected, got } => {
                write!(f, "expected a row of {expected} entries, got {got}")
            }
            GroupError::EntryOutOfRange { a, b, value, size } => write!(
                f,
                "cayley entry at ({a}, {b}) is {value}, outside 0..{size}"
            ),
            GroupError::NotAssociative { a, b, c } => {
                write!(f, "not associative at ({a}, {b}, {c})")
            }
            GroupError::NoIdentity => write!(f, "no two-sided identity element"),
            GroupError::MissingInverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
            GroupError::MemberOutOfRange { element, size } => {
                write!(f, "member {element} outside 0..{size}")
            }
            GroupError::SubgroupMissingIdentity => {
                write!(f, "subgroup must contain the identity")
            }
            GroupError::SubgroupNotClosed { a, b } => {
                write!(f, "subgroup not closed: {a}·{b} falls outside")
            }
            GroupError::SubgroupMissingInverse { element } => {
                write!(f, "subgroup lacks the inverse of {element}")
            }
            GroupError::NotNormal { conjugator, member } => write!(
                f,
                "subgroup is not normal: conjugating {member} by {conjugator} leaves it"
            ),
            GroupError::UnknownName(name) => write!(f, "unknown group name {name:?}"),
            GroupError::OrderBound { order, max } => write!(
                f,
                "subgroup enumeration is exhaustive over subsets and limited to \
                 order {max}; got {order}"
            ),
        }
    }
}

impl core::error::Error for GroupError {}

/// A finite group: Cayley table plus precomputed inverses, identity at 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>,
    inverse: Vec<usize>,
}

/// Outcome of [`validate_group`]: the canonical group, and the relabeling
/// `old index → new index` if the identity had to be moved to 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupValidation {
    pub group: FiniteGroup,
    pub relabeling: Option<Vec<usize>>,
}

/// Checks the group axioms on a Cayley table: shape, associativity (with a
/// witness triple), a two-sided identity, and two-sided inverses. A table
/// whose identity is not element 0 is renumbered by swapping 0 with the
/// identity.
pub fn validate_group(rows: &[Vec<usize>]) -> Result<GroupValidation, GroupError> {
    let m = rows.len();
    if m == 0 {
        return Err(GroupError::Empty);
    }
    let mut cayley = Vec::with_capacity(m * m);
    for (a, row) in rows.iter().enumerate() {
        if row.len() != m {
            return Err(GroupError::BadShape {
                expected: m,
                got: row.len(),
            });
        }
        for (b, &value) in row.iter().enumerate() {
            if value >= m {
                return Err(GroupError::EntryOutOfRange { a, b, value, size: m });
            }
            cayley.push(value);
        }
    }
    let mul = |a: usize, b: usize| cayley[a * m + b];
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(GroupError::NotAssociative { a, b, c });
                }
            }
        }
    }
    let identity = (0..m)
        .find(|&e| (0..m).all(|x| mul(e, x) == x && mul(x, e) == x))
        .ok_or(GroupError::NoIdentity)?;
    for a in 0..m {
        if !(0..m).any(|b| mul(a, b) == identity && mul(b, a) == identity) {
            return Err(GroupError::MissingInverse { element: a });
        }
    }

    let (cayley, relabeling) = if identity == 0 {
        (cayley, None)
    } else {
        // Swap element 0 with the identity so the canonical invariant holds.
        let relabel: Vec<usize> = (0..m)
            .map(|a| match a {
                0 => identity,
                a if a == identity => 0,
                a => a,
            })
            .collect();
        let mut renumbered = vec![0usize; m * m];
        for a in 0..m {
            for b in 0..m {
                renumbered[relabel[a] * m + relabel[b]] = relabel[mul(a, b)];
            }
        }
        (renumbered, Some(relabel))
    };

    let mul = |a: usize, b: usize| cayley[a * m + b];
    let inverse: Vec<usize> = (0..m)
        .map(|a| (0..m).find(|&b| mul(a, b) == 0).expect("inverses were just verified"))
        .collect();
    Ok(GroupValidation {
        group: FiniteGroup {
            order: m,
            cayley,
            inverse,
        },
        relabeling,
    })
}

/// Largest order accepted by [`FiniteGroup::subgroups`], which sweeps all
/// 2^(m-1) subsets containing the identity.
pub const MAX_SUBGROUP_ENUM_ORDER: usize = 16;

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g·h·g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Validates a member list as a subgroup: identity present, closed under
    /// products and inverses.
    pub fn subgroup(&self, members: &[usize]) -> Result<SubgroupElems, GroupError> {
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &a in &sorted {
            if a >= self.order {
                return Err(GroupError::MemberOutOfRange {
                    element: a,
                    size: self.order,
                });
            }
        }
        if sorted.binary_search(&0).is_err() {
            return Err(GroupError::SubgroupMissingIdentity);
        }
        for &a in &sorted {
            for &b in &sorted {
                if sorted.binary_search(&self.mul(a, b)).is_err() {
                    return Err(GroupError::SubgroupNotClosed { a, b });
                }
            }
            if sorted.binary_search(&self.inv(a)).is_err() {
                return Err(GroupError::SubgroupMissingInverse { element: a });
            }
        }
        Ok(SubgroupElems {
            parent_order: self.order,
            members: sorted,
        })
    }

    /// Smallest subgroup containing the seed: worklist closure under
    /// products and inverses, starting from the seed plus the identity.
    pub fn subgroup_generated(&self, seed: &[usize]) -> Result<SubgroupElems, GroupError> {
        for &a in seed {
            if a >= self.order {
                return Err(GroupError::MemberOutOfRange {
                    element: a,
                    size: self.order,
                });
            }
        }
        let mut present = vec![false; self.order];
        present[0] = true;
        let mut worklist: Vec<usize> = vec![0];
        for &a in seed {
            if !present[a] {
                present[a] = true;
                worklist.push(a);
            }
        }
        let mut i = 0;
        while i < worklist.len() {
            let a = worklist[i];
            let candidates =
                (0..=i).flat_map(|j| [self.mul(a, worklist[j]), self.mul(worklist[j], a)]);
            let mut fresh: Vec<usize> = candidates.chain([self.inv(a)]).collect();
            fresh.sort_unstable();
            fresh.dedup();
            for v in fresh {
                if !present[v] {
                    present[v] = true;
                    worklist.push(v);
                }
            }
            i += 1;
        }
        let members: Vec<usize> = (0..self.order).filter(|&a| present[a]).collect();
        Ok(SubgroupElems {
            parent_order: self.order,
            members,
        })
    }

    pub fn trivial_subgroup(&self) -> SubgroupElems {
        SubgroupElems {
            parent_order: self.order,
            members: vec![0],
        }
    }

    pub fn full_subgroup(&self) -> SubgroupElems {
        SubgroupElems {
            parent_order: self.order,
            members: (0..self.order).collect(),
        }
    }

    /// First `(conjugator, member)` with `g·h·g⁻¹` outside the subgroup.
    pub fn normality_violation(&self, h: &SubgroupElems) -> Option<(usize, usize)> {
        self.assert_parent(h);
        for g in 0..self.order {
            for &m in &h.members {
                if !h.contains(self.conjugate(g, m)) {
                    return Some((g, m));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, h: &SubgroupElems) -> bool {
        self.normality_violation(h).is_none()
    }

    /// The subgroup `g·H·g⁻¹`.
    pub fn conjugate_subgroup(&self, by: usize, h: &SubgroupElems) -> SubgroupElems {
        self.assert_parent(h);
        let mut members: Vec<usize> = h.members.iter().map(|&m| self.conjugate(by, m)).collect();
        members.sort_unstable();
        SubgroupElems {
            parent_order: self.order,
            members,
        }
    }

    /// Left cosets `aH`, scanned in element order so that coset 0 contains
    /// the identity and every representative is its coset's least member.
    pub fn coset_space(&self, h: &SubgroupElems) -> CosetSpace {
        self.assert_parent(h);
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for a in 0..self.order {
            if coset_of[a] == usize::MAX {
                let c = reps.len();
                reps.push(a);
                for &m in &h.members {
                    coset_of[self.mul(a, m)] = c;
                }
            }
        }
        CosetSpace {
            subgroup: h.clone(),
            coset_of,
            reps,
        }
    }

    /// The quotient group `G/H` for normal `H`, multiplied through coset
    /// representatives and re-validated.
    pub fn quotient(&self, h: &SubgroupElems) -> Result<FiniteGroup, GroupError> {
        if let Some((conjugator, member)) = self.normality_violation(h) {
            return Err(GroupError::NotNormal { conjugator, member });
        }
        let cosets = self.coset_space(h);
        let k = cosets.count();
        let rows: Vec<Vec<usize>> = (0..k)
            .map(|c1| {
                (0..k)
                    .map(|c2| cosets.coset_of(self.mul(cosets.rep(c1), cosets.rep(c2))))
                    .collect()
            })
            .collect();
        let validation =
            validate_group(&rows).expect("coset products of a normal subgroup form a group");
        assert!(
            validation.relabeling.is_none(),
            "the identity coset is coset 0 by construction"
        );
        Ok(validation.group)
    }

    /// Every subgroup, found by sweeping all subsets that contain the
    /// identity. Exhaustive, hence limited to order [`MAX_SUBGROUP_ENUM_ORDER`].
    pub fn subgroups(&self) -> Result<Vec<SubgroupElems>, GroupError> {
        let m = self.order;
        if m > MAX_SUBGROUP_ENUM_ORDER {
            return Err(GroupError::OrderBound {
                order: m,
                max: MAX_SUBGROUP_ENUM_ORDER,
            });
        }
        let mut out = Vec::new();
        // Odd masks only: bit 0 is the identity.
        let mut mask: u64 = 1;
        while mask < 1u64 << m {
            let members: Vec<usize> = (0..m).filter(|&a| mask >> a & 1 == 1).collect();
            let closed = members.iter().all(|&a| {
                members.binary_search(&self.inv(a)).is_ok()
                    && members
                        .iter()
                        .all(|&b| members.binary_search(&self.mul(a, b)).is_ok())
            });
            if closed {
                out.push(SubgroupElems {
                    parent_order: m,
                    members,
                });
            }
            mask += 2;
        }
        Ok(out)
    }

    fn assert_parent(&self, h: &SubgroupElems) {
        assert_eq!(
            h.parent_order, self.order,
            "subgroup belongs to a group of a different order"
        );
    }
}

/// A subgroup as a sorted member list, tagged with its parent's order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubgroupElems {
    parent_order: usize,
    members: Vec<usize>,
}

impl SubgroupElems {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// True when this is the one-element subgroup.
    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }
}

/// The left-coset space `G/H` with its index maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSpace {
    subgroup: SubgroupElems,
    coset_of: Vec<usize>,
    reps: Vec<usize>,
}

impl CosetSpace {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Index of the coset containing `a`.
    pub fn coset_of(&self, a: usize) -> usize {
        self.coset_of[a]
    }

    /// The least member of coset `c`.
    pub fn rep(&self, c: usize) -> usize {
        self.reps[c]
    }

    pub fn members(&self, c: usize) -> impl Iterator<Item = usize> + '_ {
        self.coset_of
            .iter()
            .enumerate()
            .filter(move |&(_, &cc)| cc == c)
            .map(|(a, _)| a)
    }

    pub fn subgroup(&self) -> &SubgroupElems {
        &self.subgroup
    }
}

/// The cyclic group Z_k under addition mod k.
pub fn cyclic(k: usize) -> FiniteGroup {
    assert!(k >= 1, "cyclic groups need a positive order");
    let rows: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
    validate_group(&rows)
        .expect("modular addition is a group")
        .group
}

/// The Klein four-group: xor on two bits.
pub fn klein_four() -> FiniteGroup {
    let rows: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    validate_group(&rows).expect("xor on two bits is a group").group
}

/// The symmetric group on n points. Element i is the i-th permutation in
/// lexicographic one-line order, so the identity is element 0, and products
/// compose right factor first: `a·b` maps `x` to `a(b(x))`.
pub fn symmetric(n: usize) -> FiniteGroup {
    let perms = Perm::all(n);
    let index: BTreeMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.images(), i))
        .collect();
    let rows: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| index[a.compose(b).expect("equal lengths").images()])
                .collect()
        })
        .collect();
    validate_group(&rows)
        .expect("permutation composition is a group")
        .group
}

/// The dihedral group of the square, order 8. Element `i + 4j` is `r^i s^j`
/// with `r` the quarter turn and `s` a reflection, so `s r s = r⁻¹`.
pub fn dihedral_square() -> FiniteGroup {
    let idx = |i: usize, j: usize| i + 4 * j;
    let mut rows = vec![vec![0usize; 8]; 8];
    for i1 in 0..4 {
        for j1 in 0..2 {
            for i2 in 0..4 {
                for j2 in 0..2 {
                    // (r^i1 s^j1)(r^i2 s^j2) = r^(i1 + i2·(-1)^j1) s^(j1+j2)
                    let i = if j1 == 0 { (i1 + i2) % 4 } else { (i1 + 4 - i2) % 4 };
                    let j = (j1 + j2) % 2;
                    rows[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                }
            }
        }
    }
    validate_group(&rows)
        .expect("the dihedral relations define a group")
        .group
}

/// The quaternion group, order 8. Elements 0..7 are 1, i, j, k, -1, -i, -j,
/// -k; every subgroup is normal.
pub fn quaternion() -> FiniteGroup {
    // basis_mul[b1][b2] = (sign, basis) of the product of basis elements.
    const BASIS_MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let mut rows = vec![vec![0usize; 8]; 8];
    for s1 in 0..2 {
        for b1 in 0..4 {
            for s2 in 0..2 {
                for b2 in 0..4 {
                    let (sp, bp) = BASIS_MUL[b1][b2];
                    let sign = (s1 + s2 + sp) % 2;
                    rows[s1 * 4 + b1][s2 * 4 + b2] = sign * 4 + bp;
                }
            }
        }
    }
    validate_group(&rows)
        .expect("quaternion multiplication is a group")
        .group
}

/// Looks up a fixture group by name: `Z<k>` for any k ≥ 1, `V4`, `S3`, `S4`,
/// `D4`, or `Q8` (case-insensitive).
pub fn named_group(name: &str) -> Result<FiniteGroup, GroupError> {
    let trimmed = name.trim();
    let upper = trimmed.to_ascii_uppercase();
    match upper.as_str() {
        "V4" => return Ok(klein_four()),
        "S3" => return Ok(symmetric(3)),
        "S4" => return Ok(symmetric(4)),
        "D4" => return Ok(dihedral_square()),
        "Q8" => return Ok(quaternion()),
        _ => {}
    }
    if let Some(rest) = upper.strip_prefix('Z') {
        if let Ok(k) = rest.parse::<usize>() {
            if k >= 1 {
                return Ok(cyclic(k));
            }
        }
    }
    Err(GroupError::UnknownName(trimmed.into()))
}
