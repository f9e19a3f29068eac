//! Binary operation tables over a finite carrier.
//!
//! An operation `f` on `{0, .., n-1}` is stored as an n×n table with
//! `table[x][y] = f(x, y)`. Operations compose by
//! `(f g)(x, y) = f(x, g(x, y))`; the unit is `e(x, y) = y`. Under this
//! composition the row maps (sections) split: `(f g)_x = f_x ∘ g_x`, so an
//! operation is invertible exactly when every row is a permutation, and the
//! invertible operations on n points number `(n!)^n`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// The carrier set `{0, 1, .., n-1}`. Always nonempty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinSet {
    size: usize,
}

impl FinSet {
    pub fn new(size: usize) -> Result<Self, OpError> {
        if size == 0 {
            return Err(OpError::EmptyCarrier);
        }
        Ok(FinSet { size })
    }

    pub fn size(self) -> usize {
        self.size
    }

    /// Elements in increasing order.
    pub fn elements(self) -> core::ops::Range<usize> {
        0..self.size
    }
}

/// Errors from operation-table construction and arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OpError {
    /// The carrier must have at least one element.
    EmptyCarrier,
    /// A table entry is not an element of the carrier.
    EntryOutOfRange {
        x: usize,
        y: usize,
        value: usize,
        size: usize,
    },
    /// A table or image list has the wrong number of entries.
    BadShape { expected: usize, got: usize },
    /// Two operations live on carriers of different sizes.
    CarrierMismatch { left: usize, right: usize },
    /// An element index is outside the carrier.
    IndexOutOfRange { index: usize, size: usize },
    /// The operation's section at `x` is not bijective.
    NotInvertible { x: usize },
    /// An image list repeats `value`, so it is not a permutation.
    NotAPermutation { value: usize },
    /// Refusing to enumerate `projected` operations; raise the bound
    /// explicitly to proceed.
    EnumerationBound {
        size: usize,
        max: usize,
        projected: u128,
    },
}

impl fmt::Display for OpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OpError::EmptyCarrier => write!(f, "carrier must be nonempty"),
            OpError::EntryOutOfRange { x, y, value, size } => write!(
                f,
                "entry at ({x}, {y}) is {value}, outside the carrier of size {size}"
            ),
            OpError::BadShape { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            OpError::CarrierMismatch { left, right } => {
                write!(f, "carrier sizes differ: {left} vs {right}")
            }
            OpError::IndexOutOfRange { index, size } => {
                write!(f, "index {index} outside the carrier of size {size}")
            }
            OpError::NotInvertible { x } => {
                write!(f, "operation is not invertible: section at {x} is not bijective")
            }
            OpError::NotAPermutation { value } => {
                write!(f, "image list repeats {value}, not a permutation")
            }
            OpError::EnumerationBound {
                size,
                max,
                projected,
            } => write!(
                f,
                "carrier size {size} exceeds the enumeration bound {max}: \
                 {projected} operations projected"
            ),
        }
    }
}

impl core::error::Error for OpError {}

/// A permutation of `{0, .., n-1}` given by its image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self, OpError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(OpError::IndexOutOfRange { index: v, size: n });
            }
            if seen[v] {
                return Err(OpError::NotAPermutation { value: v });
            }
            seen[v] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, OpError> {
        if self.len() != other.len() {
            return Err(OpError::CarrierMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0usize; self.len()];
        for (x, &v) in self.images.iter().enumerate() {
            images[v] = x;
        }
        Perm { images }
    }

    /// All permutations of `{0, .., n-1}` in lexicographic order of their
    /// image lists; the identity comes first.
    pub fn all(n: usize) -> Vec<Perm> {
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm { images: cur.clone() });
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

/// A binary operation table. Ordering and equality compare the flattened
/// table row by row, which matches the enumeration order below.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinOp {
    n: usize,
    table: Vec<usize>,
}

impl BinOp {
    /// Builds an operation from rows `table[x][y] = f(x, y)`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, OpError> {
        let n = rows.len();
        if n == 0 {
            return Err(OpError::EmptyCarrier);
        }
        let mut table = Vec::with_capacity(n * n);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(OpError::BadShape {
                    expected: n,
                    got: row.len(),
                });
            }
            for (y, &value) in row.iter().enumerate() {
                if value >= n {
                    return Err(OpError::EntryOutOfRange { x, y, value, size: n });
                }
                table.push(value);
            }
        }
        Ok(BinOp { n, table })
    }

    /// Builds an operation from a row-major flat table of n² entries.
    pub fn from_flat(carrier: FinSet, table: Vec<usize>) -> Result<Self, OpError> {
        let n = carrier.size();
        if table.len() != n * n {
            return Err(OpError::BadShape {
                expected: n * n,
                got: table.len(),
            });
        }
        for (i, &value) in table.iter().enumerate() {
            if value >= n {
                return Err(OpError::EntryOutOfRange {
                    x: i / n,
                    y: i % n,
                    value,
                    size: n,
                });
            }
        }
        Ok(BinOp { n, table })
    }

    /// The monoid unit `e(x, y) = y`.
    pub fn identity(carrier: FinSet) -> Self {
        let n = carrier.size();
        let mut table = Vec::with_capacity(n * n);
        for _ in 0..n {
            table.extend(0..n);
        }
        BinOp { n, table }
    }

    pub fn carrier(&self) -> FinSet {
        FinSet { size: self.n }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Row-major flat entries.
    pub fn entries(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.n)
    }

    #[inline]
    pub fn at(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y]
    }

    pub fn is_identity(&self) -> bool {
        self.rows().all(|row| row.iter().enumerate().all(|(y, &v)| y == v))
    }

    /// Composition `(self other)(x, y) = self(x, other(x, y))`.
    pub fn compose(&self, other: &BinOp) -> Result<BinOp, OpError> {
        if self.n != other.n {
            return Err(OpError::CarrierMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(self.at(x, other.at(x, y)));
            }
        }
        Ok(BinOp { n, table })
    }

    /// The section at `x`: the unary map `y ↦ f(x, y)` as a row slice.
    pub fn section(&self, x: usize) -> Result<&[usize], OpError> {
        if x >= self.n {
            return Err(OpError::IndexOutOfRange {
                index: x,
                size: self.n,
            });
        }
        Ok(&self.table[x * self.n..(x + 1) * self.n])
    }

    /// The section at `x` as a permutation, or `None` when it is not
    /// bijective.
    pub fn section_perm(&self, x: usize) -> Result<Option<Perm>, OpError> {
        let row = self.section(x)?;
        Ok(Perm::new(row.to_vec()).ok())
    }

    /// First `x` whose section is not bijective, if any.
    pub fn invertibility_violation(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        for x in 0..self.n {
            for s in seen.iter_mut() {
                *s = false;
            }
            for y in 0..self.n {
                let v = self.at(x, y);
                if seen[v] {
                    return Some(x);
                }
                seen[v] = true;
            }
        }
        None
    }

    /// True when every section is bijective, which is exactly when the
    /// operation has a two-sided inverse under composition.
    pub fn is_invertible(&self) -> bool {
        self.invertibility_violation().is_none()
    }

    /// The two-sided inverse `g(x, y) = f_x⁻¹(y)`.
    pub fn inverse(&self) -> Result<BinOp, OpError> {
        if let Some(x) = self.invertibility_violation() {
            return Err(OpError::NotInvertible { x });
        }
        let n = self.n;
        let mut table = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                table[x * n + self.at(x, y)] = y;
            }
        }
        Ok(BinOp { n, table })
    }
}

impl fmt::Display for BinOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (x, row) in self.rows().enumerate() {
            if x > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (y, v) in row.iter().enumerate() {
                if y > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Default carrier-size bound for the enumerators. n = 3 already yields 216
/// invertible operations; n = 4 yields 331_776 and must be requested
/// explicitly.
pub const DEFAULT_ENUMERATION_BOUND: usize = 3;

/// `(n!)^n`, the number of invertible operations on n points, saturating.
pub fn h2_size(n: usize) -> u128 {
    let mut fact: u128 = 1;
    for k in 2..=n as u128 {
        fact = fact.saturating_mul(k);
    }
    let mut out: u128 = 1;
    for _ in 0..n {
        out = out.saturating_mul(fact);
    }
    out
}

/// Enumerates every invertible operation on the carrier in lexicographic
/// order of the flattened table, with the default size bound.
pub fn enumerate_h2(carrier: FinSet) -> Result<Vec<BinOp>, OpError> {
    enumerate_h2_bounded(carrier, DEFAULT_ENUMERATION_BOUND)
}

/// As [`enumerate_h2`] with an explicit carrier-size bound.
pub fn enumerate_h2_bounded(carrier: FinSet, max_size: usize) -> Result<Vec<BinOp>, OpError> {
    let n = carrier.size();
    if n > max_size {
        return Err(OpError::EnumerationBound {
            size: n,
            max: max_size,
            projected: h2_size(n),
        });
    }
    let perms = Perm::all(n);
    // Odometer over independent row choices; the last row is the least
    // significant digit, so the flattened tables come out in lexicographic
    // order.
    let mut idx = vec![0usize; n];
    let mut out = Vec::new();
    'emit: loop {
        let mut table = Vec::with_capacity(n * n);
        for &i in &idx {
            table.extend_from_slice(perms[i].images());
        }
        out.push(BinOp { n, table });
        let mut pos = n;
        while pos > 0 {
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < perms.len() {
                continue 'emit;
            }
            idx[pos] = 0;
        }
        break;
    }
    Ok(out)
}

/// Enumerates *all* operation tables (the full monoid, invertible or not) in
/// lexicographic order, with the default size bound. n = 3 already yields
/// 3^9 = 19_683 tables.
pub fn enumerate_c2(carrier: FinSet) -> Result<Vec<BinOp>, OpError> {
    enumerate_c2_bounded(carrier, DEFAULT_ENUMERATION_BOUND)
}

/// As [`enumerate_c2`] with an explicit carrier-size bound.
pub fn enumerate_c2_bounded(carrier: FinSet, max_size: usize) -> Result<Vec<BinOp>, OpError> {
    let n = carrier.size();
    if n > max_size {
        let mut projected: u128 = 1;
        for _ in 0..n * n {
            projected = projected.saturating_mul(n as u128);
        }
        return Err(OpError::EnumerationBound {
            size: n,
            max: max_size,
            projected,
        });
    }
    let mut table = vec![0usize; n * n];
    let mut out = Vec::new();
    'emit: loop {
        out.push(BinOp {
            n,
            table: table.clone(),
        });
        let mut pos = n * n;
        while pos > 0 {
            pos -= 1;
            table[pos] += 1;
            if table[pos] < n {
                continue 'emit;
            }
            table[pos] = 0;
        }
        break;
    }
    Ok(out)
}

/// Position of an invertible operation in the [`enumerate_h2`] order,
/// computed from the Lehmer ranks of its rows without enumerating.
pub fn h2_index(op: &BinOp) -> Result<u128, OpError> {
    let n = op.size();
    let mut facts = vec![1u128; n.max(1)];
    for i in 1..n {
        facts[i] = facts[i - 1].saturating_mul(i as u128);
    }
    let row_count = facts[n - 1].saturating_mul(n as u128); // n!
    let mut index: u128 = 0;
    for x in 0..n {
        let row = op.section(x)?;
        let rank = perm_rank(row, &facts).ok_or(OpError::NotInvertible { x })?;
        index = index.saturating_mul(row_count).saturating_add(rank);
    }
    Ok(index)
}

/// Lehmer rank of a permutation's image list; `None` if not a permutation.
fn perm_rank(row: &[usize], facts: &[u128]) -> Option<u128> {
    let n = row.len();
    let mut seen = vec![false; n];
    for &v in row {
        if v >= n || seen[v] {
            return None;
        }
        seen[v] = true;
    }
    let mut rank: u128 = 0;
    for i in 0..n {
        let smaller = row[i + 1..].iter().filter(|&&v| v < row[i]).count();
        rank = rank.saturating_add((smaller as u128).saturating_mul(facts[n - 1 - i]));
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn op(rows: &[&[usize]]) -> BinOp {
        let rows: Vec<Vec<usize>> = rows.iter().map(|r| r.to_vec()).collect();
        BinOp::from_rows(&rows).unwrap()
    }

    #[test]
    fn identity_tables() {
        let e1 = BinOp::identity(FinSet::new(1).unwrap());
        assert_eq!(e1.entries(), &[0]);
        let e2 = BinOp::identity(FinSet::new(2).unwrap());
        assert_eq!(e2.entries(), &[0, 1, 0, 1]);
        let e3 = BinOp::identity(FinSet::new(3).unwrap());
        assert_eq!(e3.entries(), &[0, 1, 2, 0, 1, 2, 0, 1, 2]);
        assert!(e3.is_identity());
    }

    #[test]
    fn construction_rejects_bad_tables() {
        assert_eq!(BinOp::from_rows(&[]), Err(OpError::EmptyCarrier));
        assert_eq!(
            BinOp::from_rows(&[vec![0, 1], vec![0]]),
            Err(OpError::BadShape { expected: 2, got: 1 })
        );
        assert_eq!(
            BinOp::from_rows(&[vec![0, 2], vec![0, 1]]),
            Err(OpError::EntryOutOfRange { x: 0, y: 1, value: 2, size: 2 })
        );
    }

    #[test]
    fn compose_follows_the_section_rule() {
        // (f g)(x, y) = f(x, g(x, y)).
        let f = op(&[&[0, 1], &[1, 0]]);
        let s = op(&[&[1, 0], &[1, 0]]);
        let u = op(&[&[1, 0], &[0, 1]]);
        assert_eq!(f.compose(&s).unwrap(), u);
        assert!(f.compose(&f).unwrap().is_identity());
        assert!(s.compose(&s).unwrap().is_identity());
        assert!(u.compose(&u).unwrap().is_identity());

        let e = BinOp::identity(FinSet::new(2).unwrap());
        for g in [&f, &s, &u, &e] {
            assert_eq!(&e.compose(g).unwrap(), g);
            assert_eq!(&g.compose(&e).unwrap(), g);
        }
    }

    #[test]
    fn compose_rejects_mismatched_carriers() {
        let a = BinOp::identity(FinSet::new(2).unwrap());
        let b = BinOp::identity(FinSet::new(3).unwrap());
        assert_eq!(
            a.compose(&b),
            Err(OpError::CarrierMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn sections_are_rows() {
        let f = op(&[&[0, 1], &[1, 0]]);
        assert_eq!(f.section(0).unwrap(), &[0, 1]);
        assert_eq!(f.section(1).unwrap(), &[1, 0]);
        assert!(f.section_perm(0).unwrap().unwrap().is_identity());
        assert_eq!(
            f.section(2),
            Err(OpError::IndexOutOfRange { index: 2, size: 2 })
        );

        let constant = op(&[&[0, 0], &[0, 1]]);
        assert_eq!(constant.section_perm(0).unwrap(), None);
    }

    #[test]
    fn invertibility_is_row_bijectivity() {
        assert!(BinOp::identity(FinSet::new(3).unwrap()).is_invertible());
        let bad = op(&[&[0, 0], &[0, 1]]);
        assert!(!bad.is_invertible());
        assert_eq!(bad.invertibility_violation(), Some(0));
        assert_eq!(bad.inverse(), Err(OpError::NotInvertible { x: 0 }));
    }

    #[test]
    fn inverses_cancel_on_both_sides() {
        let f = op(&[&[0, 1], &[1, 0]]);
        let s = op(&[&[1, 0], &[1, 0]]);
        assert_eq!(f.inverse().unwrap(), f);
        assert_eq!(s.inverse().unwrap(), s);
        let mixed = op(&[&[1, 2, 0], &[0, 1, 2], &[2, 1, 0]]);
        let inv = mixed.inverse().unwrap();
        assert!(mixed.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&mixed).unwrap().is_identity());
    }

    #[test]
    fn enumeration_for_two_points_is_exact() {
        let ops = enumerate_h2(FinSet::new(2).unwrap()).unwrap();
        let tables: Vec<&[usize]> = ops.iter().map(|o| o.entries()).collect();
        assert_eq!(
            tables,
            vec![
                &[0, 1, 0, 1][..],
                &[0, 1, 1, 0][..],
                &[1, 0, 0, 1][..],
                &[1, 0, 1, 0][..],
            ]
        );
    }

    #[test]
    fn enumeration_counts_match_the_formula() {
        assert_eq!(enumerate_h2(FinSet::new(1).unwrap()).unwrap().len(), 1);
        assert_eq!(enumerate_h2(FinSet::new(3).unwrap()).unwrap().len(), 216);
        assert_eq!(h2_size(1), 1);
        assert_eq!(h2_size(2), 4);
        assert_eq!(h2_size(3), 216);
        assert_eq!(h2_size(4), 331_776);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        assert_eq!(
            enumerate_h2(FinSet::new(4).unwrap()),
            Err(OpError::EnumerationBound {
                size: 4,
                max: 3,
                projected: 331_776,
            })
        );
        // The explicit override works.
        let ops = enumerate_h2_bounded(FinSet::new(4).unwrap(), 4).unwrap();
        assert_eq!(ops.len(), 331_776);
    }

    #[test]
    fn full_monoid_enumeration() {
        let all = enumerate_c2(FinSet::new(2).unwrap()).unwrap();
        assert_eq!(all.len(), 16);
        assert_eq!(all.iter().filter(|o| o.is_invertible()).count(), 4);
        assert!(enumerate_c2(FinSet::new(4).unwrap()).is_err());
    }

    #[test]
    fn h2_index_matches_enumeration_position() {
        for n in 1..=3 {
            let ops = enumerate_h2(FinSet::new(n).unwrap()).unwrap();
            for (i, op) in ops.iter().enumerate() {
                assert_eq!(h2_index(op).unwrap(), i as u128);
            }
        }
        let constant = op(&[&[0, 0], &[0, 1]]);
        assert_eq!(h2_index(&constant), Err(OpError::NotInvertible { x: 0 }));
    }

    #[test]
    fn permutations_enumerate_in_lexicographic_order() {
        let all = Perm::all(3);
        assert_eq!(all.len(), 6);
        assert!(all[0].is_identity());
        let images: Vec<&[usize]> = all.iter().map(|p| p.images()).collect();
        let mut sorted = images.clone();
        sorted.sort();
        assert_eq!(images, sorted);
    }

    #[test]
    fn perm_compose_applies_right_factor_first() {
        let cycle = Perm::new(vec![1, 2, 0]).unwrap();
        let swap = Perm::new(vec![1, 0, 2]).unwrap();
        // (cycle ∘ swap)(0) = cycle(1) = 2.
        assert_eq!(cycle.compose(&swap).unwrap().apply(0), 2);
        assert!(cycle.compose(&cycle.inverse()).unwrap().is_identity());
        assert_eq!(
            Perm::new(vec![0, 0, 1]),
            Err(OpError::NotAPermutation { value: 0 })
        );
    }
}
