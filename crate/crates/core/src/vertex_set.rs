//! Fixed-width vertex sets backed by a `u32` bitmask.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Largest number of vertex labels a [`VertexSet`] can hold.
pub const MAX_VERTICES: usize = 32;

/// A set of vertex labels drawn from `0..MAX_VERTICES`.
///
/// The derived ordering compares the raw bitmask; it is total and stable,
/// which is all facet storage needs. Use [`VertexSet::lex_cmp`] when the
/// lexicographic order of the sorted label lists matters.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn first(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex set limited to {MAX_VERTICES} labels");
        if n == MAX_VERTICES {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex label {v} out of range");
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    pub fn with(self, v: usize) -> Self {
        self | Self::singleton(v)
    }

    pub fn without(self, v: usize) -> Self {
        if v < MAX_VERTICES {
            VertexSet(self.0 & !(1 << v))
        } else {
            self
        }
    }

    pub fn insert(&mut self, v: usize) {
        *self = self.with(v);
    }

    pub fn remove(&mut self, v: usize) {
        *self = self.without(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 31 - self.0.leading_zeros() as usize)
    }

    /// Labels in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Every subset of `self`, starting from the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            full: self.0,
            next: Some(0),
        }
    }

    /// Compares the sorted label lists of two sets lexicographically.
    pub fn lex_cmp(self, other: VertexSet) -> std::cmp::Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }

    /// Maps the members of `self` (all of which must lie in `support`) onto
    /// the dense positions `0..support.len()`, preserving order.
    pub fn compress(self, support: VertexSet) -> VertexSet {
        debug_assert!(self.is_subset(support));
        let mut out = 0u32;
        for (pos, v) in support.iter().enumerate() {
            if self.contains(v) {
                out |= 1 << pos;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`VertexSet::compress`].
    pub fn expand(self, support: VertexSet) -> VertexSet {
        let mut out = 0u32;
        for (pos, v) in support.iter().enumerate() {
            if self.0 & (1 << pos) != 0 {
                out |= 1 << v;
            }
        }
        VertexSet(out)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter(u32);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    full: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.full {
            None
        } else {
            Some((cur.wrapping_sub(self.full)) & self.full)
        };
        Some(VertexSet(cur))
    }
}
