//! Sets of vectors of V3 as 64-bit membership masks.
//!
//! Bit `k` is set when the vector with packed value `k` is a member, so set
//! algebra is word-wise logic and iteration yields vectors in packed order.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::pauli::Pauli;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);
    /// The 63 points of PG(5,2).
    pub const ALL_POINTS: PointSet = PointSet(!1u64);

    pub const fn from_mask(mask: u64) -> PointSet {
        PointSet(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub fn singleton(x: Pauli) -> PointSet {
        PointSet(1u64 << x.bits())
    }

    pub fn contains(self, x: Pauli) -> bool {
        (self.0 >> x.bits()) & 1 == 1
    }

    pub fn insert(&mut self, x: Pauli) {
        self.0 |= 1u64 << x.bits();
    }

    pub fn remove(&mut self, x: Pauli) {
        self.0 &= !(1u64 << x.bits());
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub const fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    pub const fn symmetric_difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 ^ other.0)
    }

    /// Complement within the 63 points.
    pub const fn complement(self) -> PointSet {
        PointSet(!self.0 & PointSet::ALL_POINTS.0)
    }

    pub const fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> PointIter {
        PointIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Pauli> {
        self.iter().collect()
    }

    /// XOR of all members.
    pub fn sum(self) -> Pauli {
        self.iter().sum()
    }

    pub fn map(self, f: impl Fn(Pauli) -> Pauli) -> PointSet {
        self.iter().map(f).collect()
    }

    pub fn filter(self, f: impl Fn(Pauli) -> bool) -> PointSet {
        self.iter().filter(|&x| f(x)).collect()
    }

    pub fn first(self) -> Option<Pauli> {
        self.iter().next()
    }
}

pub struct PointIter(u64);

impl Iterator for PointIter {
    type Item = Pauli;

    fn next(&mut self) -> Option<Pauli> {
        if self.0 == 0 {
            return None;
        }
        let k = self.0.trailing_zeros() as u8;
        self.0 &= self.0 - 1;
        Pauli::from_bits(k)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for PointIter {}

impl IntoIterator for PointSet {
    type Item = Pauli;
    type IntoIter = PointIter;
    fn into_iter(self) -> PointIter {
        self.iter()
    }
}

impl FromIterator<Pauli> for PointSet {
    fn from_iter<I: IntoIterator<Item = Pauli>>(iter: I) -> PointSet {
        let mut s = PointSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
