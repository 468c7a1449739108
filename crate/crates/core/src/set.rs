//! Fixed-width bit sets over the elements of one lattice.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::lattice::ElementId;

/// A subset of a lattice's elements.
///
/// Every set remembers the lattice it was made for (`universe`). Binary set
/// operators panic when the universes differ; the lattice-level operations
/// (`join_set`, `le1`, ...) check first and return
/// [`Error::UniverseMismatch`](crate::Error::UniverseMismatch).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: u64,
    len: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub(crate) fn empty_in(universe: u64, len: usize) -> Self {
        ElementSet {
            universe,
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub(crate) fn full_in(universe: u64, len: usize) -> Self {
        let mut s = Self::empty_in(universe, len);
        for i in 0..len {
            s.words[i / 64] |= 1 << (i % 64);
        }
        s
    }

    pub fn universe(&self) -> u64 {
        self.universe
    }

    /// Number of elements in the owning lattice.
    pub fn width(&self) -> usize {
        self.len
    }

    pub fn same_universe(&self, other: &ElementSet) -> bool {
        self.universe == other.universe && self.len == other.len
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        let i = x.index();
        i < self.len && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    #[inline]
    pub fn insert(&mut self, x: ElementId) -> bool {
        let i = x.index();
        assert!(
            i < self.len,
            "element {i} outside a set of width {}",
            self.len
        );
        let had = self.contains(x);
        self.words[i / 64] |= 1 << (i % 64);
        !had
    }

    pub fn remove(&mut self, x: ElementId) -> bool {
        let had = self.contains(x);
        if had {
            let i = x.index();
            self.words[i / 64] &= !(1 << (i % 64));
        }
        had
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending `ElementId` order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<ElementId> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.check(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn check(&self, other: &ElementSet) {
        assert!(
            self.same_universe(other),
            "set operation across different lattices"
        );
    }
}

/// Orders by cardinality first, then by the ascending member lists.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|x| x.index()))
            .finish()
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = ElementId;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl BitAnd for &ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.intersect_with(rhs);
        out
    }
}

impl BitOr for &ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.union_with(rhs);
        out
    }
}

impl Sub for &ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: &ElementSet) -> ElementSet {
        self.check(rhs);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&rhs.words) {
            *a &= !b;
        }
        out
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(ElementId::new(self.word * 64 + bit));
            }
            self.word += 1;
            self.current = *self.words.get(self.word)?;
        }
    }
}
