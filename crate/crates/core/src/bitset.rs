//! Fixed-universe bit sets used for adjacency rows and candidate pools.

use smallvec::SmallVec;

const WORD_BITS: usize = 64;

/// A set of vertex ids drawn from `0..universe`, stored as packed words.
///
/// Graphs up to 256 vertices keep their rows inline; larger ones spill to the heap.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    words: SmallVec<[u64; 4]>,
    universe: usize,
}

impl BitSet {
    pub fn new(universe: usize) -> Self {
        let len = universe.div_ceil(WORD_BITS);
        BitSet {
            words: SmallVec::from_elem(0, len),
            universe,
        }
    }

    /// Every id in `0..universe`.
    pub fn full(universe: usize) -> Self {
        let mut s = BitSet::new(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::new(universe);
        for id in ids {
            s.insert(id);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, id: usize) {
        debug_assert!(id < self.universe);
        self.words[id / WORD_BITS] |= 1 << (id % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, id: usize) {
        debug_assert!(id < self.universe);
        self.words[id / WORD_BITS] &= !(1 << (id % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, id: usize) -> bool {
        id < self.universe && self.words[id / WORD_BITS] & (1 << (id % WORD_BITS)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    #[inline]
    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    /// `|self ∩ other|` without materializing the intersection.
    #[inline]
    pub fn intersection_len(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_disjoint(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}
