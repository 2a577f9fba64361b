//! Dense bitsets over a ring's element indices.
//!
//! Ideals, multiplicative sets and scratch masks all live on the same
//! universe `0..order`, so a word-backed bitset keeps membership tests and
//! subset probes cheap in the pair scans.

use std::cmp::Ordering;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    len: usize,
    words: Vec<u64>,
}

impl ElemSet {
    pub fn new(universe: usize) -> Self {
        ElemSet { universe, len: 0, words: vec![0; universe.div_ceil(64)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s.len = universe;
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut s = Self::new(universe);
        for e in it {
            s.insert(e);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Inserts `e`, returning true if it was not already present.
    pub fn insert(&mut self, e: usize) -> bool {
        debug_assert!(e < self.universe);
        let (w, b) = (e / 64, 1u64 << (e % 64));
        if self.words[w] & b == 0 {
            self.words[w] |= b;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn contains(&self, e: usize) -> bool {
        let (w, b) = (e / 64, 1u64 << (e % 64));
        self.words[w] & b != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        SetIter { set: self, word: 0, bits: self.words.first().copied().unwrap_or(0) }
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        self.recount();
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.recount();
    }

    pub fn complement(&self) -> ElemSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out.len = self.universe - self.len;
        out
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElemSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Least element of `self \ other`, if any.
    pub fn first_not_in(&self, other: &ElemSet) -> Option<usize> {
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let d = a & !b;
            if d != 0 {
                return Some(i * 64 + d.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Canonical order: smaller sets first, ties broken by the ascending
    /// element sequence (lexicographically).
    pub fn cmp_canonical(&self, other: &ElemSet) -> Ordering {
        self.len.cmp(&other.len).then_with(|| {
            for (a, b) in self.words.iter().zip(&other.words) {
                if a != b {
                    let e = (a ^ b).trailing_zeros();
                    // The set holding the first differing element has the
                    // smaller element at that position of its sequence.
                    return if a >> e & 1 == 1 { Ordering::Less } else { Ordering::Greater };
                }
            }
            Ordering::Equal
        })
    }

    fn trim(&mut self) {
        let extra = self.words.len() * 64 - self.universe;
        if extra > 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= u64::MAX >> extra;
            }
        }
    }

    fn recount(&mut self) {
        self.len = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }
}

impl std::fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

struct SetIter<'a> {
    set: &'a ElemSet,
    word: usize,
    bits: u64,
}

impl Iterator for SetIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let e = self.word * 64 + self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(e);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_roundtrip() {
        let mut s = ElemSet::new(100);
        for e in [3, 97, 0, 64, 63] {
            assert!(s.insert(e));
        }
        assert!(!s.insert(3));
        assert_eq!(s.elements(), vec![0, 3, 63, 64, 97]);
        assert_eq!(s.len(), 5);
        assert!(s.contains(64));
        assert!(!s.contains(65));
    }

    #[test]
    fn complement_respects_universe() {
        let s = ElemSet::from_iter(70, [0, 69]);
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(0) && !c.contains(69) && c.contains(68));
    }

    #[test]
    fn canonical_order_is_size_then_sequence() {
        let a = ElemSet::from_iter(12, [0, 4, 8]);
        let b = ElemSet::from_iter(12, [0, 6]);
        let c = ElemSet::from_iter(12, [0, 2, 4]);
        assert_eq!(b.cmp_canonical(&a), Ordering::Less); // smaller set first
        assert_eq!(c.cmp_canonical(&a), Ordering::Less); // {0,2,4} before {0,4,8}
        assert_eq!(a.cmp_canonical(&a), Ordering::Equal);
    }

    #[test]
    fn subset_and_disjoint() {
        let a = ElemSet::from_iter(12, [0, 4, 8]);
        let b = ElemSet::from_iter(12, [0, 2, 4, 6, 8, 10]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(b.first_not_in(&a), Some(2));
        let u = ElemSet::from_iter(12, [1, 5, 7, 11]);
        assert!(a.is_disjoint(&u));
    }
}
