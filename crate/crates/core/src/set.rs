//! Dense bit-mask subsets of a carrier.

use std::fmt;

const WORD: usize = 64;

/// A subset of `{0, .., universe-1}` stored as a dense bit mask.
///
/// Equality is extensional: two sets over the same universe are equal iff
/// they have the same members.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    universe: usize,
    words: Vec<u64>,
}

impl IndexSet {
    pub fn empty(universe: usize) -> Self {
        IndexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn singleton(universe: usize, i: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(i);
        s
    }

    /// Panics if any index is `>= universe`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Self {
        let mut s = Self::empty(universe);
        for i in it {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low `universe` bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        let mut s = Self::empty(universe);
        if universe > 0 {
            let m = if universe >= WORD { mask } else { mask & ((1u64 << universe) - 1) };
            s.words[0] = m;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "index {i} out of range for universe {}", self.universe);
        let (w, b) = (i / WORD, i % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_singleton(&self) -> bool {
        self.len() == 1
    }

    /// The smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union_with(&mut self, other: &IndexSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn union(&self, other: &IndexSet) -> IndexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &IndexSet) -> IndexSet {
        debug_assert_eq!(self.universe, other.universe);
        IndexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &IndexSet) -> IndexSet {
        debug_assert_eq!(self.universe, other.universe);
        IndexSet {
            universe: self.universe,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn is_subset(&self, other: &IndexSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Low 64 bits of the mask; exact when `universe <= 64`.
    pub fn low_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }

    /// Every subset of `{0, .., universe-1}`, in mask order.
    ///
    /// Panics for universes wider than 20; callers apply their own guard.
    pub fn all_subsets(universe: usize) -> impl Iterator<Item = IndexSet> {
        assert!(universe <= 20, "refusing to enumerate 2^{universe} subsets");
        (0u64..(1u64 << universe)).map(move |m| IndexSet::from_mask(universe, m))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    set: &'a IndexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD + b);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a IndexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn wide_universe() {
        let mut s = IndexSet::empty(343);
        s.insert(0);
        s.insert(64);
        s.insert(342);
        assert_eq!(s.to_vec(), vec![0, 64, 342]);
        assert_eq!(s.len(), 3);
        assert!(!s.contains(343));
        let t = IndexSet::from_indices(343, [64, 100]);
        assert_eq!(s.intersection(&t).to_vec(), vec![64]);
        assert_eq!(s.difference(&t).to_vec(), vec![0, 342]);
    }

    #[test]
    #[should_panic]
    fn out_of_range_insert() {
        IndexSet::empty(3).insert(3);
    }

    #[test]
    fn from_mask_truncates_to_universe() {
        let s = IndexSet::from_mask(3, 0b101);
        assert_eq!(s.to_vec(), vec![0, 2]);
        assert_eq!(IndexSet::all_subsets(3).count(), 8);
    }

    proptest! {
        #[test]
        fn subset_and_union_agree(a in prop::collection::vec(0usize..150, 0..20),
                                  b in prop::collection::vec(0usize..150, 0..20)) {
            let sa = IndexSet::from_indices(150, a.iter().copied());
            let sb = IndexSet::from_indices(150, b.iter().copied());
            let u = sa.union(&sb);
            prop_assert!(sa.is_subset(&u) && sb.is_subset(&u));
            prop_assert_eq!(sa.is_subset(&sb), sa.union(&sb) == sb);
            let mut expect: Vec<usize> = a.iter().chain(&b).copied().collect();
            expect.sort_unstable();
            expect.dedup();
            prop_assert_eq!(u.to_vec(), expect);
        }
    }
}
