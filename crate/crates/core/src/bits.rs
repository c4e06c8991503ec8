//! Subsets of a ground set of at most 64 elements, stored as bit masks.
//!
//! Bit `i` stands for the element with canonical index `i`.

use std::cmp::Ordering;

pub type ElemSet = u64;

pub const MAX_GROUND: usize = 64;

#[inline]
pub fn full(n: usize) -> ElemSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn bit(i: usize) -> ElemSet {
    1u64 << i
}

#[inline]
pub fn contains(s: ElemSet, i: usize) -> bool {
    s >> i & 1 == 1
}

#[inline]
pub fn is_subset(a: ElemSet, b: ElemSet) -> bool {
    a & !b == 0
}

#[inline]
pub fn len(s: ElemSet) -> usize {
    s.count_ones() as usize
}

/// Iterates over the elements of `s` in increasing index order.
pub fn elems(s: ElemSet) -> Elems {
    Elems(s)
}

pub struct Elems(ElemSet);

impl Iterator for Elems {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elems {}

pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> ElemSet {
    it.into_iter().fold(0, |m, i| m | bit(i))
}

/// Lexicographic comparison of the sorted index lists of `a` and `b`.
pub fn lex_cmp(a: ElemSet, b: ElemSet) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let d = a ^ b;
    let i = d.trailing_zeros();
    // Below bit i the lists agree; whoever holds i either continues with it
    // or the other list has already run out.
    if a >> i & 1 == 1 {
        if b >> i == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if a >> i == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Canonical listing order: by size, then lexicographically.
pub fn canonical_cmp(a: ElemSet, b: ElemSet) -> Ordering {
    len(a).cmp(&len(b)).then_with(|| lex_cmp(a, b))
}

/// Packs the bits of `s` lying in `within` into the low positions, keeping order.
pub fn compress(s: ElemSet, within: ElemSet) -> ElemSet {
    let mut out = 0;
    for (k, i) in elems(within).enumerate() {
        if contains(s, i) {
            out |= bit(k);
        }
    }
    out
}

/// Inverse of [`compress`].
pub fn expand(s: ElemSet, within: ElemSet) -> ElemSet {
    let mut out = 0;
    for (k, i) in elems(within).enumerate() {
        if contains(s, k) {
            out |= bit(i);
        }
    }
    out
}

/// All subsets of `s`, in increasing numeric order.
pub fn subsets(s: ElemSet) -> impl Iterator<Item = ElemSet> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == s { None } else { Some((cur.wrapping_sub(s)) & s) };
        Some(cur)
    })
}


/// Fixed-capacity bit set over `0..len`, for relations on more than 64 points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet { words: vec![0; len.div_ceil(64)] }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words
            .iter()
            .enumerate()
            .flat_map(|(k, &w)| elems(w).map(move |i| k * 64 + i))
    }
}

#[cfg(test)]
mod bitset_tests {
    use super::BitSet;

    #[test]
    fn basic_ops() {
        let mut a = BitSet::new(130);
        a.insert(0);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        let mut b = BitSet::new(130);
        b.insert(64);
        assert!(b.is_subset(&a) && !a.is_subset(&b));
        a.intersect_with(&b);
        assert_eq!(a, b);
        a.remove(64);
        assert!(a.is_empty() && !a.contains(200));
    }
}
