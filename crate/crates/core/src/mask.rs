//! Fixed-width bitsets over the elements of a group.

use std::fmt;

use crate::group::ElementId;

const WORD: usize = 64;

/// A subset of `0..width`, stored as packed 64-bit words.
///
/// Bit `i` set means element `i` is in the set. Bits at or above `width`
/// are always clear, so derived equality and hashing are exact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    width: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    pub fn empty(width: usize) -> Self {
        SubsetMask {
            width,
            words: vec![0; width.div_ceil(WORD)],
        }
    }

    pub fn full(width: usize) -> Self {
        let mut m = Self::empty(width);
        for (i, w) in m.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = (width - lo).min(WORD);
            *w = if bits == WORD { !0 } else { (1u64 << bits) - 1 };
        }
        m
    }

    pub fn from_elements<I: IntoIterator<Item = ElementId>>(width: usize, elems: I) -> Self {
        let mut m = Self::empty(width);
        for e in elems {
            m.insert(e);
        }
        m
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    /// Inserts `e`, returning true if it was absent.
    #[inline]
    pub fn insert(&mut self, e: ElementId) -> bool {
        assert!(e < self.width, "element {e} out of range {}", self.width);
        let (w, b) = (e / WORD, e % WORD);
        let had = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !had
    }

    #[inline]
    pub fn remove(&mut self, e: ElementId) {
        if e < self.width {
            self.words[e / WORD] &= !(1 << (e % WORD));
        }
    }

    #[inline]
    pub fn contains(&self, e: ElementId) -> bool {
        e < self.width && self.words[e / WORD] >> (e % WORD) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<ElementId> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &SubsetMask) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &SubsetMask) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &SubsetMask) {
        debug_assert_eq!(self.width, other.width);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        let mut m = self.clone();
        m.intersect_with(other);
        m
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        let mut m = self.clone();
        m.union_with(other);
        m
    }

    pub fn difference(&self, other: &SubsetMask) -> SubsetMask {
        let mut m = self.clone();
        for (a, b) in m.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        m
    }

    /// Big-endian hex, one digit per four elements, element 0 in the
    /// least significant bit.
    pub fn to_hex(&self) -> String {
        let digits = self.width.div_ceil(4).max(1);
        let mut s = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let bit = d * 4;
            let nib = (self.words.get(bit / WORD).copied().unwrap_or(0) >> (bit % WORD)) & 0xf;
            s.push(char::from_digit(nib as u32, 16).unwrap());
        }
        s
    }

    pub fn from_hex(width: usize, hex: &str) -> Option<SubsetMask> {
        let hex = hex.trim_start_matches("0x");
        let mut m = Self::empty(width);
        for (d, c) in hex.chars().rev().enumerate() {
            let nib = c.to_digit(16)? as usize;
            for b in 0..4 {
                if nib >> b & 1 == 1 {
                    let e = d * 4 + b;
                    if e >= width {
                        return None;
                    }
                    m.insert(e);
                }
            }
        }
        Some(m)
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

/// Serialized as its hex string; the width is not recorded.
impl serde::Serialize for SubsetMask {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_hex())
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = ElementId;

    #[inline]
    fn next(&mut self) -> Option<ElementId> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + b);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

impl<'a> IntoIterator for &'a SubsetMask {
    type Item = ElementId;
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
    fn full_and_empty() {
        for w in [0, 1, 63, 64, 65, 128, 130] {
            assert_eq!(SubsetMask::full(w).len(), w);
            assert!(SubsetMask::empty(w).is_empty());
        }
    }

    #[test]
    fn hex_layout() {
        let m = SubsetMask::from_elements(8, [0, 2, 7]);
        assert_eq!(m.to_hex(), "85");
        assert_eq!(SubsetMask::from_hex(8, "85"), Some(m));
        assert_eq!(SubsetMask::from_hex(4, "10"), None);
    }

    proptest! {
        #[test]
        fn hex_round_trip(width in 1usize..200, seed in proptest::collection::vec(any::<usize>(), 0..40)) {
            let m = SubsetMask::from_elements(width, seed.iter().map(|s| s % width));
            prop_assert_eq!(SubsetMask::from_hex(width, &m.to_hex()), Some(m.clone()));
            let v = m.to_vec();
            prop_assert_eq!(v.len(), m.len());
            prop_assert!(v.windows(2).all(|p| p[0] < p[1]));
        }
    }
}
