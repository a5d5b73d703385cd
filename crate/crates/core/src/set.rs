//! Fixed-width bitsets over the elements of a finite group.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::ElementId;

const WORD: usize = 64;

/// A subset of `0..universe`, stored as a bit vector.
///
/// Bits at positions `>= universe` are always zero and `len()` is cached.
/// The total order compares the bit vectors as unsigned integers (bit `i`
/// has weight `2^i`), which is the order used for canonical forms and for
/// sorting subgroups.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    universe: usize,
    words: Vec<u64>,
    size: usize,
}

impl ElemSet {
    pub fn new(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
            size: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::new(universe);
        for (i, w) in set.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let bits = (universe - lo).min(WORD);
            *w = if bits == WORD { u64::MAX } else { (1u64 << bits) - 1 };
        }
        set.size = universe;
        set
    }

    pub fn singleton(universe: usize, id: ElementId) -> Self {
        let mut set = Self::new(universe);
        set.insert(id);
        set
    }

    /// Builds a set from raw element indices, rejecting out-of-range ids.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Result<Self> {
        let mut set = Self::new(universe);
        for id in ids {
            if id >= universe {
                return Err(Error::ElementOutOfRange {
                    id,
                    order: universe,
                });
            }
            set.insert_index(id);
        }
        Ok(set)
    }

    /// Builds a set from a 64-bit mask. Panics if the mask has bits beyond `universe`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD, "from_mask needs universe <= 64");
        assert!(
            universe == WORD || mask >> universe == 0,
            "mask has bits beyond the universe"
        );
        let mut set = Self::new(universe);
        if let Some(w) = set.words.first_mut() {
            *w = mask;
        }
        set.size = mask.count_ones() as usize;
        set
    }

    /// The set as a 64-bit mask, when the universe fits in one word.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.contains_index(id.index())
    }

    pub(crate) fn contains_index(&self, i: usize) -> bool {
        i < self.universe && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// Inserts `id`; returns `true` if it was not already present.
    pub fn insert(&mut self, id: ElementId) -> bool {
        self.insert_index(id.index())
    }

    pub(crate) fn insert_index(&mut self, i: usize) -> bool {
        assert!(i < self.universe, "element {i} outside universe {}", self.universe);
        let w = &mut self.words[i / WORD];
        let bit = 1u64 << (i % WORD);
        if *w & bit == 0 {
            *w |= bit;
            self.size += 1;
            true
        } else {
            false
        }
    }

    pub fn remove(&mut self, id: ElementId) -> bool {
        let i = id.index();
        if !self.contains_index(i) {
            return false;
        }
        self.words[i / WORD] &= !(1u64 << (i % WORD));
        self.size -= 1;
        true
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.indices().map(ElementId::new)
    }

    pub(crate) fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    /// Smallest element id in the set.
    pub fn first(&self) -> Option<ElementId> {
        self.indices().next().map(ElementId::new)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| op(a, b))
            .collect();
        let size = words.iter().map(|w| w.count_ones() as usize).sum();
        Self {
            universe: self.universe,
            words,
            size,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection_len(other) == 0
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.indices().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ElemSet{self}/{}", self.universe)
    }
}

/// Serialized as its set literal, e.g. `"{0, 4, 8}"`.
impl Serialize for ElemSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_masks_tail_bits() {
        let s = ElemSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.contains_index(69));
        assert!(!s.contains_index(70));
        assert_eq!(s.words[1], (1 << 6) - 1);
    }

    #[test]
    fn order_is_integer_order() {
        let a = ElemSet::from_indices(8, [0, 1]).unwrap(); // 3
        let b = ElemSet::from_indices(8, [2]).unwrap(); // 4
        let c = ElemSet::from_indices(100, [70]).unwrap();
        let d = ElemSet::from_indices(100, [0, 1, 2, 3]).unwrap();
        assert!(a < b);
        assert!(d < c);
    }

    #[test]
    fn display_literal() {
        let s = ElemSet::from_indices(12, [8, 0, 4, 4]).unwrap();
        assert_eq!(s.to_string(), "{0, 4, 8}");
        assert_eq!(s.len(), 3);
        assert_eq!(ElemSet::new(3).to_string(), "{}");
    }

    #[test]
    fn out_of_range_rejected() {
        assert_eq!(
            ElemSet::from_indices(12, [99]),
            Err(Error::ElementOutOfRange { id: 99, order: 12 })
        );
    }

    #[test]
    fn mask_round_trip() {
        let s = ElemSet::from_mask(10, 0b10_0110_0001);
        assert_eq!(s.to_mask(), Some(0b10_0110_0001));
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(ElementId::new(0)));
    }

    #[test]
    fn remove_updates_size() {
        let mut s = ElemSet::from_indices(5, [1, 3]).unwrap();
        assert!(s.remove(ElementId::new(1)));
        assert!(!s.remove(ElementId::new(1)));
        assert_eq!(s.len(), 1);
    }
}
