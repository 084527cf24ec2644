//! Dynamic-width vertex sets backed by `u64` words.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;

const WORD_BITS: usize = 64;

/// A subset of `{0, .., universe-1}` as a packed bitset.
///
/// All set algebra is exact; operations on sets with mismatched universes
/// panic (callers are expected to keep sets over a single graph's vertices).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for v in indices {
            s.insert(v);
        }
        s
    }

    /// Interpret the low `universe` bits of `mask` as a set. Requires `universe <= 64`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64);
        assert_eq!(mask & !crate::bitset::low_mask(universe), 0, "mask exceeds universe");
        let mut s = Self::empty(universe);
        if universe > 0 {
            s.words[0] = mask;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.universe);
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_universe(other);
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_universe(other);
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        self.zip_with(other, |a, b| a ^ b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        VertexSet {
            universe: self.universe,
            words,
        }
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|&w| !w).collect();
        let tail = self.universe % WORD_BITS;
        if tail != 0 {
            if let Some(last) = words.last_mut() {
                *last &= low_mask(tail);
            }
        }
        VertexSet {
            universe: self.universe,
            words,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & b == 0)
    }

    /// Parity of `|self ∩ other|`: true when odd.
    pub fn intersection_parity(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (&a, &b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&v| self.contains(v))
    }

    pub fn min_element(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Lexicographic order on the sorted element sequences, so `{0,2} < {1}`
    /// and `{} < {0}`. Used for deterministic tie-breaking among witnesses.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub(crate) fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

#[derive(Serialize, Deserialize)]
struct VertexSetRepr {
    universe: usize,
    members: Vec<usize>,
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        VertexSetRepr {
            universe: self.universe,
            members: self.iter().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = VertexSetRepr::deserialize(deserializer)?;
        if let Some(&v) = repr.members.iter().find(|&&v| v >= repr.universe) {
            return Err(D::Error::custom(format!(
                "member {v} outside universe {}",
                repr.universe
            )));
        }
        Ok(VertexSet::from_indices(repr.universe, repr.members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a = VertexSet::from_indices(70, [0, 3, 65]);
        let b = VertexSet::from_indices(70, [3, 64, 65]);
        assert_eq!(a.union(&b), VertexSet::from_indices(70, [0, 3, 64, 65]));
        assert_eq!(a.intersection(&b), VertexSet::from_indices(70, [3, 65]));
        assert_eq!(a.difference(&b), VertexSet::from_indices(70, [0]));
        assert_eq!(a.symmetric_difference(&b), VertexSet::from_indices(70, [0, 64]));
        assert_eq!(a.len(), 3);
        assert!(!a.intersection_parity(&b)); // |{3,65}| even
    }

    #[test]
    fn parity_counts_intersection() {
        let a = VertexSet::from_indices(10, [0, 1, 2]);
        let b = VertexSet::from_indices(10, [1, 2, 3]);
        assert!(!a.intersection_parity(&b)); // |{1,2}| even
        let c = VertexSet::from_indices(10, [2]);
        assert!(a.intersection_parity(&c));
    }

    #[test]
    fn complement_is_involution() {
        let a = VertexSet::from_indices(67, [0, 12, 66]);
        assert_eq!(a.complement().complement(), a);
        assert_eq!(a.complement().len(), 64);
        assert!(a.is_disjoint_from(&a.complement()));
    }

    #[test]
    fn lex_order() {
        let a = VertexSet::from_indices(5, [0, 2]);
        let b = VertexSet::from_indices(5, [1]);
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(VertexSet::empty(5).lex_cmp(&b), Ordering::Less);
    }
}
