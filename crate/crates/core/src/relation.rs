//! Relations as dense bit-vectors over the base relations of a calculus.
//!
//! A [`Relation`] is a subset of the base relations `{0, …, n-1}` of one
//! calculus. The arity `n` travels with the value so that mixing relations
//! from calculi of different size is caught instead of silently truncated.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use smallvec::SmallVec;

use crate::error::RelationError;

/// Largest supported number of base relations.
pub const MAX_BASE_RELATIONS: usize = 1024;

const WORD_BITS: usize = 64;

fn words_for(arity: usize) -> usize {
    arity.div_ceil(WORD_BITS)
}

/// Symbolic name and ordinal of one base relation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseRelation {
    pub index: usize,
    pub name: String,
}

/// A set of base relations of a calculus with `arity` base relations.
///
/// Bits above `arity` in the last word are always zero, so derived equality,
/// hashing and ordering agree with set semantics.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    arity: u32,
    words: SmallVec<[u64; 2]>,
}

impl Relation {
    /// The empty relation `∅`.
    pub fn empty(arity: usize) -> Self {
        assert!(
            arity <= MAX_BASE_RELATIONS,
            "at most {MAX_BASE_RELATIONS} base relations are supported"
        );
        Relation {
            arity: arity as u32,
            words: SmallVec::from_elem(0, words_for(arity)),
        }
    }

    /// The universal relation `1`, containing every base relation.
    pub fn universal(arity: usize) -> Self {
        let mut r = Relation::empty(arity);
        for w in r.words.iter_mut() {
            *w = u64::MAX;
        }
        r.clear_tail();
        r
    }

    /// `{index}`. Panics when `index >= arity`.
    pub fn singleton(arity: usize, index: usize) -> Self {
        let mut r = Relation::empty(arity);
        r.insert(index);
        r
    }

    pub fn from_indices<I>(arity: usize, indices: I) -> Result<Self, RelationError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut r = Relation::empty(arity);
        for i in indices {
            if i >= arity {
                return Err(RelationError::IndexOutOfRange { index: i, arity });
            }
            r.insert(i);
        }
        Ok(r)
    }

    /// Builds a relation from the low `arity` bits of `bits` (`arity <= 64`).
    pub fn from_bits(arity: usize, bits: u64) -> Self {
        assert!(arity <= WORD_BITS);
        let mut r = Relation::empty(arity);
        if arity > 0 {
            r.words[0] = bits;
            r.clear_tail();
        }
        r
    }

    /// Uniformly random relation: each base relation is a member with probability 1/2.
    pub fn random<R: rand::Rng + ?Sized>(arity: usize, rng: &mut R) -> Self {
        let mut r = Relation::empty(arity);
        for w in r.words.iter_mut() {
            *w = rng.gen();
        }
        r.clear_tail();
        r
    }

    /// All `2^arity` relations in bit order (`arity <= 24`).
    pub fn all(arity: usize) -> impl Iterator<Item = Relation> {
        assert!(arity <= 24, "enumerating 2^{arity} relations is not supported");
        (0u64..1 << arity).map(move |bits| Relation::from_bits(arity, bits))
    }

    fn clear_tail(&mut self) {
        let rem = self.arity as usize % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Number of base relations of the owning calculus.
    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.arity() && self.words[index / WORD_BITS] >> (index % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(
            index < self.arity(),
            "base relation {index} out of range for arity {}",
            self.arity
        );
        self.words[index / WORD_BITS] |= 1 << (index % WORD_BITS);
    }

    pub fn remove(&mut self, index: usize) {
        if index < self.arity() {
            self.words[index / WORD_BITS] &= !(1 << (index % WORD_BITS));
        }
    }

    /// Cardinality `|R|`.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_universal(&self) -> bool {
        self.len() == self.arity()
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// The only member, if `|R| = 1`.
    pub fn as_singleton(&self) -> Option<usize> {
        if self.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }

    fn check(&self, other: &Relation) -> Result<(), RelationError> {
        if self.arity == other.arity {
            Ok(())
        } else {
            Err(RelationError::ArityMismatch {
                left: self.arity(),
                right: other.arity(),
            })
        }
    }

    fn expect_same(&self, other: &Relation) {
        if let Err(e) = self.check(other) {
            panic!("{e}");
        }
    }

    pub fn try_union(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.check(other)?;
        let mut r = self.clone();
        r.union_with(other);
        Ok(r)
    }

    pub fn try_intersection(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.check(other)?;
        let mut r = self.clone();
        r.intersect_with(other);
        Ok(r)
    }

    pub fn try_difference(&self, other: &Relation) -> Result<Relation, RelationError> {
        self.check(other)?;
        Ok(self.difference(other))
    }

    pub fn try_is_subset(&self, other: &Relation) -> Result<bool, RelationError> {
        self.check(other)?;
        Ok(self.is_subset(other))
    }

    /// In-place `self ∪= other`. Panics on arity mismatch.
    pub fn union_with(&mut self, other: &Relation) {
        self.expect_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    /// In-place `self ∩= other`. Panics on arity mismatch.
    pub fn intersect_with(&mut self, other: &Relation) {
        self.expect_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &Relation) -> Relation {
        let mut r = self.clone();
        r.union_with(other);
        r
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        let mut r = self.clone();
        r.intersect_with(other);
        r
    }

    pub fn difference(&self, other: &Relation) -> Relation {
        self.expect_same(other);
        let mut r = self.clone();
        for (a, b) in r.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        r
    }

    /// Complement relative to the universal relation.
    pub fn complement(&self) -> Relation {
        let mut r = self.clone();
        for w in r.words.iter_mut() {
            *w = !*w;
        }
        r.clear_tail();
        r
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.expect_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Relation) -> bool {
        other.is_subset(self)
    }

    pub fn intersects(&self, other: &Relation) -> bool {
        self.expect_same(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_len(&self, other: &Relation) -> usize {
        self.expect_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * WORD_BITS + bit);
            }
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a Relation {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl BitOr for &Relation {
    type Output = Relation;

    fn bitor(self, rhs: &Relation) -> Relation {
        self.union(rhs)
    }
}

impl BitAnd for &Relation {
    type Output = Relation;

    fn bitand(self, rhs: &Relation) -> Relation {
        self.intersection(rhs)
    }
}

impl Sub for &Relation {
    type Output = Relation;

    fn sub(self, rhs: &Relation) -> Relation {
        self.difference(rhs)
    }
}

impl Not for &Relation {
    type Output = Relation;

    fn not(self) -> Relation {
        self.complement()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn union_intersection_complement() {
        // indices: < = 0, = = 1, > = 2
        let lt = Relation::singleton(3, 0);
        let eq = Relation::singleton(3, 1);
        let gt = Relation::singleton(3, 2);
        assert_eq!(&lt | &eq, Relation::from_indices(3, [0, 1]).unwrap());
        assert!(Relation::universal(3).complement().is_empty());
        let le = &lt | &eq;
        let ge = &eq | &gt;
        assert_eq!(&le & &ge, eq);
    }

    #[test]
    fn empty_and_universal_are_values() {
        let e = Relation::empty(5);
        let u = Relation::universal(5);
        assert!(e.is_empty());
        assert_eq!(u.len(), 5);
        assert!(u.is_universal());
        assert_eq!(e.complement(), u);
        assert!(e.is_subset(&u));
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let a = Relation::universal(3);
        let b = Relation::universal(4);
        assert_eq!(
            a.try_union(&b),
            Err(RelationError::ArityMismatch { left: 3, right: 4 })
        );
        assert!(a.try_intersection(&b).is_err());
        assert!(a.try_is_subset(&b).is_err());
    }

    #[test]
    fn index_out_of_range() {
        assert!(matches!(
            Relation::from_indices(3, [0, 3]),
            Err(RelationError::IndexOutOfRange { index: 3, arity: 3 })
        ));
    }

    #[test]
    fn wide_relations_cross_word_boundaries() {
        let n = 305;
        let r = Relation::from_indices(n, [0, 63, 64, 127, 128, 304]).unwrap();
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![0, 63, 64, 127, 128, 304]);
        let c = r.complement();
        assert_eq!(c.len(), n - 6);
        assert!(!c.contains(304));
        assert_eq!(Relation::universal(n).len(), n);
        assert_eq!(Relation::universal(MAX_BASE_RELATIONS).len(), 1024);
    }

    fn arb_pair() -> impl Strategy<Value = (Relation, Relation)> {
        (1usize..140).prop_flat_map(|n| {
            (
                proptest::collection::btree_set(0..n, 0..n),
                proptest::collection::btree_set(0..n, 0..n),
            )
                .prop_map(move |(a, b)| {
                    (
                        Relation::from_indices(n, a).unwrap(),
                        Relation::from_indices(n, b).unwrap(),
                    )
                })
        })
    }

    proptest! {
        #[test]
        fn de_morgan((a, b) in arb_pair()) {
            prop_assert_eq!((&a | &b).complement(), &a.complement() & &b.complement());
            prop_assert_eq!(a.complement().complement(), a.clone());
            prop_assert_eq!(a.len() + a.complement().len(), a.arity());
            prop_assert_eq!(a.intersection_len(&b), (&a & &b).len());
            prop_assert_eq!(a.is_subset(&b), (&a - &b).is_empty());
        }
    }
}
