//! Finite labelled universes and their subsets.
//!
//! A subset is a bitmask over the universe's label order: bit `i` is the
//! `i`-th label given at construction. Masks compare as unsigned integers,
//! which is the canonical order used for every enumeration in the crate.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

/// Largest universe whose power set any operation will enumerate.
pub const MAX_ENUMERATION_WIDTH: usize = 20;

/// Subset bitmask, least-significant word first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub(crate) struct Bits(SmallVec<[u64; 1]>);

impl Bits {
    pub(crate) fn empty(n: usize) -> Bits {
        Bits(smallvec![0; n.div_ceil(64).max(1)])
    }

    pub(crate) fn full(n: usize) -> Bits {
        let mut b = Bits::empty(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    pub(crate) fn from_mask(n: usize, mask: u64) -> Bits {
        let mut b = Bits::empty(n);
        b.0[0] = mask;
        b
    }

    pub(crate) fn mask(&self) -> u64 {
        debug_assert!(self.0[1..].iter().all(|w| *w == 0));
        self.0[0]
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }

    pub(crate) fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.0.iter().all(|w| *w == 0)
    }

    fn zip(&self, other: &Bits, f: impl Fn(u64, u64) -> u64) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| f(*a, *b)).collect())
    }

    pub(crate) fn union(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a | b)
    }

    pub(crate) fn intersection(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a & b)
    }

    pub(crate) fn difference(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a & !b)
    }

    pub(crate) fn symmetric_difference(&self, other: &Bits) -> Bits {
        self.zip(other, |a, b| a ^ b)
    }

    pub(crate) fn complement(&self, n: usize) -> Bits {
        Bits::full(n).difference(self)
    }

    pub(crate) fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    pub(crate) fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

impl Ord for Bits {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}

struct UniverseInner {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

/// A finite, non-empty, ordered set of distinct labels.
///
/// Cloning is cheap. Two universes are equal when their label sequences are
/// equal, so a universe read twice from the same document compares equal.
#[derive(Clone)]
pub struct Universe(Arc<UniverseInner>);

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Universe(Arc::new(UniverseInner { labels, index })))
    }

    pub fn len(&self) -> usize {
        self.0.labels.len()
    }

    /// Always false; present for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.0.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.index.get(label).copied()
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::from_bits(self.clone(), Bits::empty(self.len()))
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::from_bits(self.clone(), Bits::full(self.len()))
    }

    pub fn singleton(&self, index: usize) -> ElementSet {
        assert!(index < self.len(), "index {index} out of range");
        let mut bits = Bits::empty(self.len());
        bits.insert(index);
        ElementSet::from_bits(self.clone(), bits)
    }

    pub fn set<I, S>(&self, labels: I) -> Result<ElementSet>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut bits = Bits::empty(self.len());
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::UnknownLabel(label.to_string()))?;
            bits.insert(i);
        }
        Ok(ElementSet::from_bits(self.clone(), bits))
    }

    pub fn set_from_indices<I: IntoIterator<Item = usize>>(&self, indices: I) -> ElementSet {
        let mut bits = Bits::empty(self.len());
        for i in indices {
            assert!(i < self.len(), "index {i} out of range");
            bits.insert(i);
        }
        ElementSet::from_bits(self.clone(), bits)
    }

    /// The subset whose bit `i` is bit `i` of `mask`.
    ///
    /// Panics if `mask` has bits beyond the universe.
    pub fn set_from_mask(&self, mask: u64) -> ElementSet {
        assert!(
            self.len() >= 64 || mask >> self.len() == 0,
            "mask {mask:#x} exceeds universe of size {}",
            self.len()
        );
        ElementSet::from_bits(self.clone(), Bits::from_mask(self.len(), mask))
    }

    /// Fails unless the power set may be enumerated.
    pub fn check_enumerable(&self) -> Result<()> {
        if self.len() > MAX_ENUMERATION_WIDTH {
            return Err(Error::SizeCap {
                size: self.len(),
                cap: MAX_ENUMERATION_WIDTH,
            });
        }
        Ok(())
    }

    /// Number of subsets, after checking the enumeration cap.
    pub fn powerset_len(&self) -> Result<usize> {
        self.check_enumerable()?;
        Ok(1 << self.len())
    }

    /// Every subset, in ascending mask order.
    pub fn powerset(&self) -> Result<impl Iterator<Item = ElementSet> + '_> {
        let count = self.powerset_len()? as u64;
        Ok((0..count).map(move |m| self.set_from_mask(m)))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Universe").field(&self.0.labels).finish()
    }
}

/// A subset of a [`Universe`].
///
/// Binary operations fail with [`Error::UniverseMismatch`] when the operands
/// belong to different universes. Complements are taken relative to the
/// set's own universe.
#[derive(Clone)]
pub struct ElementSet {
    universe: Universe,
    bits: Bits,
}

impl ElementSet {
    pub(crate) fn from_bits(universe: Universe, bits: Bits) -> ElementSet {
        ElementSet { universe, bits }
    }

    pub(crate) fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.universe.len() && self.bits.contains(index)
    }

    pub fn contains_label(&self, label: &str) -> bool {
        self.universe
            .index_of(label)
            .is_some_and(|i| self.bits.contains(i))
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    /// Member labels in universe order.
    pub fn labels(&self) -> Vec<&str> {
        self.indices().map(|i| self.universe.label(i)).collect()
    }

    /// The bitmask, if the universe fits in 64 bits.
    pub fn mask(&self) -> Option<u64> {
        (self.universe.len() <= 64).then(|| self.bits.mask())
    }

    pub fn same_universe(&self, other: &ElementSet) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn combine(&self, other: &ElementSet, f: impl Fn(&Bits, &Bits) -> Bits) -> Result<ElementSet> {
        self.same_universe(other)?;
        Ok(ElementSet::from_bits(
            self.universe.clone(),
            f(&self.bits, &other.bits),
        ))
    }

    pub fn union(&self, other: &ElementSet) -> Result<ElementSet> {
        self.combine(other, Bits::union)
    }

    pub fn intersection(&self, other: &ElementSet) -> Result<ElementSet> {
        self.combine(other, Bits::intersection)
    }

    pub fn difference(&self, other: &ElementSet) -> Result<ElementSet> {
        self.combine(other, Bits::difference)
    }

    pub fn symmetric_difference(&self, other: &ElementSet) -> Result<ElementSet> {
        self.combine(other, Bits::symmetric_difference)
    }

    pub fn complement(&self) -> ElementSet {
        ElementSet::from_bits(
            self.universe.clone(),
            self.bits.complement(self.universe.len()),
        )
    }

    pub fn is_subset(&self, other: &ElementSet) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    pub fn intersects(&self, other: &ElementSet) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self.bits.intersects(&other.bits))
    }
}

impl PartialEq for ElementSet {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.universe == other.universe
    }
}

impl Eq for ElementSet {}

impl Hash for ElementSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits
            .cmp(&other.bits)
            .then_with(|| self.universe.labels().cmp(other.universe.labels()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels().join(","))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
