//! Subsets of a finite carrier.
//!
//! An [`ElementSet`] is a fixed-width bitset tagged with the order of the
//! carrier it lives over. Carriers are capped at [`MAX_ORDER`] elements, which
//! keeps every set `Copy` and every membership test O(1).

use std::fmt;

use crate::error::{Error, Result};

/// Largest carrier any semigroup, filter or set may live over.
pub const MAX_ORDER: usize = 256;

const WORDS: usize = MAX_ORDER / 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ElementSet {
    order: u16,
    words: [u64; WORDS],
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "carrier order {order} exceeds {MAX_ORDER}");
        Self {
            order: order as u16,
            words: [0; WORDS],
        }
    }

    pub fn full(order: usize) -> Self {
        let mut set = Self::empty(order);
        for i in 0..order {
            set.words[i / 64] |= 1 << (i % 64);
        }
        set
    }

    pub fn singleton(order: usize, x: usize) -> Self {
        let mut set = Self::empty(order);
        set.insert(x);
        set
    }

    /// Builds a set from indices, rejecting any index outside the carrier.
    pub fn from_indices(order: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::SizeLimitExceeded {
                what: "carrier order",
                requested: order,
                limit: MAX_ORDER,
            });
        }
        let mut set = Self::empty(order);
        for i in indices {
            if i >= order {
                return Err(Error::IndexOutOfRange { index: i, order });
            }
            set.insert(i);
        }
        Ok(set)
    }

    /// The set whose members are the set bits of `mask` (carriers up to 64).
    pub fn from_mask(order: usize, mask: u64) -> Self {
        assert!(order <= 64);
        let mut set = Self::empty(order);
        set.words[0] = if order == 64 { mask } else { mask & ((1u64 << order) - 1) };
        set
    }

    /// Low 64 bits of the membership mask.
    pub fn mask(&self) -> u64 {
        self.words[0]
    }

    pub fn carrier_order(&self) -> usize {
        self.order as usize
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order as usize && self.words[x / 64] & (1 << (x % 64)) != 0
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.order as usize, "index {x} outside carrier of order {}", self.order);
        self.words[x / 64] |= 1 << (x % 64);
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.order as usize {
            self.words[x / 64] &= !(1 << (x % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.order as usize
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::CarrierMismatch {
                expected: self.order as usize,
                found: other.order as usize,
            });
        }
        Ok(())
    }

    /// Fails with `CarrierMismatch` unless this set lives over a carrier of `order`.
    pub fn require_order(&self, order: usize) -> Result<()> {
        if self.order as usize != order {
            return Err(Error::CarrierMismatch {
                expected: order,
                found: self.order as usize,
            });
        }
        Ok(())
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.order, other.order);
        let mut words = [0; WORDS];
        for (i, w) in words.iter_mut().enumerate() {
            *w = f(self.words[i], other.words[i]);
        }
        Self {
            order: self.order,
            words,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        Self::full(self.order as usize).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.order == other.order && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn meets(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Checked variants for public entry points that accept caller-provided sets.
    pub fn try_union(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.union(other))
    }

    pub fn try_intersection(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.intersection(other))
    }

    /// Parses a set literal such as `0,2,4`. The empty string and `{}` denote ∅.
    pub fn parse_literal(order: usize, text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let body = trimmed
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .unwrap_or(trimmed);
        if body.is_empty() {
            return Ok(Self::empty(order));
        }
        let mut indices = Vec::new();
        for part in body.split(',') {
            let idx: usize = part.trim().parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad set element {part:?} in {text:?}"),
            })?;
            indices.push(idx);
        }
        Self::from_indices(order, indices)
    }

    /// Comma-separated literal form, inverse of [`ElementSet::parse_literal`].
    pub fn to_literal(&self) -> String {
        self.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }

    /// All subsets of a carrier of order ≤ 20, in mask order.
    pub fn all_subsets(order: usize) -> impl Iterator<Item = ElementSet> {
        assert!(order <= 20, "refusing to enumerate 2^{order} subsets");
        (0u64..(1 << order)).map(move |m| ElementSet::from_mask(order, m))
    }

    /// All subsets of `self` (at most 2^20 of them), including ∅ and `self`.
    pub fn subsets(&self) -> impl Iterator<Item = ElementSet> {
        let members: Vec<usize> = self.iter().collect();
        assert!(members.len() <= 20, "refusing to enumerate 2^{} subsets", members.len());
        let order = self.carrier_order();
        (0u64..(1 << members.len())).map(move |m| {
            let mut s = ElementSet::empty(order);
            for (bit, &x) in members.iter().enumerate() {
                if m >> bit & 1 == 1 {
                    s.insert(x);
                }
            }
            s
        })
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.word] &= w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for &ElementSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by least element first, then lexicographically by member list.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.to_literal())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}/{}", self.to_literal(), self.order)
    }
}
