//! Bitmask subsets of a ground set `{0, .., n-1}`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set a [`Subset`] can describe.
pub const MAX_GROUND: usize = 63;

/// Ceiling for every operation that enumerates all `2^n` subsets.
pub const MAX_ENUM: usize = 24;

/// A subset of the ground set; element `e` contributes bit `2^e`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The whole ground set of size `n`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_GROUND);
        Subset(if n == 0 { 0 } else { u64::MAX >> (64 - n) })
    }

    pub fn singleton(e: usize) -> Subset {
        Subset(1 << e)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        Subset(elements.into_iter().fold(0, |acc, e| acc | (1 << e)))
    }

    /// Checks that no bit at position `>= n` is set.
    pub fn within(bits: u64, n: usize) -> Result<Subset> {
        if bits & !Subset::full(n).0 != 0 {
            return Err(Error::SubsetOutOfRange { bits, n });
        }
        Ok(Subset(bits))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, e: usize) -> bool {
        self.0 >> e & 1 == 1
    }

    #[inline]
    pub fn with(self, e: usize) -> Subset {
        Subset(self.0 | 1 << e)
    }

    #[inline]
    pub fn without(self, e: usize) -> Subset {
        Subset(self.0 & !(1 << e))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement inside a ground set of size `n`.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).difference(self)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self`, starting from `self` and ending at the empty set.
    pub fn submasks(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// All `2^n` subsets of a ground set of size `n` in increasing bitmask order.
    pub fn all(n: usize) -> impl DoubleEndedIterator<Item = Subset> {
        debug_assert!(n <= MAX_GROUND);
        (0..1u64 << n).map(Subset)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, e) in self.elements().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Serialized as the sorted element list.
impl serde::Serialize for Subset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.elements())
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

pub struct Submasks {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = (cur != 0).then(|| (cur - 1) & self.mask);
        Some(Subset(cur))
    }
}

/// Refuses ground sets beyond `max` for an operation that enumerates subsets.
pub(crate) fn guard(op: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::SizeGuard { op, n, max });
    }
    Ok(())
}

/// Old-to-new element bookkeeping for a minor whose ground set was re-compacted.
///
/// `elements[k]` is the parent element that became element `k` of the minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementMap {
    pub elements: Vec<usize>,
}

impl ElementMap {
    pub fn new(kept: Subset) -> ElementMap {
        ElementMap {
            elements: kept.elements().collect(),
        }
    }

    pub fn identity(n: usize) -> ElementMap {
        ElementMap {
            elements: (0..n).collect(),
        }
    }

    /// Ground-set size of the minor.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Minor subset -> parent subset.
    pub fn lift(&self, s: Subset) -> Subset {
        Subset::from_elements(s.elements().map(|k| self.elements[k]))
    }

    /// Parent subset -> minor subset; parent elements outside the minor are dropped.
    pub fn lower(&self, s: Subset) -> Subset {
        Subset::from_elements(
            self.elements
                .iter()
                .enumerate()
                .filter(|&(_, &e)| s.contains(e))
                .map(|(k, _)| k),
        )
    }
}
