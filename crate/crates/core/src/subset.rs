//! Ground sets and subsets as single-word bitmasks.
//!
//! Every enumeration in this crate visits subsets by ascending cardinality,
//! then by ascending mask value. Solvers break ties by keeping the first
//! maximizer in that order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, XosError};

/// Largest supported ground-set size.
pub const MAX_ELEMENTS: usize = 63;

/// The ground set `{0, .., n-1}` with `1 <= n <= 63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

// never empty, so no `is_empty`
#[allow(clippy::len_without_is_empty)]
impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ELEMENTS {
            return Err(XosError::GroundSize(n));
        }
        Ok(Self { n })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Subset {
        Subset((1u64 << self.n) - 1)
    }

    pub fn contains(&self, x: Subset) -> bool {
        x.0 & !self.full().0 == 0
    }

    /// Checks that `x` has no bit at position `>= n`.
    pub fn check(&self, x: Subset) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(XosError::SubsetOutOfRange { bits: x.0, n: self.n })
        }
    }
}

/// A subset of a ground set, bit `v` set iff element `v` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_ELEMENTS);
        Subset(1 << v)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(Subset::EMPTY, |acc, v| acc.with(v))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        Subset(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        Subset(self.0 & !(1 << v))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// Scatters the low bits of `compact` onto the members of `self`, lowest
    /// bit to smallest member. Monotone in `compact`.
    pub fn deposit(self, compact: u64) -> Subset {
        let mut out = 0u64;
        let mut src = compact;
        for v in self.iter() {
            if src == 0 {
                break;
            }
            if src & 1 == 1 {
                out |= 1 << v;
            }
            src >>= 1;
        }
        Subset(out)
    }

    /// All subsets of `self` with exactly `size` members, in ascending mask order.
    pub fn subsets_of_size(self, size: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(self, size)
    }

    /// All subsets of `self` with at most `max_size` members, by ascending
    /// cardinality and then ascending mask.
    pub fn subsets_up_to(self, max_size: usize) -> impl Iterator<Item = Subset> {
        let top = max_size.min(self.len());
        (0..=top).flat_map(move |size| self.subsets_of_size(size))
    }

    /// Every subset of `self` in canonical order.
    pub fn all_subsets(self) -> impl Iterator<Item = Subset> {
        self.subsets_up_to(self.len())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Elements;

    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Iterator over the members of a [`Subset`].
#[derive(Clone, Debug)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Fixed-cardinality subsets of a universe. Walks compact patterns with
/// Gosper's hack and deposits them onto the universe.
#[derive(Clone, Debug)]
pub struct SubsetsOfSize {
    universe: Subset,
    width: u32,
    next: Option<u64>,
}

impl SubsetsOfSize {
    fn new(universe: Subset, size: usize) -> Self {
        let width = universe.len() as u32;
        let next = if size as u32 > width {
            None
        } else if size == 0 {
            Some(0)
        } else {
            Some(u64::MAX >> (64 - size))
        };
        Self {
            universe,
            width,
            next,
        }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let pattern = self.next?;
        self.next = if pattern == 0 {
            None
        } else {
            let low = pattern & pattern.wrapping_neg();
            let (ripple, carried) = pattern.overflowing_add(low);
            let succ = (((ripple ^ pattern) >> 2) / low) | ripple;
            if carried || (self.width < 64 && succ >> self.width != 0) {
                None
            } else {
                Some(succ)
            }
        };
        Some(self.universe.deposit(pattern))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_set_bounds() {
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::new(64).is_err());
        let g = GroundSet::new(63).unwrap();
        assert_eq!(g.full().len(), 63);
        assert!(g.check(Subset(1 << 63)).is_err());
    }

    #[test]
    fn enumeration_order_is_cardinality_then_mask() {
        let all: Vec<u64> = Subset(0b111).all_subsets().map(Subset::bits).collect();
        assert_eq!(all, vec![0, 1, 2, 4, 3, 5, 6, 7]);
    }

    #[test]
    fn sparse_universe_enumeration() {
        let u = Subset::from_elements([1, 4, 6]);
        let pairs: Vec<Subset> = u.subsets_of_size(2).collect();
        assert_eq!(
            pairs,
            vec![
                Subset::from_elements([1, 4]),
                Subset::from_elements([1, 6]),
                Subset::from_elements([4, 6])
            ]
        );
        assert_eq!(u.subsets_of_size(4).count(), 0);
        assert_eq!(Subset::EMPTY.all_subsets().collect::<Vec<_>>(), vec![Subset::EMPTY]);
    }

    #[test]
    fn full_word_universe() {
        let g = GroundSet::new(63).unwrap();
        assert_eq!(g.full().subsets_of_size(62).count(), 63);
        assert_eq!(g.full().subsets_of_size(63).count(), 1);
    }

    #[test]
    fn display_lists_members() {
        assert_eq!(Subset::from_elements([0, 2]).to_string(), "{0,2}");
        assert_eq!(Subset::EMPTY.to_string(), "{}");
    }

    proptest::proptest! {
        #[test]
        fn subsets_of_size_counts_and_orders(universe in 0u64..(1 << 12), size in 0usize..13) {
            let u = Subset(universe);
            let got: Vec<Subset> = u.subsets_of_size(size).collect();
            let mut expected: Vec<Subset> = (0..=universe)
                .map(Subset)
                .filter(|s| s.is_subset_of(u) && s.len() == size)
                .collect();
            expected.sort();
            proptest::prop_assert_eq!(got, expected);
        }
    }
}
