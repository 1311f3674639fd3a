//! Seeded randomness with a pinned algorithm.
//!
//! The generator is PCG-XSH-RR 64/32 (`rand_pcg::Pcg32`, 64-bit state)
//! started from `Pcg32::new(seed, STREAM)`. A 64-bit draw concatenates two
//! 32-bit outputs, low word first. Bounded integers use Lemire's
//! multiply-and-reject method and fixed-size subsets use a partial
//! Fisher-Yates shuffle of the universe's members in ascending order. These
//! choices are part of the reproducibility contract: the same seed gives the
//! same stream of subsets in every release.

use rand_core::Rng;
use rand_pcg::Pcg32;

use crate::subset::Subset;

/// PCG stream selector (the reference default increment).
pub const STREAM: u64 = 0x0a02_bdbf_7bb3_c0a7;

#[derive(Clone, Debug)]
pub struct SeededRng {
    inner: Pcg32,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self {
            inner: Pcg32::new(seed, STREAM),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let lo = self.inner.next_u32() as u64;
        let hi = self.inner.next_u32() as u64;
        hi << 32 | lo
    }

    /// Uniform integer in `0..bound`. Panics if `bound == 0`.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let wide = (self.next_u64() as u128) * (bound as u128);
            if wide as u64 >= threshold {
                return (wide >> 64) as u64;
            }
        }
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi, "empty range");
        let span = (hi as i128 - lo as i128 + 1) as u128;
        if span > u64::MAX as u128 {
            return self.next_u64() as i64;
        }
        (lo as i128 + self.below(span as u64) as i128) as i64
    }

    /// `true` with probability `num / den`.
    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    /// A uniformly random `size`-element subset of `universe`.
    /// `size` is clamped to `universe.len()`.
    pub fn subset_of_size(&mut self, universe: Subset, size: usize) -> Subset {
        let mut members: Vec<usize> = universe.iter().collect();
        let size = size.min(members.len());
        for i in 0..size {
            let j = i + self.below((members.len() - i) as u64) as usize;
            members.swap(i, j);
        }
        members[..size].iter().copied().collect()
    }
}
