//! Seeded random explicit instances for test corpora and benchmarks.

use crate::error::{Result, XosError};
use crate::rng::SeededRng;
use crate::xos::XosRepresentation;

/// Width-`k` representation with i.i.d. uniform integer weights in `lo..=hi`.
pub fn random_xos(n: usize, k: usize, lo: i64, hi: i64, seed: u64) -> Result<XosRepresentation> {
    check(k, lo, hi)?;
    let mut rng = SeededRng::new(seed);
    let rows: Vec<Vec<i64>> = (0..k)
        .map(|_| (0..n).map(|_| rng.range_inclusive(lo, hi)).collect())
        .collect();
    XosRepresentation::from_rows(&rows)
}

/// Width-`k` representation where every weight is either the element's
/// singleton value (drawn from `1..=hi`) or a draw from `lo..=0`.
///
/// Each element gets its singleton value on one uniformly chosen component
/// and on each other component with probability 1/2.
pub fn random_star_xos(
    n: usize,
    k: usize,
    lo: i64,
    hi: i64,
    seed: u64,
) -> Result<XosRepresentation> {
    check(k, lo, hi)?;
    if hi < 1 || lo > 0 {
        return Err(XosError::params("star instances need lo <= 0 < hi"));
    }
    let mut rng = SeededRng::new(seed);
    let mut rows = vec![vec![0i64; n]; k];
    for v in 0..n {
        let top = rng.range_inclusive(1, hi);
        let owner = rng.below(k as u64) as usize;
        for (i, row) in rows.iter_mut().enumerate() {
            row[v] = if i == owner || rng.chance(1, 2) {
                top
            } else {
                rng.range_inclusive(lo, 0)
            };
        }
    }
    XosRepresentation::from_rows(&rows)
}

fn check(k: usize, lo: i64, hi: i64) -> Result<()> {
    if k == 0 {
        return Err(XosError::EmptyRepresentation);
    }
    if lo > hi {
        return Err(XosError::params(format!("empty weight range {lo}..={hi}")));
    }
    Ok(())
}
