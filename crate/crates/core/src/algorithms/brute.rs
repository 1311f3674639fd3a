use crate::error::{Result, XosError};
use crate::oracle::{CountingOracle, ValueOracle};

use super::{Best, SolveReport};

pub const DEFAULT_BRUTE_CAP: usize = 20;

/// Exact maximizer by querying all `2^n` subsets of the ground set in
/// canonical order. Does not preprocess.
pub fn solve_brute_force<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    cap: usize,
) -> Result<SolveReport> {
    let n = oracle.n();
    if n > cap {
        return Err(XosError::CapExceeded { n, cap });
    }
    let mut best = Best::empty();
    for x in oracle.ground().full().all_subsets() {
        let value = oracle.evaluate(x)?;
        if x.is_empty() {
            best = Best::of(x, value);
        } else {
            best.offer(x, value);
        }
    }
    Ok(SolveReport::new("brute", best, oracle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Subset;
    use crate::value::Value;
    use crate::xos::XosRepresentation;

    #[test]
    fn running_example() {
        let f = XosRepresentation::from_rows(&[[3, -1, 2], [1, 2, -5]]).unwrap();
        let mut oracle = CountingOracle::new(&f);
        let r = solve_brute_force(&mut oracle, DEFAULT_BRUTE_CAP).unwrap();
        assert_eq!(r.value, Value(5));
        assert_eq!(r.output, Subset::from_elements([0, 2]));
        assert_eq!(r.oracle_calls, 8);
    }

    #[test]
    fn all_negative_gives_empty_set() {
        let f = XosRepresentation::from_rows(&[[-3, -1], [-2, -2]]).unwrap();
        let mut oracle = CountingOracle::new(&f);
        let r = solve_brute_force(&mut oracle, DEFAULT_BRUTE_CAP).unwrap();
        assert_eq!((r.output, r.value), (Subset::EMPTY, Value(0)));
    }

    #[test]
    fn refuses_above_cap() {
        let f = XosRepresentation::from_rows(&[vec![1i64; 21]]).unwrap();
        let mut oracle = CountingOracle::new(&f);
        assert!(matches!(
            solve_brute_force(&mut oracle, DEFAULT_BRUTE_CAP),
            Err(XosError::CapExceeded { n: 21, cap: 20 })
        ));
        assert_eq!(oracle.calls(), 0);
    }
}
