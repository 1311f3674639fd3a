use crate::error::Result;
use crate::oracle::{CountingOracle, ValueOracle};
use crate::subset::Subset;

use super::clique::{augment, extend};
use super::{Best, Preprocessed, SolveReport};

/// Exact maximizer of a 2-XOS oracle with `O(n)` queries.
///
/// Grows `V_1` from the smallest kept element; if it covers everything it
/// is returned. Otherwise grows `V_2` from the smallest element outside
/// `V_1`, extends each `V_i` by the elements with positive marginal value
/// and returns the better extension. On oracles of larger width the result
/// is some subset with its true value, nothing more.
pub fn solve_exact_2xos<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
) -> Result<SolveReport> {
    let universe = pre.retained;
    let Some(v1) = universe.first() else {
        return Ok(SolveReport::new("exact2", Best::empty(), oracle));
    };
    let (c1, f1) = grow_from(oracle, pre, v1, universe)?;
    if c1 == universe {
        return Ok(SolveReport::new("exact2", Best::of(c1, f1), oracle));
    }
    let v2 = universe.difference(c1).first().expect("c1 is a proper subset");
    let (c2, f2) = grow_from(oracle, pre, v2, universe)?;

    let mut best: Option<Best> = None;
    for (clique, value) in [(c1, f1), (c2, f2)] {
        let y = augment(oracle, clique, value, universe)?;
        let y_value = if y == clique { value } else { oracle.evaluate(y)? };
        match best.as_mut() {
            Some(b) => b.offer(y, y_value),
            None => best = Some(Best::of(y, y_value)),
        }
    }
    Ok(SolveReport::new("exact2", best.expect("two candidates"), oracle))
}

fn grow_from<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
    start: usize,
    universe: Subset,
) -> Result<(Subset, crate::value::Value)> {
    let seed = Subset::singleton(start);
    extend(oracle, pre, seed, pre.singleton(start), universe)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::preprocess;
    use crate::value::Value;
    use crate::xos::XosRepresentation;

    fn run(rows: &[&[i64]]) -> SolveReport {
        let f = XosRepresentation::from_rows(rows).unwrap();
        let mut oracle = CountingOracle::new(&f);
        let pre = preprocess(&mut oracle).unwrap();
        let r = solve_exact_2xos(&mut oracle, &pre).unwrap();
        assert!(r.verify(&oracle).unwrap());
        r
    }

    #[test]
    fn running_example() {
        let r = run(&[&[3, -1, 2], &[1, 2, -5]]);
        assert_eq!(r.value, Value(5));
        assert_eq!(r.output, Subset::from_elements([0, 2]));
        assert!(r.oracle_calls <= 6 * 3 + 10);
    }

    #[test]
    fn equal_components_return_everything() {
        let r = run(&[&[1, 1, 1], &[1, 1, 1]]);
        assert_eq!((r.output, r.value), (Subset(0b111), Value(3)));
    }

    #[test]
    fn nothing_kept() {
        let r = run(&[&[-1, 0], &[-3, -2]]);
        assert_eq!((r.output, r.value, r.oracle_calls), (Subset::EMPTY, Value(0), 2));
    }

    #[test]
    fn wider_oracle_still_terminates() {
        let r = run(&[&[5, 1, 1], &[1, 5, 1], &[1, 1, 5]]);
        assert!(r.value.get() >= 5);
    }
}
