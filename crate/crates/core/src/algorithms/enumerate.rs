use crate::error::Result;
use crate::oracle::{CountingOracle, ValueOracle};

use super::{Best, EnumParams, Preprocessed, SolveReport};

/// Best set among all kept subsets of size at most `⌈1/ε⌉`, the empty set
/// included. Queries `Σ_{i ≤ min(⌈1/ε⌉, n)} C(n, i)` sets for `n` kept
/// elements, giving an `(εn)`-maximizer on XOS oracles.
pub fn solve_enum_small_sets<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
    params: &EnumParams,
) -> Result<SolveReport> {
    if pre.retained.is_empty() {
        return Ok(SolveReport::new("enum", Best::empty(), oracle));
    }
    let cap = usize::try_from(params.epsilon.ceil_inverse()).unwrap_or(usize::MAX);
    let mut best: Option<Best> = None;
    for x in pre.retained.subsets_up_to(cap) {
        let value = oracle.evaluate(x)?;
        match best.as_mut() {
            Some(b) => b.offer(x, value),
            None => best = Some(Best::of(x, value)),
        }
    }
    Ok(SolveReport::new("enum", best.expect("empty set is always a candidate"), oracle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{preprocess, Epsilon};
    use crate::subset::Subset;
    use crate::value::Value;
    use crate::xos::XosRepresentation;

    fn run(rows: &[&[i64]], eps: &str) -> SolveReport {
        let f = XosRepresentation::from_rows(rows).unwrap();
        let mut oracle = CountingOracle::new(&f);
        let pre = preprocess(&mut oracle).unwrap();
        let params = EnumParams {
            epsilon: eps.parse::<Epsilon>().unwrap(),
        };
        solve_enum_small_sets(&mut oracle, &pre, &params).unwrap()
    }

    #[test]
    fn running_example_covers_all_subsets() {
        let r = run(&[&[3, -1, 2], &[1, 2, -5]], "1/3");
        assert_eq!(r.value, Value(5));
        assert_eq!(r.output, Subset::from_elements([0, 2]));
        assert_eq!(r.oracle_calls, 3 + 8);
    }

    #[test]
    fn large_epsilon_picks_best_singleton() {
        let r = run(&[&[3, -1, 2, 4], &[1, 2, -5, 0]], "3/2");
        assert_eq!(r.output, Subset::singleton(3));
        assert_eq!(r.value, Value(4));
        assert_eq!(r.oracle_calls, 4 + 1 + 4);
    }
}
