use crate::error::{Result, XosError};
use crate::oracle::{CountingOracle, ValueOracle};
use crate::subset::Subset;
use crate::value::Value;

use super::Preprocessed;

/// Grows a clique from `start`: scans `universe ∖ {start}` in ascending
/// order and adds `u` whenever `f(V + u) = f(V) + f(u)`.
///
/// On an XOS oracle the result is `V_i*` for every `i ∈ I(result)`. Uses at
/// most `|universe| - 1` oracle calls.
pub fn grow_clique<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
    start: usize,
    universe: Subset,
) -> Result<Subset> {
    if !universe.contains(start) {
        return Err(XosError::params(format!(
            "start element {start} is not in {universe}"
        )));
    }
    let seed = Subset::singleton(start);
    let (clique, _) = extend(oracle, pre, seed, pre.singleton(start), universe.difference(seed))?;
    Ok(clique)
}

/// Extends a set known to satisfy `f(seed) = Σ f(v)` over `candidates` in
/// ascending order. Returns the grown set and its (tracked) value.
pub(crate) fn extend<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
    seed: Subset,
    seed_value: Value,
    candidates: Subset,
) -> Result<(Subset, Value)> {
    let mut set = seed;
    let mut value = seed_value;
    for u in candidates.difference(seed) {
        let grown = set.with(u);
        let grown_value = oracle.evaluate(grown)?;
        if grown_value == value.checked_add(pre.singleton(u))? {
            set = grown;
            value = grown_value;
        }
    }
    Ok((set, value))
}

/// `Y = V ∪ {v ∈ universe ∖ V : f(V + v) > f(V)}`.
pub(crate) fn augment<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    base: Subset,
    base_value: Value,
    universe: Subset,
) -> Result<Subset> {
    let mut out = base;
    for v in universe.difference(base) {
        if oracle.evaluate(base.with(v))? > base_value {
            out = out.with(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::preprocess;
    use crate::xos::XosRepresentation;

    fn grown(rows: &[&[i64]], start: usize) -> Subset {
        let f = XosRepresentation::from_rows(rows).unwrap();
        let mut oracle = CountingOracle::new(&f);
        let pre = preprocess(&mut oracle).unwrap();
        let before = oracle.calls();
        let out = grow_clique(&mut oracle, &pre, start, pre.retained).unwrap();
        assert!(oracle.calls() - before < pre.retained.len() as u64);
        out
    }

    #[test]
    fn running_example() {
        let rows: &[&[i64]] = &[&[3, -1, 2], &[1, 2, -5]];
        assert_eq!(grown(rows, 0), Subset::from_elements([0, 2]));
        assert_eq!(grown(rows, 1), Subset::from_elements([1]));
    }

    #[test]
    fn additive_function_grows_to_everything() {
        assert_eq!(grown(&[&[4, 7, 1, 2]], 2), Subset(0b1111));
    }

    #[test]
    fn start_outside_universe_is_rejected() {
        let f = XosRepresentation::from_rows(&[[1, 1]]).unwrap();
        let mut oracle = CountingOracle::new(&f);
        let pre = preprocess(&mut oracle).unwrap();
        assert!(grow_clique(&mut oracle, &pre, 1, Subset(0b01)).is_err());
    }
}
