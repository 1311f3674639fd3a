use crate::error::Result;
use crate::oracle::{CountingOracle, ValueOracle};
use crate::subset::Subset;
use crate::value::Value;

use super::clique::extend;
use super::{Best, Preprocessed, SolveReport};

/// All inclusion-wise maximal cliques of a `k`-XOS oracle, in discovery
/// order, using `O(n^{k+1})` queries.
///
/// For `ℓ = 1, 2, ..` every kept `X` with `|X| = ℓ` and
/// `f(X) = Σ_{v∈X} f(v)` is grown into a clique; the loop stops once the
/// number of distinct cliques found equals `ℓ`.
pub fn enumerate_maximal_cliques<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
) -> Result<Vec<Subset>> {
    Ok(cliques_with_values(oracle, pre)?
        .into_iter()
        .map(|(c, _)| c)
        .collect())
}

fn cliques_with_values<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
) -> Result<Vec<(Subset, Value)>> {
    let universe = pre.retained;
    let mut family: Vec<(Subset, Value)> = Vec::new();
    if universe.is_empty() {
        return Ok(family);
    }
    // |family| never shrinks and level grows by one, so they meet.
    for level in 1.. {
        for x in universe.subsets_of_size(level) {
            let additive = pre.singleton_sum(x)?;
            let value = if level == 1 {
                additive
            } else {
                oracle.evaluate(x)?
            };
            if value != additive {
                continue;
            }
            let grown = extend(oracle, pre, x, value, universe)?;
            if !family.iter().any(|(c, _)| *c == grown.0) {
                family.push(grown);
            }
        }
        if family.len() == level {
            break;
        }
    }
    Ok(family)
}

/// Best maximal clique. Exact when every component weight either equals the
/// singleton value or is non-positive; otherwise still returns a clique.
pub fn solve_exact_star<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
) -> Result<SolveReport> {
    let family = cliques_with_values(oracle, pre)?;
    let best = match family.split_first() {
        None => Best::empty(),
        Some((&(c, v), rest)) => {
            let mut best = Best::of(c, v);
            for &(c, v) in rest {
                best.offer(c, v);
            }
            best
        }
    };
    Ok(SolveReport::new("star", best, oracle))
}
