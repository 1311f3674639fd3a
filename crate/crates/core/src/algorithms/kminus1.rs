use crate::error::Result;
use crate::oracle::{CountingOracle, ValueOracle};
use crate::subset::Subset;
use crate::value::Value;

use super::clique::{augment, extend};
use super::{Best, Preprocessed, SolveReport};

/// `(k-1)`-approximate maximizer of a `k`-XOS oracle (`k >= 2`, not needed
/// as input) with `O(k²n)` queries. Exact when `k = 2`.
///
/// Cliques `V_1..V_ℓ` are grown from the smallest uncovered element until
/// they cover the kept set. Candidates are then scanned in order: the
/// cliques, their positive-marginal extensions `Y_i`, and for each pair
/// `i < j` the sets `V_i ∪ V_j ∪ {v}` by ascending `v`. The union
/// `V_i ∪ V_j` is queried once per pair and reused for every `v` inside it.
pub fn solve_k_minus_1<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
) -> Result<SolveReport> {
    let universe = pre.retained;
    if universe.is_empty() {
        return Ok(SolveReport::new("kminus1", Best::empty(), oracle));
    }

    let mut cliques: Vec<(Subset, Value)> = Vec::new();
    let mut covered = Subset::EMPTY;
    while let Some(v) = universe.difference(covered).first() {
        let seed = Subset::singleton(v);
        let (clique, value) = extend(oracle, pre, seed, pre.singleton(v), universe)?;
        covered = covered.union(clique);
        cliques.push((clique, value));
    }

    let (first, first_value) = cliques[0];
    let mut best = Best::of(first, first_value);
    for &(clique, value) in &cliques[1..] {
        best.offer(clique, value);
    }

    for &(clique, value) in &cliques {
        let y = augment(oracle, clique, value, universe)?;
        let y_value = if y == clique { value } else { oracle.evaluate(y)? };
        best.offer(y, y_value);
    }

    for (i, &(vi, _)) in cliques.iter().enumerate() {
        for &(vj, _) in &cliques[i + 1..] {
            let pair = vi.union(vj);
            let pair_value = oracle.evaluate(pair)?;
            for v in universe {
                if pair.contains(v) {
                    best.offer(pair, pair_value);
                } else {
                    let z = pair.with(v);
                    let z_value = oracle.evaluate(z)?;
                    best.offer(z, z_value);
                }
            }
        }
    }

    Ok(SolveReport::new("kminus1", best, oracle))
}
