use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::{CountingOracle, ValueOracle};
use crate::rng::SeededRng;

use super::{Best, SolveReport};

/// Non-adaptive random querying: `queries` uniform subsets of fixed `size`
/// drawn from the whole ground set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeParams {
    pub queries: u64,
    pub size: usize,
    #[serde(default)]
    pub seed: u64,
}

/// Best of `queries` random `size`-subsets. No preprocessing; used to
/// measure how often blind querying hits a planted set.
pub fn solve_random_probe<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    params: &ProbeParams,
) -> Result<SolveReport> {
    let ground = oracle.ground().full();
    let mut rng = SeededRng::new(params.seed);
    let mut best: Option<Best> = None;
    for _ in 0..params.queries {
        let x = rng.subset_of_size(ground, params.size);
        let value = oracle.evaluate(x)?;
        match best.as_mut() {
            Some(b) => b.offer(x, value),
            None => best = Some(Best::of(x, value)),
        }
    }
    let mut report = SolveReport::new("probe", best.unwrap_or_else(Best::empty), oracle);
    report.seed = Some(params.seed);
    Ok(report)
}
