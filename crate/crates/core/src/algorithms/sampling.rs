use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracle::{CountingOracle, ValueOracle};
use crate::rng::SeededRng;

use super::{Best, Epsilon, Preprocessed, SolveReport};

/// Below this ratio the sampling analysis does not apply and the solver
/// enumerates all kept subsets instead: `2e / (e - 2)`.
pub const FALLBACK_RHO: f64 = 2.0 * std::f64::consts::E / (std::f64::consts::E - 2.0);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplingParams {
    pub epsilon: Epsilon,
    #[serde(default)]
    pub seed: u64,
    /// Replaces the default `⌈n^{1/ε+1}⌉` samples per size.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample_budget_override: Option<u64>,
    /// When false, always sample even where the ratio is below
    /// [`FALLBACK_RHO`] (or `n = 1`).
    #[serde(default = "yes")]
    pub allow_fallback: bool,
}

fn yes() -> bool {
    true
}

impl SamplingParams {
    pub fn new(epsilon: Epsilon, seed: u64) -> Self {
        Self {
            epsilon,
            seed,
            sample_budget_override: None,
            allow_fallback: true,
        }
    }

    /// `ρ = εn / ln n`, infinite for `n <= 1`.
    pub fn rho(&self, n: usize) -> f64 {
        self.epsilon.as_f64() * n as f64 / (n as f64).ln()
    }

    /// Largest sampled size, `⌈2 ln n / ε⌉`, at least 1.
    pub fn max_size(&self, n: usize) -> usize {
        ((2.0 * (n as f64).ln() / self.epsilon.as_f64()).ceil() as usize).max(1)
    }

    /// `⌈n^{1/ε+1}⌉`, saturating.
    pub fn default_budget(&self, n: usize) -> u64 {
        let b = (n as f64).powf(1.0 / self.epsilon.as_f64() + 1.0).ceil();
        if b >= u64::MAX as f64 {
            u64::MAX
        } else {
            b as u64
        }
    }

    /// Per-size budget for the high-probability variant: the default times
    /// `⌈2ρ ln n⌉ = ⌈2εn⌉`.
    pub fn high_probability_budget(&self, n: usize) -> u64 {
        let factor = (2 * self.epsilon.num() * n as u64).div_ceil(self.epsilon.den());
        self.default_budget(n).saturating_mul(factor)
    }

    fn falls_back(&self, n: usize) -> bool {
        self.allow_fallback && (n <= 1 || self.rho(n) < FALLBACK_RHO)
    }
}

/// Randomized `(εn / ln n)`-maximizer in expectation.
///
/// For each size `m = 1..=⌈2 ln n / ε⌉` (capped at `n`) draws the per-size
/// budget of uniform `m`-subsets of the kept set and returns the best draw.
/// Where the ratio `ρ = εn / ln n` is below `2e/(e-2)` (bounded `n`), or
/// `n = 1`, all kept subsets are enumerated instead.
pub fn solve_random_sampling<O: ValueOracle>(
    oracle: &mut CountingOracle<O>,
    pre: &Preprocessed,
    params: &SamplingParams,
) -> Result<SolveReport> {
    let universe = pre.retained;
    let n = universe.len();
    let finish = |best: Best, oracle: &CountingOracle<O>, samples: Option<u64>| {
        let mut report = SolveReport::new("sample", best, oracle);
        report.seed = Some(params.seed);
        report.samples_per_size = samples;
        report.budget_override = params.sample_budget_override;
        report
    };
    if n == 0 {
        return Ok(finish(Best::empty(), oracle, None));
    }

    if params.falls_back(n) {
        let mut best = Best::empty();
        for x in universe.all_subsets().skip(1) {
            let value = oracle.evaluate(x)?;
            best.offer(x, value);
        }
        return Ok(finish(best, oracle, None));
    }

    let budget = params
        .sample_budget_override
        .unwrap_or_else(|| params.default_budget(n));
    let mut rng = SeededRng::new(params.seed);
    let mut best: Option<Best> = None;
    for m in 1..=params.max_size(n).min(n) {
        for _ in 0..budget {
            let x = rng.subset_of_size(universe, m);
            let value = oracle.evaluate(x)?;
            match best.as_mut() {
                Some(b) => b.offer(x, value),
                None => best = Some(Best::of(x, value)),
            }
        }
    }
    let best = best.unwrap_or_else(Best::empty);
    Ok(finish(best, oracle, Some(budget)))
}
