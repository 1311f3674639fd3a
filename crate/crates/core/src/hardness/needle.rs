use crate::error::{Result, XosError};
use crate::oracle::ValueOracle;
use crate::rng::SeededRng;
use crate::subset::{GroundSet, Subset};
use crate::value::Value;

use super::PlantedOptimum;

/// `f(X) = 1` iff `X ⊆ S` and `|X| >= t`, else 0, for a hidden uniformly
/// random `S` with `|S| = s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeedleInstance {
    ground: GroundSet,
    s: usize,
    t: usize,
    planted: Subset,
    seed: u64,
}

pub fn gen_needle(n_hat: usize, s: usize, t: usize, seed: u64) -> Result<NeedleInstance> {
    if !(1 <= t && t <= s && s <= n_hat) {
        return Err(XosError::params(format!(
            "needle needs 1 <= t <= s <= n_hat, got t={t}, s={s}, n_hat={n_hat}"
        )));
    }
    let ground = GroundSet::new(n_hat)?;
    let planted = SeededRng::new(seed).subset_of_size(ground.full(), s);
    Ok(NeedleInstance {
        ground,
        s,
        t,
        planted,
        seed,
    })
}

impl NeedleInstance {
    pub fn n_hat(&self) -> usize {
        self.ground.len()
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn planted(&self) -> Subset {
        self.planted
    }
}

impl ValueOracle for NeedleInstance {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn value(&self, x: Subset) -> Result<Value> {
        self.ground.check(x)?;
        let hit = x.is_subset_of(self.planted) && x.len() >= self.t;
        Ok(Value(hit as i64))
    }
}

impl PlantedOptimum for NeedleInstance {
    fn planted_optimum(&self) -> (Subset, Value) {
        (self.planted, Value(1))
    }
}

/// Upper bound `P · (s/n̂)^t` on the chance that `queries` oracle calls
/// find a 1-valued set.
pub fn probe_hit_bound(queries: u64, n_hat: usize, s: usize, t: usize) -> f64 {
    queries as f64 * (s as f64 / n_hat as f64).powi(t as i32)
}
