use crate::error::{Result, XosError};
use crate::oracle::ValueOracle;
use crate::rng::SeededRng;
use crate::subset::{GroundSet, Subset};
use crate::value::Value;
use crate::xos::XosRepresentation;

use super::PlantedOptimum;

/// Hidden half-size set `S` with an integer threshold `τ`.
///
/// Standard form: `f(∅) = 0`, otherwise `f(X) = max(τ, |X∩S| − n|X∖S|)`,
/// the closed form of `n` singleton components worth `τ` plus one additive
/// component (`+1` on `S`, `−n` off it).
/// Remark form: `f(X) = max(g(X), τ)` with that same additive `g`; here
/// `f(∅) = τ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HardGeneralInstance {
    ground: GroundSet,
    tau: i64,
    planted: Subset,
    seed: u64,
    remark: bool,
}

pub fn gen_hard_general(
    n: usize,
    tau: i64,
    seed: u64,
    remark_variant: bool,
) -> Result<HardGeneralInstance> {
    if !n.is_multiple_of(2) {
        return Err(XosError::params(format!("n must be even, got {n}")));
    }
    if tau < 1 || 2 * tau >= n as i64 {
        return Err(XosError::params(format!(
            "tau must satisfy 1 <= tau and 2*tau < n, got tau={tau}, n={n}"
        )));
    }
    let ground = GroundSet::new(n)?;
    let planted = SeededRng::new(seed).subset_of_size(ground.full(), n / 2);
    Ok(HardGeneralInstance {
        ground,
        tau,
        planted,
        seed,
        remark: remark_variant,
    })
}

impl HardGeneralInstance {
    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn tau(&self) -> i64 {
        self.tau
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn is_remark_variant(&self) -> bool {
        self.remark
    }

    pub fn planted(&self) -> Subset {
        self.planted
    }

    fn additive(&self, x: Subset) -> Result<Value> {
        let inside = x.intersection(self.planted).len() as i64;
        let outside = x.difference(self.planted).len() as i64;
        Value(inside).checked_sub(Value(outside).checked_mul(self.n() as i64)?)
    }

    /// The width-`(n+1)` representation (standard form only).
    pub fn to_representation(&self) -> Option<XosRepresentation> {
        if self.remark {
            return None;
        }
        let n = self.n();
        let mut rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|v| if v == i { self.tau } else { 0 }).collect())
            .collect();
        rows.push(
            (0..n)
                .map(|v| if self.planted.contains(v) { 1 } else { -(n as i64) })
                .collect(),
        );
        Some(XosRepresentation::from_rows(&rows).expect("well-formed rows"))
    }
}

impl ValueOracle for HardGeneralInstance {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn value(&self, x: Subset) -> Result<Value> {
        self.ground.check(x)?;
        let g = self.additive(x)?;
        if self.remark {
            return Ok(g.max(Value(self.tau)));
        }
        if x.is_empty() {
            return Ok(Value::ZERO);
        }
        Ok(g.max(Value(self.tau)))
    }
}

impl PlantedOptimum for HardGeneralInstance {
    fn planted_optimum(&self) -> (Subset, Value) {
        (self.planted, Value(self.n() as i64 / 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        let inst = gen_hard_general(8, 2, 7, false).unwrap();
        let s = inst.planted();
        assert_eq!(inst.value(s).unwrap(), Value(4));
        assert_eq!(inst.planted_optimum(), (s, Value(4)));
        for v in 0..8 {
            assert_eq!(inst.value(Subset::singleton(v)).unwrap(), Value(2));
        }
        let off = inst.ground().full().difference(s);
        for x in inst.ground().full().all_subsets() {
            if !x.is_empty() && !x.intersection(off).is_empty() {
                assert_eq!(inst.value(x).unwrap(), Value(2), "{x}");
            }
        }
        assert_eq!(inst.value(Subset::EMPTY).unwrap(), Value(0));
    }

    #[test]
    fn closed_form_equals_wide_representation() {
        for seed in 0..5 {
            for (n, tau) in [(6, 1), (8, 2), (10, 3), (10, 4)] {
                let inst = gen_hard_general(n, tau, seed, false).unwrap();
                let rep = inst.to_representation().unwrap();
                assert_eq!(rep.width(), n + 1);
                for x in inst.ground().full().all_subsets() {
                    assert_eq!(inst.value(x).unwrap(), rep.evaluate(x).unwrap());
                }
            }
        }
    }

    #[test]
    fn remark_variant_is_additive_or_constant() {
        let inst = gen_hard_general(10, 2, 3, true).unwrap();
        assert!(inst.to_representation().is_none());
        assert_eq!(inst.value(Subset::EMPTY).unwrap(), Value(2));
        assert_eq!(inst.value(inst.planted()).unwrap(), Value(5));
        let std = gen_hard_general(10, 2, 3, false).unwrap();
        for x in inst.ground().full().all_subsets().skip(1) {
            assert_eq!(inst.value(x).unwrap(), std.value(x).unwrap());
        }
    }

    #[test]
    fn parameter_checks() {
        assert!(gen_hard_general(7, 2, 0, false).is_err());
        assert!(gen_hard_general(8, 4, 0, false).is_err());
        assert!(gen_hard_general(8, 0, 0, false).is_err());
        assert!(gen_hard_general(64, 2, 0, false).is_err());
    }
}
