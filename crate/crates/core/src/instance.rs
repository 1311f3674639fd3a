//! Instance files.
//!
//! Explicit functions are stored in full:
//! `{"type":"explicit","n":3,"weights":[[3,-1,2],[1,2,-5]]}`.
//! Planted instances store only their parameters and seed, never the
//! planted set: `{"type":"needle","params":{"n_hat":24,"s":12,"t":6},"seed":7}`,
//! likewise `hard_general` / `hard_general_remark` (`{"n","tau"}`) and
//! `hard_kxos` (`{"k","n_tilde","a"}`).

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Result, XosError};
use crate::hardness::{
    gen_hard_general, gen_hard_kxos, gen_needle, HardGeneralInstance, HardKxosInstance,
    NeedleInstance, PlantedOptimum,
};
use crate::oracle::ValueOracle;
use crate::subset::{GroundSet, Subset, MAX_ELEMENTS};
use crate::value::Value;
use crate::xos::XosRepresentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NeedleParams {
    pub n_hat: usize,
    pub s: usize,
    pub t: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HardGeneralParams {
    pub n: usize,
    pub tau: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HardKxosParams {
    pub k: usize,
    pub n_tilde: usize,
    pub a: usize,
}

/// The on-disk form of an instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum InstanceSpec {
    Explicit { n: usize, weights: Vec<Vec<i64>> },
    Needle { params: NeedleParams, seed: u64 },
    HardGeneral { params: HardGeneralParams, seed: u64 },
    HardGeneralRemark { params: HardGeneralParams, seed: u64 },
    HardKxos { params: HardKxosParams, seed: u64 },
}

impl InstanceSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| XosError::Instance(e.to_string()))
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance specs always serialize")
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            InstanceSpec::Explicit { .. } => "explicit",
            InstanceSpec::Needle { .. } => "needle",
            InstanceSpec::HardGeneral { .. } => "hard_general",
            InstanceSpec::HardGeneralRemark { .. } => "hard_general_remark",
            InstanceSpec::HardKxos { .. } => "hard_kxos",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            InstanceSpec::Explicit { .. } => None,
            InstanceSpec::Needle { seed, .. }
            | InstanceSpec::HardGeneral { seed, .. }
            | InstanceSpec::HardGeneralRemark { seed, .. }
            | InstanceSpec::HardKxos { seed, .. } => Some(*seed),
        }
    }

    /// The same family with a different seed. Explicit instances are returned unchanged.
    pub fn reseeded(&self, new_seed: u64) -> InstanceSpec {
        let mut out = self.clone();
        match &mut out {
            InstanceSpec::Explicit { .. } => {}
            InstanceSpec::Needle { seed, .. }
            | InstanceSpec::HardGeneral { seed, .. }
            | InstanceSpec::HardGeneralRemark { seed, .. }
            | InstanceSpec::HardKxos { seed, .. } => *seed = new_seed,
        }
        out
    }

    pub fn build(&self) -> Result<Instance> {
        Ok(match self {
            InstanceSpec::Explicit { n, weights } => {
                if *n == 0 || *n > MAX_ELEMENTS {
                    return Err(XosError::Instance(format!("n = {n} outside [1, 63]")));
                }
                if weights.is_empty() {
                    return Err(XosError::Instance("no weight rows".into()));
                }
                if let Some((row, w)) = weights.iter().enumerate().find(|(_, w)| w.len() != *n) {
                    return Err(XosError::Instance(format!(
                        "ragged weights: row {row} has {} entries, expected {n}",
                        w.len()
                    )));
                }
                Instance::Explicit(XosRepresentation::from_rows(weights)?)
            }
            InstanceSpec::Needle { params, seed } => {
                Instance::Needle(gen_needle(params.n_hat, params.s, params.t, *seed)?)
            }
            InstanceSpec::HardGeneral { params, seed } => {
                Instance::HardGeneral(gen_hard_general(params.n, params.tau, *seed, false)?)
            }
            InstanceSpec::HardGeneralRemark { params, seed } => {
                Instance::HardGeneral(gen_hard_general(params.n, params.tau, *seed, true)?)
            }
            InstanceSpec::HardKxos { params, seed } => {
                Instance::HardKxos(gen_hard_kxos(params.k, params.n_tilde, params.a, *seed)?)
            }
        })
    }
}

impl From<&XosRepresentation> for InstanceSpec {
    fn from(rep: &XosRepresentation) -> Self {
        InstanceSpec::Explicit {
            n: rep.n(),
            weights: rep.rows(),
        }
    }
}

/// A ready-to-query instance of any supported kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Explicit(XosRepresentation),
    Needle(NeedleInstance),
    HardGeneral(HardGeneralInstance),
    HardKxos(HardKxosInstance),
}

impl Instance {
    pub fn n(&self) -> usize {
        self.ground().len()
    }

    /// Width of the representation the instance stands for, when it is XOS.
    pub fn width(&self) -> Option<usize> {
        match self {
            Instance::Explicit(rep) => Some(rep.width()),
            Instance::Needle(_) => None,
            Instance::HardGeneral(h) if h.is_remark_variant() => None,
            Instance::HardGeneral(h) => Some(h.n() + 1),
            Instance::HardKxos(h) => Some(h.k()),
        }
    }

    pub fn planted_optimum(&self) -> Option<(Subset, Value)> {
        match self {
            Instance::Explicit(_) => None,
            Instance::Needle(h) => Some(h.planted_optimum()),
            Instance::HardGeneral(h) => Some(h.planted_optimum()),
            Instance::HardKxos(h) => Some(h.planted_optimum()),
        }
    }

    /// An explicit XOS representation, when one exists.
    pub fn representation(&self) -> Option<XosRepresentation> {
        match self {
            Instance::Explicit(rep) => Some(rep.clone()),
            Instance::Needle(_) => None,
            Instance::HardGeneral(h) => h.to_representation(),
            Instance::HardKxos(h) => Some(h.to_representation()),
        }
    }
}

impl ValueOracle for Instance {
    fn ground(&self) -> GroundSet {
        match self {
            Instance::Explicit(i) => i.ground(),
            Instance::Needle(i) => i.ground(),
            Instance::HardGeneral(i) => i.ground(),
            Instance::HardKxos(i) => i.ground(),
        }
    }

    fn value(&self, x: Subset) -> Result<Value> {
        match self {
            Instance::Explicit(i) => i.value(x),
            Instance::Needle(i) => i.value(x),
            Instance::HardGeneral(i) => i.value(x),
            Instance::HardKxos(i) => i.value(x),
        }
    }
}
