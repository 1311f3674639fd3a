use crate::error::{Result, XosError};
use crate::oracle::ValueOracle;
use crate::rng::SeededRng;
use crate::subset::{GroundSet, Subset, MAX_ELEMENTS};
use crate::value::Value;
use crate::xos::XosRepresentation;

use super::PlantedOptimum;

/// Width-`k` instance over blocks `V_1..V_{k-1}` with `|V_i| = ñ^i`, each
/// holding a hidden `S_i` of size `(ñ − a)·ñ^{i−1}` (so `γ = a/ñ`).
///
/// Components `1..k-1` pay `ñ^{k−i}` per element of `V_i`. Component `k`
/// pays `(ñ − a)·ñ^{k−i−1}` on `S_i` and `−ñ^{k+1}` everywhere else.
/// Blocks are laid out consecutively from element 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HardKxosInstance {
    ground: GroundSet,
    k: usize,
    n_tilde: i64,
    a: i64,
    blocks: Vec<Subset>,
    planted: Vec<Subset>,
    block_weight: Vec<i64>,
    planted_weight: Vec<i64>,
    penalty: i64,
    seed: u64,
}

fn pow(base: i64, exp: usize) -> Result<i64> {
    base.checked_pow(exp as u32).ok_or(XosError::Overflow)
}

pub fn gen_hard_kxos(k: usize, n_tilde: usize, a: usize, seed: u64) -> Result<HardKxosInstance> {
    if k < 3 {
        return Err(XosError::params(format!("k must be at least 3, got {k}")));
    }
    if a < 1 || a >= n_tilde {
        return Err(XosError::params(format!(
            "a must satisfy 1 <= a < n_tilde, got a={a}, n_tilde={n_tilde}"
        )));
    }
    let nt = n_tilde as i64;
    let mut sizes = Vec::with_capacity(k - 1);
    let mut total: i64 = 0;
    for i in 1..k {
        let size = pow(nt, i)?;
        total = total.checked_add(size).ok_or(XosError::Overflow)?;
        if total > MAX_ELEMENTS as i64 {
            return Err(XosError::params(format!(
                "block sizes n_tilde^1..n_tilde^{} exceed {MAX_ELEMENTS} elements",
                k - 1
            )));
        }
        sizes.push(size as usize);
    }
    let ground = GroundSet::new(total as usize)?;
    let mut rng = SeededRng::new(seed);
    let mut blocks = Vec::with_capacity(k - 1);
    let mut planted = Vec::with_capacity(k - 1);
    let mut block_weight = Vec::with_capacity(k - 1);
    let mut planted_weight = Vec::with_capacity(k - 1);
    let mut offset = 0;
    for (idx, &size) in sizes.iter().enumerate() {
        let i = idx + 1;
        let block = Subset::from_elements(offset..offset + size);
        offset += size;
        let s_size = ((nt - a as i64) * pow(nt, i - 1)?) as usize;
        blocks.push(block);
        planted.push(rng.subset_of_size(block, s_size));
        block_weight.push(pow(nt, k - i)?);
        planted_weight.push(
            (nt - a as i64)
                .checked_mul(pow(nt, k - i - 1)?)
                .ok_or(XosError::Overflow)?,
        );
    }
    let penalty = pow(nt, k + 1)?;
    // worst-case magnitude of any component value
    penalty
        .checked_mul(MAX_ELEMENTS as i64)
        .ok_or(XosError::Overflow)?;
    Ok(HardKxosInstance {
        ground,
        k,
        n_tilde: nt,
        a: a as i64,
        blocks,
        planted,
        block_weight,
        planted_weight,
        penalty,
        seed,
    })
}

impl HardKxosInstance {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_tilde(&self) -> usize {
        self.n_tilde as usize
    }

    pub fn a(&self) -> usize {
        self.a as usize
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// `V_1..V_{k-1}`.
    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    /// `S_1..S_{k-1}`.
    pub fn planted_sets(&self) -> &[Subset] {
        &self.planted
    }

    pub fn planted_union(&self) -> Subset {
        self.planted
            .iter()
            .fold(Subset::EMPTY, |acc, &s| acc.union(s))
    }

    /// Value of `∪S_i`: `(k−1)(ñ−a)²ñ^{k−2}`.
    pub fn planted_value(&self) -> Value {
        let d = self.n_tilde - self.a;
        Value((self.k as i64 - 1) * d * d * self.n_tilde.pow(self.k as u32 - 2))
    }

    /// `max_X f_i(X) = ñ^k` for each block component.
    pub fn block_component_max(&self) -> Value {
        Value(self.n_tilde.pow(self.k as u32))
    }

    /// Value of component `i` (0-based; `k-1` is the planted component).
    pub fn component_value(&self, i: usize, x: Subset) -> Result<Value> {
        if i + 1 < self.k {
            Value(x.intersection(self.blocks[i]).len() as i64).checked_mul(self.block_weight[i])
        } else if i + 1 == self.k {
            let mut total = Value::ZERO;
            for (s, w) in self.planted.iter().zip(&self.planted_weight) {
                total = total.checked_add(Value(x.intersection(*s).len() as i64).checked_mul(*w)?)?;
            }
            let off = x.difference(self.planted_union()).len() as i64;
            total.checked_sub(Value(off).checked_mul(self.penalty)?)
        } else {
            Err(XosError::ComponentIndex {
                index: i,
                width: self.k,
            })
        }
    }

    /// The explicit width-`k` representation.
    pub fn to_representation(&self) -> XosRepresentation {
        let n = self.n();
        let union = self.planted_union();
        let mut rows: Vec<Vec<i64>> = Vec::with_capacity(self.k);
        for (block, w) in self.blocks.iter().zip(&self.block_weight) {
            rows.push((0..n).map(|v| if block.contains(v) { *w } else { 0 }).collect());
        }
        rows.push(
            (0..n)
                .map(|v| {
                    if !union.contains(v) {
                        return -self.penalty;
                    }
                    let i = self.planted.iter().position(|s| s.contains(v)).expect("in union");
                    self.planted_weight[i]
                })
                .collect(),
        );
        XosRepresentation::from_rows(&rows).expect("well-formed rows")
    }
}

impl ValueOracle for HardKxosInstance {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn value(&self, x: Subset) -> Result<Value> {
        self.ground.check(x)?;
        let mut best = self.component_value(0, x)?;
        for i in 1..self.k {
            best = best.max(self.component_value(i, x)?);
        }
        Ok(best)
    }
}

impl PlantedOptimum for HardKxosInstance {
    /// `∪S_i` when it beats the block components; otherwise `V_1`, worth
    /// `ñ^k`. The maximum is `max(planted_value, ñ^k)` either way because
    /// each component's maximum is the sum of its positive weights.
    fn planted_optimum(&self) -> (Subset, Value) {
        let planted = self.planted_value();
        let block = self.block_component_max();
        if planted >= block {
            (self.planted_union(), planted)
        } else {
            (self.blocks[0], block)
        }
    }
}
