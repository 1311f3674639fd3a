//! Seeded generators for planted-optimum instance families.
//!
//! Each instance evaluates in closed form (a few popcounts per query), so
//! it can serve ground sets up to 63 elements without materializing the
//! wide XOS tables it stands for. The planted sets are drawn with
//! [`SeededRng::subset_of_size`](crate::rng::SeededRng::subset_of_size)
//! from the instance seed; serializing `(params, seed)` is enough to
//! rebuild an instance.

mod general;
mod kxos;
mod needle;

pub use general::{gen_hard_general, HardGeneralInstance};
pub use kxos::{gen_hard_kxos, HardKxosInstance};
pub use needle::{gen_needle, probe_hit_bound, NeedleInstance};

use crate::subset::Subset;
use crate::value::Value;

/// White-box ground truth for generated instances. Never queries an oracle.
pub trait PlantedOptimum {
    fn planted_optimum(&self) -> (Subset, Value);
}
