//! Maximizing XOS set functions through a value oracle.
//!
//! An XOS function is a pointwise maximum of additive functions. This crate
//! provides:
//!
//! * exact subset arithmetic ([`Subset`], [`Value`]) and explicit
//!   representations ([`XosRepresentation`]);
//! * the counting oracle every solver consumes ([`CountingOracle`]);
//! * approximation and exact solvers ([`algorithms`]);
//! * planted-optimum instance families ([`hardness`]);
//! * brute-force class checkers ([`classify`]);
//! * instance files ([`instance`]) and seeded experiment suites
//!   ([`experiment`]).
//!
//! ```
//! use xos_core::{algorithms, CountingOracle, Subset, Value, XosRepresentation};
//!
//! let f = XosRepresentation::from_rows(&[[3, -1, 2], [1, 2, -5]]).unwrap();
//! let mut oracle = CountingOracle::new(&f);
//! let pre = algorithms::preprocess(&mut oracle).unwrap();
//! let report = algorithms::solve_exact_2xos(&mut oracle, &pre).unwrap();
//! assert_eq!(report.value, Value(5));
//! assert_eq!(report.output, Subset::from_elements([0, 2]));
//! ```

pub mod algorithms;
pub mod classify;
mod error;
pub mod experiment;
pub mod generate;
pub mod hardness;
pub mod instance;
mod oracle;
pub mod rng;
mod subset;
mod value;
mod xos;

pub use error::{Result, XosError};
pub use oracle::{CountingOracle, ValueOracle};
pub use subset::{Elements, GroundSet, Subset, SubsetsOfSize, MAX_ELEMENTS};
pub use value::Value;
pub use xos::{AdditiveFunction, XosRepresentation};
