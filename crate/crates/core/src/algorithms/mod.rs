//! Maximization algorithms over a [`CountingOracle`].
//!
//! Every solver except [`solve_brute_force`] and [`solve_random_probe`]
//! works on the elements kept by [`preprocess`] (those with a positive
//! singleton value) and reuses the cached singleton values. An empty kept
//! set makes every solver return `(∅, 0)` without further queries.
//!
//! `SolveReport::oracle_calls` is the oracle's counter when the solver
//! returns, so it includes preprocessing when both ran on the same oracle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, XosError};
use crate::oracle::{CountingOracle, ValueOracle};
use crate::subset::Subset;
use crate::value::Value;

mod brute;
mod clique;
mod enumerate;
mod exact2;
mod kminus1;
mod probe;
mod sampling;
mod star;

pub use brute::{solve_brute_force, DEFAULT_BRUTE_CAP};
pub use clique::grow_clique;
pub use enumerate::solve_enum_small_sets;
pub use exact2::solve_exact_2xos;
pub use kminus1::solve_k_minus_1;
pub use probe::{solve_random_probe, ProbeParams};
pub use sampling::{solve_random_sampling, SamplingParams, FALLBACK_RHO};
pub use star::{enumerate_maximal_cliques, solve_exact_star};

/// Outcome of one solver run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub algorithm: String,
    pub output: Subset,
    pub value: Value,
    pub oracle_calls: u64,
    pub seed: Option<u64>,
    /// Samples drawn per subset size by the sampling solver; `None` when it
    /// took the exhaustive path.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples_per_size: Option<u64>,
    /// Set when the caller replaced the default sampling budget.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget_override: Option<u64>,
}

impl SolveReport {
    pub(crate) fn new<O: ValueOracle>(
        algorithm: &str,
        best: Best,
        oracle: &CountingOracle<O>,
    ) -> Self {
        Self {
            algorithm: algorithm.to_owned(),
            output: best.set,
            value: best.value,
            oracle_calls: oracle.calls(),
            seed: None,
            samples_per_size: None,
            budget_override: None,
        }
    }

    /// Re-evaluates the output without counting and checks the stored value.
    pub fn verify<O: ValueOracle>(&self, oracle: &CountingOracle<O>) -> Result<bool> {
        Ok(oracle.peek(self.output)? == self.value)
    }
}

/// First-maximizer accumulator: only a strictly better candidate replaces
/// the incumbent.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Best {
    pub set: Subset,
    pub value: Value,
}

impl Best {
    pub fn empty() -> Self {
        Best {
            set: Subset::EMPTY,
            value: Value::ZERO,
        }
    }

    pub fn of(set: Subset, value: Value) -> Self {
        Best { set, value }
    }

    pub fn offer(&mut self, set: Subset, value: Value) {
        if value > self.value {
            self.set = set;
            self.value = value;
        }
    }
}

/// A positive rational `num / den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Epsilon {
    num: u64,
    den: u64,
}

impl Epsilon {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(XosError::params(format!(
                "epsilon must be a positive rational, got {num}/{den}"
            )));
        }
        Ok(Self { num, den })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `⌈1/ε⌉`.
    pub fn ceil_inverse(self) -> u64 {
        self.den.div_ceil(self.num)
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Epsilon {
    type Err = XosError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || XosError::params(format!("cannot parse epsilon {s:?}; expected p/q"));
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        Epsilon::new(num, den)
    }
}

impl TryFrom<String> for Epsilon {
    type Error = XosError;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Epsilon> for String {
    fn from(e: Epsilon) -> String {
        e.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumParams {
    pub epsilon: Epsilon,
}

/// The elements kept after dropping non-positive singletons, with every
/// singleton value cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preprocessed {
    pub retained: Subset,
    singletons: Vec<Value>,
}

impl Preprocessed {
    pub fn singleton(&self, v: usize) -> Value {
        self.singletons[v]
    }

    /// `Σ_{v∈X} f({v})` from the cache.
    pub fn singleton_sum(&self, x: Subset) -> Result<Value> {
        Value::try_sum(x.iter().map(|v| self.singletons[v]))
    }
}

/// Queries every singleton once and keeps `{v : f({v}) > 0}`.
pub fn preprocess<O: ValueOracle>(oracle: &mut CountingOracle<O>) -> Result<Preprocessed> {
    let n = oracle.n();
    let mut singletons = Vec::with_capacity(n);
    let mut retained = Subset::EMPTY;
    for v in 0..n {
        let value = oracle.evaluate(Subset::singleton(v))?;
        if value.is_positive() {
            retained = retained.with(v);
        }
        singletons.push(value);
    }
    Ok(Preprocessed {
        retained,
        singletons,
    })
}

/// A solver choice with its parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "algo", rename_all = "lowercase")]
pub enum Algorithm {
    Enum(EnumParams),
    Sample(SamplingParams),
    Exact2,
    Kminus1,
    Star,
    Brute {
        #[serde(default = "default_cap")]
        cap: usize,
    },
    Probe(ProbeParams),
}

fn default_cap() -> usize {
    DEFAULT_BRUTE_CAP
}

impl Algorithm {
    pub fn id(&self) -> &'static str {
        match self {
            Algorithm::Enum(_) => "enum",
            Algorithm::Sample(_) => "sample",
            Algorithm::Exact2 => "exact2",
            Algorithm::Kminus1 => "kminus1",
            Algorithm::Star => "star",
            Algorithm::Brute { .. } => "brute",
            Algorithm::Probe(_) => "probe",
        }
    }

    /// Same algorithm with its RNG seed replaced (no-op for deterministic ones).
    pub fn with_seed(&self, seed: u64) -> Algorithm {
        match self {
            Algorithm::Sample(p) => Algorithm::Sample(SamplingParams { seed, ..p.clone() }),
            Algorithm::Probe(p) => Algorithm::Probe(ProbeParams { seed, ..p.clone() }),
            other => other.clone(),
        }
    }

    /// Runs preprocessing (where the solver needs it) and the solver on a
    /// fresh or partially used oracle.
    pub fn run<O: ValueOracle>(&self, oracle: &mut CountingOracle<O>) -> Result<SolveReport> {
        match self {
            Algorithm::Brute { cap } => solve_brute_force(oracle, *cap),
            Algorithm::Probe(p) => solve_random_probe(oracle, p),
            _ => {
                let pre = preprocess(oracle)?;
                match self {
                    Algorithm::Enum(p) => solve_enum_small_sets(oracle, &pre, p),
                    Algorithm::Sample(p) => solve_random_sampling(oracle, &pre, p),
                    Algorithm::Exact2 => solve_exact_2xos(oracle, &pre),
                    Algorithm::Kminus1 => solve_k_minus_1(oracle, &pre),
                    Algorithm::Star => solve_exact_star(oracle, &pre),
                    Algorithm::Brute { .. } | Algorithm::Probe(_) => unreachable!(),
                }
            }
        }
    }
}
