//! The value-oracle interface and its call-counting wrapper.

use crate::error::Result;
use crate::subset::{GroundSet, Subset};
use crate::value::Value;

/// Black-box access to a set function. `value` must be a pure function of
/// the queried subset.
pub trait ValueOracle {
    fn ground(&self) -> GroundSet;

    fn value(&self, x: Subset) -> Result<Value>;
}

impl<T: ValueOracle + ?Sized> ValueOracle for &T {
    fn ground(&self) -> GroundSet {
        (**self).ground()
    }

    fn value(&self, x: Subset) -> Result<Value> {
        (**self).value(x)
    }
}

impl<T: ValueOracle + ?Sized> ValueOracle for Box<T> {
    fn ground(&self) -> GroundSet {
        (**self).ground()
    }

    fn value(&self, x: Subset) -> Result<Value> {
        (**self).value(x)
    }
}

/// Wraps an oracle and counts every `evaluate` call.
///
/// Single-owner: the counter is not synchronized, so concurrent trials each
/// need their own `CountingOracle`.
#[derive(Debug)]
pub struct CountingOracle<O> {
    inner: O,
    calls: u64,
}

impl<O: ValueOracle> CountingOracle<O> {
    pub fn new(inner: O) -> Self {
        Self { inner, calls: 0 }
    }

    pub fn ground(&self) -> GroundSet {
        self.inner.ground()
    }

    pub fn n(&self) -> usize {
        self.inner.ground().len()
    }

    /// Queries `f(x)`, counting the call. Out-of-range subsets are rejected
    /// without being counted.
    pub fn evaluate(&mut self, x: Subset) -> Result<Value> {
        self.inner.ground().check(x)?;
        self.calls += 1;
        self.inner.value(x)
    }

    /// Re-checks a value without touching the counter.
    pub fn peek(&self, x: Subset) -> Result<Value> {
        self.inner.ground().check(x)?;
        self.inner.value(x)
    }

    pub fn calls(&self) -> u64 {
        self.calls
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }

    pub fn into_inner(self) -> O {
        self.inner
    }
}
