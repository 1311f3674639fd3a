use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, XosError};

/// An exact set-function value.
///
/// Arithmetic is checked; overflow is reported as [`XosError::Overflow`].
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Value(pub i64);

impl Value {
    pub const ZERO: Value = Value(0);

    pub fn get(self) -> i64 {
        self.0
    }

    pub fn checked_add(self, rhs: Value) -> Result<Value> {
        self.0.checked_add(rhs.0).map(Value).ok_or(XosError::Overflow)
    }

    pub fn checked_sub(self, rhs: Value) -> Result<Value> {
        self.0.checked_sub(rhs.0).map(Value).ok_or(XosError::Overflow)
    }

    pub fn checked_mul(self, rhs: i64) -> Result<Value> {
        self.0.checked_mul(rhs).map(Value).ok_or(XosError::Overflow)
    }

    /// Checked sum of an iterator of values.
    pub fn try_sum<I: IntoIterator<Item = Value>>(values: I) -> Result<Value> {
        values
            .into_iter()
            .try_fold(Value::ZERO, |acc, v| acc.checked_add(v))
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
