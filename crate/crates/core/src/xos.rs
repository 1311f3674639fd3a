//! Explicit XOS representations: a pointwise maximum of additive functions.

use crate::error::{Result, XosError};
use crate::oracle::ValueOracle;
use crate::subset::{GroundSet, Subset};
use crate::value::Value;

/// An additive set function given by one weight per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveFunction {
    weights: Vec<Value>,
}

impl AdditiveFunction {
    pub fn new(weights: Vec<Value>) -> Self {
        Self { weights }
    }

    pub fn from_ints(weights: &[i64]) -> Self {
        Self::new(weights.iter().copied().map(Value).collect())
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Value] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> Value {
        self.weights[v]
    }

    pub fn evaluate(&self, x: Subset) -> Result<Value> {
        Value::try_sum(x.iter().map(|v| self.weights[v]))
    }

    /// Largest value over all subsets: the sum of the positive weights.
    pub fn max_value(&self) -> Result<Value> {
        Value::try_sum(self.weights.iter().copied().filter(|w| w.is_positive()))
    }
}

/// `f(X) = max_i f_i(X)` for a nonempty list of additive components over a
/// common ground set. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XosRepresentation {
    ground: GroundSet,
    components: Vec<AdditiveFunction>,
}

impl XosRepresentation {
    pub fn new(components: Vec<AdditiveFunction>) -> Result<Self> {
        let first = components.first().ok_or(XosError::EmptyRepresentation)?;
        let ground = GroundSet::new(first.len())?;
        for (row, c) in components.iter().enumerate() {
            if c.len() != ground.len() {
                return Err(XosError::RaggedWeights {
                    row,
                    len: c.len(),
                    n: ground.len(),
                });
            }
        }
        Ok(Self { ground, components })
    }

    /// Builds from integer rows, one row per component.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| AdditiveFunction::from_ints(r.as_ref()))
                .collect(),
        )
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    /// Number of components.
    pub fn width(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[AdditiveFunction] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Result<&AdditiveFunction> {
        self.components.get(i).ok_or(XosError::ComponentIndex {
            index: i,
            width: self.width(),
        })
    }

    pub fn evaluate(&self, x: Subset) -> Result<Value> {
        self.ground.check(x)?;
        let mut best = self.components[0].evaluate(x)?;
        for c in &self.components[1..] {
            best = best.max(c.evaluate(x)?);
        }
        Ok(best)
    }

    /// Singleton value `f({v})`.
    pub fn singleton(&self, v: usize) -> Value {
        self.components
            .iter()
            .map(|c| c.weight(v))
            .max()
            .expect("nonempty representation")
    }

    /// Indices `i` with `f_i(X) = f(X)`, ascending. Never empty.
    pub fn maximizer_indices(&self, x: Subset) -> Result<Vec<usize>> {
        self.ground.check(x)?;
        let values = self
            .components
            .iter()
            .map(|c| c.evaluate(x))
            .collect::<Result<Vec<_>>>()?;
        let best = *values.iter().max().expect("nonempty representation");
        Ok(values
            .iter()
            .enumerate()
            .filter(|(_, v)| **v == best)
            .map(|(i, _)| i)
            .collect())
    }

    /// The clique of component `i`: elements where `f_i(v) = f(v)`.
    pub fn clique_of(&self, i: usize) -> Result<Subset> {
        let c = self.component(i)?;
        Ok((0..self.n())
            .filter(|&v| c.weight(v) == self.singleton(v))
            .collect())
    }

    /// Distinct cliques that are not strictly contained in another clique,
    /// in order of first appearance by component index.
    pub fn maximal_cliques(&self) -> Vec<Subset> {
        let cliques: Vec<Subset> = (0..self.width())
            .map(|i| self.clique_of(i).expect("index in range"))
            .collect();
        let mut out: Vec<Subset> = Vec::new();
        for &c in &cliques {
            let dominated = cliques.iter().any(|&d| d != c && c.is_subset_of(d));
            if !dominated && !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// Integer weight rows, as stored in instance files.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.components
            .iter()
            .map(|c| c.weights().iter().map(|w| w.get()).collect())
            .collect()
    }
}

impl ValueOracle for XosRepresentation {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn value(&self, x: Subset) -> Result<Value> {
        self.evaluate(x)
    }
}
