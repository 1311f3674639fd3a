//! Brute-force class checkers over fully materialized small functions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, XosError};
use crate::oracle::ValueOracle;
use crate::subset::{GroundSet, Subset};
use crate::value::Value;
use crate::xos::XosRepresentation;

/// Largest ground set that can be materialized.
pub const MAX_DENSE_ELEMENTS: usize = 16;

/// A set function stored as a table of `2^n` values indexed by mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseFunction {
    ground: GroundSet,
    table: Vec<Value>,
}

impl DenseFunction {
    pub fn from_table(n: usize, table: Vec<Value>) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if n > MAX_DENSE_ELEMENTS {
            return Err(XosError::CapExceeded {
                n,
                cap: MAX_DENSE_ELEMENTS,
            });
        }
        if table.len() != 1 << n {
            return Err(XosError::params(format!(
                "table has {} entries, expected {}",
                table.len(),
                1usize << n
            )));
        }
        Ok(Self { ground, table })
    }

    pub fn n(&self) -> usize {
        self.ground.len()
    }

    pub fn table(&self) -> &[Value] {
        &self.table
    }

    pub fn get(&self, x: Subset) -> Value {
        self.table[x.bits() as usize]
    }
}

impl ValueOracle for DenseFunction {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn value(&self, x: Subset) -> Result<Value> {
        self.ground.check(x)?;
        Ok(self.get(x))
    }
}

/// Evaluates `oracle` on every subset (without any call accounting).
pub fn materialize<O: ValueOracle + ?Sized>(oracle: &O) -> Result<DenseFunction> {
    let n = oracle.ground().len();
    if n > MAX_DENSE_ELEMENTS {
        return Err(XosError::CapExceeded {
            n,
            cap: MAX_DENSE_ELEMENTS,
        });
    }
    let table = (0..1u64 << n)
        .map(|mask| oracle.value(Subset(mask)))
        .collect::<Result<Vec<_>>>()?;
    DenseFunction::from_table(n, table)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SetFunctionClass {
    Normalized,
    Monotone,
    Additive,
    Submodular,
    Subadditive,
}

impl SetFunctionClass {
    pub const ALL: [SetFunctionClass; 5] = [
        SetFunctionClass::Normalized,
        SetFunctionClass::Monotone,
        SetFunctionClass::Additive,
        SetFunctionClass::Submodular,
        SetFunctionClass::Subadditive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetFunctionClass::Normalized => "normalized",
            SetFunctionClass::Monotone => "monotone",
            SetFunctionClass::Additive => "additive",
            SetFunctionClass::Submodular => "submodular",
            SetFunctionClass::Subadditive => "subadditive",
        }
    }
}

impl fmt::Display for SetFunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SetFunctionClass {
    type Err = XosError;

    fn from_str(s: &str) -> Result<Self> {
        SetFunctionClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| XosError::params(format!("unknown class {s:?}")))
    }
}

/// A pair of sets violating a class's defining inequality.
///
/// normalized: `(∅, ∅)`. monotone: `X ⊆ Y` with `f(X) > f(Y)`.
/// additive: `(X, X)` with `f(X) ≠ Σ f(v)`. submodular and subadditive:
/// the `(X, Y)` of the inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: Subset,
    pub y: Subset,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn fail(x: Subset, y: Subset) -> Self {
        Verdict {
            holds: false,
            witness: Some(Witness { x, y }),
        }
    }
}

pub fn check_class(f: &DenseFunction, class: SetFunctionClass) -> Result<Verdict> {
    match class {
        SetFunctionClass::Normalized => Ok(if f.get(Subset::EMPTY) == Value::ZERO {
            Verdict::pass()
        } else {
            Verdict::fail(Subset::EMPTY, Subset::EMPTY)
        }),
        SetFunctionClass::Monotone => Ok(check_monotone(f)),
        SetFunctionClass::Additive => check_additive(f),
        SetFunctionClass::Submodular => check_submodular(f),
        SetFunctionClass::Subadditive => check_subadditive(f),
    }
}

/// Monotonicity along single-element steps implies it for every `X ⊆ Y`.
fn check_monotone(f: &DenseFunction) -> Verdict {
    let full = f.ground.full();
    for x in full.all_subsets() {
        for v in full.difference(x) {
            if f.get(x) > f.get(x.with(v)) {
                return Verdict::fail(x, x.with(v));
            }
        }
    }
    Verdict::pass()
}

fn check_additive(f: &DenseFunction) -> Result<Verdict> {
    for x in f.ground.full().all_subsets() {
        let sum = Value::try_sum(x.iter().map(|v| f.get(Subset::singleton(v))))?;
        if f.get(x) != sum {
            return Ok(Verdict::fail(x, x));
        }
    }
    Ok(Verdict::pass())
}

/// Scans the local inequality `f(X+a) + f(X+b) >= f(X+a+b) + f(X)` for
/// `a < b` outside `X`; it holds everywhere iff `f` is submodular, and a
/// local failure is itself a violating pair `(X+a, X+b)`.
fn check_submodular(f: &DenseFunction) -> Result<Verdict> {
    let full = f.ground.full();
    for x in full.all_subsets() {
        let rest = full.difference(x);
        for a in rest {
            for b in rest.iter().filter(|&b| b > a) {
                let (xa, xb) = (x.with(a), x.with(b));
                let lhs = f.get(xa).checked_add(f.get(xb))?;
                let rhs = f.get(xa.with(b)).checked_add(f.get(x))?;
                if lhs < rhs {
                    return Ok(Verdict::fail(xa, xb));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// All unordered pairs; `O(4^n)`.
fn check_subadditive(f: &DenseFunction) -> Result<Verdict> {
    let size = 1u64 << f.n();
    for x in 0..size {
        for y in x..size {
            let (xs, ys) = (Subset(x), Subset(y));
            if f.get(xs.union(ys)) > f.get(xs).checked_add(f.get(ys))? {
                return Ok(Verdict::fail(xs, ys));
            }
        }
    }
    Ok(Verdict::pass())
}

/// A `(element, component)` pair breaking the star condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarWitness {
    pub element: usize,
    pub component: usize,
}

/// Whether every component weight either equals the singleton value
/// `f({v})` or is non-positive.
pub fn check_star_condition(rep: &XosRepresentation) -> (bool, Option<StarWitness>) {
    for v in 0..rep.n() {
        let top = rep.singleton(v);
        for (i, c) in rep.components().iter().enumerate() {
            let w = c.weight(v);
            if w != top && w.is_positive() {
                return (
                    false,
                    Some(StarWitness {
                        element: v,
                        component: i,
                    }),
                );
            }
        }
    }
    (true, None)
}
