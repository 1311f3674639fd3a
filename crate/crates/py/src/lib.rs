//! Python bindings. Subsets cross the boundary as lists of element indices.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use xos_core::algorithms::{
    Algorithm, EnumParams, Epsilon, ProbeParams, SamplingParams, SolveReport, DEFAULT_BRUTE_CAP,
};
use xos_core::classify::{check_class, check_star_condition, materialize, SetFunctionClass};
use xos_core::experiment::{render, run_suite, ExperimentConfig};
use xos_core::generate;
use xos_core::hardness::{gen_hard_general, gen_hard_kxos, gen_needle};
use xos_core::instance::{self as inst, InstanceSpec};
use xos_core::{Subset, ValueOracle, XosError};

fn err(e: XosError) -> PyErr {
    match e {
        XosError::Overflow => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn subset(elements: Vec<usize>) -> PyResult<Subset> {
    if let Some(&v) = elements.iter().find(|&&v| v >= xos_core::MAX_ELEMENTS) {
        return Err(PyValueError::new_err(format!("element {v} out of range")));
    }
    Ok(Subset::from_elements(elements))
}

fn elements(x: Subset) -> Vec<usize> {
    x.iter().collect()
}

/// Explicit XOS function: the max of additive rows.
#[pyclass(name = "XosRepresentation", module = "pyxos", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRepresentation {
    inner: xos_core::XosRepresentation,
}

#[pymethods]
impl PyRepresentation {
    #[new]
    fn new(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        let inner = xos_core::XosRepresentation::from_rows(&rows).map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn width(&self) -> usize {
        self.inner.width()
    }

    fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.rows()
    }

    fn evaluate(&self, x: Vec<usize>) -> PyResult<i64> {
        Ok(self.inner.evaluate(subset(x)?).map_err(err)?.get())
    }

    fn singleton(&self, v: usize) -> PyResult<i64> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("element {v} out of range")));
        }
        Ok(self.inner.singleton(v).get())
    }

    /// Components attaining the maximum at `x`.
    fn maximizers(&self, x: Vec<usize>) -> PyResult<Vec<usize>> {
        self.inner.maximizer_indices(subset(x)?).map_err(err)
    }

    fn clique_of(&self, i: usize) -> PyResult<Vec<usize>> {
        Ok(elements(self.inner.clique_of(i).map_err(err)?))
    }

    /// `(holds, (element, component) or None)`.
    fn check_star(&self) -> (bool, Option<(usize, usize)>) {
        let (holds, w) = check_star_condition(&self.inner);
        (holds, w.map(|w| (w.element, w.component)))
    }

    fn to_instance(&self) -> PyInstance {
        PyInstance {
            spec: InstanceSpec::from(&self.inner),
            inner: inst::Instance::Explicit(self.inner.clone()),
        }
    }

    fn __repr__(&self) -> String {
        format!("XosRepresentation(n={}, width={})", self.inner.n(), self.inner.width())
    }
}

/// Any supported instance: explicit or one of the planted families.
#[pyclass(name = "Instance", module = "pyxos", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyInstance {
    spec: InstanceSpec,
    inner: inst::Instance,
}

impl PyInstance {
    fn from_spec(spec: InstanceSpec) -> PyResult<Self> {
        let inner = spec.build().map_err(err)?;
        Ok(Self { spec, inner })
    }
}

#[pymethods]
impl PyInstance {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Self::from_spec(InstanceSpec::from_json(text).map_err(err)?)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        Self::from_spec(InstanceSpec::load(path).map_err(err)?)
    }

    #[staticmethod]
    fn explicit(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(PyRepresentation::new(rows)?.to_instance())
    }

    #[staticmethod]
    #[pyo3(signature = (n_hat, s, t, seed=0))]
    fn needle(n_hat: usize, s: usize, t: usize, seed: u64) -> PyResult<Self> {
        gen_needle(n_hat, s, t, seed).map_err(err)?;
        Self::from_spec(InstanceSpec::Needle { params: inst::NeedleParams { n_hat, s, t }, seed })
    }

    #[staticmethod]
    #[pyo3(signature = (n, tau, seed=0, remark=false))]
    fn hard_general(n: usize, tau: i64, seed: u64, remark: bool) -> PyResult<Self> {
        gen_hard_general(n, tau, seed, remark).map_err(err)?;
        let params = inst::HardGeneralParams { n, tau };
        Self::from_spec(if remark {
            InstanceSpec::HardGeneralRemark { params, seed }
        } else {
            InstanceSpec::HardGeneral { params, seed }
        })
    }

    #[staticmethod]
    #[pyo3(signature = (k, n_tilde, a, seed=0))]
    fn hard_kxos(k: usize, n_tilde: usize, a: usize, seed: u64) -> PyResult<Self> {
        gen_hard_kxos(k, n_tilde, a, seed).map_err(err)?;
        Self::from_spec(InstanceSpec::HardKxos { params: inst::HardKxosParams { k, n_tilde, a }, seed })
    }

    #[staticmethod]
    #[pyo3(signature = (n, k, lo=-8, hi=8, seed=0, star=false))]
    fn random(n: usize, k: usize, lo: i64, hi: i64, seed: u64, star: bool) -> PyResult<Self> {
        let rep = if star {
            generate::random_star_xos(n, k, lo, hi, seed)
        } else {
            generate::random_xos(n, k, lo, hi, seed)
        }
        .map_err(err)?;
        Ok(PyRepresentation { inner: rep }.to_instance())
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn width(&self) -> Option<usize> {
        self.inner.width()
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.spec.type_name()
    }

    fn to_json(&self) -> String {
        self.spec.to_json()
    }

    fn value(&self, x: Vec<usize>) -> PyResult<i64> {
        Ok(self.inner.value(subset(x)?).map_err(err)?.get())
    }

    fn planted_optimum(&self) -> Option<(Vec<usize>, i64)> {
        self.inner.planted_optimum().map(|(x, v)| (elements(x), v.get()))
    }

    fn representation(&self) -> Option<PyRepresentation> {
        self.inner.representation().map(|inner| PyRepresentation { inner })
    }

    fn __repr__(&self) -> String {
        format!("Instance(kind={:?}, n={})", self.spec.type_name(), self.inner.n())
    }
}

/// Wraps an instance and counts every in-range query.
#[pyclass(name = "CountingOracle", module = "pyxos")]
struct PyCountingOracle {
    inner: xos_core::CountingOracle<inst::Instance>,
}

#[pymethods]
impl PyCountingOracle {
    #[new]
    fn new(instance: &PyInstance) -> Self {
        Self { inner: xos_core::CountingOracle::new(instance.inner.clone()) }
    }

    fn value(&mut self, x: Vec<usize>) -> PyResult<i64> {
        Ok(self.inner.evaluate(subset(x)?).map_err(err)?.get())
    }

    /// Uncounted evaluation.
    fn peek(&self, x: Vec<usize>) -> PyResult<i64> {
        Ok(self.inner.peek(subset(x)?).map_err(err)?.get())
    }

    #[getter]
    fn calls(&self) -> u64 {
        self.inner.calls()
    }
}

fn report_dict<'py>(py: Python<'py>, r: &SolveReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("algorithm", &r.algorithm)?;
    d.set_item("output", elements(r.output))?;
    d.set_item("value", r.value.get())?;
    d.set_item("oracle_calls", r.oracle_calls)?;
    d.set_item("seed", r.seed)?;
    d.set_item("samples_per_size", r.samples_per_size)?;
    Ok(d)
}

/// Runs one solver (with preprocessing) on a fresh counting oracle.
#[pyfunction]
#[pyo3(signature = (instance, algo, epsilon="1/2", seed=0, budget=None, allow_fallback=true, cap=DEFAULT_BRUTE_CAP, queries=1000, size=None))]
#[allow(clippy::too_many_arguments)]
fn solve<'py>(
    py: Python<'py>,
    instance: &PyInstance,
    algo: &str,
    epsilon: &str,
    seed: u64,
    budget: Option<u64>,
    allow_fallback: bool,
    cap: usize,
    queries: u64,
    size: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let eps = || epsilon.parse::<Epsilon>().map_err(err);
    let algorithm = match algo {
        "enum" => Algorithm::Enum(EnumParams { epsilon: eps()? }),
        "sample" => Algorithm::Sample(SamplingParams {
            sample_budget_override: budget,
            allow_fallback,
            ..SamplingParams::new(eps()?, seed)
        }),
        "exact2" => Algorithm::Exact2,
        "kminus1" => Algorithm::Kminus1,
        "star" => Algorithm::Star,
        "brute" => Algorithm::Brute { cap },
        "probe" => Algorithm::Probe(ProbeParams {
            queries,
            size: size.ok_or_else(|| PyValueError::new_err("probe needs size"))?,
            seed,
        }),
        other => return Err(PyValueError::new_err(format!("unknown algorithm {other:?}"))),
    };
    let mut oracle = xos_core::CountingOracle::new(&instance.inner);
    let report = algorithm.run(&mut oracle).map_err(err)?;
    report_dict(py, &report)
}

/// Class verdicts for a materialized instance (n <= 16):
/// `{class: (holds, (X, Y) or None)}`.
#[pyfunction]
fn classify<'py>(py: Python<'py>, instance: &PyInstance) -> PyResult<Bound<'py, PyDict>> {
    let dense = materialize(&instance.inner).map_err(err)?;
    let d = PyDict::new(py);
    for class in SetFunctionClass::ALL {
        let v = check_class(&dense, class).map_err(err)?;
        let witness = v.witness.map(|w| (elements(w.x), elements(w.y)));
        d.set_item(class.name(), (v.holds, witness))?;
    }
    Ok(d)
}

/// Runs a suite from a JSON config and returns its rendered output.
#[pyfunction(name = "bench")]
fn run_bench(config_json: &str) -> PyResult<String> {
    let config: ExperimentConfig =
        serde_json::from_str(config_json).map_err(|e| PyValueError::new_err(e.to_string()))?;
    let result = run_suite(&config).map_err(err)?;
    let bytes = render(&result, config.format).map_err(err)?;
    String::from_utf8(bytes).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
fn pyxos(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRepresentation>()?;
    m.add_class::<PyInstance>()?;
    m.add_class::<PyCountingOracle>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(run_bench, m)?)?;
    m.add("CSV_HEADER", xos_core::experiment::CSV_HEADER)?;
    Ok(())
}
