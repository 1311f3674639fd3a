//! Seeded experiment suites.
//!
//! Trial `i` uses seed `base_seed + i` (wrapping) for the algorithm and,
//! when `reseed_instance` is set, for the instance as well. Trials run in
//! parallel, each on its own [`CountingOracle`]; records are collected in
//! trial order, so a suite's CSV is a pure function of its config unless
//! timing is switched on.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::algorithms::{solve_brute_force, Algorithm, DEFAULT_BRUTE_CAP};
use crate::error::Result;
use crate::instance::{Instance, InstanceSpec};
use crate::oracle::CountingOracle;

/// Column order of CSV output.
pub const CSV_HEADER: &str = "trial,seed,algo,n,k,value,opt,ratio,calls,ms";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// An instance given inline or by path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InstanceSource {
    Path(PathBuf),
    Inline(InstanceSpec),
}

impl InstanceSource {
    pub fn resolve(&self) -> Result<InstanceSpec> {
        match self {
            InstanceSource::Path(p) => InstanceSpec::load(p),
            InstanceSource::Inline(spec) => Ok(spec.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub instance: InstanceSource,
    #[serde(default)]
    pub reseed_instance: bool,
    pub algorithm: Algorithm,
    pub trials: u64,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default)]
    pub format: OutputFormat,
    #[serde(default = "default_cap")]
    pub brute_cap: usize,
    /// Record wall time per trial. Off by default because it breaks
    /// byte-identical replays.
    #[serde(default)]
    pub timing: bool,
}

fn default_cap() -> usize {
    DEFAULT_BRUTE_CAP
}

impl ExperimentConfig {
    pub fn new(instance: InstanceSpec, algorithm: Algorithm, trials: u64, base_seed: u64) -> Self {
        Self {
            instance: InstanceSource::Inline(instance),
            reseed_instance: false,
            algorithm,
            trials,
            base_seed,
            format: OutputFormat::Json,
            brute_cap: DEFAULT_BRUTE_CAP,
            timing: false,
        }
    }

    pub fn trial_seed(&self, trial: u64) -> u64 {
        self.base_seed.wrapping_add(trial)
    }
}

/// Where a trial's optimum came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OptSource {
    Brute,
    Planted,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub algo: String,
    pub n: usize,
    pub k: Option<usize>,
    pub value: Option<i64>,
    pub opt: Option<i64>,
    pub opt_source: OptSource,
    #[serde(serialize_with = "ratio_json")]
    pub ratio: Option<f64>,
    pub calls: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn ratio_json<S: Serializer>(ratio: &Option<f64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match ratio {
        Some(r) if r.is_infinite() => s.serialize_str("inf"),
        Some(r) => s.serialize_f64(*r),
        None => s.serialize_none(),
    }
}

/// `OPT / value`: infinite when the algorithm scored nothing against a
/// positive optimum, 1 when both are zero, otherwise undefined for
/// non-positive values.
pub fn approximation_ratio(value: i64, opt: i64) -> Option<f64> {
    match (value, opt) {
        (v, o) if v > 0 && o > 0 => Some(o as f64 / v as f64),
        (v, o) if v <= 0 && o > 0 => Some(f64::INFINITY),
        (0, 0) => Some(1.0),
        _ => None,
    }
}

fn run_trial(spec: &InstanceSpec, config: &ExperimentConfig, trial: u64) -> TrialRecord {
    let seed = config.trial_seed(trial);
    let algo = config.algorithm.id().to_owned();
    let instance_spec = if config.reseed_instance {
        spec.reseeded(seed)
    } else {
        spec.clone()
    };
    let mut record = TrialRecord {
        trial,
        seed,
        algo,
        n: 0,
        k: None,
        value: None,
        opt: None,
        opt_source: OptSource::Unknown,
        ratio: None,
        calls: None,
        ms: None,
        error: None,
    };
    let instance = match instance_spec.build() {
        Ok(i) => i,
        Err(e) => {
            record.error = Some(e.to_string());
            return record;
        }
    };
    record.n = instance.n();
    record.k = instance.width();

    let algorithm = config.algorithm.with_seed(seed);
    let started = Instant::now();
    let mut oracle = CountingOracle::new(&instance);
    let report = match algorithm.run(&mut oracle) {
        Ok(r) => r,
        Err(e) => {
            record.error = Some(e.to_string());
            return record;
        }
    };
    let elapsed = started.elapsed();
    record.value = Some(report.value.get());
    record.calls = Some(report.oracle_calls);
    if config.timing {
        record.ms = Some(elapsed.as_secs_f64() * 1e3);
    }

    match optimum(&instance, &algorithm, &report, config.brute_cap) {
        Ok(Some((opt, source))) => {
            record.opt = Some(opt);
            record.opt_source = source;
            record.ratio = approximation_ratio(report.value.get(), opt);
        }
        Ok(None) => {}
        Err(e) => record.error = Some(format!("optimum: {e}")),
    }
    record
}

/// Ground-truth optimum on a separate oracle, so the trial's counter is untouched.
fn optimum(
    instance: &Instance,
    algorithm: &Algorithm,
    report: &crate::algorithms::SolveReport,
    cap: usize,
) -> Result<Option<(i64, OptSource)>> {
    if let Some((_, value)) = instance.planted_optimum() {
        return Ok(Some((value.get(), OptSource::Planted)));
    }
    if let Algorithm::Brute { .. } = algorithm {
        return Ok(Some((report.value.get(), OptSource::Brute)));
    }
    if instance.n() > cap {
        return Ok(None);
    }
    let mut fresh = CountingOracle::new(instance);
    let opt = solve_brute_force(&mut fresh, cap)?;
    Ok(Some((opt.value.get(), OptSource::Brute)))
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub trials: u64,
    pub failures: u64,
    pub ratio_min: Option<f64>,
    pub ratio_mean: Option<f64>,
    pub ratio_max: Option<f64>,
    /// Trials with a positive optimum and a non-positive value.
    pub unbounded_ratios: u64,
    pub value_mean: Option<f64>,
    pub calls_min: Option<u64>,
    pub calls_p50: Option<u64>,
    pub calls_p90: Option<u64>,
    pub calls_max: Option<u64>,
}

impl SuiteSummary {
    pub fn from_records(records: &[TrialRecord]) -> Self {
        let finite: Vec<f64> = records
            .iter()
            .filter_map(|r| r.ratio)
            .filter(|r| r.is_finite())
            .collect();
        let values: Vec<f64> = records.iter().filter_map(|r| r.value).map(|v| v as f64).collect();
        let mut calls: Vec<u64> = records.iter().filter_map(|r| r.calls).collect();
        calls.sort_unstable();
        let mean = |xs: &[f64]| (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64);
        Self {
            trials: records.len() as u64,
            failures: records.iter().filter(|r| r.error.is_some()).count() as u64,
            ratio_min: finite.iter().copied().reduce(f64::min),
            ratio_mean: mean(&finite),
            ratio_max: finite.iter().copied().reduce(f64::max),
            unbounded_ratios: records
                .iter()
                .filter(|r| r.ratio.is_some_and(f64::is_infinite))
                .count() as u64,
            value_mean: mean(&values),
            calls_min: calls.first().copied(),
            calls_p50: nearest_rank(&calls, 0.5),
            calls_p90: nearest_rank(&calls, 0.9),
            calls_max: calls.last().copied(),
        }
    }

    /// Multi-line human summary.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        let opt = |x: Option<f64>| x.map_or("-".to_owned(), |v| format!("{v:.4}"));
        let optu = |x: Option<u64>| x.map_or("-".to_owned(), |v| v.to_string());
        let _ = writeln!(out, "trials: {} (failures: {})", self.trials, self.failures);
        let _ = writeln!(
            out,
            "ratio min/mean/max: {} / {} / {} (unbounded: {})",
            opt(self.ratio_min),
            opt(self.ratio_mean),
            opt(self.ratio_max),
            self.unbounded_ratios
        );
        let _ = writeln!(out, "mean value: {}", opt(self.value_mean));
        let _ = write!(
            out,
            "oracle calls min/p50/p90/max: {} / {} / {} / {}",
            optu(self.calls_min),
            optu(self.calls_p50),
            optu(self.calls_p90),
            optu(self.calls_max)
        );
        out
    }
}

fn nearest_rank(sorted: &[u64], q: f64) -> Option<u64> {
    if sorted.is_empty() {
        return None;
    }
    let rank = (q * sorted.len() as f64).ceil().max(1.0) as usize;
    Some(sorted[rank.min(sorted.len()) - 1])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteResult {
    pub records: Vec<TrialRecord>,
    pub summary: SuiteSummary,
}

/// Runs every trial. Per-trial failures are recorded and do not stop the
/// suite; only an unreadable instance source is an error.
pub fn run_suite(config: &ExperimentConfig) -> Result<SuiteResult> {
    let spec = config.instance.resolve()?;
    if config.trials > 0 {
        // surface malformed fixed instances up front
        if !config.reseed_instance {
            spec.build()?;
        }
    }
    let records: Vec<TrialRecord> = (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial(&spec, config, trial))
        .collect();
    let summary = SuiteSummary::from_records(&records);
    Ok(SuiteResult { records, summary })
}

fn cell<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn ratio_cell(r: Option<f64>) -> String {
    match r {
        Some(r) if r.is_infinite() => "inf".to_owned(),
        Some(r) => r.to_string(),
        None => String::new(),
    }
}

pub fn write_csv<W: Write>(records: &[TrialRecord], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.trial,
            r.seed,
            r.algo,
            r.n,
            cell(r.k),
            cell(r.value),
            cell(r.opt),
            ratio_cell(r.ratio),
            cell(r.calls),
            r.ms.map(|ms| format!("{ms:.3}")).unwrap_or_default()
        )?;
    }
    Ok(())
}

pub fn write_json<W: Write>(result: &SuiteResult, mut out: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut out, result).map_err(io::Error::other)?;
    writeln!(out)
}

/// Renders a suite in the configured format.
pub fn render(result: &SuiteResult, format: OutputFormat) -> Result<Vec<u8>> {
    let mut buf = Vec::new();
    match format {
        OutputFormat::Csv => write_csv(&result.records, &mut buf)?,
        OutputFormat::Json => write_json(result, &mut buf)?,
    }
    Ok(buf)
}
