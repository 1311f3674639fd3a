use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use xos_core::algorithms::{Algorithm, EnumParams, Epsilon, ProbeParams, SamplingParams, DEFAULT_BRUTE_CAP};
use xos_core::classify::{check_class, check_star_condition, materialize, SetFunctionClass, Verdict};
use xos_core::experiment::{render, run_suite, ExperimentConfig, InstanceSource, OutputFormat, SuiteResult};
use xos_core::generate::{random_star_xos, random_xos};
use xos_core::instance::{HardGeneralParams, HardKxosParams, Instance, InstanceSpec, NeedleParams};
use xos_core::{ValueOracle, XosError};

#[derive(Parser)]
#[command(name = "xosmax", version, about = "Maximize XOS set functions through a value oracle")]
struct Cli {
    /// Seed for generators, or the base seed of a trial suite.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Write machine output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest n for which OPT (or the brute solver) enumerates all subsets.
    #[arg(long, global = true)]
    brute_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write an instance file.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Run a solver on an instance file.
    Solve(SolveArgs),
    /// Run a suite described by a JSON config.
    Bench {
        #[arg(long)]
        config: PathBuf,
    },
    /// Class checks and the star condition for a small instance.
    Verify {
        #[arg(long)]
        instance: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Rows separated by ';', weights by ','.
    Explicit {
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
    },
    Needle {
        #[arg(long)]
        n_hat: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    HardGeneral {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        tau: i64,
        /// Use max(g, τ) instead of the standard form.
        #[arg(long)]
        remark: bool,
    },
    HardKxos {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ntilde: usize,
        #[arg(long)]
        a: usize,
    },
    /// Random explicit instance with weights in [lo, hi].
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = -8, allow_hyphen_values = true)]
        lo: i64,
        #[arg(long, default_value_t = 8, allow_hyphen_values = true)]
        hi: i64,
        /// Satisfy the star condition.
        #[arg(long)]
        star: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoId {
    Enum,
    Sample,
    Exact2,
    Kminus1,
    Star,
    Brute,
    Probe,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    algo: AlgoId,
    #[arg(long)]
    instance: PathBuf,
    /// Rational `p/q` for enum and sample.
    #[arg(long, default_value = "1/2")]
    epsilon: String,
    /// Samples per subset size, replacing the default budget.
    #[arg(long)]
    budget: Option<u64>,
    /// Always sample, even where the sampler would enumerate.
    #[arg(long)]
    no_fallback: bool,
    #[arg(long, default_value_t = 1)]
    trials: u64,
    /// Draw a fresh hidden instance per trial from the trial seed.
    #[arg(long)]
    reseed: bool,
    /// Probe: number of random queries.
    #[arg(long, default_value_t = 1000)]
    queries: u64,
    /// Probe: size of each random query.
    #[arg(long)]
    size: Option<usize>,
    /// Record wall time per trial (breaks byte-identical replays).
    #[arg(long)]
    timing: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn args(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<XosError> for Failure {
    fn from(e: XosError) -> Self {
        let code = match e {
            XosError::InvalidParams(_) | XosError::GroundSize(_) => 2,
            XosError::CapExceeded { .. } => 4,
            _ => 3,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 3, message: e.to_string() }
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Gen(cmd) => gen(cli, cmd),
        Command::Solve(args) => solve(cli, args),
        Command::Bench { config } => bench(cli, config),
        Command::Verify { instance } => verify(cli, instance),
    }
}

fn emit(cli: &Cli, bytes: &[u8]) -> CliResult {
    match &cli.out {
        Some(path) => fs::write(path, bytes)?,
        None => io::stdout().write_all(bytes)?,
    }
    Ok(())
}

fn parse_weights(text: &str) -> CliResult<Vec<Vec<i64>>> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|w| {
                    w.trim()
                        .parse::<i64>()
                        .map_err(|_| Failure::args(format!("bad weight {w:?}")))
                })
                .collect()
        })
        .collect()
}

fn gen(cli: &Cli, cmd: &GenCommand) -> CliResult {
    let seed = cli.seed.unwrap_or(0);
    let spec = match cmd {
        GenCommand::Explicit { weights } => {
            let weights = parse_weights(weights)?;
            let n = weights[0].len();
            InstanceSpec::Explicit { n, weights }
        }
        GenCommand::Needle { n_hat, s, t } => InstanceSpec::Needle {
            params: NeedleParams { n_hat: *n_hat, s: *s, t: *t },
            seed,
        },
        GenCommand::HardGeneral { n, tau, remark } => {
            let params = HardGeneralParams { n: *n, tau: *tau };
            if *remark {
                InstanceSpec::HardGeneralRemark { params, seed }
            } else {
                InstanceSpec::HardGeneral { params, seed }
            }
        }
        GenCommand::HardKxos { k, ntilde, a } => InstanceSpec::HardKxos {
            params: HardKxosParams { k: *k, n_tilde: *ntilde, a: *a },
            seed,
        },
        GenCommand::Random { n, k, lo, hi, star } => {
            let rep = if *star {
                random_star_xos(*n, *k, *lo, *hi, seed)?
            } else {
                random_xos(*n, *k, *lo, *hi, seed)?
            };
            InstanceSpec::from(&rep)
        }
    };
    let instance = spec.build()?;
    let width = instance.width().map_or("-".to_owned(), |k| k.to_string());
    eprintln!("{}: n = {}, width = {width}", spec.type_name(), instance.n());
    let mut text = spec.to_json();
    text.push('\n');
    emit(cli, text.as_bytes())
}

fn algorithm(cli: &Cli, args: &SolveArgs, instance: &Instance) -> CliResult<Algorithm> {
    let epsilon = || -> CliResult<Epsilon> { Ok(args.epsilon.parse::<Epsilon>()?) };
    Ok(match args.algo {
        AlgoId::Enum => Algorithm::Enum(EnumParams { epsilon: epsilon()? }),
        AlgoId::Sample => Algorithm::Sample(SamplingParams {
            sample_budget_override: args.budget,
            allow_fallback: !args.no_fallback,
            ..SamplingParams::new(epsilon()?, 0)
        }),
        AlgoId::Exact2 => Algorithm::Exact2,
        AlgoId::Kminus1 => Algorithm::Kminus1,
        AlgoId::Star => Algorithm::Star,
        AlgoId::Brute => {
            let cap = cli.brute_cap.unwrap_or(DEFAULT_BRUTE_CAP);
            if instance.n() > cap {
                return Err(XosError::CapExceeded { n: instance.n(), cap }.into());
            }
            Algorithm::Brute { cap }
        }
        AlgoId::Probe => Algorithm::Probe(ProbeParams {
            queries: args.queries,
            size: args
                .size
                .ok_or_else(|| Failure::args("--size is required for --algo probe"))?,
            seed: 0,
        }),
    })
}

fn finish(cli: &Cli, format: OutputFormat, result: &SuiteResult) -> CliResult {
    for r in &result.records {
        if let Some(e) = &r.error {
            eprintln!("trial {}: {e}", r.trial);
        }
    }
    eprintln!("{}", result.summary.describe());
    emit(cli, &render(result, format)?)
}

fn solve(cli: &Cli, args: &SolveArgs) -> CliResult {
    let spec = InstanceSpec::load(&args.instance)?;
    let instance = spec.build()?;
    let algorithm = algorithm(cli, args, &instance)?;
    let mut config = ExperimentConfig::new(spec, algorithm, args.trials, cli.seed.unwrap_or(0));
    config.reseed_instance = args.reseed;
    config.timing = args.timing;
    if let Some(cap) = cli.brute_cap {
        config.brute_cap = cap;
    }
    let format = cli.format.map_or(OutputFormat::Json, Into::into);
    let result = run_suite(&config)?;
    finish(cli, format, &result)?;
    // a single failed trial is the command's failure
    match result.records.as_slice() {
        [only] if only.error.is_some() => Err(Failure {
            code: 3,
            message: only.error.clone().unwrap_or_default(),
        }),
        _ => Ok(()),
    }
}

fn bench(cli: &Cli, path: &Path) -> CliResult {
    let text = fs::read_to_string(path)?;
    let mut config: ExperimentConfig =
        serde_json::from_str(&text).map_err(|e| Failure::args(format!("bad config: {e}")))?;
    // relative instance paths are resolved against the config file
    if let InstanceSource::Path(p) = &config.instance {
        if p.is_relative() {
            if let Some(dir) = path.parent() {
                config.instance = InstanceSource::Path(dir.join(p));
            }
        }
    }
    if let Some(seed) = cli.seed {
        config.base_seed = seed;
    }
    if let Some(cap) = cli.brute_cap {
        config.brute_cap = cap;
    }
    let format = cli.format.map_or(config.format, Into::into);
    let result = run_suite(&config)?;
    finish(cli, format, &result)
}

fn verdict_json(v: &Verdict) -> serde_json::Value {
    serde_json::json!({
        "holds": v.holds,
        "witness": v.witness.map(|w| [w.x.to_string(), w.y.to_string()]),
    })
}

fn verify(cli: &Cli, path: &Path) -> CliResult {
    let instance = InstanceSpec::load(path)?.build()?;
    let dense = materialize(&instance)?;
    let mut checks = Vec::new();
    for class in SetFunctionClass::ALL {
        checks.push((class.name().to_owned(), check_class(&dense, class)?));
    }
    let star = instance.representation().as_ref().map(check_star_condition);

    for (name, v) in &checks {
        match v.witness {
            Some(w) if !v.holds => eprintln!("{name}: false (witness X = {}, Y = {})", w.x, w.y),
            _ => eprintln!("{name}: {}", v.holds),
        }
    }
    match &star {
        Some((true, _)) => eprintln!("star: true"),
        Some((false, w)) => {
            let w = w.expect("failed star check carries a witness");
            eprintln!("star: false (element {}, component {})", w.element, w.component);
        }
        None => eprintln!("star: no representation"),
    }

    let bytes = match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut report = serde_json::Map::new();
            report.insert("n".into(), instance.ground().len().into());
            for (name, v) in &checks {
                report.insert(name.clone(), verdict_json(v));
            }
            report.insert(
                "star".into(),
                match &star {
                    Some((holds, w)) => serde_json::json!({ "holds": holds, "witness": w }),
                    None => serde_json::Value::Null,
                },
            );
            let mut text = serde_json::to_string_pretty(&report).map_err(XosError::from)?;
            text.push('\n');
            text.into_bytes()
        }
        Format::Csv => {
            let mut text = String::from("check,holds,witness_x,witness_y\n");
            for (name, v) in &checks {
                let (x, y) = v
                    .witness
                    .map_or((String::new(), String::new()), |w| (w.x.to_string(), w.y.to_string()));
                text.push_str(&format!("{name},{},\"{x}\",\"{y}\"\n", v.holds));
            }
            if let Some((holds, w)) = &star {
                let (e, c) = w.map_or((String::new(), String::new()), |w| {
                    (w.element.to_string(), w.component.to_string())
                });
                text.push_str(&format!("star,{holds},{e},{c}\n"));
            }
            text.into_bytes()
        }
    };
    emit(cli, &bytes)
}
