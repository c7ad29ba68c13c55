use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use compsearch::analytic::{psi0, psi1, psi2, psi2a, psi3, target_output};
use compsearch::circuit::{PSI0, PSI1, PSI2, PSI2A, PSI3};
use compsearch::refutation::{
    check_oracle, compare_grover, sweep_all_f, OracleVerdict, SweepConfig,
};
use compsearch::{
    build_devries, Amplitude, Backend, BitString, BooleanOracle, DyadicReal, FloatComplex,
    StateVector,
};

use crate::error::{exit_code, CliError};
use crate::report::{
    basis_label, AmplitudeEntry, AmplitudeValue, CheckpointReport, Format, GroverResults,
    Parameters, ReportDocument, Results, TraceResults, VerifyResults,
};

pub const EXACT_CAP_ENV: &str = "COMPSEARCH_EXACT_MAX_N";
pub const DEFAULT_SAMPLES: u64 = 100_000;
pub const DEFAULT_SEED: u64 = 0;
/// Largest `n` whose states `trace` prints in full.
pub const TRACE_MAX_N: usize = 4;
/// Largest `n` for a single-oracle float verification (`2^{2n}` amplitudes).
pub const VERIFY_FLOAT_MAX_N: usize = 12;

#[derive(Debug, Parser)]
#[command(
    name = "compsearch",
    version,
    about = "Simulate and verify the comparison-search circuit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check circuit output against the closed form for one oracle or all of them.
    Verify(VerifyArgs),
    /// Print every checkpoint state next to its analytic value.
    Trace(TraceArgs),
    /// Sweep oracles and write a verdict per oracle.
    Sweep(SweepArgs),
    /// Marked-element probability with and without Grover amplification.
    GroverCompare(GroverArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Self {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Marked inputs, comma separated.
    #[arg(long, value_delimiter = ',', conflicts_with = "truth_table")]
    pub marked: Vec<u64>,
    /// Truth table in hex, least significant bit = f(0).
    #[arg(long)]
    pub truth_table: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub n: usize,
    /// Defaults to exact for n <= 3, float otherwise.
    #[arg(long, value_enum)]
    pub backend: Option<BackendArg>,
    /// Check every oracle instead of a single one.
    #[arg(long, conflicts_with_all = ["marked", "truth_table"])]
    pub all_f: bool,
    #[command(flatten)]
    pub oracle: OracleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub backend: Option<BackendArg>,
    #[command(flatten)]
    pub oracle: OracleArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub backend: Option<BackendArg>,
    /// Seed for the oracle sample when the exhaustive sweep is too large.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct GroverArgs {
    #[arg(long)]
    pub n: usize,
    /// The single marked input.
    #[arg(long, value_delimiter = ',')]
    pub marked: Vec<u64>,
    /// Empirical draws per circuit; 0 skips sampling.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// A finished command: its report and whether its checks passed.
pub struct Outcome {
    pub document: ReportDocument,
    pub passed: bool,
}

fn default_backend(n: usize, requested: Option<BackendArg>) -> Backend {
    match requested {
        Some(b) => b.into(),
        None if n <= 3 => Backend::Exact,
        None => Backend::Float,
    }
}

fn require_positive(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    Ok(())
}

fn exact_cap() -> Result<usize, CliError> {
    let default = SweepConfig::default().exact_max_n;
    match std::env::var(EXACT_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{EXACT_CAP_ENV}={v:?} is not a valid integer"))),
        Err(std::env::VarError::NotPresent) => Ok(default),
        Err(e) => Err(CliError::Usage(format!("{EXACT_CAP_ENV}: {e}"))),
    }
}

fn sweep_config(seed: u64) -> Result<SweepConfig, CliError> {
    Ok(SweepConfig {
        seed,
        exact_max_n: exact_cap()?,
        ..SweepConfig::default()
    })
}

fn check_exact_cap(n: usize, backend: Backend) -> Result<(), CliError> {
    let cap = exact_cap()?;
    if backend == Backend::Exact && n > cap {
        return Err(CliError::Usage(format!(
            "exact backend is capped at n <= {cap} (set {EXACT_CAP_ENV} to raise it)"
        )));
    }
    Ok(())
}

fn parse_oracle(n: usize, args: &OracleArgs) -> Result<BooleanOracle, CliError> {
    if let Some(hex) = &args.truth_table {
        return Ok(BooleanOracle::from_hex(n, hex)?);
    }
    let marked = args
        .marked
        .iter()
        .map(|&k| {
            usize::try_from(k)
                .map_err(|_| CliError::Usage(format!("marked index {k} is too large")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BooleanOracle::from_marked(n, &marked)?)
}

fn document(command: &'static str, parameters: Parameters, results: Results) -> ReportDocument {
    ReportDocument {
        command,
        parameters,
        results,
        tool_version: env!("CARGO_PKG_VERSION"),
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    require_positive(args.n)?;
    let n = args.n;
    let backend = default_backend(n, args.backend);
    let mut parameters = Parameters {
        n,
        backend: Some(backend),
        all_f: Some(args.all_f),
        ..Parameters::default()
    };

    let results = if args.all_f {
        let config = sweep_config(DEFAULT_SEED)?;
        let exhaustive = n < 6 && (1u64 << (1u64 << n)) <= config.max_exhaustive_oracles;
        if !exhaustive {
            return Err(CliError::Usage(format!(
                "--all-f at n = {n} would need 2^{} oracles; use `sweep` for a sampled run",
                1u64 << n
            )));
        }
        let report = sweep_all_f(n, backend, &config)?;
        VerifyResults {
            mode: "exhaustive",
            oracles_checked: report.oracle_count,
            oracles_matched: report.matched,
            max_deviation: report.max_deviation,
            max_norm_drift: report.max_norm_drift,
            passed: report.all_passed(),
            verdicts: report.verdicts,
        }
    } else {
        check_exact_cap(n, backend)?;
        if backend == Backend::Float && n > VERIFY_FLOAT_MAX_N {
            return Err(CliError::Usage(format!(
                "float verification is capped at n <= {VERIFY_FLOAT_MAX_N}"
            )));
        }
        let f = parse_oracle(n, &args.oracle)?;
        parameters.oracle = Some(f.to_hex());
        let (matches, max_deviation, norm_drift) = match backend {
            Backend::Exact => {
                let c = check_oracle::<DyadicReal>(n, &f)?;
                (c.matches, c.max_deviation, c.norm_drift)
            }
            Backend::Float => {
                let c = check_oracle::<FloatComplex>(n, &f)?;
                (c.matches, c.max_deviation, c.norm_drift)
            }
        };
        VerifyResults {
            mode: "single",
            oracles_checked: 1,
            oracles_matched: usize::from(matches),
            max_deviation,
            max_norm_drift: norm_drift,
            passed: matches,
            verdicts: vec![OracleVerdict {
                oracle_id: f.to_hex(),
                exact_match: matches,
                max_dev: max_deviation,
                tv_to_first: 0.0,
            }],
        }
    };

    let passed = results.passed;
    Ok(Outcome {
        document: document("verify", parameters, Results::Verify(results)),
        passed,
    })
}

/// Amplitudes that can be written into a report.
pub trait ReportAmplitude: Amplitude {
    fn report_value(&self) -> AmplitudeValue;
}

impl ReportAmplitude for DyadicReal {
    fn report_value(&self) -> AmplitudeValue {
        AmplitudeValue::exact(self)
    }
}

impl ReportAmplitude for FloatComplex {
    fn report_value(&self) -> AmplitudeValue {
        AmplitudeValue::Float {
            re: self.re,
            im: self.im,
        }
    }
}

fn nonzero_entries<A: ReportAmplitude>(s: &StateVector<A>) -> Vec<AmplitudeEntry> {
    s.amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(x, a)| AmplitudeEntry {
            basis: basis_label(x, s.num_qubits()),
            amplitude: a.report_value(),
        })
        .collect()
}

fn trace_generic<A: ReportAmplitude>(
    n: usize,
    f: &BooleanOracle,
) -> Result<TraceResults, CliError> {
    let trace = build_devries(n, f)?.run_with_trace(StateVector::<A>::zero_state(2 * n)?)?;
    let mut checkpoints = Vec::with_capacity(trace.len());
    for (label, simulated) in trace.checkpoints() {
        let analytic = match label.as_str() {
            PSI0 => psi0::<A>(n)?,
            PSI1 => psi1::<A>(n)?,
            PSI2 => psi2::<A>(n, f)?,
            PSI2A => psi2a::<A>(n, f)?,
            PSI3 => psi3::<A>(n, f)?,
            other => return Err(CliError::Internal(format!("unexpected checkpoint {other}"))),
        };
        checkpoints.push(CheckpointReport {
            label: label.clone(),
            simulated: nonzero_entries(simulated),
            analytic: nonzero_entries(&analytic),
            matches: simulated.agrees_with(&analytic),
        });
    }
    let output_matches_target = trace.output().agrees_with(&target_output::<A>(n, f)?);
    let passed = output_matches_target && checkpoints.iter().all(|c| c.matches);
    Ok(TraceResults {
        checkpoints,
        output_matches_target,
        passed,
    })
}

pub fn trace(args: &TraceArgs) -> Result<Outcome, CliError> {
    require_positive(args.n)?;
    let n = args.n;
    if n > TRACE_MAX_N {
        return Err(CliError::Usage(format!(
            "trace prints full states and is limited to n <= {TRACE_MAX_N}"
        )));
    }
    let backend = default_backend(n, args.backend);
    let f = parse_oracle(n, &args.oracle)?;
    let results = match backend {
        Backend::Exact => trace_generic::<DyadicReal>(n, &f)?,
        Backend::Float => trace_generic::<FloatComplex>(n, &f)?,
    };
    let parameters = Parameters {
        n,
        backend: Some(backend),
        oracle: Some(f.to_hex()),
        ..Parameters::default()
    };
    let passed = results.passed;
    Ok(Outcome {
        document: document("trace", parameters, Results::Trace(results)),
        passed,
    })
}

pub fn sweep(args: &SweepArgs) -> Result<Outcome, CliError> {
    require_positive(args.n)?;
    let backend = default_backend(args.n, args.backend);
    let report = sweep_all_f(args.n, backend, &sweep_config(args.seed)?)?;
    let parameters = Parameters {
        n: args.n,
        backend: Some(backend),
        seed: Some(args.seed),
        ..Parameters::default()
    };
    let passed = report.all_passed();
    Ok(Outcome {
        document: document("sweep", parameters, Results::Sweep(report)),
        passed,
    })
}

pub fn grover_compare(args: &GroverArgs) -> Result<Outcome, CliError> {
    require_positive(args.n)?;
    let marked = match args.marked.as_slice() {
        [k] => *k,
        [] => return Err(CliError::Usage("--marked is required".into())),
        _ => {
            return Err(CliError::Usage(
                "grover-compare takes exactly one marked index".into(),
            ))
        }
    };
    if args.n > 63 || marked >> args.n != 0 {
        return Err(CliError::Usage(format!(
            "marked index {marked} is outside 0..2^{}",
            args.n
        )));
    }
    let comparison = compare_grover(
        args.n,
        &BitString::new(marked, args.n)?,
        args.samples,
        args.seed,
    )?;
    let passed = comparison.devries_prob_is_uniform;
    let results = GroverResults {
        devries_prob_exact: AmplitudeValue::exact(&comparison.devries_prob_exact),
        comparison,
    };
    let parameters = Parameters {
        n: args.n,
        marked: Some(marked),
        seed: Some(args.seed),
        samples: Some(args.samples),
        ..Parameters::default()
    };
    Ok(Outcome {
        document: document(
            "grover-compare",
            parameters,
            Results::GroverCompare(results),
        ),
        passed,
    })
}

fn summary(doc: &ReportDocument, passed: bool) -> String {
    let verdict = if passed { "PASS" } else { "FAIL" };
    let mut out = String::new();
    match &doc.results {
        Results::Verify(v) => {
            out += &format!(
                "verify n={} ({}): {}/{} oracles match, max deviation {:e}, max norm drift {:e}\n",
                doc.parameters.n,
                v.mode,
                v.oracles_matched,
                v.oracles_checked,
                v.max_deviation,
                v.max_norm_drift
            );
        }
        Results::Trace(t) => {
            for c in &t.checkpoints {
                out += &format!(
                    "{} [{}]\n",
                    c.label,
                    if c.matches { "match" } else { "MISMATCH" }
                );
                for e in &c.simulated {
                    out += &format!("  {}  {}\n", e.basis, e.amplitude);
                }
            }
            out += &format!("output equals closed form: {}\n", t.output_matches_target);
        }
        Results::Sweep(s) => {
            out += &format!(
                "sweep n={} {} ({:?}): {}/{} oracles match, max deviation {:e}, \
                 max pairwise TV {:e}, uniform marginals: {}\n",
                s.n,
                s.backend,
                s.mode,
                s.matched,
                s.oracle_count,
                s.max_deviation,
                s.max_pairwise_tv,
                s.marginal_uniform
            );
        }
        Results::GroverCompare(g) => {
            let c = &g.comparison;
            out += &format!("n={} marked={}\n", c.n, c.marked);
            out += &format!(
                "{:<18}{:>14}{:>14}\n",
                "circuit", "probability", "empirical"
            );
            let (dv, gv) = match &c.empirical {
                Some(e) => (
                    e.devries_marked_frequency.to_string(),
                    e.grover_marked_frequency.to_string(),
                ),
                None => ("-".into(), "-".into()),
            };
            out += &format!(
                "{:<18}{:>14.6}{:>14}\n",
                "comparison-search", c.devries_prob, dv
            );
            out += &format!(
                "{:<18}{:>14.6}{:>14}\n",
                format!("grover (t={})", c.grover_iterations),
                c.grover_prob,
                gv
            );
            out += &format!(
                "comparison-search probability exactly {}\n",
                g.devries_prob_exact
            );
        }
    }
    out += verdict;
    out.push('\n');
    out
}

fn emit(outcome: &Outcome, output: &OutputArgs) -> Result<(), CliError> {
    match (&output.out, output.format) {
        (Some(path), format) => {
            let rendered = outcome.document.render(format.unwrap_or(Format::Json))?;
            crate::report::write_atomic(path, &rendered)?;
            print!("{}", summary(&outcome.document, outcome.passed));
        }
        (None, Some(format)) => print!("{}", outcome.document.render(format)?),
        (None, None) => print!("{}", summary(&outcome.document, outcome.passed)),
    }
    Ok(())
}

fn dispatch(command: &Command) -> Result<i32, CliError> {
    let start = Instant::now();
    let (outcome, output) = match command {
        Command::Verify(a) => (verify(a)?, &a.output),
        Command::Trace(a) => (trace(a)?, &a.output),
        Command::Sweep(a) => (sweep(a)?, &a.output),
        Command::GroverCompare(a) => (grover_compare(a)?, &a.output),
    };
    emit(&outcome, output)?;
    eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    Ok(if outcome.passed {
        exit_code::SUCCESS
    } else {
        exit_code::VERIFICATION_FAILED
    })
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                exit_code::USAGE_ERROR
            } else {
                exit_code::SUCCESS
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
