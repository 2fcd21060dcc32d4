//! Command-line front end. [`run`] parses arguments, writes the report to
//! `out` and diagnostics to `err`, and returns the process exit status.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::entropy::{self, EntropyError, EntropyParams, Param};
use crate::format::{format_number, format_vector};
use crate::lattice::{join, join_exact, meet, meet_exact};
use crate::properties::{check, PropertyCheckRecord, PropertyKind};
use crate::search::{self, parse_seed, SearchError, SweepConfig, DEFAULT_SEED};
use crate::simplex::{ExactDistribution, ProbabilityDistribution, SimplexError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Environment variable supplying the sweep seed when the config has none.
pub const SEED_ENV: &str = "MAJENT_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "majent",
    version,
    about = "Majorization lattice and Sharma-Mittal entropy toolkit"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an entropy of one distribution.
    Entropy(EntropyArgs),
    /// Meet (greatest lower bound) of two distributions.
    Meet(PairArgs),
    /// Join (least upper bound) of two distributions.
    Join(PairArgs),
    /// Majorization order between two distributions.
    Compare(PairArgs),
    /// Check one lattice inequality on a pair.
    Check(CheckArgs),
    /// Recompute the two published counterexamples at (alpha, beta) = (2, 3).
    #[command(name = "verify-paper")]
    VerifyReference(OutputArgs),
    /// Sweep a parameter grid for counterexamples.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Shannon,
    Renyi,
    Tsallis,
    SharmaMittal,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Significant digits for decimal output; the default prints the
    /// shortest form that parses back to the same float.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=17))]
    pub digits: Option<u8>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

impl OutputArgs {
    fn digits(&self) -> Option<usize> {
        self.digits.map(usize::from)
    }
}

#[derive(Debug, Args)]
pub struct EntropyArgs {
    /// Distribution, e.g. `0.5,0.25,0.25` or `1/2,1/4,1/4`.
    #[arg(long)]
    pub dist: String,
    /// A number, `inf`, or `limit-1`.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<String>,
    /// A number, `limit-1` or `limit-alpha`.
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<String>,
    #[arg(long, value_enum, default_value_t = FamilyArg::SharmaMittal)]
    pub family: FamilyArg,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub q: String,
    /// Use exact rational arithmetic.
    #[arg(long)]
    pub exact: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// subadditive, superadditive, generalized-sub-super, supermodular or submodular.
    #[arg(long)]
    pub property: PropertyKind,
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub q: String,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: String,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Configuration file of `key = value` lines.
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
    pub format: SweepFormat,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Overrides the seed from the config file and the environment.
    #[arg(long)]
    pub seed: Option<String>,
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=17))]
    pub digits: Option<u8>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] SimplexError),
    #[error(transparent)]
    Domain(#[from] EntropyError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Domain(EntropyError::InvalidParams(_)) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Search(SearchError::Entropy(EntropyError::InvalidParams(_))) => EXIT_USAGE,
            CliError::Search(SearchError::Entropy(_)) => EXIT_DOMAIN,
            CliError::Search(SearchError::GuaranteeContradiction { .. }) => EXIT_FAILURE,
            CliError::Search(_) => EXIT_USAGE,
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn io_error(path: impl Into<String>) -> impl FnOnce(std::io::Error) -> CliError {
    let path = path.into();
    move |source| CliError::Io { path, source }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(io_error("<stdout>"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}

pub fn parse_param(text: &str) -> Result<Param, CliError> {
    match text.trim().to_ascii_lowercase().as_str() {
        "limit-1" => Ok(Param::Limit1),
        "limit-alpha" | "alpha" => Ok(Param::LimitAlpha),
        "inf" | "infinity" | "+inf" => Ok(Param::Infinity),
        other => other
            .parse::<f64>()
            .map(Param::from_value)
            .map_err(|_| CliError::Usage(format!("invalid parameter {text:?}"))),
    }
}

/// Numeric pairs go through [`EntropyParams::from_values`], so `β = α` is
/// recognized as the limit branch.
pub fn parse_params(alpha: &str, beta: &str) -> Result<EntropyParams, CliError> {
    match (alpha.trim().parse::<f64>(), beta.trim().parse::<f64>()) {
        (Ok(a), Ok(b)) => Ok(EntropyParams::from_values(a, b)?),
        _ => Ok(EntropyParams::new(parse_param(alpha)?, parse_param(beta)?)?),
    }
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Entropy(args) => entropy_command(args, out),
        Command::Meet(args) => lattice_command("meet", args, out),
        Command::Join(args) => lattice_command("join", args, out),
        Command::Compare(args) => compare_command(args, out),
        Command::Check(args) => check_command(args, out),
        Command::VerifyReference(args) => verify_command(args, out),
        Command::Sweep(args) => sweep_command(args, out),
    }
}

fn entropy_command(args: &EntropyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = ProbabilityDistribution::parse(&args.dist)?;
    let require = |v: &Option<String>, name: &str| {
        v.clone()
            .ok_or_else(|| CliError::Usage(format!("--{name} is required for this family")))
    };
    let value = match args.family {
        FamilyArg::Shannon => entropy::shannon(&p),
        FamilyArg::Renyi => entropy::renyi(&p, parse_param(&require(&args.alpha, "alpha")?)?)?,
        FamilyArg::Tsallis => entropy::tsallis(&p, parse_param(&require(&args.alpha, "alpha")?)?)?,
        FamilyArg::SharmaMittal => {
            let params = parse_params(
                &require(&args.alpha, "alpha")?,
                &require(&args.beta, "beta")?,
            )?;
            entropy::sharma_mittal(&p, &params)?
        }
    };
    let text = match args.output.format {
        OutputFormat::Json => to_json(&value),
        OutputFormat::Text => format!("{}\n", format_number(value.value, args.output.digits())),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct LatticeReport<T: Serialize> {
    operation: &'static str,
    exact: bool,
    p: T,
    q: T,
    result: T,
}

fn lattice_command(
    op: &'static str,
    args: &PairArgs,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let text = if args.exact {
        let p = ExactDistribution::parse(&args.p)?;
        let q = ExactDistribution::parse(&args.q)?;
        let r = if op == "meet" {
            meet_exact(&p, &q)
        } else {
            join_exact(&p, &q)
        };
        match args.output.format {
            OutputFormat::Text => format!("{r}\n"),
            OutputFormat::Json => to_json(&LatticeReport {
                operation: op,
                exact: true,
                p: p.to_strings(),
                q: q.to_strings(),
                result: r.to_strings(),
            }),
        }
    } else {
        let p = ProbabilityDistribution::parse(&args.p)?;
        let q = ProbabilityDistribution::parse(&args.q)?;
        let r = if op == "meet" {
            meet(&p, &q)
        } else {
            join(&p, &q)
        };
        match args.output.format {
            OutputFormat::Text => format!("{}\n", format_vector(r.weights(), args.output.digits())),
            OutputFormat::Json => to_json(&LatticeReport {
                operation: op,
                exact: false,
                p,
                q,
                result: r,
            }),
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn compare_command(args: &PairArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let order = if args.exact {
        ExactDistribution::parse(&args.p)?.compare(&ExactDistribution::parse(&args.q)?)
    } else {
        ProbabilityDistribution::parse(&args.p)?.compare(&ProbabilityDistribution::parse(&args.q)?)
    };
    let text = match args.output.format {
        OutputFormat::Text => format!("{order}\n"),
        OutputFormat::Json => to_json(&serde_json::json!({ "order": order, "exact": args.exact })),
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn render_check(record: &PropertyCheckRecord, digits: Option<usize>) -> String {
    let num = |x: f64| format_number(x, digits);
    let vec = |p: &ProbabilityDistribution| format_vector(p.weights(), digits);
    let mut lines = vec![
        format!("property: {}", record.kind),
        format!("params: {}", record.params),
        format!("p: {}", vec(&record.p)),
        format!("q: {}", vec(&record.q)),
        format!("meet: {}", vec(&record.meet)),
    ];
    if let Some(j) = &record.join {
        lines.push(format!("join: {}", vec(j)));
    }
    lines.push(format!("entropy_p: {}", num(record.entropy_p)));
    lines.push(format!("entropy_q: {}", num(record.entropy_q)));
    lines.push(format!("entropy_meet: {}", num(record.entropy_meet)));
    if let Some(sj) = record.entropy_join {
        lines.push(format!("entropy_join: {}", num(sj)));
    }
    lines.push(format!("lhs: {}", num(record.lhs)));
    lines.push(format!("rhs: {}", num(record.rhs)));
    lines.push(format!("margin: {}", num(record.margin)));
    if let Some(d) = record.dual_margin {
        lines.push(format!("dual_margin: {}", num(d)));
    }
    lines.push(format!("holds: {}", record.holds));
    lines.push(format!("tight: {}", record.tight));
    lines.join("\n") + "\n"
}

/// Exits with [`EXIT_FAILURE`] when the inequality does not hold.
fn check_command(args: &CheckArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let p = ProbabilityDistribution::parse(&args.p)?;
    let q = ProbabilityDistribution::parse(&args.q)?;
    let params = parse_params(&args.alpha, &args.beta)?;
    let record = check(args.property, &p, &q, &params)?;
    let text = match args.output.format {
        OutputFormat::Json => to_json(&record),
        OutputFormat::Text => render_check(&record, args.output.digits()),
    };
    emit(out, &text)?;
    Ok(if record.holds { EXIT_OK } else { EXIT_FAILURE })
}

fn verify_command(args: &OutputArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let results = search::verify_reference_counterexamples();
    let passed = results.iter().all(|r| r.passed());
    let text = match args.format {
        OutputFormat::Json => {
            to_json(&serde_json::json!({ "passed": passed, "counterexamples": results }))
        }
        OutputFormat::Text => {
            let digits = args.digits();
            let mut s = String::new();
            for r in &results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                s.push_str(&format!(
                    "[{status}] {} {} margin={}\n",
                    r.name,
                    r.record.params,
                    format_number(r.record.margin, digits)
                ));
                for v in &r.values {
                    s.push_str(&format!(
                        "  {} expected={} computed={} error={}{}\n",
                        v.label,
                        format_number(v.expected, digits),
                        format_number(v.actual, digits),
                        format_number(v.error, Some(3)),
                        if v.ok { "" } else { " MISMATCH" }
                    ));
                }
            }
            s.push_str(if passed {
                "all counterexamples reproduced\n"
            } else {
                "verification failed\n"
            });
            s
        }
    };
    emit(out, &text)?;
    Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
}

/// Seed precedence: `--seed`, then the config file, then `MAJENT_SEED`,
/// then [`DEFAULT_SEED`].
fn sweep_command(args: &SweepArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let path = args.config.display().to_string();
    let text = std::fs::read_to_string(&args.config).map_err(io_error(path))?;
    let fallback = match std::env::var(SEED_ENV) {
        Ok(v) => parse_seed(&v).map_err(|e| CliError::Usage(format!("{SEED_ENV}: {e}")))?,
        Err(_) => DEFAULT_SEED,
    };
    let mut config = SweepConfig::parse(&text, fallback)?;
    if let Some(seed) = &args.seed {
        config.seed = parse_seed(seed).map_err(CliError::Usage)?;
    }
    let report = search::sweep(&config)?;
    let rendered = match args.format {
        SweepFormat::Csv => report.to_csv(args.digits.map(usize::from)),
        SweepFormat::Json => report.to_json() + "\n",
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, rendered).map_err(io_error(path.display().to_string()))?
        }
        None => emit(out, &rendered)?,
    }
    Ok(EXIT_OK)
}
