use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hankel_approx::driver::{self, Family, Method, OutputFormat, RunConfig};
use hankel_approx::emit::emit;
use hankel_approx::moments::{moments_to_csv, moments_to_json};
use hankel_approx::Error;

const EXIT_VALIDATION: u8 = 2;
const EXIT_POSITIVITY: u8 = 3;
const EXIT_IO: u8 = 4;

/// Rational approximations to L(e_0) from Hankel determinants of moments.
#[derive(Parser)]
#[command(name = "hankel-approx", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Gamma,
    Gompertz,
    Zeta,
    Factorial,
    Custom,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Gamma => Family::Gamma,
            FamilyArg::Gompertz => Family::Gompertz,
            FamilyArg::Zeta => Family::Zeta,
            FamilyArg::Factorial => Family::Factorial,
            FamilyArg::Custom => Family::Custom,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Det,
    Ortho,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Det => Method::Det,
            MethodArg::Ortho => Method::Ortho,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MomentFormatArg {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct SequenceArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// zeta(k) argument.
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=64))]
    k: u32,
    /// Moment file for --family custom.
    #[arg(long)]
    moments_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute P_n/Q_n for n = 0..=N.
    Approx {
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long)]
        n_max: usize,
        /// Defaults to both for built-in families, ortho for custom.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        digits: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: FormatArg,
        /// Print full rationals in table format.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the moments a_1..a_N.
    Moments {
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: MomentFormatArg,
    },
    /// Cross-check both engines and the structural properties for n = 0..=N.
    Validate {
        #[command(flatten)]
        seq: SequenceArgs,
        #[arg(long)]
        n_max: usize,
    },
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::PositivityViolation { .. } | Error::NonPositiveQ { .. } => EXIT_POSITIVITY,
        Error::EngineMismatch { .. } | Error::OrthogonalityViolation { .. } => EXIT_VALIDATION,
        _ => EXIT_IO,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Approx {
            seq,
            n_max,
            method,
            digits,
            format,
            exact,
            out,
        } => {
            let config = RunConfig {
                family: seq.family.into(),
                k: seq.k,
                n_max,
                method: method.map(Into::into),
                digits: digits as usize,
                format: format.into(),
                exact,
                moments_file: seq.moments_file,
                out,
            };
            let outcome = driver::run_convergence(&config)?;
            let text = emit(&outcome.records, config.format, config.exact, config.out.as_deref())?;
            if config.out.is_none() {
                print!("{text}");
            }
            match outcome.failure {
                Some(e) => {
                    eprintln!("error: {e}");
                    Ok(exit_code(&e))
                }
                None => Ok(0),
            }
        }
        Command::Moments { seq, count, format } => {
            let seq = driver::sequence_for(seq.family.into(), seq.k, seq.moments_file.as_deref())?;
            let text = match format {
                MomentFormatArg::Json => moments_to_json(&seq, count)? + "\n",
                MomentFormatArg::Csv => moments_to_csv(&seq, count)?,
            };
            print!("{text}");
            Ok(0)
        }
        Command::Validate { seq, n_max } => {
            let seq = driver::sequence_for(seq.family.into(), seq.k, seq.moments_file.as_deref())?;
            let report = driver::cross_validate(&seq, n_max)?;
            print!("{report}");
            Ok(match &report.positivity {
                Some(e) => exit_code(e),
                None if report.passed() => 0,
                None => EXIT_VALIDATION,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_IO } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
