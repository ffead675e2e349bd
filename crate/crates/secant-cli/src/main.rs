//! `secant`: exact Euler-number and central-factorial tables, identity
//! verification, and algorithm benchmarking.
//!
//! Exit codes: 0 success, 1 verification or consistency failure, 2 usage
//! error, 3 unwritable output.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use secant::euler::EulerMethod;
use secant::gen_euler::GenEulerMethod;
use secant_cli::{
    bench_text, euler_table, gen_euler_table, run_bench, run_verify, to_csv, to_json,
    triangle_table, verify_json, verify_text, CliError, Table,
};

#[derive(Parser)]
#[command(name = "secant", version, about = "Exact Euler numbers, central factorial numbers and their identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format: csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    /// Write to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TriangleArgs {
    /// Number of the last materialized row
    #[arg(long)]
    rows: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand)]
enum Command {
    /// Signed Euler (secant) numbers for even indices up to --max
    Euler {
        /// Largest index to emit
        #[arg(long)]
        max: usize,
        /// Algorithm: kb, shov, shov2, herschel or oracle
        #[arg(long, default_value = "kb")]
        method: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Generalized Euler numbers of one order up to --max
    GenEuler {
        /// The sech power r >= 1
        #[arg(long)]
        order: usize,
        /// Largest index to emit
        #[arg(long)]
        max: usize,
        /// Algorithm: shov3, shov4, reln (odd order only) or oracle
        #[arg(long, default_value = "shov3")]
        method: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Central factorial numbers of the first kind t(n, k)
    CfnFirst(TriangleArgs),
    /// Central factorial numbers of the second kind T(n, k)
    CfnSecond(TriangleArgs),
    /// Coefficients of the sech-power expansion G(r, p)
    Gcoeff(TriangleArgs),
    /// The secant derivative triangle E(n, k)
    Stern(TriangleArgs),
    /// Stirling numbers of the second kind S(n, k)
    Stirling2(TriangleArgs),
    /// Verify identity suites exactly; exit 0 iff all pass
    Verify {
        /// `all` or a comma-separated list of identity ids
        #[arg(long, default_value = "all")]
        suite: String,
        /// Override the default sweep bound
        #[arg(long)]
        max: Option<usize>,
        /// Output format: text or json
        #[arg(long, default_value = "text")]
        format: String,
        /// Write the report to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the Euler-number algorithms against each other
    Bench {
        /// Largest index to compute (>= 2)
        #[arg(long)]
        max: usize,
        /// Comma-separated method list
        #[arg(long, default_value = "kb,shov,shov2,herschel,oracle")]
        methods: String,
    },
}

fn render_table(table: &Table, output: &OutputArgs) -> Result<String, CliError> {
    match output.format.as_str() {
        "csv" => Ok(to_csv(table)),
        "json" => Ok(to_json(table)),
        other => Err(CliError::Usage(format!(
            "unknown table format `{other}` (expected csv or json)"
        ))),
    }
}

fn emit(text: String, out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Euler { max, method, output } => {
            let method: EulerMethod = method.parse().map_err(CliError::Usage)?;
            let table = euler_table(method, max);
            emit(render_table(&table, &output)?, &output.out)
        }
        Command::GenEuler { order, max, method, output } => {
            let method: GenEulerMethod = method.parse().map_err(CliError::Usage)?;
            let table = gen_euler_table(method, order, max)?;
            emit(render_table(&table, &output)?, &output.out)
        }
        Command::CfnFirst(args) => emit_triangle("cfn-first", args),
        Command::CfnSecond(args) => emit_triangle("cfn-second", args),
        Command::Gcoeff(args) => emit_triangle("gcoeff", args),
        Command::Stern(args) => emit_triangle("stern", args),
        Command::Stirling2(args) => emit_triangle("stirling2", args),
        Command::Verify { suite, max, format, out } => {
            let run = run_verify(&suite, max)?;
            let text = match format.as_str() {
                "text" => verify_text(&run),
                "json" => verify_json(&run),
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown report format `{other}` (expected text or json)"
                    )))
                }
            };
            emit(text, &out)?;
            if run.passed() {
                Ok(())
            } else {
                Err(CliError::Failure("verification failed".into()))
            }
        }
        Command::Bench { max, methods } => {
            let methods = methods
                .split(',')
                .map(|s| s.trim().parse::<EulerMethod>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::Usage)?;
            let results = run_bench(max, &methods)?;
            print!("{}", bench_text(&results));
            Ok(())
        }
    }
}

fn emit_triangle(family: &'static str, args: TriangleArgs) -> Result<(), CliError> {
    let table = triangle_table(family, args.rows)?;
    emit(render_table(&table, &args.output)?, &args.output.out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("secant: {}", err.message());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
