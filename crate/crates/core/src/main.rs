use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use inclusion_ideal::format::{parse_input, Input};
use inclusion_ideal::oracle::{betti_table, regularity};
use inclusion_ideal::report::{
    check_input, exit, oracle_target, render_bench_csv, render_dual, run_bench, BenchConfig,
    CheckOptions,
};
use inclusion_ideal::{Error, Field, IncreasingHypergraph};

#[derive(Parser)]
#[command(
    name = "inclideal",
    version,
    about = "Inclusion ideals of uniformly increasing hypergraphs: duals, stability and regularity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct FieldArgs {
    /// Coefficient field characteristic: 0 for the rationals, or a prime.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the containment vector, inclusion ideal, components and dual.
    Dual { input: PathBuf },
    /// Run every applicable check and print a report.
    Check {
        input: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        /// Skip the exact regularity oracle.
        #[arg(long)]
        skip_reg: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the multigraded Betti table (of the dual, for hypergraph input).
    Betti {
        input: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the Castelnuovo–Mumford regularity (of the dual, for hypergraph input).
    Reg {
        input: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Sweep seeded random hypergraphs and write one CSV row per instance.
    Bench {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        s_min: usize,
        #[arg(long, default_value_t = 4)]
        s_max: usize,
        /// Comma-separated increments.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        d: Vec<usize>,
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        skip_reg: bool,
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a seeded random hypergraph as JSON.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read_input(path: &Path) -> Result<Input, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_input(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn field(args: &FieldArgs) -> Result<Field, String> {
    Field::from_characteristic(args.characteristic).map_err(|e| e.to_string())
}

fn guard_code(e: &Error) -> i32 {
    match e {
        Error::TooManyGenerators { .. } | Error::GroundSetTooLarge { .. } => exit::SKIPPED,
        _ => exit::INPUT_ERROR,
    }
}

fn run(cli: Cli) -> Result<i32, (i32, String)> {
    let input_err = |msg: String| (exit::INPUT_ERROR, msg);
    match cli.command {
        Command::Dual { input } => {
            let input = read_input(&input).map_err(input_err)?;
            let text = render_dual(&input).map_err(|e| input_err(e.to_string()))?;
            emit(&text, None).map_err(input_err)?;
            Ok(exit::PASS)
        }
        Command::Check {
            input,
            field: f,
            skip_reg,
            format,
            out,
        } => {
            let input = read_input(&input).map_err(input_err)?;
            let opts = CheckOptions {
                field: field(&f).map_err(input_err)?,
                skip_reg,
            };
            let report = check_input(&input, opts).map_err(|e| (guard_code(&e), e.to_string()))?;
            let text = match format {
                Format::Json => report.render_json(),
                _ => report.render_text(),
            };
            emit(&text, out.as_deref()).map_err(input_err)?;
            Ok(report.exit_code())
        }
        Command::Betti {
            input,
            field: f,
            format,
        } => {
            let input = read_input(&input).map_err(input_err)?;
            let ideal = oracle_target(&input).map_err(|e| input_err(e.to_string()))?;
            let table = betti_table(&ideal, field(&f).map_err(input_err)?)
                .map_err(|e| (guard_code(&e), e.to_string()))?;
            let text = match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&table.to_json()).expect("serializes")
                ),
                _ => table.render(),
            };
            emit(&text, None).map_err(input_err)?;
            Ok(exit::PASS)
        }
        Command::Reg { input, field: f } => {
            let input = read_input(&input).map_err(input_err)?;
            let ideal = oracle_target(&input).map_err(|e| input_err(e.to_string()))?;
            let fld = field(&f).map_err(input_err)?;
            let r = regularity(&ideal, fld).map_err(|e| (guard_code(&e), e.to_string()))?;
            emit(&format!("reg={r} (char {})\n", fld.characteristic()), None).map_err(input_err)?;
            Ok(exit::PASS)
        }
        Command::Bench {
            n_min,
            n_max,
            s_min,
            s_max,
            d,
            count,
            seed,
            skip_reg,
            field: f,
            out,
        } => {
            let config = BenchConfig {
                n_range: (n_min, n_max),
                s_range: (s_min, s_max),
                d_set: d,
                count,
                seed,
                skip_reg,
                field: field(&f).map_err(input_err)?,
            };
            let rows = run_bench(&config).map_err(|e| input_err(e.to_string()))?;
            emit(&render_bench_csv(&rows), out.as_deref()).map_err(input_err)?;
            if rows.iter().all(|r| r.all_pass()) {
                Ok(exit::PASS)
            } else {
                Ok(exit::CLAIM_FAILED)
            }
        }
        Command::Gen { n, d, s, seed, out } => {
            let h = IncreasingHypergraph::random_instance(n, d, s, seed)
                .map_err(|e| input_err(e.to_string()))?;
            let json = serde_json::to_string(&h.to_spec()).expect("serializes");
            emit(&format!("{json}\n"), out.as_deref()).map_err(input_err)?;
            Ok(exit::PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
