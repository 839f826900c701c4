use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use immaculate::census::CensusFormat;
use immaculate::commands::{self, EnumerateArgs, Outcome};
use immaculate::Execution;

#[derive(Parser)]
#[command(name = "immaculate", version, about = "Skew immaculate functions in the H basis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the H-expansion of I_alpha, or of I_{alpha/beta} with --skew.
    Expand {
        alpha: String,
        #[arg(long)]
        skew: Option<String>,
        /// Pad a short skewing sequence with trailing zeros.
        #[arg(long)]
        pad: bool,
        #[arg(long)]
        show_matrix: bool,
    },
    /// Classify alpha/beta as zero, nonzero before cancellation, or provably nonzero.
    Classify {
        alpha: String,
        beta: String,
        #[arg(long)]
        pad: bool,
    },
    /// Classify every pair of compositions of N with L parts.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long = "len")]
        length: usize,
        #[arg(long)]
        partitions_only: bool,
        #[arg(long, value_enum, default_value_t = Format::JsonLines)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-pair wall time (output is then no longer reproducible).
        #[arg(long)]
        timing: bool,
        #[arg(long, default_value_t = commands::DEFAULT_MAX_N)]
        max_n: u32,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Compare the tableau and Jacobi-Trudi Schur polynomials.
    SchurCheck {
        outer: String,
        #[arg(long)]
        inner: Option<String>,
        #[arg(long)]
        vars: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    JsonLines,
    Csv,
}

fn emit(outcome: Outcome) -> ExitCode {
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(outcome.code as u8)
}

fn cap(default: usize) -> Result<usize, Outcome> {
    commands::dim_cap_from_env(default).map_err(|e| Outcome {
        code: commands::exit_code(&e),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Expand { alpha, skew, pad, show_matrix } => cap(commands::DEFAULT_EXPAND_CAP)
            .map(|c| commands::expand(&alpha, skew.as_deref(), pad, show_matrix, c)),
        Command::Classify { alpha, beta, pad } => {
            cap(commands::DEFAULT_EXPAND_CAP).map(|c| commands::classify(&alpha, &beta, pad, c))
        }
        Command::Enumerate { n, length, partitions_only, format, out, timing, max_n, sequential } => {
            cap(commands::DEFAULT_ENUMERATE_CAP).map(|dim_cap| {
                commands::enumerate(&EnumerateArgs {
                    n,
                    length,
                    partitions_only,
                    format: match format {
                        Format::JsonLines => CensusFormat::JsonLines,
                        Format::Csv => CensusFormat::Csv,
                    },
                    out,
                    timing,
                    max_n,
                    exec: if sequential { Execution::Sequential } else { Execution::Parallel },
                    dim_cap,
                })
            })
        }
        Command::SchurCheck { outer, inner, vars } => {
            Ok(commands::schur_check(&outer, inner.as_deref(), vars))
        }
    };
    emit(outcome.unwrap_or_else(|o| o))
}
