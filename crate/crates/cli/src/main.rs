use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod parse;
mod report;

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "coxeter-sle", version, about = "Strong Lefschetz elements of coinvariant rings of finite Coxeter groups")]
struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Leave wall-clock timings out of the report.
    #[arg(long, global = true)]
    no_timings: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct TypeArgs {
    /// Coxeter type: `A2`, `B3`, `D4`, `I2:5`, `H3`, `A1xI2(5)`, or a bare letter with --rank / --m.
    #[arg(long = "type")]
    pub ty: String,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Dihedral parameter for type `I2`.
    #[arg(long)]
    pub m: Option<u32>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// Coefficients of the fundamental weights.
    Weights,
    /// Coefficients of the ambient coordinates `x_1, ..., x_n`.
    Coords,
}

#[derive(Args, Debug, Clone)]
pub struct SleArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Comma-separated rational coefficients of ℓ, e.g. `1,-2/3`.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    #[arg(long, value_enum, default_value = "weights")]
    pub basis: Basis,
    /// Comma-separated 1-based indices of simple reflections generating W_S.
    #[arg(long)]
    pub parabolic: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Elimination for 1x1 or linear-entry matrices, interpolation otherwise.
    Auto,
    Elimination,
    Interpolation,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function of the coinvariant ring, checked against the Poincaré polynomial.
    Hilbert(TypeArgs),
    /// Decide whether ℓ is a strong Lefschetz element, both by the reflection criterion and by determinants.
    Sle(SleArgs),
    /// Same as `sle` with `--parabolic` required.
    Parabolic(SleArgs),
    /// Randomized and mirror-targeted comparison of the criterion against determinants.
    Verify {
        /// Comma-separated types.
        #[arg(long, default_value = "A2,A3,B2,B3,I2:5,I2:6,I2:7")]
        types: String,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also run the parabolic suite over every proper subset of simple reflections.
        #[arg(long)]
        parabolic: bool,
    },
    /// Sign classes of the coefficients of the H3 level determinants.
    H3Table {
        /// Comma-separated levels in 0..=7; levels 1..=6 need --budget.
        #[arg(long, default_value = "0,7")]
        levels: String,
        /// Per-level wall-clock budget such as `600s`, `30m`, `2h`.
        #[arg(long)]
        budget: Option<String>,
        #[arg(long, value_enum, default_value = "auto")]
        method: Method,
    },
    /// Dihedral checks: discriminant signs, closed-form determinants, and the coinvariant oracle.
    I2m {
        /// A value `5`, a list `3,4,5`, or an inclusive range `5..8`.
        #[arg(long, default_value = "3..12")]
        m: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Hilbert(t) => commands::hilbert(t),
        Command::Sle(a) => commands::sle(a, false),
        Command::Parabolic(a) => commands::sle(a, true),
        Command::Verify { types, samples, seed, parabolic } => commands::verify(types, *samples, *seed, *parabolic),
        Command::H3Table { levels, budget, method } => commands::h3_table(levels, budget.as_deref(), *method),
        Command::I2m { m, seed } => commands::i2m(m, *seed),
    };
    match result {
        Ok(report) => {
            emit(&report, &cli);
            if report.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}

fn emit(report: &Report, cli: &Cli) {
    let out = if cli.json { report.to_json(!cli.no_timings) + "\n" } else { report.to_text(!cli.no_timings) };
    // a closed pipe (`| head`) is not an error worth a panic
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
}
