use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dioph::cli::{self, Format, OutputRecord};
use dioph::oracle::Mode;
use dioph::{Integer, Result};

#[derive(Parser)]
#[command(
    name = "dioph",
    version,
    about = "Integer and rational solutions of x⁴+y⁴+z⁴−2x²y²−2y²z²−2z²x² = n"
)]
struct Args {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Quartic,
    Quadratic,
}

#[derive(Subcommand)]
enum Command {
    /// Decide integer solvability and print a certificate.
    Decide { n: String },
    /// List all integer solutions.
    Solve {
        n: String,
        /// Also print each symmetry orbit with its members.
        #[arg(long)]
        orbits: bool,
    },
    /// Find a rational solution.
    Rational { n: String },
    /// Solve x² + y⁴ + z⁴ − 2xy² − 2xz² − 2y²z² = n.
    Quad {
        n: String,
        /// Enumerate integer solutions with |y|, |z| ≤ BOUND (default 10).
        #[arg(long, conflicts_with = "rational")]
        bound: Option<String>,
        /// Rational point from "n1,n2,t1,t2,r,sign" with sign plus|minus.
        #[arg(long)]
        rational: Option<String>,
    },
    /// Compare the solvers against brute force over a range of n.
    Verify {
        /// Inclusive range such as 1..200.
        range: String,
        #[arg(value_enum)]
        mode: ModeArg,
        /// Box bound on |y|, |z| for the quadratic mode.
        #[arg(long = "box")]
        bound: Option<u64>,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
}

fn run(command: Command) -> Result<(OutputRecord, bool)> {
    let clean = |r: OutputRecord| (r, true);
    match command {
        Command::Decide { n } => cli::cmd_decide(&cli::parse_positive(&n)?).map(clean),
        Command::Solve { n, orbits } => {
            cli::cmd_solve(&cli::parse_positive(&n)?, orbits).map(clean)
        }
        Command::Rational { n } => cli::cmd_rational(&cli::parse_positive(&n)?).map(clean),
        Command::Quad { n, bound, rational } => {
            let n = cli::parse_positive(&n)?;
            match rational {
                Some(p) => cli::cmd_quad_rational(&n, cli::parse_point_params(&p)?),
                None => {
                    let bound = match bound {
                        Some(b) => cli::parse_integer(&b)?,
                        None => Integer::from(10),
                    };
                    cli::cmd_quad_integer(&n, &bound)
                }
            }
            .map(clean)
        }
        Command::Verify {
            range,
            mode,
            bound,
            sequential,
        } => {
            let mode = match mode {
                ModeArg::Quartic => Mode::Quartic,
                ModeArg::Quadratic => Mode::Quadratic,
            };
            cli::cmd_verify(cli::parse_range(&range)?, mode, bound, !sequential)
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let format = match args.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    match run(args.command) {
        Ok((record, clean)) => {
            print!("{}", cli::render(&record, format));
            ExitCode::from(cli::exit_code(clean) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
