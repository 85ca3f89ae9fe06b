//! `sl12`: build modules for the current superalgebra sl(1|2)[t], print their
//! dimensions and characters, and run the verification suites.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sl12_core::algebra::Borel;
use sl12_core::combinatorics::Partition;
use sl12_core::exactla::Q;
use sl12_core::suites::Sizes;
use sl12_core::Error;

use report::{write_atomic, Format};

#[derive(Parser)]
#[command(name = "sl12", version, about = "Exact computations with modules for sl(1|2)[t]")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Kac module induced from the g0-irreducible of highest weight λ.
    Kac {
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = BorelArg::B2)]
        borel: BorelArg,
    },
    /// Graded local Weyl module W(λ), built as a fusion of λ2 Kac modules K(·, 1).
    Weyl {
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Chari-Venkatesh module V(λ1, ξ), built as the fusion of K(κ_i, ξ_i) at points z_i.
    Cv {
        #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_q)]
        lambda1: Q,
        /// Partition, e.g. `2,1`.
        #[arg(long, value_parser = parse_partition)]
        xi: Partition,
        /// Evaluation points, one per part. Default: 0,1,2,…
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_q)]
        z: Option<Vec<Q>>,
        /// h1-eigenvalues of the factors, summing to λ1. Default: λ1,0,0,…
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_q)]
        kappa: Option<Vec<Q>>,
    },
    /// Demazure-type module D(ℓ, λ).
    Demazure {
        #[arg(long)]
        ell: u32,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Truncated Weyl module W(λ, N).
    Truncated {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        weight: WeightArgs,
    },
    /// Index sets I(ξ), the dimension identity and its decomposition.
    Combinatorics {
        /// Show I(ξ), J(ξ) and the checks for one partition.
        #[arg(long, value_parser = parse_partition, conflicts_with_all = ["n", "max_n"])]
        xi: Option<Partition>,
        /// Check every partition of n.
        #[arg(long, conflicts_with = "max_n")]
        n: Option<u32>,
        /// Check every partition of every n from 1 to this bound.
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long, value_enum, default_value_t = commands::Check::All)]
        check: commands::Check,
    },
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct WeightArgs {
    /// h1-eigenvalue, an integer or p/q.
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_q)]
    lambda1: Q,
    /// h2-eigenvalue, a nonnegative integer.
    #[arg(long)]
    lambda2: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run: algebra, comm, kac, weyl, cv, combinatorics, demazure, truncated, all.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    suite: Vec<String>,
    /// Upper bound on λ2 across all suites.
    #[arg(long)]
    max_lambda2: Option<u32>,
    /// Upper bound on the partition size n.
    #[arg(long)]
    max_n: Option<u32>,
    /// Include the 1024-dimensional Weyl module W(λ1, 5).
    #[arg(long)]
    extended: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum BorelArg {
    B1,
    B2,
    B3,
}

impl From<BorelArg> for Borel {
    fn from(b: BorelArg) -> Borel {
        match b {
            BorelArg::B1 => Borel::B1,
            BorelArg::B2 => Borel::B2,
            BorelArg::B3 => Borel::B3,
        }
    }
}

fn parse_q(s: &str) -> Result<Q, String> {
    s.parse().map_err(|_| format!("{s:?} is not a rational number"))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn run(cli: &Cli) -> sl12_core::Result<report::Report> {
    match &cli.command {
        Command::Kac { weight, borel } => commands::kac(&weight.lambda1, weight.lambda2, (*borel).into()),
        Command::Weyl { weight } => commands::weyl(&weight.lambda1, weight.lambda2),
        Command::Cv { lambda1, xi, z, kappa } => commands::cv(lambda1, xi, z.as_deref(), kappa.as_deref()),
        Command::Demazure { ell, weight } => commands::demazure(*ell, &weight.lambda1, weight.lambda2),
        Command::Truncated { n, weight } => commands::truncated(*n, &weight.lambda1, weight.lambda2),
        Command::Combinatorics { xi, n, max_n, check } => {
            let selection = match (xi, n, max_n) {
                (Some(xi), None, None) => commands::Selection::One(xi.clone()),
                (None, Some(n), None) => commands::Selection::Size(*n),
                (None, None, Some(m)) => commands::Selection::UpTo(*m),
                _ => return Err(Error::InvalidParameter("give exactly one of --xi, --n and --max-n".into())),
            };
            commands::combinatorics(&selection, *check)
        }
        Command::Verify(v) => {
            let base = if v.extended { Sizes::extended() } else { Sizes::default() };
            commands::verify(&v.suite, &base.capped(v.max_lambda2, v.max_n))
        }
    }
}

fn is_parameter_error(e: &Error) -> bool {
    matches!(
        e,
        Error::InvalidParameter(_) | Error::NotDominant(_) | Error::RepeatedParameter | Error::IndexOutOfRange { .. }
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("sl12: {e}");
            return ExitCode::from(if is_parameter_error(&e) { 2 } else { 1 });
        }
    };
    let text = report.render(cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = write_atomic(path, &text) {
                eprintln!("sl12: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
            eprintln!("{}", report.summary());
        }
        None => print!("{text}"),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
