use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use pellcf::cli::{self, ExitStatus, Outcome};
use pellcf::families::Family;
use pellcf::sweep::SweepConfig;

#[derive(Parser)]
#[command(name = "pellcf", version, about = "Solve x^2 - dy^2 = N for N in {1, -1, 4, -4}")]
struct Args {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Continued fraction of sqrt(d)
    Cf { d: BigUint },

    /// First solutions of x^2 - dy^2 = N
    #[command(allow_negative_numbers = true)]
    Solve {
        d: BigUint,
        n: i64,
        #[arg(default_value_t = 1)]
        count: usize,
        /// Compare against exhaustive search
        #[arg(long)]
        certify: bool,
        #[arg(long, default_value_t = 10_000)]
        ymax: u64,
    },

    /// Closed-form solutions for d = k^2+4, k^2-4, k^2+1, k^2-1, k^2-k
    #[command(allow_negative_numbers = true)]
    Family {
        family: Family,
        k: u64,
        n: i64,
        #[arg(default_value_t = 1)]
        count: usize,
        /// Solve d(k) generically, even outside the family's range of k
        #[arg(long)]
        force_generic: bool,
    },

    /// Sweep every family case up to k_max against the generic solver and oracle
    Verify {
        #[arg(long, default_value_t = 30)]
        kmax: u64,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 10_000)]
        ymax: u64,
    },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage {
                ExitCode::from(ExitStatus::Usage.code() as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    let outcome: Outcome = match args.command {
        Command::Cf { d } => cli::cmd_cf(&d),
        Command::Solve { d, n, count, certify, ymax } => {
            cli::cmd_solve(&d, n, count, certify.then_some(ymax))
        }
        Command::Family { family, k, n, count, force_generic } => {
            cli::cmd_family(family, k, n, count, force_generic)
        }
        Command::Verify { kmax, count, ymax } => cli::cmd_verify(SweepConfig {
            k_max: kmax,
            count,
            y_max: ymax,
        }),
    };

    match args.format {
        Format::Json => println!("{}", cli::render_json(&outcome.record)),
        Format::Text => print!("{}", cli::render_text(&outcome.record)),
    }
    if let cli::Payload::Error { message } = &outcome.record.payload {
        eprintln!("pellcf: {message}");
    }
    ExitCode::from(outcome.exit.code() as u8)
}
