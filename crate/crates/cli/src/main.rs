use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use compoundlab_cli::commands;
use compoundlab_cli::CliError;

#[derive(Parser)]
#[command(
    name = "compoundlab",
    version,
    about = "Exact compound matrices, determinants and kernels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of a square matrix file.
    Det {
        /// bareiss, permutation, cofactor:i, pair-rows:i,j or general-rows:i,j,...
        #[arg(long, default_value = "bareiss")]
        strategy: String,
        file: PathBuf,
    },
    /// p-th compound, or with --adjugate the signed complementary compound.
    Compound {
        #[arg(short)]
        p: usize,
        #[arg(long)]
        adjugate: bool,
        file: PathBuf,
    },
    /// Corank, source and a basis of the nullspace.
    Kernel { file: PathBuf },
    /// Run a property suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// One JSON object per report.
        #[arg(long)]
        json: bool,
    },
    /// Determinant benchmark as CSV.
    Bench {
        /// `4..6` or `4,5,6`.
        #[arg(long, default_value = "2..6")]
        sizes: String,
        #[arg(
            long,
            default_value = "cofactor,pair-rows,general-rows,bareiss,permutation"
        )]
        strategies: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Diagonal preimage of diag(mu1..mu6) under m_2 on 4x4 matrices.
    PreimageDiag {
        #[arg(num_args = 6, allow_negative_numbers = true)]
        mu: Vec<String>,
    },
}

fn run(cli: Cli) -> Result<(String, i32), CliError> {
    let ok = |s| Ok((s, 0));
    match cli.command {
        Command::Det { strategy, file } => ok(commands::cmd_det(&file, &strategy)?),
        Command::Compound { p, adjugate, file } => ok(commands::cmd_compound(&file, p, adjugate)?),
        Command::Kernel { file } => ok(commands::cmd_kernel(&file)?),
        Command::Verify {
            suite,
            seed,
            trials,
            json,
        } => commands::cmd_verify(&suite, seed, trials, json),
        Command::Bench {
            sizes,
            strategies,
            seed,
            trials,
        } => ok(commands::cmd_bench(&sizes, &strategies, seed, trials)?),
        Command::PreimageDiag { mu } => ok(commands::cmd_preimage(&mu)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
