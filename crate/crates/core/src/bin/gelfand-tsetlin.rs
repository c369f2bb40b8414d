use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gelfand_tsetlin::commands::{
    cmd_act, cmd_basis, cmd_block, cmd_omega, cmd_verify, exit_code, parse_generator, parse_mode,
    read_seed_file, read_weight_file, BasisKind, Census, CommandOutput, VerifyInput, VerifyOptions,
};
use gelfand_tsetlin::document::parse_shift;
use gelfand_tsetlin::{Result, Sampling, Seed, Shift, Suite};

/// Exact computations in generic Gelfand-Tsetlin modules of gl(n).
#[derive(Parser)]
#[command(name = "gelfand-tsetlin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    /// Seed document (JSON).
    #[arg(long)]
    seed: PathBuf,
    /// Shift coordinates "z1,z2,...", row n-1 left to right down to row 1.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    shift: String,
}

impl Target {
    fn load(&self) -> Result<(Seed, Shift)> {
        let seed = read_seed_file(&self.seed)?;
        let shift = parse_shift(seed.n(), &self.shift)?;
        Ok((seed, shift))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Omega, Omega-plus and every omega value of a tableau.
    Omega {
        #[command(flatten)]
        target: Target,
    },
    /// Apply a generator E_ij to a tableau.
    Act {
        #[command(flatten)]
        target: Target,
        /// Generator indices "i,j".
        #[arg(long)]
        generator: String,
        /// generic or standard.
        #[arg(long, default_value = "generic")]
        mode: String,
    },
    /// Submodule (N) or irreducible (I) basis in a cube around the tableau.
    Basis {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        radius: i64,
        #[arg(long, default_value = "N")]
        which: String,
    },
    /// d_pu table and block count, with an optional class census.
    Block {
        #[arg(long)]
        seed: PathBuf,
        /// Census over the cube of this radius around the seed.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "sufficient")]
        radius: Option<i64>,
        /// Census over a box that meets every class.
        #[arg(long)]
        sufficient: bool,
    },
    /// Run an invariant suite: relations, gamma, closure or findim.
    Verify {
        #[arg(long, required_unless_present = "weight", conflicts_with = "weight")]
        seed: Option<PathBuf>,
        /// Highest weight document (JSON), for the finite-dimensional suites.
        #[arg(long)]
        weight: Option<PathBuf>,
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        /// Box radius of the closure suite.
        #[arg(long, default_value_t = 2)]
        radius: i64,
    },
}

fn run(cli: Cli) -> Result<CommandOutput> {
    match cli.command {
        Command::Omega { target } => {
            let (seed, shift) = target.load()?;
            cmd_omega(&seed, &shift)
        }
        Command::Act {
            target,
            generator,
            mode,
        } => {
            let (seed, shift) = target.load()?;
            cmd_act(
                &seed,
                &shift,
                parse_generator(&generator)?,
                parse_mode(&mode)?,
            )
        }
        Command::Basis {
            target,
            radius,
            which,
        } => {
            let (seed, shift) = target.load()?;
            cmd_basis(&seed, &shift, radius, which.parse::<BasisKind>()?)
        }
        Command::Block {
            seed,
            radius,
            sufficient,
        } => {
            let census = match (radius, sufficient) {
                (Some(r), _) => Census::Cube(r),
                (None, true) => Census::Sufficient,
                (None, false) => Census::None,
            };
            cmd_block(&read_seed_file(&seed)?, census)
        }
        Command::Verify {
            seed,
            weight,
            suite,
            samples,
            rng_seed,
            radius,
        } => {
            let input = match (seed, weight) {
                (Some(path), _) => VerifyInput::Seed(read_seed_file(&path)?),
                (None, Some(path)) => VerifyInput::Weight(read_weight_file(&path)?),
                (None, None) => unreachable!("clap requires one input"),
            };
            let opts = VerifyOptions {
                sampling: Sampling {
                    samples,
                    rng_seed,
                    radius: 3,
                },
                box_radius: radius,
                ..VerifyOptions::default()
            };
            cmd_verify(&input, suite.parse::<Suite>()?, opts)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            // A closed pipe on stdout is not an error of the computation.
            let _ = writeln!(std::io::stdout(), "{}", out.document.to_json());
            if !out.passed {
                eprintln!("verification failed");
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err) as u8)
        }
    }
}
