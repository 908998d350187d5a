use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use steinberg_lab::cli::{self, CommandOutput, DemazureCheck, SuiteConfig, EXIT_USAGE};
use steinberg_lab::rootsys::{RootSystemSpec, Weight};
use steinberg_lab::Result;

#[derive(Parser)]
#[command(
    name = "steinberg-lab",
    version,
    about = "Exact Weyl character, flag-variety cohomology and Frobenius pushforward checks"
)]
struct Cli {
    /// Print a JSON document instead of the table.
    #[arg(long, global = true, visible_alias = "json-like")]
    structured: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct System {
    /// Family letter: A, B, C, D, F or G.
    #[arg(long = "type")]
    family: char,
    #[arg(long)]
    rank: usize,
}

impl System {
    fn spec(&self) -> Result<RootSystemSpec> {
        RootSystemSpec::from_parts(self.family, self.rank)
    }
}

#[derive(Args)]
struct Frobenius {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    n: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, positive roots, rho and the Weyl group order.
    Roots(System),
    /// Cohomology of a line bundle on G/B (characteristic 0).
    Bott {
        #[command(flatten)]
        system: System,
        /// Comma-separated fundamental-weight coordinates, e.g. "1,-2".
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Acyclicity of L_{-q chi - rho} for chi on simple walls.
    Orthogonality {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        frob: Frobenius,
        /// 1-based wall index; all walls when omitted.
        #[arg(long)]
        wall: Option<usize>,
        #[arg(long, default_value_t = 5)]
        radius: i64,
    },
    /// Demazure operator identities.
    Demazure {
        #[command(flatten)]
        system: System,
        /// braid, idempotent, w0 or word-independence.
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = 3)]
        radius: i64,
    },
    /// Character identity behind Kempf vanishing for a dominant weight.
    Kempf {
        #[command(flatten)]
        system: System,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[command(flatten)]
        frob: Frobenius,
    },
    /// Chern-character check of the Steinberg pushforward identity.
    Grr {
        #[command(flatten)]
        system: System,
        #[command(flatten)]
        frob: Frobenius,
    },
    /// Frobenius pushforwards of line bundles on the projective line.
    P1 {
        #[command(flatten)]
        frob: Frobenius,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
    },
    /// Every configured verification suite.
    VerifyAll {
        /// Config file; defaults to $STEINBERG_LAB_CONFIG, then built-in defaults.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn run(command: Command) -> Result<CommandOutput> {
    match command {
        Command::Roots(system) => cli::cmd_roots(system.spec()?),
        Command::Bott { system, weight } => cli::cmd_bott(system.spec()?, &weight.parse::<Weight>()?),
        Command::Orthogonality {
            system,
            frob,
            wall,
            radius,
        } => cli::cmd_orthogonality(system.spec()?, frob.p, frob.n, wall, radius),
        Command::Demazure { system, check, radius } => {
            cli::cmd_demazure(system.spec()?, DemazureCheck::parse(&check)?, radius)
        }
        Command::Kempf { system, weight, frob } => {
            cli::cmd_kempf(system.spec()?, &weight.parse::<Weight>()?, frob.p, frob.n)
        }
        Command::Grr { system, frob } => cli::cmd_grr(system.spec()?, frob.p, frob.n),
        Command::P1 { frob, d } => cli::cmd_p1(frob.p, frob.n, d),
        Command::VerifyAll { config, jobs } => {
            let config = SuiteConfig::load(config.as_deref())?;
            cli::cmd_verify_all(&config, jobs)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    match run(args.command) {
        Ok(out) => {
            print!("{}", out.render(args.structured));
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("hint: {}", cli::remedy(&e));
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
