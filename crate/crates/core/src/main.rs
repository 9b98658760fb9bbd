use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use untwist::cli::{self, GlobalOpts, MoveSelection, Output, Suite, VerifyOpts};

#[derive(Parser)]
#[command(
    name = "untwist",
    version,
    about = "HOMFLY invariants and twist-move unknotting obstructions"
)]
struct Args {
    /// Largest k to test.
    #[arg(long, global = true, default_value_t = 50)]
    kmax: u64,
    /// Refuse braid words longer than this.
    #[arg(long, global = true, default_value_t = 20)]
    crossing_cap: usize,
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Plain-text output.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// HOMFLY, Conway, degree profile and FWM bounds of a braid closure.
    Invariants {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        allow_links: bool,
    },
    /// Per-k obstruction verdicts and candidate sets.
    Obstruct {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long, default_value = "both")]
        moves: MoveSelection,
        /// Add F_p columns for k >= 3.
        #[arg(long)]
        modp: bool,
    },
    /// Run a verification suite: prop6, matrix, skein or fwm-table.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        nmax: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Load and print a knot table (the bundled one by default).
    Table {
        #[arg(long)]
        path: Option<PathBuf>,
    },
}

fn run(args: &Args) -> untwist::Result<Output> {
    let opts = GlobalOpts {
        k_max: args.kmax,
        crossing_cap: args.crossing_cap,
    };
    match &args.command {
        Command::Invariants { braid, allow_links } => {
            cli::cmd_invariants(braid, *allow_links, &opts)
        }
        Command::Obstruct { braid, moves, modp } => cli::cmd_obstruct(braid, *moves, *modp, &opts),
        Command::Verify {
            suite,
            nmax,
            samples,
            seed,
            table,
        } => {
            let suite: Suite = suite.parse()?;
            let vopts = VerifyOpts {
                n_max: *nmax,
                samples: *samples,
                seed: *seed,
                table: table.as_deref(),
            };
            cli::cmd_verify(suite, &vopts, &opts)
        }
        Command::Table { path } => cli::cmd_table(path.as_deref(), &opts),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(out) => {
            if args.text {
                print!("{}", out.text);
            } else {
                print!("{}", out.json_string());
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
