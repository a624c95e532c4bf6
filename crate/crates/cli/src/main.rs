use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::Output;

/// Verify, analyze and enumerate finite semi-trusses and semi-braces.
#[derive(Parser)]
#[command(name = "trusslab", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; only the exit code reports the outcome.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Auto,
    SemiTruss,
    BraceLike,
    SkewTruss,
    SemiBrace,
    Almost,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumKindArg {
    Semigroup,
    Group,
    BraceLike,
    LeftSemiBrace,
    Almost,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom checks for the structure in a file.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Auto)]
        kind: KindArg,
    },
    /// Idempotents, sumsets, simplicity and the lemma checks for a semi-truss.
    Analyze { path: PathBuf },
    /// Build the Yang-Baxter solution of a semi-brace or almost semi-brace.
    Solution {
        path: PathBuf,
        #[arg(long)]
        check_ybe: bool,
        #[arg(long)]
        check_nondegenerate: bool,
        /// Also build the associated left semi-brace and its solution.
        #[arg(long)]
        associate: bool,
        /// Check that a -> inverse(a) is an isomorphism onto the associated solution.
        #[arg(long)]
        isocheck: bool,
        /// Directory for the emitted solution and structure files.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every structure of a given order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        kind: EnumKindArg,
        /// Keep one representative per isomorphism class.
        #[arg(long)]
        modulo_iso: bool,
        /// Write one file per instance into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run every applicable check on every instance.
        #[arg(long)]
        check_all: bool,
        /// Allow brace-like enumeration at order 4.
        #[arg(long)]
        slow: bool,
        /// Stop after this many instances.
        #[arg(long)]
        limit: Option<usize>,
        /// Stop after this many seconds.
        #[arg(long)]
        time_budget: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output {
        json: cli.json,
        quiet: cli.quiet,
    };
    let result = match cli.command {
        Command::Verify { path, kind } => commands::verify(&out, &path, kind),
        Command::Analyze { path } => commands::analyze(&out, &path),
        Command::Solution {
            path,
            check_ybe,
            check_nondegenerate,
            associate,
            isocheck,
            out: dir,
        } => commands::solution(
            &out,
            &path,
            commands::SolutionFlags {
                check_ybe,
                check_nondegenerate,
                associate,
                isocheck,
                dir,
            },
        ),
        Command::Enumerate {
            order,
            kind,
            modulo_iso,
            out: dir,
            check_all,
            slow,
            limit,
            time_budget,
        } => commands::enumerate(
            &out,
            commands::EnumerateArgs {
                order,
                kind,
                modulo_iso,
                dir,
                check_all,
                slow,
                limit,
                time_budget,
            },
        ),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            if !cli.quiet {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(2)
        }
    }
}
