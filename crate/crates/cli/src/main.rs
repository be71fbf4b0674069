//! `gradia`: batch front end for the graded dependency calculi.
//!
//! Exit codes: 0 ok, 1 type error, 2 parse or usage error, 3 fuel
//! exhausted, 4 bad lattice or PTS configuration, 5 property-suite
//! failure.

mod commands;
mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::Output;

#[derive(Parser)]
#[command(name = "gradia", version, about = "Check, run and compare terms of graded dependency calculi")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize the type of each file's term.
    Check(Files),
    /// Evaluate each file's term by call-by-name steps.
    Eval(Files),
    /// Print the erasure of each file's term at `--level`.
    Erase(Files),
    /// Decide definitional equality of two terms at `--level`.
    Eq(Files),
    /// Translate each file's term between calculi.
    Translate {
        #[command(flatten)]
        files: Files,
        #[arg(long, value_enum)]
        from: System,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Run a property suite on generated terms.
    Noninterfere {
        #[command(flatten)]
        opts: Opts,
        /// Suite to run instead of non-interference.
        #[arg(long, default_value = "noninterference")]
        suite: String,
        /// Write the machine-readable report here.
        #[arg(long)]
        detail: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Files {
    paths: Vec<PathBuf>,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Clone)]
pub struct Opts {
    /// Lattice file, or one of `two-point`, `li`, `lmh`.
    #[arg(long)]
    pub lattice: Option<String>,
    /// PTS file, or one of `coc`, `type-in-type`.
    #[arg(long)]
    pub pts: Option<String>,
    /// Observer level, by name.
    #[arg(long)]
    pub level: Option<String>,
    #[arg(long, default_value_t = gradia_core::equality::DEFAULT_FUEL)]
    pub fuel: usize,
    /// Print the derivation, one rule per line.
    #[arg(long)]
    pub trace: bool,
    /// Calculus; defaults from the file extension.
    #[arg(long, value_enum)]
    pub system: Option<System>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum System {
    Sdc,
    Seal,
    Ddc,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Sdc,
    Ddc,
    Icc,
    /// ICC with irrelevant parts erased.
    IccErased,
}

fn per_file(paths: &[PathBuf], f: impl Fn(&PathBuf) -> Output + Sync) -> Vec<Output> {
    if paths.is_empty() {
        return vec![Output::usage("no input files")];
    }
    let f = &f;
    let labelled = paths.len() > 1;
    std::thread::scope(|s| {
        let handles: Vec<_> = paths.iter().map(|p| s.spawn(move || f(p))).collect();
        handles
            .into_iter()
            .zip(paths)
            .map(|(h, p)| {
                let out = h.join().unwrap_or_else(|_| Output::fail(1, "internal error".into()));
                if labelled {
                    out.labelled(&p.display().to_string())
                } else {
                    out
                }
            })
            .collect()
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outputs = match &cli.command {
        Command::Check(fs) => per_file(&fs.paths, |p| commands::check(p, &fs.opts)),
        Command::Eval(fs) => per_file(&fs.paths, |p| commands::eval(p, &fs.opts)),
        Command::Erase(fs) => per_file(&fs.paths, |p| commands::erase(p, &fs.opts)),
        Command::Eq(fs) => vec![commands::eq(&fs.paths, &fs.opts)],
        Command::Translate { files, from, to } => per_file(&files.paths, |p| commands::translate(p, &files.opts, *from, *to)),
        Command::Noninterfere { opts, suite, detail } => vec![commands::suite(opts, suite, detail.as_deref())],
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut code = 0;
    for o in outputs {
        let _ = stdout.lock().write_all(o.stdout.as_bytes());
        let _ = stderr.lock().write_all(o.stderr.as_bytes());
        if code == 0 {
            code = o.code;
        }
    }
    ExitCode::from(code)
}
