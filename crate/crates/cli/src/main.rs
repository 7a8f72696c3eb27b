//! `coorth`: decide best-coapproximation properties of subspaces of
//! polyhedral normed spaces from JSON documents.
//!
//! Exit codes: 0 decision reached, 2 input error, 3 capacity exceeded.

mod commands;
mod document;
mod error;
mod output;
mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::commands::{DEFAULT_EMBED_SAMPLES, DEFAULT_PROBE_SAMPLES};
use crate::document::{load_space, load_subspace, parse_scalar, parse_vector};
use crate::error::CliError;

#[derive(Parser)]
#[command(name = "coorth", version, about = "Exact best-coapproximation decisions in polyhedral normed spaces")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PointArgs {
    /// Space document.
    #[arg(long)]
    space: PathBuf,
    /// Base point, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    /// Direction, comma-separated rationals.
    #[arg(long, allow_hyphen_values = true)]
    y: String,
}

#[derive(Args)]
struct SubspaceArgs {
    /// Subspace document `{"basis": [...], "space": ...}`.
    #[arg(long)]
    subspace: PathBuf,
    /// Space document; overrides the subspace document's own space.
    #[arg(long)]
    space: Option<PathBuf>,
}

#[derive(Args)]
struct SeedArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide x ⊥_B y.
    Orthogonal(PointArgs),
    /// Decide x ⊥_B^ε y for 0 ≤ ε < 1.
    EpsOrthogonal {
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
    },
    /// Best coapproximation to x out of a subspace.
    Coapprox {
        #[command(flatten)]
        subspace: SubspaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Subspace-level decisions.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Sampling probes.
    Probe {
        #[command(subcommand)]
        what: ProbeCommand,
    },
    /// Replay the two-block ℓ₁³ ⊕∞ ℓ₁³ example.
    PaperExample,
    /// Validate a space document and print it normalized.
    Space {
        #[arg(long)]
        space: PathBuf,
        /// Print the explicit dual-vertex form.
        #[arg(long)]
        expand: bool,
    },
    /// Run the command described by a query document.
    Query { file: PathBuf },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Anti-coproximinality, with an orthogonal direction when it fails.
    Anti(SubspaceArgs),
    /// Strong anti-coproximinality: coverage witnesses and the ε-threshold.
    Strong(SubspaceArgs),
    /// Forced vertices and minimal selection maps.
    Selection(SubspaceArgs),
    /// The isometric embedding into ℓ∞^r and its consistency checks.
    Embed {
        #[command(flatten)]
        subspace: SubspaceArgs,
        #[arg(long, default_value_t = DEFAULT_EMBED_SAMPLES)]
        samples: usize,
        #[command(flatten)]
        seed: SeedArgs,
    },
    /// All of the above plus the coproximinality probe.
    All {
        #[command(flatten)]
        subspace: SubspaceArgs,
        #[arg(long, default_value_t = DEFAULT_PROBE_SAMPLES)]
        samples: usize,
        #[command(flatten)]
        seed: SeedArgs,
    },
}

#[derive(Subcommand)]
enum ProbeCommand {
    /// Certified sufficient test, then seeded sampling.
    Coproximinal {
        #[command(flatten)]
        subspace: SubspaceArgs,
        #[arg(long, default_value_t = DEFAULT_PROBE_SAMPLES)]
        samples: usize,
        #[command(flatten)]
        seed: SeedArgs,
    },
}

fn subspace(args: &SubspaceArgs) -> Result<coorth::Subspace, CliError> {
    load_subspace(&args.subspace, args.space.as_deref())
}

fn run(command: Command) -> Result<Value, CliError> {
    let limits = commands::limits()?;
    match command {
        Command::Orthogonal(p) => {
            let space = load_space(&p.space)?;
            commands::orthogonal(&space, &parse_vector("x", &p.x)?, &parse_vector("y", &p.y)?)
        }
        Command::EpsOrthogonal { point: p, epsilon } => {
            let space = load_space(&p.space)?;
            let eps = parse_scalar("epsilon", &epsilon)?;
            commands::eps_orthogonal_cmd(&space, &parse_vector("x", &p.x)?, &parse_vector("y", &p.y)?, &eps)
        }
        Command::Coapprox { subspace: s, x } => commands::coapprox(&subspace(&s)?, &parse_vector("x", &x)?),
        Command::Check { what } => match what {
            CheckCommand::Anti(s) => commands::check_anti(&subspace(&s)?, &limits),
            CheckCommand::Strong(s) => commands::check_strong(&subspace(&s)?, &limits),
            CheckCommand::Selection(s) => commands::check_selection(&subspace(&s)?),
            CheckCommand::Embed { subspace: s, samples, seed } => {
                commands::check_embed(&subspace(&s)?, samples, seed.seed, &limits)
            }
            CheckCommand::All { subspace: s, samples, seed } => {
                commands::check_all(&subspace(&s)?, samples, seed.seed, &limits)
            }
        },
        Command::Probe { what: ProbeCommand::Coproximinal { subspace: s, samples, seed } } => {
            commands::probe(&subspace(&s)?, samples, seed.seed, &limits)
        }
        Command::PaperExample => commands::paper_example(&limits),
        Command::Space { space, expand } => commands::space_document(&space, expand),
        Command::Query { file } => commands::query(Path::new(&file), &limits),
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(value: &Value, json: bool) {
    let text = if json {
        format!("{}\n", serde_json::to_string(value).expect("JSON values serialize"))
    } else {
        render::render(value)
    };
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(value) => {
            emit(&value, cli.json);
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            if cli.json {
                emit(&err.to_json(), true);
            } else if let CliError::Capacity { partial: Some(partial), .. } = &err {
                emit(partial, false);
            }
            ExitCode::from(err.exit_code())
        }
    }
}
