//! `bianchi`: command-line front end for the Bianchi group deformation library.

mod commands;
mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use bianchi_deform::bianchi::CATALOG;
use bianchi_deform::continuation::NewtonSettings;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use commands::{Output, NewtonArgs};
use report::{RunReport, Timer, Versions};

#[derive(Parser)]
#[command(name = "bianchi", version, about = "Deformations of Bianchi groups into SL(4,R) and SU(3,1)")]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record wall-clock time per stage in the report.
    #[arg(long, global = true)]
    timing: bool,
    /// Log progress to standard error (repeat for more detail).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Presentations, SL(2) generators and lifted SO(3,1) generators.
    Catalog {
        /// A single catalog key (default: all).
        #[arg(long)]
        d: Option<u64>,
    },
    /// Jacobian ranks and H¹ dimensions at the lattice embedding.
    #[command(group(ArgGroup::new("which").required(true).args(["d", "all"])))]
    Tangent {
        #[arg(long)]
        d: Option<u64>,
        /// Every catalogued d, in table order.
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also count cocycles directly by Fox calculus.
        #[arg(long)]
        cocycles: bool,
        /// Worker threads for --all (default: available cores).
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Trace the deformation curve by pinned Newton refinement.
    Newton {
        #[arg(long, default_value_t = 3)]
        d: u64,
        #[arg(long, default_value = "2")]
        t_from: String,
        #[arg(long, default_value = "5/2")]
        t_to: String,
        #[arg(long, default_value_t = 20)]
        steps: usize,
        /// Working precision in decimal digits.
        #[arg(long, default_value_t = 60)]
        precision: u32,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Size of the random perturbation of the starting holonomy.
        #[arg(long, default_value_t = 1e-3)]
        perturbation: f64,
        #[arg(long, default_value_t = 1e-40)]
        residual_target: f64,
        #[arg(long, default_value_t = 100)]
        max_iterations: usize,
    },
    /// Recover exact matrices over a function field from a traced path.
    Reconstruct {
        /// Report or path record written by `newton`.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Agreement demanded of the fitted entries at every sample.
        #[arg(long, default_value_t = 1e-35)]
        tolerance: f64,
    },
    /// Exact analysis of the Bi(3) family.
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    /// Isometry types and discreteness verdict at u = circle_point(q).
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
}

#[derive(Subcommand)]
enum FamilyAction {
    /// Relators over Q(u) and the conjugator to the lifted holonomy.
    Verify,
    /// Same as the top-level `classify`.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Invariant Hermitian form and its signature at u = circle_point(q).
    Signature {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Determinant of the invariant form along the circle.
    Wall,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Catalog { .. } => "catalog",
            Command::Tangent { .. } => "tangent",
            Command::Newton { .. } => "newton",
            Command::Reconstruct { .. } => "reconstruct",
            Command::Family { action: FamilyAction::Verify } => "family verify",
            Command::Family { action: FamilyAction::Classify { .. } } => "family classify",
            Command::Family { action: FamilyAction::Signature { .. } } => "family signature",
            Command::Family { action: FamilyAction::Wall } => "family wall",
            Command::Classify { .. } => "classify",
        }
    }
}

/// Run the command; `Ok(false)` is a completed run that reports a domain failure.
fn execute(command: &Command, timer: &mut Timer) -> Result<(Output, bool)> {
    let ok = |o| Ok((o, true));
    match command {
        Command::Catalog { d } => ok(commands::catalog(*d)?),
        Command::Tangent { d, all, format, cocycles, jobs } => {
            let ds = if *all { CATALOG.to_vec() } else { d.iter().copied().collect() };
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            ok(commands::tangent(&ds, *cocycles, jobs.max(1), matches!(format, Format::Csv), timer)?)
        }
        Command::Newton { d, t_from, t_to, steps, precision, seed, perturbation, residual_target, max_iterations } => {
            let args = NewtonArgs {
                d: *d,
                t_from: commands::parse_q(t_from)?,
                t_to: commands::parse_q(t_to)?,
                steps: *steps,
                settings: NewtonSettings {
                    precision_digits: *precision,
                    residual_target: *residual_target,
                    max_iterations: *max_iterations,
                    ..NewtonSettings::default()
                },
                seed: *seed,
                perturbation: *perturbation,
            };
            commands::newton(&args, timer)
        }
        Command::Reconstruct { input, max_degree, tolerance } => {
            ok(commands::reconstruct(input, *max_degree, *tolerance, timer)?)
        }
        Command::Family { action } => match action {
            FamilyAction::Verify => ok(commands::family_verify(timer)?),
            FamilyAction::Classify { q } => ok(commands::classify(&commands::parse_q(q)?)?),
            FamilyAction::Signature { q } => ok(commands::family_signature(&commands::parse_q(q)?)?),
            FamilyAction::Wall => ok(commands::family_wall()?),
        },
        Command::Classify { q } => ok(commands::classify(&commands::parse_q(q)?)?),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    let mut timer = Timer::new(cli.timing);
    let (output, ok) = execute(&cli.command, &mut timer)?;
    let text = match output {
        Output::Csv(csv) => csv,
        Output::Json { inputs, results } => {
            let report = RunReport {
                command: cli.command.name().to_string(),
                inputs,
                results,
                versions: Versions::current(),
                timing: timer.finish(),
            };
            serde_json::to_string_pretty(&report)? + "\n"
        }
    };
    emit(cli, &text)?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).init();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
