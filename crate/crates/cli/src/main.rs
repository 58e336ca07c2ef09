use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pgroup::{Error, TheoremReport};
use pgroup_cli::{
    cmd_catalogue, cmd_check, cmd_construct, cmd_oracle, cmd_paper_example, error_code, exit_code,
    load, render_catalogue, render_paper_example, render_report, OverrideLabels, EXIT_USAGE,
};
use serde::Serialize;

/// Non-inner central automorphisms of finite p-groups.
#[derive(Parser)]
#[command(name = "pgroup", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Machine-readable JSON output (the default).
    #[arg(long, global = true, conflicts_with = "human")]
    json: bool,

    /// Plain-text output.
    #[arg(long, global = true)]
    human: bool,

    /// Keep wall-clock timings in reports. Off by default so that reports
    /// are reproducible byte for byte.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Args, Clone)]
struct Overrides {
    /// Generator of the maximal subgroup M of H; repeat for several.
    #[arg(long = "M", value_name = "ELEMENT")]
    m: Vec<String>,

    /// The element h of H outside M.
    #[arg(long = "h", value_name = "ELEMENT")]
    h: Option<String>,

    /// The element g of order p in Z(K).
    #[arg(long = "g", value_name = "ELEMENT")]
    g: Option<String>,
}

impl From<Overrides> for OverrideLabels {
    fn from(o: Overrides) -> Self {
        OverrideLabels {
            m: o.m,
            h: o.h,
            g: o.g,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decompose, construct and check all verdicts.
    Check {
        /// Spec file path or builtin:NAME.
        spec: String,
    },
    /// Show the decomposition and the constructed automorphism.
    Construct {
        spec: String,
        #[command(flatten)]
        overrides: Overrides,
        /// Also run every check.
        #[arg(long)]
        verify: bool,
    },
    /// Run every built-in group up to an order bound.
    Catalogue {
        #[arg(long, default_value_t = usize::MAX)]
        max_order: usize,
    },
    /// All realizations of the order 2187 example and its explicit map.
    PaperExample,
    /// Cross-check the constructed automorphism by brute-force enumeration.
    Oracle {
        spec: String,
        #[command(flatten)]
        overrides: Overrides,
    },
}

fn emit<T: Serialize>(cli: &Cli, value: &T, human: impl FnOnce() -> String) -> Result<(), String> {
    let text = if cli.human {
        human()
    } else {
        serde_json::to_string_pretty(value).map_err(|e| e.to_string())? + "\n"
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn strip(cli: &Cli, report: &mut TheoremReport) {
    if !cli.timings {
        report.timings_ms.clear();
    }
}

fn run(cli: &Cli) -> Result<i32, Error> {
    let written = |r: Result<(), String>, code: i32| match r {
        Ok(()) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
    };
    match &cli.command {
        Command::Check { spec } => {
            let mut report = cmd_check(&load(spec)?)?;
            strip(cli, &mut report);
            Ok(written(
                emit(cli, &report, || render_report(&report)),
                exit_code(&report),
            ))
        }
        Command::Construct {
            spec,
            overrides,
            verify,
        } => {
            let mut report = cmd_construct(&load(spec)?, &overrides.clone().into(), *verify)?;
            strip(cli, &mut report);
            Ok(written(
                emit(cli, &report, || render_report(&report)),
                exit_code(&report),
            ))
        }
        Command::Oracle { spec, overrides } => {
            let mut report = cmd_oracle(&load(spec)?, &overrides.clone().into())?;
            strip(cli, &mut report);
            Ok(written(
                emit(cli, &report, || render_report(&report)),
                exit_code(&report),
            ))
        }
        Command::Catalogue { max_order } => {
            let run = cmd_catalogue(*max_order, cli.timings)?;
            Ok(written(
                emit(cli, &run, || render_catalogue(&run)),
                run.exit_code(),
            ))
        }
        Command::PaperExample => {
            let rep = cmd_paper_example(cli.timings)?;
            Ok(written(
                emit(cli, &rep, || render_paper_example(&rep)),
                rep.exit_code(),
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            error_code(&err)
        }
    };
    ExitCode::from(code as u8)
}
