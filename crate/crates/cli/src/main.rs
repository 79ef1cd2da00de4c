use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use braidlift::{cmd_apply, cmd_roundtrip, cmd_validate, render, write_applied, ApplyOutcome, Format, Level, Op};
use braidlift_core::io::{fixture_workspace, negative_workspace};
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(name = "braidlift", version, about = "Validate and transform braided enriched monoidal categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate artifact files; exit 0 iff every check passes.
    Validate {
        /// Validate at this level instead of the one implied by each file's kind.
        #[arg(long, value_enum)]
        level: Option<Level>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also write the report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Compute an artifact from an input file.
    Apply {
        #[arg(long, value_enum)]
        op: Op,
        /// Output file, or a directory to receive the result and everything it references.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip validating the input first.
        #[arg(long)]
        force: bool,
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Run every suite over a fixture directory; exit 0 iff all pass.
    Roundtrip {
        dir: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the built-in fixture files into a directory.
    Fixtures {
        dir: PathBuf,
        /// Write the deliberately invalid fixtures instead.
        #[arg(long)]
        negative: bool,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    print!("{text}");
    if let Some(p) = out {
        std::fs::write(p, text)?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Validate { level, format, out, paths } => {
            let rep = cmd_validate(&paths, level)?;
            emit(&render(&rep, format), out.as_ref())?;
            Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Apply { op, out, force, inputs } => match cmd_apply(op, &inputs, force)? {
            ApplyOutcome::Done(applied) => {
                if let Some(p) = write_applied(&applied, out.as_deref())? {
                    eprintln!("wrote {}", p.display());
                }
                Ok(ExitCode::SUCCESS)
            }
            ApplyOutcome::InvalidInput(rep) => {
                print!("{}", rep.render());
                eprintln!("error: input failed validation; pass --force to apply anyway");
                Ok(ExitCode::from(1))
            }
        },
        Command::Roundtrip { dir, seed, trials, format, out } => {
            let outcome = cmd_roundtrip(&dir, seed, trials)?;
            emit(&render(&outcome.report, format), out.as_ref())?;
            match outcome.first_failing_suite {
                None => Ok(ExitCode::SUCCESS),
                Some(s) => {
                    eprintln!("error: suite `{s}` failed");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Fixtures { dir, negative } => {
            let ws = if negative { negative_workspace() } else { fixture_workspace() };
            for p in ws.write_dir(&dir)? {
                eprintln!("wrote {}", p.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
