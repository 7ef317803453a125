use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use multinet::io::{evaluate_files, generate_to_dir, load_config, sweep};
use multinet::Error;

#[derive(Parser)]
#[command(name = "multinet", version, about = "Multilayer community-detection benchmarks")]
struct Cli {
    /// Suppress progress messages.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a planted partition and network from a config.
    Generate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Overrides the master seed in the config.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Score found partitions against a planted one (per-layer NMI).
    Evaluate {
        #[arg(long)]
        planted: PathBuf,
        #[arg(long, required = true, num_args = 1..)]
        found: Vec<PathBuf>,
        /// CSV output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the detector grid in the config's `[sweep]` section.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// CSV output file; stdout if omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Overrides `sweep.runs`.
        #[arg(long)]
        runs: Option<usize>,
    },
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    })
}

fn load(path: &Path, seed: Option<u64>) -> Result<multinet::benchmark::BenchmarkConfig, Error> {
    let mut config = load_config(path)?;
    if let Some(s) = seed {
        config.seed = s;
    }
    Ok(config)
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Generate { config, out, seed } => {
            let config = load(&config, seed)?;
            let files = generate_to_dir(&config, &out)?;
            if !cli.quiet {
                for f in files {
                    eprintln!("wrote {}", f.display());
                }
            }
        }
        Command::Evaluate { planted, found, out } => {
            let mean = evaluate_files(&planted, &found, output(&out)?)?;
            if !cli.quiet {
                eprintln!("mean NMI {mean}");
            }
        }
        Command::Sweep {
            config,
            out,
            seed,
            runs,
        } => {
            let mut config = load(&config, seed)?;
            if let (Some(r), Some(s)) = (runs, config.sweep.as_mut()) {
                s.runs = r;
            }
            let rows = sweep(&config, output(&out)?)?;
            if !cli.quiet {
                eprintln!("{rows} rows");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { 2 } else { 3 })
        }
    }
}
