mod commands;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "dslq", version, about = "Distance signless Laplacian spectra and perfect-matching thresholds")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Input graph encoding.
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Graph6)]
    pub format: InputFormat,
    /// Read the graph from this file instead of stdin.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Human)]
    pub output: OutputFormat,
    /// Shorthand for `--output json`.
    #[arg(long, global = true, conflicts_with_all = ["output", "csv"])]
    pub json: bool,
    /// Shorthand for `--output csv`.
    #[arg(long, global = true, conflicts_with = "output")]
    pub csv: bool,
    /// Threshold comparison tolerance.
    #[arg(long, global = true, value_parser = positive_f64)]
    pub tol: Option<f64>,
    /// Overrides the campaign seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Worker threads for `verify`; 0 uses all available cores.
    #[arg(long, global = true, env = "DSLQ_WORKERS")]
    pub workers: Option<usize>,
}

impl GlobalOpts {
    pub fn output(&self) -> OutputFormat {
        if self.json {
            OutputFormat::Json
        } else if self.csv {
            OutputFormat::Csv
        } else {
            self.output
        }
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    G4,
    G5,
    Gamma,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print η₁ and the full spectrum of Q(G).
    Spectrum {
        /// Also print the Q(G) matrix.
        #[arg(long)]
        dump_q: bool,
    },
    /// Print the spectral threshold for an order or side size.
    Threshold {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        #[arg(long)]
        n: usize,
    },
    /// Check one graph against a theorem.
    Check {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        /// `auto` (2-coloring from vertex 0) or a comma-separated list of
        /// the X-side vertices.
        #[arg(long, default_value = "auto")]
        bipartition: String,
    },
    /// Run a verification campaign from a JSON or key = value config.
    Verify {
        #[arg(long)]
        config: PathBuf,
    },
    /// Emit an extremal graph as graph6.
    Extremal {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        /// Neighbourhood size for `gamma`; defaults to s − 1.
        #[arg(long)]
        k: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
