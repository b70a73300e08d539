//! `jgeom`: catalog inspection, verification suites, potential evaluation
//! and surface export.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 pass, 1 failed
//! check or domain error, 2 schema, 3 sampling, 4 io.

mod commands;
mod run_report;
mod spec_file;
mod verify;

use clap::{Parser, Subcommand};
use commands::{Quantity, SurfaceArgs};
use jordan_geom::sampling::DEFAULT_SEED;
use jordan_geom::surface::ExportFormat;
use jordan_geom::{Error, Result};
use run_report::RunReport;
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment override for the default seed.
const SEED_ENV: &str = "JGEOM_SEED";

#[derive(Parser)]
#[command(name = "jgeom", version, about = "Jordan algebras and their centro-affine hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the classification table.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run the residual checks for a spec file.
    Verify {
        spec: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// One tolerance for every check, overriding the defaults.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Evaluate omega, Phi, zeta or det P at a point.
    Eval {
        spec: PathBuf,
        /// Comma separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, value_enum)]
        what: Quantity,
    },
    /// Sample a level surface and export it.
    Surface {
        spec: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        level: f64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        seed: Option<u64>,
        /// Argument range for spiral curves.
        #[arg(long, default_value_t = -std::f64::consts::PI, allow_hyphen_values = true)]
        phi0: f64,
        #[arg(long, default_value_t = std::f64::consts::PI, allow_hyphen_values = true)]
        phi1: f64,
    },
    /// Build and check a Calabi product point.
    Calabi {
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List {
        #[arg(long)]
        json: bool,
        /// Family name, e.g. SymReal.
        #[arg(long)]
        family: Option<String>,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for ExportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => ExportFormat::Csv,
            Format::Json => ExportFormat::Json,
        }
    }
}

fn resolve_seed(arg: Option<u64>) -> Result<u64> {
    if let Some(s) = arg {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Schema(format!("{SEED_ENV}={v} is not an unsigned integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn emit(report: RunReport) -> Result<i32> {
    let text = serde_json::to_string_pretty(&report).map_err(|e| Error::Schema(e.to_string()))?;
    println!("{text}");
    eprint!("{}", report.summary());
    Ok(report.exit_code())
}

fn run(cli: Cli, echo: String) -> Result<i32> {
    match cli.command {
        Command::Catalog {
            action: CatalogAction::List { json, family },
        } => {
            print!("{}", commands::catalog_list(json, family.as_deref())?);
            if json {
                println!();
            }
            Ok(0)
        }
        Command::Verify {
            spec,
            samples,
            tol,
            seed,
        } => emit(commands::verify(&spec, samples, tol, resolve_seed(seed)?, echo)?),
        Command::Eval { spec, point, what } => {
            for v in commands::eval(&spec, &point, what)? {
                println!("{}", commands::sci(v));
            }
            Ok(0)
        }
        Command::Surface {
            spec,
            level,
            count,
            out,
            format,
            seed,
            phi0,
            phi1,
        } => {
            let args = SurfaceArgs {
                spec: &spec,
                level,
                count,
                out: &out,
                format: format.into(),
                seed: resolve_seed(seed)?,
                phi_range: (phi0, phi1),
            };
            emit(commands::surface(args, echo)?)
        }
        Command::Calabi { config, seed } => emit(commands::calabi(&config, resolve_seed(seed)?, echo)?),
    }
}

fn main() -> ExitCode {
    let echo = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let cli = Cli::parse();
    match run(cli, echo) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
