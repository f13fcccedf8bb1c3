use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hypack::horoball::{density_curve, CurvePoint};
use hypack::report::{self, Tables};
use hypack::TilingParams;

#[derive(Parser)]
#[command(
    name = "hypack",
    version,
    about = "Optimal ball and horoball packings of the Coxeter tilings {∞,q,r,∞}"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the result tables.
    Table {
        #[arg(value_enum)]
        which: Which,
    },
    /// Write the two-horoball density as a function of t to a CSV file.
    Curve {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
        samples: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recompute every reference value and compare.
    Verify {
        #[arg(long, default_value_t = 2e-5, allow_hyphen_values = true)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Inball,
    HoroballOne,
    HoroballTwo,
    Distances,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn write_curve(path: &Path, points: &[CurvePoint]) -> Result<(), Box<dyn std::error::Error>> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(File::create(path)?);
    w.write_record(["t", "density", "vol_b0", "vol_b2", "active_constraint"])?;
    for p in points {
        let active = if p.active.is_empty() {
            "none".to_string()
        } else {
            p.active.join("+")
        };
        w.write_record([
            format!("{:.10}", p.t),
            format!("{:.10}", p.density),
            format!("{:.10}", p.vol_b0),
            format!("{:.10}", p.vol_b2),
            active,
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Table { which } => {
            let tables = Tables::compute()?;
            let text = match which {
                Which::Inball => report::render_inball(&tables),
                Which::HoroballOne => report::render_horoball_one(&tables),
                Which::HoroballTwo => report::render_horoball_two(&tables),
                Which::Distances => report::render_distances(&tables),
            };
            io::stdout().write_all(text.as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Curve { q, r, samples, out } => {
            let params = match TilingParams::new(q, r) {
                Ok(p) if p.has_two_ideal_vertices() => p,
                Ok(p) => return Ok(usage_error(&format!("{p} has only one ideal vertex"))),
                Err(e) => return Ok(usage_error(&e.to_string())),
            };
            let points = density_curve(params, samples as usize)?;
            if points.len() == 1 {
                eprintln!(
                    "warning: the feasible interval of {params} is the single point t = {:.7}",
                    points[0].t
                );
            }
            write_curve(&out, &points)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { tol, format } => {
            if tol.is_nan() || tol <= 0.0 {
                return Ok(usage_error(&format!(
                    "tolerance must be positive, got {tol}"
                )));
            }
            let tables = Tables::compute()?;
            let rep = report::verify(&tables, tol)?;
            let text = match format {
                Format::Text => rep.to_text(),
                Format::Json => rep.to_json()? + "\n",
            };
            io::stdout().write_all(text.as_bytes())?;
            Ok(if rep.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
