//! The `elast` command-line tool.

pub mod error;
pub mod json;
pub mod material;
pub mod report;
pub mod text;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use elasticity_core::{numeric::DEFAULT_SEED, EllipticityVerdict, SolverConfig};
use serde::Serialize;

pub use error::InputError;
pub use material::{load, Material, MaterialRecord};
pub use report::{exit_code, OracleReport, Report};

/// Exit code for unreadable or invalid input.
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "elast",
    version,
    about = "M-eigenvalues and strong ellipticity of elasticity tensors"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form spectra, ellipticity and positive definiteness.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Relative tolerance for classifying a Voigt matrix.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Density for wave velocities; overrides the file.
        #[arg(long)]
        density: Option<f64>,
    },
    /// Everything from `analyze` plus numeric M- and Z-spectra.
    Spectrum {
        file: PathBuf,
        #[arg(long, default_value_t = 200)]
        starts: usize,
        #[arg(long, env = "ELAST_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Grid search for the minimum of C(x, y, x, y) over unit vectors.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        grid: usize,
        #[arg(long)]
        json: bool,
    },
}

const DETECT_TOL: f64 = 1e-9;

fn positive(flag: &'static str, v: f64) -> Result<(), InputError> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(InputError::Flag {
            flag,
            message: format!("must be positive, got {v}"),
        })
    }
}

/// Serialized name of a unit enum variant.
fn tag<T: Serialize>(v: &T) -> String {
    match serde_json::to_value(v) {
        Ok(serde_json::Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

fn verdict_header(name: &str, v: &EllipticityVerdict) -> Vec<String> {
    let mut h = vec![format!("{name}: {} ({})", tag(&v.status), tag(&v.mode))];
    if let Some(c) = &v.decided_by {
        h.push(format!(
            "decided by: {} (margin {:?}, {})",
            c.label,
            c.margin,
            tag(&c.role)
        ));
    }
    h
}

/// A finished command: its output text and exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

fn emit<T: Serialize>(
    json: bool,
    header: Vec<String>,
    report: &T,
    code: i32,
) -> Result<Outcome, InputError> {
    let stdout = if json {
        json::to_canonical(report)
    } else {
        text::render(&header, report)
    }
    .map_err(InputError::Output)?;
    Ok(Outcome { stdout, code })
}

/// Runs one parsed command.
pub fn execute(cmd: &Command) -> Result<Outcome, InputError> {
    match cmd {
        Command::Analyze {
            file,
            json,
            tol,
            density,
        } => {
            positive("tol", *tol)?;
            if let Some(d) = density {
                positive("density", *d)?;
            }
            let m = load(file, *tol)?;
            let r = report::analyze(&m, *density, &SolverConfig::default())?;
            let h = verdict_header(&r.material.name, &r.ellipticity);
            emit(*json, h, &r, exit_code(r.status()))
        }
        Command::Spectrum {
            file,
            starts,
            seed,
            json,
        } => {
            let cfg = SolverConfig {
                n_starts: *starts,
                seed: *seed,
                ..SolverConfig::default()
            };
            cfg.validate()?;
            let m = load(file, DETECT_TOL)?;
            let r = report::spectrum(&m, &cfg)?;
            let mut h = verdict_header(&r.material.name, &r.ellipticity);
            if let Some(n) = &r.numeric {
                h.push(format!(
                    "numeric: {} M-eigenvalues, {} Z-eigenvalues",
                    n.m_spectrum.pairs.len(),
                    n.z_spectrum.pairs.len()
                ));
                if let Some(rows) = &n.matches {
                    let hit = rows.iter().filter(|r| r.matched).count();
                    h.push(format!("matched: {hit} of {} closed forms", rows.len()));
                }
            }
            emit(*json, h, &r, exit_code(r.status()))
        }
        Command::Oracle { file, grid, json } => {
            let cfg = SolverConfig {
                grid_n: *grid,
                ..SolverConfig::default()
            };
            cfg.validate()?;
            let m = load(file, DETECT_TOL)?;
            let r = report::oracle(&m, &cfg)?;
            let mut h = verdict_header(&r.material.name, &r.oracle.verdict);
            h.push(format!(
                "grid min {:?}, refined min {:?}, band {:?}",
                r.oracle.grid_min, r.oracle.refined.theta, r.oracle.band
            ));
            emit(*json, h, &r, exit_code(r.status()))
        }
    }
}

/// Parses `args`, runs the command, writes its output and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
