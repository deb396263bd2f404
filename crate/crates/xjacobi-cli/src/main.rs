//! `xjacobi` — construct and verify exceptional Jacobi and Romanovski–Jacobi
//! polynomials, seed classifications, Gram matrices and deformed Pöschl–Teller
//! spectra from the command line.
//!
//! Every subcommand writes one JSON object to stdout (or CSV / indented JSON on
//! request). Exit status: 0 when every check passes, 1 on a verification
//! failure, 2 on usage or precondition errors, which are reported as JSON on
//! stderr.

mod commands;
mod output;

use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use crate::commands::{CommandError, Outcome};
use crate::output::{error_json, Format};

/// Exceptional Jacobi / Romanovski–Jacobi toolkit.
#[derive(Parser, Debug)]
#[command(name = "xjacobi", version, about, propagate_version = true)]
pub struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Quadrature doublings after the first 32-node level (overrides `XJACOBI_QUAD_LEVEL`).
    #[arg(long, global = true)]
    pub quad_levels: Option<usize>,
    /// Tolerance on normalized Gram off-diagonals.
    #[arg(long, global = true)]
    pub tol_offdiag: Option<f64>,
    /// Tolerance on normalized quadrature error estimates.
    #[arg(long, global = true)]
    pub tol_error: Option<f64>,
    /// Relative tolerance for finite-difference energies.
    #[arg(long, global = true)]
    pub tol_energy: Option<f64>,
    /// Write `(η, value)` CSV samples of the constructed polynomial or potential to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub dump_samples: Option<PathBuf>,
    /// Force sequential evaluation of the data-parallel kernels.
    #[arg(long, global = true)]
    pub sequential: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands. Rational arguments take the forms `p`, `p/q` or a terminating decimal.
#[derive(Subcommand, Debug)]
pub enum Command {
    /// Jacobi polynomial P_n^(α,β) coefficients.
    Jacobi {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
    },
    /// X_m-Jacobi polynomial of degree m+n with its closed-form leading coefficient.
    Xmjacobi {
        m: usize,
        n: usize,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
    },
    /// XR-Jacobi polynomial of a family (a, a', b), seed degree m and level v, with its Heine residual.
    Xr {
        family: String,
        m: usize,
        v: usize,
        lam_minus: String,
        lam_plus: String,
    },
    /// Classify a seed by signs (σ-, σ+, σ∞ as + or -), degree and λ_o.
    Classify {
        #[arg(allow_hyphen_values = true)]
        sigma_minus: String,
        #[arg(allow_hyphen_values = true)]
        sigma_plus: String,
        #[arg(allow_hyphen_values = true)]
        sigma_inf: String,
        m: usize,
        lam_minus: String,
        lam_plus: String,
    },
    /// Discrete spectrum of the reference problem.
    Spectrum { lam_minus: String, lam_plus: String },
    /// Normalized Gram matrix of an XR family (a, a', b) or of the R-Jacobi polynomials (r).
    Gram { family: String, m: usize, lam_minus: String, lam_plus: String },
    /// Cross-orthogonality of X_m-Jacobi polynomials of fixed n and several m.
    CrossOrtho {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        n: usize,
        #[arg(required = true, num_args = 1..)]
        m: Vec<usize>,
    },
    /// Exact real-zero census of an X_m-Jacobi polynomial.
    Zeros {
        m: usize,
        n: usize,
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
    },
    /// Exact identity sweeps (contiguous relations, determinants, decompositions).
    Identities {
        /// Largest degree index.
        #[arg(long, default_value_t = 4)]
        nmax: usize,
        /// Number of parameter samples per sweep.
        #[arg(long, default_value_t = 6)]
        samples: usize,
    },
    /// Exact ODE residual sweeps: heine, csle or all.
    Residuals {
        case: String,
        /// Parameter pairs `λ-,λ+` (default: 11/2,1/2 13/2,1/2 13/2,3/2).
        #[arg(long = "lam", value_name = "LM,LP")]
        lams: Vec<String>,
    },
    /// Pöschl–Teller potential, optionally deformed by a seed `t,m`, with an optional finite-difference spectrum.
    Potential {
        /// Seed as `type,m`, e.g. `a,1`.
        #[arg(long)]
        seed: Option<String>,
        lam_minus: String,
        lam_plus: String,
        /// Finite-difference grid `r_min r_max N`.
        #[arg(long, num_args = 3, value_names = ["RMIN", "RMAX", "N"])]
        fd: Option<Vec<String>>,
    },
    /// Read one command per line from stdin and emit line-delimited JSON.
    Batch,
}

fn emit(cli: &Cli, outcome: &Outcome) -> Result<(), CommandError> {
    let text = match cli.format {
        Format::Json => format!("{}\n", outcome.json),
        Format::Pretty => format!("{}\n", serde_json::to_string_pretty(&outcome.json).expect("serializable")),
        Format::Csv => outcome
            .csv
            .clone()
            .ok_or_else(|| CommandError::Usage("csv output is available for gram, cross-ortho and spectrum only".into()))?,
    };
    if let Some(path) = &cli.dump_samples {
        let samples = outcome
            .samples
            .as_ref()
            .ok_or_else(|| CommandError::Usage("--dump-samples is not supported by this command".into()))?;
        std::fs::write(path, output::csv_samples(samples)).map_err(|e| CommandError::Usage(e.to_string()))?;
    }
    print!("{text}");
    Ok(())
}

fn report_error(e: &CommandError) {
    let v = e.to_json();
    eprintln!("{v}");
}

fn run_one(cli: &Cli) -> u8 {
    match commands::run(cli) {
        Ok(outcome) => match emit(cli, &outcome) {
            Ok(()) => u8::from(!outcome.pass),
            Err(e) => {
                report_error(&e);
                2
            }
        },
        Err(e) => {
            report_error(&e);
            2
        }
    }
}

fn run_batch() -> u8 {
    let stdin = std::io::stdin();
    let mut stdout = std::io::stdout();
    let mut worst = 0u8;
    for line in stdin.lock().lines() {
        let Ok(line) = line else { break };
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let argv = std::iter::once("xjacobi").chain(line.split_whitespace());
        let value: Value = match Cli::try_parse_from(argv) {
            Ok(cli) if matches!(cli.command, Command::Batch) => {
                worst = 2;
                error_json("usage", "nested batch")
            }
            Ok(cli) => match commands::run(&cli) {
                Ok(o) => {
                    worst = worst.max(u8::from(!o.pass));
                    o.json
                }
                Err(e) => {
                    worst = 2;
                    e.to_json()
                }
            },
            Err(e) => {
                worst = 2;
                error_json("usage", &e.to_string())
            }
        };
        let _ = writeln!(stdout, "{value}");
    }
    worst
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("{}", error_json("usage", e.to_string().trim()));
            return ExitCode::from(2);
        }
    };
    let code = if matches!(cli.command, Command::Batch) { run_batch() } else { run_one(&cli) };
    ExitCode::from(code)
}
