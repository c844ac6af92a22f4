//! The `qginv` command line.
//!
//! ```text
//! qginv rootsys --type A2xG2 --q 0.5
//! qginv ufp --matrix f.json --n-icc 3
//! qginv ufp --spectrum s.json
//! qginv fusion --fuse abab,abab
//! qginv fusion --dim abab --N 2 --q 0.5
//! qginv fusion --thmun --q 0.5 --nmax 50
//! qginv icc --matrix f.json --n 2
//! qginv known --case eq2 --q 0.5
//! ```
//!
//! Exit status is 0 on success, 2 for bad input and 3 for numerical failure.

pub mod config;
pub mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::freeunitary::{analyze_matrix, analyze_spectrum, icc_constants, FMatrix, RhoSpectrum};
use crate::fusionring::{dim_word, fuse, qdim_word, sequence_diagnostics, RepParams, Word};
use crate::knowntables::{known_report, CaseName};
use crate::numerics::Tolerances;
use crate::rootsystems::{build_datum, invariant_table_gq, parse_type, upsilon};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Parser)]
#[command(name = "qginv", version, about = "Modular invariants of compact quantum groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Relative tolerance for recognizing ratios as rational.
    #[arg(long, global = true)]
    pub rel_tol: Option<f64>,
    /// Largest denominator accepted by rational recognition.
    #[arg(long, global = true)]
    pub max_denominator: Option<u64>,
    /// Relative off-diagonal threshold for the eigensolver.
    #[arg(long, global = true)]
    pub eig_threshold: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root datum, Υ and invariant table of the q-deformed group.
    Rootsys {
        /// Type string such as A2, E7 or A2xD4xG2.
        #[arg(long = "type")]
        type_: String,
        #[arg(long)]
        q: f64,
    },
    /// Invariants of U_F⁺ from a matrix F or an exact spectrum.
    Ufp(UfpArgs),
    /// Fusion rule, dimensions and power-sequence diagnostics.
    Fusion(FusionArgs),
    /// i.c.c. constants of F.
    Icc {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 1)]
        n: u32,
    },
    /// Tabulated invariants of quantum E(2) and az+b.
    Known {
        /// One of eq2, azb1, azb2, azb3.
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 0.5)]
        q: f64,
        /// Order of the root of unity for azb1.
        #[arg(long = "N", default_value_t = 6)]
        n: u32,
    },
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("ufp_input").required(true).args(["matrix", "spectrum"])))]
pub struct UfpArgs {
    /// JSON file {"n":N,"entries":[[re,im],...]}.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// JSON file {"base":b,"exponents":["p/q",...]}.
    #[arg(long)]
    pub spectrum: Option<PathBuf>,
    /// Also report i.c.c. constants at this level (matrix input only).
    #[arg(long)]
    pub n_icc: Option<u32>,
}

#[derive(Debug, Args)]
pub struct FusionArgs {
    /// Two comma-separated words, e.g. abab,ba.
    #[arg(long, conflicts_with_all = ["dim", "thmun"])]
    pub fuse: Option<String>,
    /// A word whose dimension and quantum dimension are reported.
    #[arg(long, conflicts_with = "thmun")]
    pub dim: Option<String>,
    /// Power-sequence diagnostics for n = 2..nmax.
    #[arg(long)]
    pub thmun: bool,
    #[arg(long = "N", default_value_t = 2)]
    pub n: u32,
    #[arg(long, default_value_t = 0.5)]
    pub q: f64,
    #[arg(long, default_value_t = 50)]
    pub nmax: u32,
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::parse(path.display().to_string(), format!("cannot read file: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::parse(path.display().to_string(), format!("invalid JSON: {e}")))
}

fn dispatch(cmd: &Command, tol: &Tolerances) -> Result<(&'static str, Value)> {
    Ok(match cmd {
        Command::Rootsys { type_, q } => {
            let d = build_datum(&parse_type(type_)?)?;
            let table = invariant_table_gq(&d, *q)?;
            (
                "rootsys",
                json!({
                    "type": d.label(),
                    "q": q,
                    "upsilon": upsilon(&d)?,
                    "pairing": d.pairing(),
                    "datum": d.to_json(),
                    "invariants": table.to_json(),
                    "symbolic": table.symbolic_json("q"),
                }),
            )
        }
        Command::Ufp(a) => {
            let report = match (&a.matrix, &a.spectrum) {
                (Some(m), _) => analyze_matrix(&FMatrix::from_json(&read_json(m)?)?, a.n_icc, tol)?,
                (None, Some(s)) => {
                    if a.n_icc.is_some() {
                        return Err(Error::parse("--n-icc", "i.c.c. constants need a matrix input"));
                    }
                    analyze_spectrum(&RhoSpectrum::from_json(&read_json(s)?)?, tol)?
                }
                (None, None) => return Err(Error::parse("ufp", "one of --matrix or --spectrum is required")),
            };
            ("ufp", report.to_json("mu"))
        }
        Command::Fusion(a) => {
            if let Some(pair) = &a.fuse {
                let (x, y) = pair
                    .split_once(',')
                    .ok_or_else(|| Error::parse(pair.clone(), "expected two words separated by a comma"))?;
                let (x, y): (Word, Word) = (x.parse()?, y.parse()?);
                let s = fuse(&x, &y);
                ("fusion", json!({ "x": x.to_string(), "y": y.to_string(), "terms": s.to_json() }))
            } else if let Some(w) = &a.dim {
                let w: Word = w.parse()?;
                let p = RepParams::new(a.n, a.q)?;
                (
                    "fusion",
                    json!({
                        "word": w.to_string(),
                        "N": a.n,
                        "q": a.q,
                        "dim": dim_word(&w, &p),
                        "qdim": qdim_word(&w, &p),
                    }),
                )
            } else if a.thmun {
                ("fusion", sequence_diagnostics(a.q, a.nmax)?.to_json())
            } else {
                return Err(Error::parse("fusion", "one of --fuse, --dim or --thmun is required"));
            }
        }
        Command::Icc { matrix, n } => {
            let f = FMatrix::from_json(&read_json(matrix)?)?;
            ("icc", icc_constants(&f, *n, tol)?.to_json())
        }
        Command::Known { case, q, n } => {
            let c = case.parse::<CaseName>()?.with_params(*q, *n);
            ("known", known_report(&c)?)
        }
    })
}

fn meta(tol: &Tolerances) -> Value {
    json!({
        "tool": "qginv",
        "version": env!("CARGO_PKG_VERSION"),
        "config": config::to_json(tol),
    })
}

/// Runs the command line with an explicit config-file location.
pub fn run_with_config<I, T>(args: I, config_file: Option<&Path>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let flags = config::Overrides {
        rel_tol: cli.rel_tol,
        max_denominator: cli.max_denominator,
        eig_threshold: cli.eig_threshold,
    };
    let result = config_file
        .map(config::read_file)
        .transpose()
        .and_then(|file| config::resolve(flags, file))
        .and_then(|tol| dispatch(&cli.command, &tol).map(|(name, body)| (tol, name, body)));
    match result {
        Ok((tol, name, mut body)) => {
            body["meta"] = meta(&tol);
            body["command"] = json!(name);
            let text = match cli.format {
                Format::Json => render::to_canonical_json(&body),
                Format::Markdown => render::to_markdown(name, &body),
            };
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_input() {
                EXIT_INPUT
            } else {
                EXIT_NUMERICAL
            }
        }
    }
}

/// Runs the command line, reading the config file named by `QGINV_CONFIG` if set.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let path = std::env::var_os(config::CONFIG_ENV).map(PathBuf::from);
    run_with_config(args, path.as_deref(), out, err)
}
