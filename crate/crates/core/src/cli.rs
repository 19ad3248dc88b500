//! Command-line front end. [`run`] is the whole program minus process I/O so it
//! can be driven from tests.
//!
//! Exit codes: 0 success, 1 a theorem check failed, 2 invalid input.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{self, KnotDescriptor, TheoremReport};
use crate::error::Error;
use crate::lambda_module::ModulePresentation;
use crate::matrix::{IntMatrix, LaurentMatrix};
use crate::seifert::SeifertMatrix;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_Q: u32 = 3;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "knotproj",
    version,
    about = "Alexander invariants and knottedness certificates from Seifert matrices"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical Alexander class of a Seifert matrix.
    Alex(MatrixArgs),
    /// Print the knottedness certificate of a Seifert matrix.
    Cert(MatrixArgs),
    /// Triviality and Fitting data of a square presentation over Z[t, t^-1].
    Module {
        /// Rows separated by `;`, entries by `,`, e.g. "t-1" or "t-1,t;-1,-t+1".
        #[arg(long, allow_hyphen_values = true)]
        presentation: String,
    },
    /// Inspect the built-in constructions.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Run a theorem verification and print its report.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        theorem: u8,
        /// Knot dimension (at least 5).
        #[arg(long, default_value_t = catalog::MIN_HIGH_DIMENSION)]
        n: u32,
    },
}

#[derive(Debug, clap::Args)]
pub struct MatrixArgs {
    /// Integer matrix, e.g. "1,1;0,-1". The empty string is the unknot.
    #[arg(long, allow_hyphen_values = true)]
    pub matrix: String,
    /// Middle dimension; the knot has dimension 2q - 1. Defaults to 3 in text mode.
    #[arg(long)]
    pub q: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// List every construction with n, mu, singular kind, and provenance.
    List {
        /// Spin every entry whose base dimension is at most this up to it.
        #[arg(long)]
        n: Option<u32>,
    },
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome::usage(e),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Alex(args) => {
            let s = seifert_from_args(args, json)?;
            let class = s.alexander_class();
            let out = if json {
                pretty(&json!({
                    "matrix": s.matrix().to_string(),
                    "q": s.q(),
                    "alexander_polynomial": s.alexander_polynomial().to_string(),
                    "alexander_class": class.to_string(),
                }))
            } else {
                format!("{class}\n")
            };
            Ok(Outcome::ok(out))
        }
        Command::Cert(args) => {
            let s = seifert_from_args(args, json)?;
            let cert = s.knottedness_certificate();
            let out = if json {
                pretty(&json!({
                    "matrix": s.matrix().to_string(),
                    "q": s.q(),
                    "verdict": cert.verdict(),
                    "evidence": cert.evidence().to_string(),
                    "narrative": cert.narrative(),
                }))
            } else {
                format!("seifert matrix: {s}\n{cert}\n")
            };
            Ok(Outcome::ok(out))
        }
        Command::Module { presentation } => {
            let m = ModulePresentation::new(presentation.parse::<LaurentMatrix>()?);
            let fitting0 = m.fitting_generators(0)?;
            let trivial = m.is_trivial();
            let class = m.cyclic_class();
            let out = if json {
                pretty(&json!({
                    "presentation": m.relations().to_string(),
                    "size": m.size(),
                    "trivial": trivial,
                    "fitting_0": fitting0.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "order_class": class.to_string(),
                }))
            } else {
                let mut s = String::new();
                writeln!(s, "presentation: {}", m.relations()).unwrap();
                writeln!(s, "trivial: {}", if trivial { "yes" } else { "no" }).unwrap();
                writeln!(s, "fitting ideal 0 generator: {}", fitting0[0]).unwrap();
                writeln!(s, "order class: {class}").unwrap();
                s
            };
            Ok(Outcome::ok(out))
        }
        Command::Catalog {
            action: CatalogAction::List { n },
        } => {
            let entries: Vec<KnotDescriptor> = catalog::catalog()
                .into_iter()
                .map(|k| match n {
                    Some(n) if *n >= k.n => k.spin_to(*n),
                    _ => k,
                })
                .collect();
            let out = if json {
                catalog::catalog_to_json(&entries)? + "\n"
            } else {
                render_catalog(&entries)
            };
            Ok(Outcome::ok(out))
        }
        Command::Verify { theorem, n } => {
            let report = match theorem {
                1 => catalog::verify_theorem1(*n)?,
                2 => catalog::verify_theorem2(*n)?,
                _ => catalog::verify_theorem3(*n)?,
            };
            Ok(report_outcome(&report, json))
        }
    }
}

fn seifert_from_args(args: &MatrixArgs, json: bool) -> Result<SeifertMatrix, Error> {
    let q = match (args.q, json) {
        (Some(q), _) => q,
        (None, false) => DEFAULT_Q,
        (None, true) => {
            return Err(Error::Parse {
                input: args.matrix.clone(),
                pos: 0,
                msg: "--q is required with --format json".into(),
            })
        }
    };
    SeifertMatrix::new(args.matrix.parse::<IntMatrix>()?, q)
}

fn report_outcome(report: &TheoremReport, json: bool) -> Outcome {
    let stdout = if json {
        serde_json::to_string_pretty(report).expect("report serializes") + "\n"
    } else {
        format!("{report}\n")
    };
    Outcome {
        code: if report.overall {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
        stdout,
        stderr: String::new(),
    }
}

fn render_catalog(entries: &[KnotDescriptor]) -> String {
    let mut s = String::new();
    for k in entries {
        let delta = k
            .alexander_class()
            .map(|c| c.to_string())
            .unwrap_or_else(|| "-".into());
        writeln!(
            s,
            "{}: n = {}, mu = {}, singular set = {}, manifold = {}, delta = {}",
            k.name, k.n, k.mu, k.singular_kind, k.underlying, delta
        )
        .unwrap();
        writeln!(s, "  construction: {}", k.construction).unwrap();
        for p in &k.provenance {
            writeln!(s, "  provenance: {p}").unwrap();
        }
    }
    s
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes") + "\n"
}
