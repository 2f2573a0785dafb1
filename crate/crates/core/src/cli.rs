//! The `barbell` command line.
//!
//! ```text
//! barbell theorem morsesimple-s3 --k 2 --l 3
//! barbell sweep brunnian --n 3 --max 4
//! barbell scenario torus.json --format machine --out report.json
//! barbell list
//! ```
//!
//! Exit codes: 0 when every check passes, 1 when a computed value disagrees
//! with its expected value, 2 for invalid input or a violated hypothesis.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::groupring::Coefficients;
use crate::scenarios::geometries::BUILTIN_GEOMETRIES;
use crate::scenarios::obstructions::OBSTRUCTIONS;
use crate::scenarios::sweeps::SWEEPS;
use crate::scenarios::theorems::THEOREMS;
use crate::scenarios::{run_named, run_scenario, run_sweep, Params, Report, ScenarioFile};

pub const EXIT_PASS: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INVALID: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "barbell", version, about = "Exact equivariant homology for barbell diffeomorphisms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one theorem or obstruction scenario by name.
    Theorem {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a theorem over a parameter grid.
    Sweep {
        kind: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a scenario file, or re-run a saved machine report.
    Scenario {
        #[arg(value_name = "FILE", required_unless_present = "scenario")]
        file: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        scenario: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List theorems, obstruction scenarios, sweeps and built-in geometries.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Machine,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Default, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub l: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub k2: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub l2: Option<i64>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub g: Option<u32>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<i64>,
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long)]
    pub base: Option<String>,
    /// Free-group word for the bar, e.g. "x1^3 x2".
    #[arg(long)]
    pub holonomy: Option<String>,
    /// Coefficient map "i:c,i:c", e.g. "-1:1,0:1".
    #[arg(long, allow_hyphen_values = true)]
    pub h: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    /// f2 or int.
    #[arg(long)]
    pub field: Option<String>,
    /// Grid bound for sweeps.
    #[arg(long, allow_hyphen_values = true)]
    pub max: Option<i64>,
}

impl ParamArgs {
    pub fn to_params(&self) -> Result<Params> {
        Ok(Params {
            k: self.k,
            l: self.l,
            k2: self.k2,
            l2: self.l2,
            n: self.n,
            m: self.m,
            g: self.g,
            p: self.p,
            q: self.q,
            variant: self.variant.clone(),
            base: self.base.clone(),
            holonomy: self.holonomy.clone(),
            h: self.h.as_deref().map(parse_coefficient_map).transpose()?,
            v: self.v.as_deref().map(parse_coefficient_map).transpose()?,
            b: self.b.as_deref().map(parse_coefficient_map).transpose()?,
            field: self.field.as_deref().map(Coefficients::parse).transpose()?,
            max: self.max,
        })
    }
}

/// `"-1:1,0:1"` to `{-1: 1, 0: 1}`; an empty string is the zero map.
pub fn parse_coefficient_map(s: &str) -> Result<BTreeMap<i64, i64>> {
    let err = || Error::Parse { what: "coefficient map", input: s.to_string() };
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (i, c) = item.split_once(':').ok_or_else(err)?;
        let i = i.trim().parse::<i64>().map_err(|_| err())?;
        let c = c.trim().parse::<i64>().map_err(|_| err())?;
        *out.entry(i).or_insert(0) += c;
    }
    Ok(out)
}

/// What a run produced: the exit code and the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Table => report.render_table(),
        Format::Machine => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        // An unexpected matrix shape means the computation itself disagrees.
        Error::Shape(_) => EXIT_MISMATCH,
        _ => EXIT_INVALID,
    }
}

fn load_scenario(path: &PathBuf) -> Result<Report> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Scenario(format!("cannot read {}: {e}", path.display())))?;
    match ScenarioFile::parse(&text) {
        Ok(file) => run_scenario(&file),
        // A saved machine report carries its own source.
        Err(scenario_err) => match Report::from_json(&text) {
            Ok(saved) => saved.rerun(),
            Err(_) => Err(scenario_err),
        },
    }
}

fn listing() -> String {
    let mut out = String::new();
    for (title, items) in [
        ("theorems", THEOREMS),
        ("obstruction scenarios", OBSTRUCTIONS),
        ("sweeps", SWEEPS),
        ("geometries", BUILTIN_GEOMETRIES),
    ] {
        writeln!(out, "{title}:").unwrap();
        let width = items.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
        for (name, about) in items {
            writeln!(out, "  {name:width$}  {about}").unwrap();
        }
    }
    out
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (result, output) = match &cli.command {
        Command::List => return Outcome { code: EXIT_PASS, stdout: listing(), stderr: String::new() },
        Command::Theorem { name, params, output } => (params.to_params().and_then(|p| run_named(name, &p)), output),
        Command::Sweep { kind, params, output } => (params.to_params().and_then(|p| run_sweep(kind, &p)), output),
        Command::Scenario { file, scenario, output } => {
            let path = scenario.as_ref().or(file.as_ref()).expect("clap requires a file");
            (load_scenario(path), output)
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => return Outcome { code: error_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let text = emit_report(&report, output.format);
    let code = if report.passed() { EXIT_PASS } else { EXIT_MISMATCH };
    match &output.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome {
                code: EXIT_INVALID,
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Outcome { code, stdout: text, stderr: String::new() },
    }
}

/// Sizes the global thread pool from `BARBELL_THREADS`, if set.
pub fn configure_threads() -> Result<()> {
    let Ok(v) = std::env::var("BARBELL_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Parse { what: "BARBELL_THREADS", input: v.clone() })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}
