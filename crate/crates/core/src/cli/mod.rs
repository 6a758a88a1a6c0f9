//! Command-line front end: `list`, `show`, `verify` and `derive`.
//!
//! Exit status: 0 when every checked point passed, 1 when any failed
//! (the first counterexample goes to stderr), 2 for usage errors, malformed
//! rationals and unknown identities.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::catalogue::{catalogue, ParamAssignment};
use crate::engine::{self, DerivationReport, Execution, ParamGrid, VerificationReport, DERIVABLE};
use crate::error::Error;
use crate::exact::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest accepted `--n-max`, `--p-max` and `--q-max`. Closed forms
/// evaluate polynomial coefficients in `i64`; degree-9 terms stay in range
/// up to here.
pub const GRID_LIMIT: u32 = 60;

#[derive(Debug, Parser)]
#[command(name = "harmonic-id", version, about = "Exact verification of harmonic-number identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Identity index with anchors.
    List(OutputArgs),
    /// Metadata, guards and parameter domains of one identity.
    Show {
        id: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sweep identities over a parameter grid, comparing both sides exactly.
    Verify {
        /// Identity ids; omit and pass --all for the whole catalogue.
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        ids: Vec<String>,
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Rebuild a theorem from the differentiated seed sum at every grid point.
    Derive {
        id: String,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn grid_bound(s: &str) -> Result<u32, String> {
    let v: u32 = s.parse().map_err(|e| format!("{e}"))?;
    if v > GRID_LIMIT {
        return Err(format!("at most {GRID_LIMIT}"));
    }
    Ok(v)
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long, default_value_t = 25, value_parser = grid_bound)]
    pub n_max: u32,
    #[arg(long, default_value_t = 8, value_parser = grid_bound)]
    pub p_max: u32,
    #[arg(long, default_value_t = 8, value_parser = grid_bound)]
    pub q_max: u32,
    /// Extra rational sample `a/b`, appended to the defaults; repeatable.
    #[arg(long = "x-sample", value_parser = rational_arg, allow_hyphen_values = true)]
    pub x_samples: Vec<Rational>,
    /// Worker threads; overrides HARMONIC_ID_WORKERS. 1 runs sequentially.
    #[arg(long)]
    pub workers: Option<usize>,
}

impl GridArgs {
    pub fn grid(&self) -> ParamGrid {
        let mut g = ParamGrid::new(self.n_max, self.p_max, self.q_max);
        for x in &self.x_samples {
            g.push_x_sample(x.clone());
        }
        g
    }

    pub fn execution(&self) -> Execution {
        self.workers.map_or_else(Execution::from_env, Execution::with_workers)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Markdown,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl OutputArgs {
    fn emit(&self, text: &str, stdout: &mut dyn Write) -> io::Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text),
            None => stdout.write_all(text.as_bytes()),
        }
    }
}

/// 0 if no report has a failure, else 1.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(VerificationReport::is_clean) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Parses `argv` (program name first) and runs it.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut io::stdout().lock(), &mut io::stderr().lock())
}

pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{}", e.render())
            } else {
                write!(stdout, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Failure::Unknown(id)) => {
            let hints = catalogue().suggestions(&id);
            let _ = writeln!(stderr, "error: unknown identity `{id}`");
            let _ = writeln!(stderr, "did you mean: {}", hints.join(", "));
            EXIT_USAGE
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Unknown(String),
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownIdentity(id) => Failure::Unknown(id),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::List(output) => {
            let text = render::index(catalogue().records(), output.format)?;
            output.emit(&text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Show { id, output } => {
            let record = catalogue().get(&id)?;
            let text = render::record(record, output.format)?;
            output.emit(&text, stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { ids, all, grid, output } => {
            let records = if all {
                catalogue().records().iter().collect::<Vec<_>>()
            } else {
                ids.iter().map(|id| catalogue().get(id)).collect::<Result<Vec<_>, _>>()?
            };
            let (g, exec) = (grid.grid(), grid.execution());
            let reports: Vec<VerificationReport> =
                records.into_iter().map(|r| engine::verify_record(r, &g, exec)).collect();
            output.emit(&render::reports(&reports, output.format)?, stdout)?;
            for rep in reports.iter().filter(|r| !r.is_clean()) {
                if let Some(f) = rep.first_counterexample() {
                    writeln!(stderr, "FAIL {}: {} of {} checked points failed", rep.id, rep.failed.len(), rep.checked)?;
                    writeln!(stderr, "  counterexample at {}", f.params)?;
                    writeln!(stderr, "  lhs = {}", render::opt(&f.lhs))?;
                    writeln!(stderr, "  rhs = {}", render::opt(&f.rhs))?;
                    if let Some(e) = &f.error {
                        writeln!(stderr, "  error: {e}")?;
                    }
                }
            }
            Ok(exit_code(&reports))
        }
        Command::Derive { id, grid, output } => {
            let record = catalogue().get(&id)?;
            if !DERIVABLE.contains(&record.id) {
                return Err(Failure::Usage(format!(
                    "{id} has no mechanical derivation; choose one of {}",
                    DERIVABLE.join(", ")
                )));
            }
            let g = grid.grid();
            let points: Vec<ParamAssignment> =
                g.points(record).into_iter().filter(|a| record.admissible(a).is_admissible()).collect();
            let results = grid.execution().map(&points, |a| engine::derive(record.id, a));
            let mut reports: Vec<DerivationReport> = Vec::new();
            let mut code = EXIT_OK;
            for (a, res) in points.iter().zip(results) {
                match res {
                    Ok(rep) => {
                        if !rep.matched && code == EXIT_OK {
                            writeln!(stderr, "FAIL {id}: reconstruction differs at {}", rep.params)?;
                            writeln!(stderr, "  reconstruction = {}", rep.reconstruction)?;
                            writeln!(stderr, "  catalogue      = {}", rep.catalogue_rhs)?;
                        }
                        if !rep.matched {
                            code = EXIT_FAILED;
                        }
                        reports.push(rep);
                    }
                    Err(e) => {
                        if code == EXIT_OK {
                            writeln!(stderr, "FAIL {id}: {e} at {a}")?;
                        }
                        code = EXIT_FAILED;
                    }
                }
            }
            output.emit(&render::derivations(&id, &reports, output.format)?, stdout)?;
            Ok(code)
        }
    }
}
