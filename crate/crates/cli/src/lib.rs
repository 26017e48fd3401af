//! Command-line front end: verification suites, enumerations, the heptad
//! dictionary and group computations, all reported as JSON.
//!
//! [`run`] does everything except touching the process's standard streams,
//! so it can be driven from tests.

pub mod commands;
pub mod labels;
pub mod report;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use report::Report;

#[derive(Parser, Debug)]
#[command(name = "heptads", version, about = "Finite geometry of three-qubit observables")]
pub struct Cli {
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Worker threads for the pentagram search.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    pub threads: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// List a family of objects.
    Enumerate(EnumerateArgs),
    /// Translate between heptads and four-qubit labels.
    Map(MapArgs),
    /// Check or export the split Cayley hexagon.
    Hexagon(HexagonArgs),
    /// Group orders and orbits.
    Group(GroupArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    All,
    Group,
    Bijection,
    Pentagrams,
    Hexagon,
    Spreads,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Target {
    Planes,
    Lines,
    Edges,
    Pentagrams,
    Spreads,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Keep only objects made of symmetric observables (edges, pentagrams).
    #[arg(long)]
    pub symmetric_only: bool,
    /// Write the listing to this file; the report then only names it.
    #[arg(long, value_name = "PATH")]
    pub export: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["plane", "fourqubit"])))]
pub struct MapArgs {
    /// Three-qubit labels spanning a heptad, e.g. "YXZ,IYX,YII".
    #[arg(long, value_name = "LABELS")]
    pub plane: Option<String>,
    /// A symmetric four-qubit label, e.g. XIII.
    #[arg(long, value_name = "LABEL")]
    pub fourqubit: Option<String>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("action").required(true).multiple(true).args(["export", "check"])))]
pub struct HexagonArgs {
    /// Emit points, lines and pencils; to PATH if given, else in the report.
    #[arg(long, value_name = "PATH", num_args = 0..=1)]
    pub export: Option<Option<PathBuf>>,
    /// Check the generalized-hexagon axioms.
    #[arg(long)]
    pub check: bool,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("query").required(true).args(["order", "orbit"])))]
pub struct GroupArgs {
    /// Generators such as "Da,Db" or "R(alpha),R(gamma)".
    #[arg(long, value_name = "GENS")]
    pub order: Option<String>,
    /// A three-qubit label, a four-qubit label, or heptad labels.
    #[arg(long, value_name = "SEED")]
    pub orbit: Option<String>,
    /// Generators for --orbit; defaults to α and β in the seed's representation.
    #[arg(long, value_name = "GENS", requires = "orbit")]
    pub gens: Option<String>,
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Result of a command before output routing.
pub enum Output {
    Report(Report),
    /// Raw text for standard output (CSV listings).
    Text(String, Report),
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut warnings = Vec::new();
    let result = commands::execute(&cli, &mut warnings);
    let mut stderr: String = warnings.iter().map(|w| format!("warning: {w}\n")).collect();
    let output = match result {
        Ok(output) => output,
        Err(commands::CliError::Usage(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr,
            };
        }
        Err(commands::CliError::Io(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr,
            };
        }
    };
    let (text, report) = match output {
        Output::Report(r) => (r.to_json(), r),
        Output::Text(t, r) => (t, r),
    };
    let code = if report.status == report::Status::Fail { 1 } else { 0 };
    let stdout = match &cli.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => String::new(),
            Err(e) => {
                stderr.push_str(&format!("error: cannot write {}: {e}\n", path.display()));
                return Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr,
                };
            }
        },
        None => text,
    };
    Outcome { code, stdout, stderr }
}
