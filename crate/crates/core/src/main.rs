//! Batch front-end: runs scenario files or the built-in regression
//! suite and prints a deterministic report.
//!
//! Exit codes: 0 on success (no mismatches), 1 when any task
//! mismatches, 2 on usage, parse, or resolution errors.

use clap::{Parser, Subcommand, ValueEnum};
use curvestab::report::Report;
use curvestab::scenario::Scenario;
use curvestab::suite::paper_suite;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "curvestab",
    about = "Exact-arithmetic verification workbench for GIT stability and divisor-class computations",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Execute the tasks in a scenario file.
    Run {
        /// Path to the scenario file.
        file: String,
        /// Output format.
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Restrict the report to one module
        /// (polynomial_algebra, curve_models, git_stability,
        /// divisor_calculus).
        #[arg(long)]
        filter: Option<String>,
    },
    /// Run the built-in regression suite of recorded anchor values.
    PaperSuite {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        filter: Option<String>,
    },
}

fn emit(report: &Report, format: Format) -> ExitCode {
    let rendered = match format {
        Format::Text => report.render_text(),
        Format::Json => report.render_json(),
    };
    print!("{rendered}");
    if report.exit_code() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run {
            file,
            format,
            filter,
        } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {file}: {e}");
                    return ExitCode::from(2);
                }
            };
            let scenario = match Scenario::parse(&text) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {file}: {e}");
                    return ExitCode::from(2);
                }
            };
            match scenario.execute(filter.as_deref()) {
                Ok(report) => emit(&report, format),
                Err(e) => {
                    eprintln!("error: {file}: {e}");
                    ExitCode::from(2)
                }
            }
        }
        Command::PaperSuite { format, filter } => {
            let report = paper_suite(filter.as_deref());
            emit(&report, format)
        }
    }
}
