use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ramify::audit::audit;
use ramify::catalog;
use ramify::report::run;
use ramify::{parse_document, ActionDocument, Check, RunError, VerdictReport};

#[derive(Parser)]
#[command(name = "ramify", version, about = "Tameness, inertia and slices for finite group-scheme actions")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a document without running checks.
    Validate { file: PathBuf },
    /// Run checks on a document.
    Check {
        file: PathBuf,
        /// Comma-separated subset of checks.
        #[arg(long, value_delimiter = ',')]
        only: Vec<Check>,
        /// Re-verify every witness before printing.
        #[arg(long)]
        audit: bool,
    },
    /// Re-verify the witnesses of a JSON report against its document.
    Audit { document: PathBuf, report: PathBuf },
    /// The built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    /// Print an entry's document.
    Show { name: String },
    /// Run one entry, or every entry with --all.
    Run {
        name: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, value_delimiter = ',')]
        only: Vec<Check>,
        #[arg(long)]
        audit: bool,
    },
}

fn read_document(path: &Path) -> Result<ActionDocument, RunError> {
    parse_document(&std::fs::read_to_string(path)?)
}

fn checked(doc: &ActionDocument, only: &[Check], with_audit: bool) -> Result<VerdictReport, RunError> {
    let report = run(doc, (!only.is_empty()).then_some(only))?;
    if with_audit {
        let a = audit(doc, &report)?;
        if !a.passed() {
            return Err(RunError::Internal(format!("witnesses failed to verify: {}", a.failures.join("; "))));
        }
    }
    Ok(report)
}

fn json<T: serde::Serialize>(value: &T) -> Result<String, RunError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn render(reports: &[VerdictReport], format: Format, single: bool) -> Result<String, RunError> {
    match format {
        Format::Json if single => json(&reports[0]),
        Format::Json => json(&reports),
        Format::Text => Ok(reports.iter().map(ramify::text::render).collect::<Vec<_>>().join("\n")),
    }
}

fn execute(cli: Cli) -> Result<String, RunError> {
    let format = cli.format;
    match cli.command {
        Command::Validate { file } => {
            let doc = read_document(&file)?;
            let built = doc.build()?;
            let summary = serde_json::json!({
                "name": doc.name,
                "valid": true,
                "hopf_dim": built.hopf.dim,
                "algebra_dim": built.action.dim(),
                "points": built.points.len(),
            });
            match format {
                Format::Json => json(&summary),
                Format::Text => Ok(format!(
                    "{}: valid (dim A = {}, dim B = {})\n",
                    doc.name,
                    built.hopf.dim,
                    built.action.dim()
                )),
            }
        }
        Command::Check { file, only, audit } => {
            let doc = read_document(&file)?;
            render(&[checked(&doc, &only, audit)?], format, true)
        }
        Command::Audit { document, report } => {
            let doc = read_document(&document)?;
            let report: VerdictReport = serde_json::from_str(&std::fs::read_to_string(report)?)?;
            let a = audit(&doc, &report)?;
            if !a.passed() {
                return Err(RunError::Validation(format!("witnesses failed to verify: {}", a.failures.join("; "))));
            }
            Ok(format!("{} witnesses verified\n", a.verified.len()))
        }
        Command::Catalog { action } => match action {
            CatalogCommand::List => {
                let entries = catalog::entries();
                match format {
                    Format::Json => json(&entries.iter().map(|e| (e.name, e.summary)).collect::<Vec<_>>()),
                    Format::Text => Ok(entries.iter().map(|e| format!("{:<22}{}\n", e.name, e.summary)).collect()),
                }
            }
            CatalogCommand::Show { name } => {
                let entry = catalog::find(&name).ok_or_else(|| RunError::Schema(format!("no catalog entry {name:?}")))?;
                json(&entry.document())
            }
            CatalogCommand::Run { name, all, only, audit } => {
                let docs: Vec<ActionDocument> = match (name, all) {
                    (Some(n), false) => vec![catalog::find(&n)
                        .ok_or_else(|| RunError::Schema(format!("no catalog entry {n:?}")))?
                        .document()],
                    (None, true) => catalog::entries().iter().map(|e| e.document()).collect(),
                    _ => return Err(RunError::Schema("give either an entry name or --all".into())),
                };
                let reports = docs
                    .iter()
                    .map(|d| checked(d, &only, audit))
                    .collect::<Result<Vec<_>, _>>()?;
                render(&reports, format, !all)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(out) => {
            // a closed pipe (`ramify ... | head`) is not an error
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
