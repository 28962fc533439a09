//! Command-line surface of the `kstab` binary.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use super::{
    analyze, checks_summary, fixture, invariants_summary, load_config, render_csv, render_json, verify, Analysis,
    ReportError, EXIT_INVALID, EXIT_OK,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "kstab", version, about = "Exact invariants of test configurations induced by a split linear system")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a JSON configuration document.
    Analyze {
        file: PathBuf,
        /// Largest degree l in the table.
        #[arg(long)]
        lmax: Option<usize>,
        /// Largest k in the Chow-weight sweep (raised to the minimum needed).
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze a built-in example with default caps.
    Example {
        #[arg(long)]
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the structural checks only.
    Verify {
        file: PathBuf,
        /// Degree and power cap for the checks.
        #[arg(long)]
        cap: Option<usize>,
    },
}

fn emit(
    a: &Analysis,
    format: Format,
    out: Option<&Path>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<(), ReportError> {
    let body = match format {
        Format::Csv => render_csv(a),
        Format::Json => render_json(a),
    };
    match out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| ReportError::Io { path: path.display().to_string(), message: e.to_string() })?,
        None => {
            let _ = stdout.write_all(body.as_bytes());
        }
    }
    let _ = write!(stderr, "{}{}", checks_summary(&a.checks), invariants_summary(a));
    Ok(())
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), ReportError> {
    match command {
        Command::Analyze { file, lmax, kmax, format, out } => {
            let doc = load_config(&file)?;
            let a = analyze(&doc, lmax, kmax)?;
            emit(&a, format, out.as_deref(), stdout, stderr)
        }
        Command::Example { name, format, out } => {
            let doc = fixture(&name)?;
            let a = analyze(&doc, None, None)?;
            emit(&a, format, out.as_deref(), stdout, stderr)
        }
        Command::Verify { file, cap } => {
            let doc = load_config(&file)?;
            let (_, checks) = verify(&doc, cap)?;
            let _ = stdout.write_all(checks_summary(&checks).as_bytes());
            Ok(())
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
