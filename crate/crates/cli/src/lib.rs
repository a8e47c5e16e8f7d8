//! The `sturmian` command-line tool.
//!
//! Exit codes: 0 on success, 1 on domain errors, 2 on usage errors. Every
//! error prints one line `error[CODE]: message` to stderr; usage errors add
//! the usage text after it.

pub mod args;
pub mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};

use args::{Cli, Command, Format};

#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    /// Usage errors exit with 2 and print the usage.
    pub usage: bool,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: "USAGE",
            message: message.into(),
            usage: true,
        }
    }

    pub fn usage_code(code: &'static str, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
            usage: true,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.usage {
            2
        } else {
            1
        }
    }
}

fn report(err: &CliError, stderr: &mut impl Write) -> i32 {
    let _ = writeln!(stderr, "error[{}]: {}", err.code, err.message);
    if err.usage {
        let _ = writeln!(stderr, "{}", Cli::command().render_usage());
    }
    err.exit_code()
}

/// Parses `argv` (program name first), runs the command and returns the exit
/// code.
pub fn run<I, T>(argv: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            // clap's message runs until the blank line before its usage text
            let full = e.to_string();
            let message = full
                .lines()
                .take_while(|l| !l.trim().is_empty())
                .map(str::trim)
                .collect::<Vec<_>>()
                .join(" ");
            let message = message
                .strip_prefix("error: ")
                .unwrap_or(&message)
                .to_string();
            return report(&CliError::usage(message), stderr);
        }
    };
    let slope = match cli.slope.as_deref().map(str::parse::<sturmian::Slope>) {
        None => None,
        Some(Ok(s)) => Some(s),
        Some(Err(e)) => return report(&e.into(), stderr),
    };
    let format = match &cli.command {
        Command::Rauzy { json: true, .. } => Format::Json,
        _ => cli.format,
    };
    let result = commands::execute(&cli.command, slope.as_ref()).and_then(|r| r.select(format));
    match result {
        Ok(out) => {
            if stdout.write_all(out.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(e) => report(&e, stderr),
    }
}
