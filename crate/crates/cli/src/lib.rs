//! The `fusioncat` command line, as a library so tests can drive it in-process.

mod args;
mod commands;
pub mod report;

use clap::Parser;
use fusioncat::Error;

pub use args::{Cli, Command, Source};

pub mod exit {
    pub const OK: i32 = 0;
    pub const VALIDATION: i32 = 1;
    pub const IDENTITY: i32 = 2;
    pub const INPUT: i32 = 3;
    pub const CAPABILITY: i32 = 4;
}

/// What a run printed and how it ended.
#[derive(Debug, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code for an error that stopped a command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::SchemaVersion { .. } | Error::Io(_) | Error::UnknownCategory(_) => exit::INPUT,
        Error::Capability(_) => exit::CAPABILITY,
        Error::Inconsistent(_) | Error::NotRibbonConsistent(_) => exit::IDENTITY,
        Error::Arithmetic(_)
        | Error::Invalid(_)
        | Error::NotModular(_)
        | Error::MalformedFusion(_)
        | Error::Degenerate(_)
        | Error::NotNondegenerate(_) => exit::VALIDATION,
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: exit::INPUT, stdout: String::new(), stderr: text }
            } else {
                // --help and --version
                Outcome { code: exit::OK, stdout: text, stderr: String::new() }
            };
        }
    };
    match commands::dispatch(&cli) {
        Ok(commands::Output::Report(report, code)) => Outcome {
            code,
            stdout: if cli.json { report.render_json() } else { report.render_text() },
            stderr: String::new(),
        },
        Ok(commands::Output::Raw(text)) => Outcome { code: exit::OK, stdout: text, stderr: String::new() },
        Err(commands::Failure::Usage(msg)) => Outcome {
            code: exit::INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(commands::Failure::Engine(e)) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
