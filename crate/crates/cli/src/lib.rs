//! Command implementations behind the `diskmod` binary.
//!
//! Every command returns an [`Outcome`] holding its exit code and rendered
//! output, so the binary is a thin shell and tests can drive commands
//! in-process. Exit codes: 0 success, 1 check failure, 2 usage or input error.

pub mod args;
pub mod commands;
pub mod config;
pub mod sweep;

pub use args::Cli;
pub use config::{Command, OutputFormat, RunConfig};

use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("function vanishes in the disk: {0}")]
    ZeroOnDisk(diskmod::Error),
    #[error(transparent)]
    Core(#[from] diskmod::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn from_core(e: diskmod::Error) -> Self {
        use diskmod::Error as E;
        match e {
            E::ZeroInDisk { .. } | E::ZeroOnCircle { .. } | E::ZeroOnDisk => Self::ZeroOnDisk(e),
            e => Self::Core(e),
        }
    }
}

/// Parses nothing; runs an already-validated configuration.
pub fn run(config: &RunConfig) -> Outcome {
    let result = match config.command {
        Command::Example => commands::cmd_example(config),
        Command::Verify => commands::cmd_verify(config),
        Command::Sweep => commands::cmd_sweep(config),
        Command::Landscape => commands::cmd_landscape(config),
    };
    result.unwrap_or_else(|e| Outcome {
        code: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}

/// Parses argv-style arguments and runs the command. Clap's own usage errors
/// map to exit code 2, `--help`/`--version` to 0.
pub fn run_args<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    match Cli::try_parse_from(argv) {
        Ok(cli) => match RunConfig::try_from(cli) {
            Ok(cfg) => run(&cfg),
            Err(e) => Outcome {
                code: EXIT_USAGE,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            },
        },
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            }
        }
    }
}
