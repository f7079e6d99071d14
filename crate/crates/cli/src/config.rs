use std::path::PathBuf;

use num_complex::Complex64;

use crate::args::{A0Args, Cli, CliCommand, Common, FormatArg, ModeArg};
use crate::CliError;
use diskmod::{Extremum, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Example,
    Verify,
    Sweep,
    Landscape,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

/// Validated parameters of one CLI invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub a0: Option<Complex64>,
    pub n: usize,
    pub r: f64,
    pub grid: usize,
    pub tol: f64,
    pub trials: u64,
    pub seed: u64,
    pub mode: Extremum,
    pub reciprocal: bool,
    pub input_path: Option<PathBuf>,
    pub output_path: Option<PathBuf>,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: Command::Example,
            a0: None,
            n: 1,
            r: 0.5,
            grid: 4096,
            tol: DEFAULT_TOL,
            trials: 1000,
            seed: 0,
            mode: Extremum::Min,
            reciprocal: false,
            input_path: None,
            output_path: None,
            output_format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if self.command != Command::Sweep && !(self.r > 0.0 && self.r < 1.0) {
            return usage(format!("--r must lie in (0, 1), got {}", self.r));
        }
        if self.grid < 8 {
            return usage(format!("--grid must be at least 8, got {}", self.grid));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return usage(format!("--tol must be positive, got {}", self.tol));
        }
        if self.trials < 1 {
            return usage("--trials must be at least 1".into());
        }
        if self.n < 1 {
            return usage("--n must be at least 1".into());
        }
        Ok(())
    }
}

impl TryFrom<Cli> for RunConfig {
    type Error = CliError;

    fn try_from(cli: Cli) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        match cli.command {
            CliCommand::Example(a) => {
                cfg.command = Command::Example;
                cfg.a0 = Some(a0_from(&a.a0)?.ok_or_else(|| {
                    CliError::Usage("example needs --a0 or --a0-mod/--a0-arg".into())
                })?);
                cfg.n = a.n;
                cfg.r = a.r;
                apply_common(&mut cfg, &a.common);
            }
            CliCommand::Verify(a) => {
                cfg.command = Command::Verify;
                cfg.input_path = Some(a.input);
                cfg.r = a.r;
                cfg.mode = match a.mode {
                    ModeArg::Min => Extremum::Min,
                    ModeArg::Max => Extremum::Max,
                };
                apply_common(&mut cfg, &a.common);
            }
            CliCommand::Sweep(a) => {
                cfg.command = Command::Sweep;
                cfg.trials = a.trials;
                cfg.seed = a.seed;
                apply_common(&mut cfg, &a.common);
            }
            CliCommand::Landscape(a) => {
                cfg.command = Command::Landscape;
                cfg.a0 = a0_from(&a.a0)?;
                if a.input.is_none() && cfg.a0.is_none() {
                    return Err(CliError::Usage(
                        "landscape needs --input or example parameters (--a0 ... --n)".into(),
                    ));
                }
                cfg.n = a.n.unwrap_or(1);
                if cfg.a0.is_some() && a.n.is_none() {
                    return Err(CliError::Usage("example landscape needs --n".into()));
                }
                cfg.input_path = a.input;
                cfg.r = a.r;
                cfg.grid = a.grid;
                cfg.reciprocal = a.reciprocal;
                cfg.output_path = a.output;
                cfg.output_format = OutputFormat::Csv;
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn apply_common(cfg: &mut RunConfig, c: &Common) {
    cfg.grid = c.grid;
    cfg.tol = c.tol;
    cfg.output_format = match c.format {
        FormatArg::Text => OutputFormat::Text,
        FormatArg::Json => OutputFormat::Json,
    };
}

fn a0_from(a: &A0Args) -> Result<Option<Complex64>, CliError> {
    let a0 = match (a.a0, a.a0_mod, a.a0_arg) {
        (Some(re), None, None) => Some(Complex64::new(re, a.a0_im.unwrap_or(0.0))),
        (None, Some(m), Some(t)) => {
            if m < 0.0 {
                return Err(CliError::Usage(format!("--a0-mod must be non-negative, got {m}")));
            }
            Some(Complex64::from_polar(m, t))
        }
        (None, None, None) => None,
        _ => {
            return Err(CliError::Usage(
                "give a0 either as --a0 [--a0-im] or as --a0-mod with --a0-arg".into(),
            ))
        }
    };
    match a0 {
        Some(z) if !z.is_finite() => Err(CliError::Usage("a0 must be finite".into())),
        other => Ok(other),
    }
}
