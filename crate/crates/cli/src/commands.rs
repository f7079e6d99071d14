use std::f64::consts::TAU;
use std::fmt::Write;
use std::path::Path;

use num_complex::Complex64;
use serde::Serialize;

use diskmod::extremum::{modulus_profile, search_circle, search_disk, Extremum, ExtremumResult, SearchOptions};
use diskmod::lemma::sci;
use diskmod::series::parse_literal;
use diskmod::{
    check_max_lemma, check_min_theorem, AnalyticFunction, ExampleFamily, LemmaReport, PowerSeries,
    Reciprocal,
};

use crate::config::{OutputFormat, RunConfig};
use crate::sweep::{render_json, render_text, run_sweep};
use crate::{CliError, Outcome, EXIT_CHECK_FAILED, EXIT_OK};

#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub quantity: &'static str,
    pub closed: f64,
    pub numeric: f64,
    pub abs_diff: f64,
}

impl Row {
    fn new(quantity: &'static str, closed: f64, numeric: f64) -> Self {
        Self {
            quantity,
            closed,
            numeric,
            abs_diff: (closed - numeric).abs(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct ExampleDoc<'a> {
    a0_re: f64,
    a0_im: f64,
    n: usize,
    r: f64,
    tolerance: f64,
    rows: &'a [Row],
    /// `bound_sq < m` held strictly.
    strict_bound: bool,
    extremum: &'a ExtremumResult,
    report: &'a LemmaReport,
    passed: bool,
}

/// Closed forms of the example family beside the numeric pipeline
/// (disk search, then the minimum-modulus checker).
pub fn example_rows(
    fam: &ExampleFamily,
    r: f64,
    opts: &SearchOptions,
    tol: f64,
) -> Result<(Vec<Row>, ExtremumResult, LemmaReport), CliError> {
    let n = fam.n();
    let disk = fam.image_disk(r)?;
    let point = fam.min_point(r)?;
    let closed = fam.closed_forms(r)?;

    let found = search_disk(fam, r, Extremum::Min, opts).map_err(CliError::from_core)?;
    let report = check_min_theorem(fam, n, found.z0, tol).map_err(CliError::from_core)?;

    // Circumcircle through three boundary images whose z^n are 120° apart.
    let sample = |k: f64| fam.value(Complex64::from_polar(r, k * TAU / (3.0 * n as f64)));
    let (center, radius) = circumcircle(sample(0.0), sample(1.0), sample(2.0));
    let deviation = modulus_profile(fam, r, opts.grid)?
        .iter()
        .map(|&(t, _)| {
            let w = fam.value(Complex64::from_polar(r, t));
            ((w - disk.center).norm() - disk.radius).abs()
        })
        .fold(0.0, f64::max);

    // Any minimiser satisfies z0^n = -r^n; compare there rather than at z0.
    let pow = |z: Complex64| z.powu(n as u32);
    let (cp, np) = (pow(point.z0), pow(found.z0));

    let rows = vec![
        Row::new("image_center_re", disk.center.re, center.re),
        Row::new("image_center_im", disk.center.im, center.im),
        Row::new("image_radius", disk.radius, radius),
        Row::new("image_boundary_deviation", 0.0, deviation),
        Row::new("z0_pow_n_re", cp.re, np.re),
        Row::new("z0_pow_n_im", cp.im, np.im),
        Row::new("min_modulus", point.min_modulus, found.value),
        Row::new("m", closed.m, report.m),
        Row::new("schwarz", closed.schwarz, report.schwarz.unwrap_or(f64::NAN)),
        Row::new("bound_sq", closed.bound, report.bound_sq),
    ];
    Ok((rows, found, report))
}

fn circumcircle(a: Complex64, b: Complex64, c: Complex64) -> (Complex64, f64) {
    let (b, c) = (b - a, c - a);
    let d = 2.0 * (b.re * c.im - b.im * c.re);
    let (bb, cc) = (b.norm_sqr(), c.norm_sqr());
    let u = Complex64::new((c.im * bb - b.im * cc) / d, (b.re * cc - c.re * bb) / d);
    (u + a, u.norm())
}

pub fn cmd_example(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let a0 = cfg
        .a0
        .ok_or_else(|| CliError::Usage("example needs a0".into()))?;
    let fam = ExampleFamily::new(a0, cfg.n).map_err(|e| CliError::Usage(e.to_string()))?;
    let opts = SearchOptions::with_grid(cfg.grid);
    let (rows, found, report) = example_rows(&fam, cfg.r, &opts, cfg.tol)?;
    let within = rows.iter().all(|r| r.abs_diff <= cfg.tol);
    let passed = within && report.passed();
    let strict_bound = report.bound_sq < report.m;

    let stdout = match cfg.output_format {
        OutputFormat::Json => {
            let doc = ExampleDoc {
                a0_re: a0.re,
                a0_im: a0.im,
                n: cfg.n,
                r: cfg.r,
                tolerance: cfg.tol,
                rows: &rows,
                strict_bound,
                extremum: &found,
                report: &report,
                passed,
            };
            serde_json::to_string_pretty(&doc).expect("document serialises") + "\n"
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "example a0 = {} {} n = {} r = {}",
                sci(a0.re),
                sci(a0.im),
                cfg.n,
                sci(cfg.r)
            );
            let _ = writeln!(
                out,
                "{:<26} {:>24} {:>24} {:>24}",
                "quantity", "closed", "numeric", "abs_diff"
            );
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:<26} {:>24} {:>24} {:>24}",
                    r.quantity,
                    sci(r.closed),
                    sci(r.numeric),
                    sci(r.abs_diff)
                );
            }
            let _ = writeln!(out, "strict_bound = {strict_bound}");
            let _ = writeln!(out, "theta = {}", sci(found.theta));
            let _ = writeln!(out, "bracket_width = {}", sci(found.bracket_width));
            let _ = writeln!(out, "refine_iterations = {}", found.refine_iterations);
            for c in &report.checks {
                let _ = writeln!(out, "check.{} = {}", c.link, verdict(c.passed));
            }
            let _ = writeln!(out, "status = {}", verdict(passed));
            out
        }
    };
    Ok(Outcome {
        code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
        stdout,
        stderr: String::new(),
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn load_series(path: &Path) -> Result<PowerSeries, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(parse_literal(&text)?)
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    extremum: &'a ExtremumResult,
    report: &'a LemmaReport,
    passed: bool,
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let path = cfg
        .input_path
        .as_deref()
        .ok_or_else(|| CliError::Usage("verify needs --input".into()))?;
    let series = load_series(path)?;
    if series.is_constant() {
        return Err(diskmod::Error::ConstantFunction.into());
    }
    if cfg.mode == Extremum::Min && series.a0() == Complex64::default() {
        return Err(CliError::Usage(
            "min mode needs a0 != 0 (the function vanishes at the origin)".into(),
        ));
    }
    let opts = SearchOptions::with_grid(cfg.grid);
    let n = series.n();
    let found = search_disk(&series, cfg.r, cfg.mode, &opts).map_err(CliError::from_core)?;
    let report = match cfg.mode {
        Extremum::Min => check_min_theorem(&series, n, found.z0, cfg.tol),
        Extremum::Max => check_max_lemma(&series, n, found.z0, cfg.tol),
    }
    .map_err(CliError::from_core)?;
    let passed = report.passed();

    let stdout = match cfg.output_format {
        OutputFormat::Json => {
            let doc = VerifyDoc {
                extremum: &found,
                report: &report,
                passed,
            };
            serde_json::to_string_pretty(&doc).expect("document serialises") + "\n"
        }
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "theta = {}", sci(found.theta));
            let _ = writeln!(out, "modulus = {}", sci(found.value));
            let _ = writeln!(out, "bracket_width = {}", sci(found.bracket_width));
            let _ = writeln!(out, "refine_iterations = {}", found.refine_iterations);
            out.push_str(&report.to_text());
            out
        }
    };
    Ok(Outcome {
        code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
        stdout,
        stderr: String::new(),
    })
}

pub fn cmd_sweep(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let summary = run_sweep(cfg.seed, cfg.trials, &SearchOptions::with_grid(cfg.grid), cfg.tol);
    let stdout = match cfg.output_format {
        OutputFormat::Json => render_json(&summary),
        _ => render_text(&summary),
    };
    Ok(Outcome {
        code: if summary.failed() == 0 {
            EXIT_OK
        } else {
            EXIT_CHECK_FAILED
        },
        stdout,
        stderr: String::new(),
    })
}

/// `theta,modulus` header plus one row per grid angle, 17 significant digits.
pub fn landscape_csv<F: AnalyticFunction + ?Sized>(
    f: &F,
    r: f64,
    grid: usize,
) -> Result<String, CliError> {
    let mut out = String::from("theta,modulus\n");
    for (t, v) in modulus_profile(f, r, grid)? {
        let _ = writeln!(out, "{},{}", sci(t), sci(v));
    }
    Ok(out)
}

pub fn cmd_landscape(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let base: Box<dyn AnalyticFunction> = match (&cfg.input_path, cfg.a0) {
        (Some(path), _) => Box::new(load_series(path)?),
        (None, Some(a0)) => {
            Box::new(ExampleFamily::new(a0, cfg.n).map_err(|e| CliError::Usage(e.to_string()))?)
        }
        (None, None) => return Err(CliError::Usage("landscape needs a function".into())),
    };
    let f: Box<dyn AnalyticFunction> = if cfg.reciprocal {
        Box::new(Reciprocal(base))
    } else {
        base
    };

    let csv = landscape_csv(&f, cfg.r, cfg.grid)?;
    let opts = SearchOptions::with_grid(cfg.grid);
    let mut summary = String::new();
    match search_circle(&f, cfg.r, Extremum::Min, &opts) {
        Ok(lo) => {
            let _ = writeln!(summary, "min theta = {} modulus = {}", sci(lo.theta), sci(lo.value));
        }
        Err(e) => {
            let _ = writeln!(summary, "min unavailable: {e}");
        }
    }
    let hi = search_circle(&f, cfg.r, Extremum::Max, &opts).map_err(CliError::from_core)?;
    let _ = writeln!(summary, "max theta = {} modulus = {}", sci(hi.theta), sci(hi.value));

    match &cfg.output_path {
        Some(path) => {
            std::fs::write(path, csv).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            Ok(Outcome {
                code: EXIT_OK,
                stdout: summary,
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            code: EXIT_OK,
            stdout: csv,
            stderr: summary,
        }),
    }
}
