//! Seeded falsification sweep.
//!
//! Trial `i` draws its parameters from a ChaCha stream selected by
//! `(seed, i)`, so any trial can be replayed alone and the report does not
//! depend on execution order.

use std::f64::consts::TAU;
use std::fmt::Write;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use diskmod::extremum::{search_disk, Extremum, SearchOptions};
use diskmod::lemma::sci;
use diskmod::series::format_literal;
use diskmod::{check_max_lemma, check_min_theorem, ExpOf, LemmaReport, Link, PowerSeries, Reciprocal};

/// Largest allowed `|m_min - m_max|` between `f` at its minimum and `1/f` at its maximum.
pub const DUALITY_TOL: f64 = 1e-10;

const MAX_DEGREE: usize = 16;
const MAX_CLASS_INDEX: usize = 6;
/// Upper limit of `Σ|h_k|`.
const COEFF_BUDGET: f64 = 2.0;

#[derive(Debug, Clone, PartialEq)]
pub struct TrialParams {
    pub seed: u64,
    pub trial: u64,
    pub a0: Complex64,
    pub r: f64,
    /// `h`, with `f = a0·exp(h)`.
    pub exponent: PowerSeries,
}

impl TrialParams {
    pub fn n(&self) -> usize {
        self.exponent.n()
    }

    pub fn function(&self) -> ExpOf {
        ExpOf {
            scale: self.a0,
            exponent: self.exponent.clone(),
        }
    }
}

/// Draws the parameters of trial `trial` under `seed`.
pub fn draw_trial(seed: u64, trial: u64) -> TrialParams {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);

    let a0 = Complex64::from_polar(rng.gen_range(0.55..=2.0), rng.gen_range(0.0..TAU));
    let n = rng.gen_range(1..=MAX_CLASS_INDEX);
    let degree = rng.gen_range(n..=MAX_DEGREE);
    let raw: Vec<Complex64> = (n..=degree)
        .map(|k| {
            // The leading coefficient is kept away from zero so that f stays
            // distinguishable from a constant at small radii.
            let mag = if k == n {
                rng.gen_range(0.5..1.0)
            } else {
                rng.gen_range(0.0..1.0)
            };
            Complex64::from_polar(mag, rng.gen_range(0.0..TAU))
        })
        .collect();
    let budget = rng.gen_range(0.1..=COEFF_BUDGET);
    let total: f64 = raw.iter().map(|c| c.norm()).sum();
    let coeffs = raw.into_iter().map(|c| c * (budget / total)).collect();
    let r = rng.gen_range(0.1..=0.9);

    TrialParams {
        seed,
        trial,
        a0,
        r,
        exponent: PowerSeries::new(Complex64::default(), n, coeffs).expect("n >= 1"),
    }
}

#[derive(Debug, Clone)]
pub struct TrialOutcome {
    pub params: TrialParams,
    pub min: Result<LemmaReport, String>,
    pub max: Result<LemmaReport, String>,
    /// `|m_min - m_max|`, NaN when either side errored.
    pub duality_gap: f64,
}

impl TrialOutcome {
    pub fn passed(&self) -> bool {
        matches!((&self.min, &self.max), (Ok(a), Ok(b)) if a.passed() && b.passed())
            && self.duality_gap <= DUALITY_TOL
    }
}

/// Runs the minimum-modulus check on `f` and the maximum-modulus check on `1/f`.
pub fn run_trial(params: TrialParams, opts: &SearchOptions, tol: f64) -> TrialOutcome {
    let f = params.function();
    let n = params.n();
    let r = params.r;
    let min = search_disk(&f, r, Extremum::Min, opts)
        .and_then(|e| check_min_theorem(&f, n, e.z0, tol))
        .map_err(|e| e.to_string());
    let g = Reciprocal(f.clone());
    let max = search_disk(&g, r, Extremum::Max, opts)
        .and_then(|e| check_max_lemma(&g, n, e.z0, tol))
        .map_err(|e| e.to_string());
    let duality_gap = match (&min, &max) {
        (Ok(a), Ok(b)) => (a.m - b.m).abs(),
        _ => f64::NAN,
    };
    TrialOutcome {
        params,
        min,
        max,
        duality_gap,
    }
}

/// Smallest margin seen per link, over all successful reports of one case.
#[derive(Debug, Clone, Default, Serialize)]
pub struct WorstMargins {
    pub real: Option<f64>,
    pub sign: Option<f64>,
    pub schwarz: Option<f64>,
    pub m_bound_sq: Option<f64>,
    pub bound_chain: Option<f64>,
}

impl WorstMargins {
    fn absorb(&mut self, rep: &LemmaReport) {
        for c in &rep.checks {
            let slot = match c.link {
                Link::Real => &mut self.real,
                Link::Sign => &mut self.sign,
                Link::Schwarz => &mut self.schwarz,
                Link::MBoundSq => &mut self.m_bound_sq,
                Link::BoundChain => &mut self.bound_chain,
            };
            if let Some(m) = c.margin {
                *slot = Some(slot.map_or(m, |s| s.min(m)));
            }
        }
    }

    fn entries(&self) -> [(&'static str, Option<f64>); 5] {
        [
            ("real", self.real),
            ("sign", self.sign),
            ("schwarz", self.schwarz),
            ("m_bound_sq", self.m_bound_sq),
            ("bound_chain", self.bound_chain),
        ]
    }
}

#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub seed: u64,
    pub trials: u64,
    pub tol: f64,
    pub passed: u64,
    pub worst_min: WorstMargins,
    pub worst_max: WorstMargins,
    pub worst_duality_gap: f64,
    pub failures: Vec<TrialOutcome>,
}

impl SweepSummary {
    pub fn failed(&self) -> u64 {
        self.trials - self.passed
    }
}

pub fn run_sweep(seed: u64, trials: u64, opts: &SearchOptions, tol: f64) -> SweepSummary {
    let mut summary = SweepSummary {
        seed,
        trials,
        tol,
        passed: 0,
        worst_min: WorstMargins::default(),
        worst_max: WorstMargins::default(),
        worst_duality_gap: 0.0,
        failures: Vec::new(),
    };
    for trial in 0..trials {
        let out = run_trial(draw_trial(seed, trial), opts, tol);
        if let Ok(rep) = &out.min {
            summary.worst_min.absorb(rep);
        }
        if let Ok(rep) = &out.max {
            summary.worst_max.absorb(rep);
        }
        // NaN (an errored side) must not hide behind f64::max.
        if out.duality_gap.is_nan() || out.duality_gap > summary.worst_duality_gap {
            summary.worst_duality_gap = out.duality_gap;
        }
        if out.passed() {
            summary.passed += 1;
        } else {
            summary.failures.push(out);
        }
    }
    summary
}

pub fn render_text(s: &SweepSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "seed = {}", s.seed);
    let _ = writeln!(out, "trials = {}", s.trials);
    let _ = writeln!(out, "tolerance = {}", sci(s.tol));
    let _ = writeln!(out, "passed = {}", s.passed);
    let _ = writeln!(out, "failed = {}", s.failed());
    for (case, worst) in [("min", &s.worst_min), ("max", &s.worst_max)] {
        for (name, v) in worst.entries() {
            let v = v.map_or_else(|| "none".into(), sci);
            let _ = writeln!(out, "worst.{case}.{name} = {v}");
        }
    }
    let _ = writeln!(out, "worst.duality_gap = {}", sci(s.worst_duality_gap));
    for f in &s.failures {
        let p = &f.params;
        let _ = writeln!(out);
        let _ = writeln!(out, "[failure trial={} seed={}]", p.trial, p.seed);
        let _ = writeln!(out, "a0 = {} {}", sci(p.a0.re), sci(p.a0.im));
        let _ = writeln!(out, "r = {}", sci(p.r));
        let _ = writeln!(out, "duality_gap = {}", sci(f.duality_gap));
        let _ = writeln!(out, "# exponent h (f = a0·exp(h))");
        out.push_str(&format_literal(&p.exponent));
        for (case, rep) in [("min", &f.min), ("max", &f.max)] {
            let _ = writeln!(out, "[{case} report]");
            match rep {
                Ok(rep) => out.push_str(&rep.to_text()),
                Err(e) => {
                    let _ = writeln!(out, "error = {e}");
                }
            }
        }
    }
    out
}

#[derive(Serialize)]
struct JsonFailure<'a> {
    trial: u64,
    seed: u64,
    a0: [f64; 2],
    r: f64,
    exponent: String,
    duality_gap: f64,
    min: std::result::Result<&'a LemmaReport, &'a str>,
    max: std::result::Result<&'a LemmaReport, &'a str>,
}

#[derive(Serialize)]
struct JsonSummary<'a> {
    seed: u64,
    trials: u64,
    tolerance: f64,
    passed: u64,
    failed: u64,
    worst_min: &'a WorstMargins,
    worst_max: &'a WorstMargins,
    worst_duality_gap: f64,
    failures: Vec<JsonFailure<'a>>,
}

pub fn render_json(s: &SweepSummary) -> String {
    let doc = JsonSummary {
        seed: s.seed,
        trials: s.trials,
        tolerance: s.tol,
        passed: s.passed,
        failed: s.failed(),
        worst_min: &s.worst_min,
        worst_max: &s.worst_max,
        worst_duality_gap: s.worst_duality_gap,
        failures: s
            .failures
            .iter()
            .map(|f| JsonFailure {
                trial: f.params.trial,
                seed: f.params.seed,
                a0: [f.params.a0.re, f.params.a0.im],
                r: f.params.r,
                exponent: format_literal(&f.params.exponent),
                duality_gap: f.duality_gap,
                min: f.min.as_ref().map_err(String::as_str),
                max: f.max.as_ref().map_err(String::as_str),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("summary serialises");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_respect_ranges() {
        for trial in 0..200 {
            let p = draw_trial(11, trial);
            let n = p.n();
            assert!((0.55..=2.0).contains(&p.a0.norm()));
            assert!((1..=MAX_CLASS_INDEX).contains(&n));
            assert!(p.exponent.order() <= MAX_DEGREE);
            assert_eq!(p.exponent.a0(), Complex64::default());
            let total: f64 = p.exponent.coeffs().iter().map(|c| c.norm()).sum();
            assert!(total <= COEFF_BUDGET + 1e-12);
            assert!((0.1..=0.9).contains(&p.r));
        }
    }

    #[test]
    fn draws_are_reproducible_and_independent_per_trial() {
        assert_eq!(draw_trial(5, 17), draw_trial(5, 17));
        assert_ne!(draw_trial(5, 17), draw_trial(5, 18));
        assert_ne!(draw_trial(5, 17), draw_trial(6, 17));
    }

    #[test]
    fn small_sweep_passes() {
        let s = run_sweep(3, 20, &SearchOptions::default(), diskmod::DEFAULT_TOL);
        assert_eq!(s.passed, 20, "{}", render_text(&s));
        assert!(s.worst_duality_gap <= DUALITY_TOL);
        assert!(s.worst_min.m_bound_sq.unwrap() >= -diskmod::DEFAULT_TOL);
    }

    #[test]
    fn failures_are_rendered_with_parameters() {
        // A tolerance this tight makes the realness link fail.
        let s = run_sweep(3, 2, &SearchOptions::default(), 1e-300);
        assert!(s.failed() > 0);
        let text = render_text(&s);
        assert!(text.contains("[failure trial=0 seed=3]"));
        assert!(text.contains("[min report]"));
        let json: serde_json::Value = serde_json::from_str(&render_json(&s)).unwrap();
        assert_eq!(json["failures"][0]["trial"], 0);
    }
}
