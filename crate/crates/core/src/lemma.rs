//! Inequality chain of the Miller–Mocanu lemma at a maximum-modulus point and
//! its dual at a minimum-modulus point of a non-vanishing function.
//!
//! With `q = z0 f'(z0)/f(z0)`:
//!
//! * maximum case: `m = Re q`, `Re(z0 f''/f') + 1 ≥ m`,
//!   `m ≥ n|f(z0) - a0|²/(|f(z0)|² - |a0|²) ≥ n(|f(z0)| - |a0|)/(|f(z0)| + |a0|)`;
//! * minimum case: `m = -Re q`, `Re(z0 f''/f') + 1 ≥ -m`,
//!   `m ≥ n|a0 - f(z0)|²/(|a0|² - |f(z0)|²) ≥ n(|a0| - |f(z0)|)/(|a0| + |f(z0)|)`.
//!
//! At a true extremum `q` is real; the imaginary part is kept as a residual.

use std::fmt::{self, Write};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremum::Extremum;
use crate::functions::AnalyticFunction;

pub const DEFAULT_TOL: f64 = 1e-8;

/// `|f(z0)|` below this is treated as a zero.
const ZERO_TOL: f64 = 1e-13;

/// Minimum separation between `|f(z0)|` and `|a0|` for the bounds to be defined.
const MODULI_GAP: f64 = 1e-13;

pub fn log_derivative<F: AnalyticFunction + ?Sized>(f: &F, z0: Complex64) -> Result<Complex64> {
    let (v, d1, _) = f.jet(z0);
    if v.norm() <= ZERO_TOL {
        return Err(Error::ZeroDenominator);
    }
    Ok(z0 * d1 / v)
}

/// `Re(z0 f''(z0)/f'(z0)) + 1`.
pub fn schwarz_quantity<F: AnalyticFunction + ?Sized>(f: &F, z0: Complex64) -> Result<f64> {
    let (_, d1, d2) = f.jet(z0);
    if d1.norm() <= ZERO_TOL {
        return Err(Error::ZeroDerivative);
    }
    Ok((z0 * d2 / d1).re + 1.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bounds {
    /// `n|f(z0) - a0|² / ||f(z0)|² - |a0|²|`.
    pub sq: f64,
    /// `n||f(z0)| - |a0|| / (|f(z0)| + |a0|)`.
    pub abs: f64,
}

/// Lower bounds on `m` for the given case. The maximum case needs
/// `|f(z0)| > |a0|`, the minimum case `|a0| > |f(z0)|`.
pub fn mocanu_bounds(a0: Complex64, fz0: Complex64, n: usize, case: Extremum) -> Result<Bounds> {
    let (fa, aa) = (fz0.norm(), a0.norm());
    if (fa - aa).abs() <= MODULI_GAP {
        return Err(Error::DegenerateModuli { tol: MODULI_GAP });
    }
    let ordered = match case {
        Extremum::Max => fa > aa,
        Extremum::Min => aa > fa,
    };
    if !ordered {
        return Err(Error::ModulusOrder {
            case,
            expected: match case {
                Extremum::Max => "|f(z0)| > |a0|",
                Extremum::Min => "|a0| > |f(z0)|",
            },
            fz0_abs: fa,
            a0_abs: aa,
        });
    }
    let n = n as f64;
    let sq = n * (fz0 - a0).norm_sqr() / (fz0.norm_sqr() - a0.norm_sqr()).abs();
    let abs = n * (fa - aa).abs() / (fa + aa);
    Ok(Bounds { sq, abs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Link {
    /// `|Im q| ≤ tol·max(1, |m|)`.
    Real,
    /// `m ≥ 0`.
    Sign,
    /// `schwarz ≥ m` (max) or `schwarz ≥ -m` (min).
    Schwarz,
    /// `m ≥ bound_sq`.
    MBoundSq,
    /// `bound_sq ≥ bound_abs`.
    BoundChain,
}

impl Link {
    pub fn name(self) -> &'static str {
        match self {
            Link::Real => "real",
            Link::Sign => "sign",
            Link::Schwarz => "schwarz",
            Link::MBoundSq => "m_bound_sq",
            Link::BoundChain => "bound_chain",
        }
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinkCheck {
    pub link: Link,
    /// Left-hand side minus right-hand side; `None` when the link was skipped.
    pub margin: Option<f64>,
    pub passed: bool,
    /// Whether the inequality held strictly (margin > 0).
    pub strict: bool,
}

impl LinkCheck {
    fn new(link: Link, margin: f64, slack: f64) -> Self {
        Self {
            link,
            margin: Some(margin),
            passed: margin >= -slack,
            strict: margin > 0.0,
        }
    }

    fn skipped(link: Link) -> Self {
        Self {
            link,
            margin: None,
            passed: true,
            strict: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaReport {
    pub case: Extremum,
    pub n: usize,
    pub tolerance: f64,
    pub z0_re: f64,
    pub z0_im: f64,
    pub a0_re: f64,
    pub a0_im: f64,
    pub fz0_re: f64,
    pub fz0_im: f64,
    pub m: f64,
    pub im_residual: f64,
    /// `None` when `f'(z0) = 0`.
    pub schwarz: Option<f64>,
    pub bound_sq: f64,
    pub bound_abs: f64,
    pub checks: Vec<LinkCheck>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, link: Link) -> &LinkCheck {
        self.checks
            .iter()
            .find(|c| c.link == link)
            .expect("every report carries all links")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// `key = value` lines in fixed order; reals use 17 significant digits.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            let _ = writeln!(out, "{k} = {v}");
        };
        kv("case", self.case.to_string());
        kv("n", self.n.to_string());
        kv("tolerance", sci(self.tolerance));
        kv("z0_re", sci(self.z0_re));
        kv("z0_im", sci(self.z0_im));
        kv("a0_re", sci(self.a0_re));
        kv("a0_im", sci(self.a0_im));
        kv("fz0_re", sci(self.fz0_re));
        kv("fz0_im", sci(self.fz0_im));
        kv("m", sci(self.m));
        kv("im_residual", sci(self.im_residual));
        kv("schwarz", self.schwarz.map_or_else(|| "skipped".into(), sci));
        kv("bound_sq", sci(self.bound_sq));
        kv("bound_abs", sci(self.bound_abs));
        for c in &self.checks {
            let margin = c.margin.map_or_else(|| "skipped".into(), sci);
            kv(&format!("check.{}.margin", c.link), margin);
            kv(&format!("check.{}.passed", c.link), c.passed.to_string());
            kv(&format!("check.{}.strict", c.link), c.strict.to_string());
        }
        kv("passed", self.passed().to_string());
        out
    }
}

/// Formats with 17 significant digits.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

/// Checks the maximum-modulus chain at `z0`, where `|f|` is claimed maximal on
/// `|z| ≤ |z0|`.
pub fn check_max_lemma<F: AnalyticFunction + ?Sized>(
    f: &F,
    n: usize,
    z0: Complex64,
    tol: f64,
) -> Result<LemmaReport> {
    build_report(f, n, z0, tol, Extremum::Max)
}

/// Checks the minimum-modulus chain at `z0`, where `|f|` is claimed minimal on
/// `|z| ≤ |z0|` and `f` does not vanish.
pub fn check_min_theorem<F: AnalyticFunction + ?Sized>(
    f: &F,
    n: usize,
    z0: Complex64,
    tol: f64,
) -> Result<LemmaReport> {
    if f.value(z0).norm() <= ZERO_TOL {
        return Err(Error::ZeroOnDisk);
    }
    build_report(f, n, z0, tol, Extremum::Min)
}

fn build_report<F: AnalyticFunction + ?Sized>(
    f: &F,
    n: usize,
    z0: Complex64,
    tol: f64,
    case: Extremum,
) -> Result<LemmaReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    if n == 0 {
        return Err(Error::InvalidClassIndex);
    }
    if f.is_constant() {
        return Err(Error::ConstantFunction);
    }
    let q = log_derivative(f, z0)?;
    let m = match case {
        Extremum::Max => q.re,
        Extremum::Min => -q.re,
    };
    let im_residual = q.im.abs();
    let schwarz = match schwarz_quantity(f, z0) {
        Ok(s) => Some(s),
        Err(Error::ZeroDerivative) => None,
        Err(e) => return Err(e),
    };
    let a0 = f.a0();
    let fz0 = f.value(z0);
    let bounds = mocanu_bounds(a0, fz0, n, case)?;

    let schwarz_check = match schwarz {
        Some(s) => {
            let rhs = match case {
                Extremum::Max => m,
                Extremum::Min => -m,
            };
            LinkCheck::new(Link::Schwarz, s - rhs, tol)
        }
        None => LinkCheck::skipped(Link::Schwarz),
    };
    let checks = vec![
        LinkCheck::new(Link::Real, tol * m.abs().max(1.0) - im_residual, 0.0),
        LinkCheck::new(Link::Sign, m, tol),
        schwarz_check,
        LinkCheck::new(Link::MBoundSq, m - bounds.sq, tol),
        LinkCheck::new(Link::BoundChain, bounds.sq - bounds.abs, tol),
    ];

    Ok(LemmaReport {
        case,
        n,
        tolerance: tol,
        z0_re: z0.re,
        z0_im: z0.im,
        a0_re: a0.re,
        a0_im: a0.im,
        fz0_re: fz0.re,
        fz0_im: fz0.im,
        m,
        im_residual,
        schwarz,
        bound_sq: bounds.sq,
        bound_abs: bounds.abs,
        checks,
    })
}
