//! Minimum and maximum of `|f|` on circles `|z| = r` and closed disks `|z| ≤ r`.
//!
//! A uniform angular grid picks candidate basins; each candidate is refined by
//! golden-section search on the bracketing arc. When the two interior probes
//! are indistinguishable in floating point, the sign of the tangential
//! derivative `d|f|/dθ = -|f|·Im(z f'/f)` decides which side to keep, so the
//! bracket keeps shrinking past the value-comparison noise floor.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functions::AnalyticFunction;

/// Golden ratio conjugate, `(√5 - 1)/2`.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Extremum {
    Min,
    Max,
}

impl Extremum {
    /// Orients the modulus so that smaller is better.
    fn orient(self, modulus: f64) -> f64 {
        match self {
            Extremum::Min => modulus,
            Extremum::Max => -modulus,
        }
    }
}

impl fmt::Display for Extremum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Extremum::Min => "min",
            Extremum::Max => "max",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Angular grid size on the circle.
    pub grid: usize,
    /// Iteration cap per golden-section refinement.
    pub max_iter: usize,
    /// Target width of the final angular bracket.
    pub bracket_tol: f64,
    /// Moduli below this count as zeros of `f`.
    pub zero_tol: f64,
    /// Interior radii sampled by the disk checks.
    pub disk_radii: usize,
    /// Angles per interior radius.
    pub disk_angles: usize,
    /// Slack allowed when comparing interior samples with the boundary extremum.
    pub interior_tol: f64,
    /// Number of grid-local extrema that are refined.
    pub candidates: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            grid: 4096,
            max_iter: 200,
            bracket_tol: 1e-12,
            zero_tol: 1e-13,
            disk_radii: 64,
            disk_angles: 256,
            interior_tol: 1e-10,
            candidates: 8,
        }
    }
}

impl SearchOptions {
    pub fn with_grid(grid: usize) -> Self {
        Self {
            grid,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExtremumResult {
    /// Angle of the extremal point, in `[0, 2π)`.
    pub theta: f64,
    #[serde(skip)]
    pub z0: Complex64,
    /// `|f(z0)|`.
    pub value: f64,
    pub grid_size: usize,
    pub refine_iterations: usize,
    pub bracket_width: f64,
}

/// `(θ_k, |f(r e^{iθ_k})|)` for `θ_k = 2πk/samples`, `k = 0..samples`.
pub fn modulus_profile<F: AnalyticFunction + ?Sized>(
    f: &F,
    r: f64,
    samples: usize,
) -> Result<Vec<(f64, f64)>> {
    check_radius(r)?;
    if samples < 8 {
        return Err(Error::InvalidParameter(format!(
            "profile needs at least 8 samples, got {samples}"
        )));
    }
    Ok(grid_angles(samples)
        .map(|t| (t, f.value(Complex64::from_polar(r, t)).norm()))
        .collect())
}

pub fn find_min_on_circle<F: AnalyticFunction + ?Sized>(f: &F, r: f64) -> Result<ExtremumResult> {
    search_circle(f, r, Extremum::Min, &SearchOptions::default())
}

pub fn find_max_on_circle<F: AnalyticFunction + ?Sized>(f: &F, r: f64) -> Result<ExtremumResult> {
    search_circle(f, r, Extremum::Max, &SearchOptions::default())
}

pub fn find_min_on_disk<F: AnalyticFunction + ?Sized>(f: &F, r: f64) -> Result<ExtremumResult> {
    search_disk(f, r, Extremum::Min, &SearchOptions::default())
}

pub fn find_max_on_disk<F: AnalyticFunction + ?Sized>(f: &F, r: f64) -> Result<ExtremumResult> {
    search_disk(f, r, Extremum::Max, &SearchOptions::default())
}

/// Extremum of `|f|` on the circle `|z| = r`.
///
/// Ties between symmetric extrema resolve to the lowest angle.
pub fn search_circle<F: AnalyticFunction + ?Sized>(
    f: &F,
    r: f64,
    kind: Extremum,
    opts: &SearchOptions,
) -> Result<ExtremumResult> {
    check_radius(r)?;
    let profile = modulus_profile(f, r, opts.grid)?;
    let (lo, hi) = profile
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, v)| {
            (lo.min(v), hi.max(v))
        });
    if kind == Extremum::Min && lo < opts.zero_tol {
        return Err(Error::ZeroOnCircle { min: lo });
    }

    // Flat landscape: every grid point is extremal, report the first.
    if hi - lo <= 1e-14 * hi.abs().max(1.0) {
        let z0 = Complex64::from_polar(r, 0.0);
        return Ok(ExtremumResult {
            theta: 0.0,
            z0,
            value: f.value(z0).norm(),
            grid_size: opts.grid,
            refine_iterations: 0,
            bracket_width: 0.0,
        });
    }

    let oriented: Vec<f64> = profile.iter().map(|&(_, v)| kind.orient(v)).collect();
    let step = TAU / opts.grid as f64;
    let mut best: Option<ExtremumResult> = None;
    for idx in grid_candidates(&oriented, opts.candidates) {
        let center = profile[idx].0;
        let refined = golden_section(f, r, kind, center - step, center + step, opts)?;
        let better = match &best {
            None => true,
            Some(b) => {
                let (new, old) = (kind.orient(refined.value), kind.orient(b.value));
                let tie = (new - old).abs() <= 4.0 * f64::EPSILON * old.abs().max(1.0);
                if tie {
                    refined.theta < b.theta
                } else {
                    new < old
                }
            }
        };
        if better {
            best = Some(refined);
        }
    }
    let mut best = best.expect("a non-flat grid has at least one local extremum");
    best.grid_size = opts.grid;
    Ok(best)
}

/// Extremum of `|f|` on the closed disk `|z| ≤ r`.
///
/// By the maximum/minimum-modulus principle the extremum lies on the boundary;
/// the interior is sampled only to confirm that (and, for the minimum, that
/// `f` does not vanish).
pub fn search_disk<F: AnalyticFunction + ?Sized>(
    f: &F,
    r: f64,
    kind: Extremum,
    opts: &SearchOptions,
) -> Result<ExtremumResult> {
    check_radius(r)?;
    let interior = interior_extreme(f, r, kind, opts);
    if kind == Extremum::Min && interior < opts.zero_tol {
        return Err(Error::ZeroInDisk { min: interior });
    }
    let boundary = search_circle(f, r, kind, opts).map_err(|e| match e {
        Error::ZeroOnCircle { min } => Error::ZeroInDisk { min },
        e => e,
    })?;
    let slack = opts.interior_tol * boundary.value.max(1.0);
    match kind {
        Extremum::Min if interior < boundary.value - slack => Err(Error::InteriorBelowBoundary {
            interior,
            boundary: boundary.value,
        }),
        Extremum::Max if interior > boundary.value + slack => Err(Error::InteriorAboveBoundary {
            interior,
            boundary: boundary.value,
        }),
        _ => Ok(boundary),
    }
}

/// Smallest (min) or largest (max) `|f|` over radii `r·i/R`, `i = 0..R`.
fn interior_extreme<F: AnalyticFunction + ?Sized>(
    f: &F,
    r: f64,
    kind: Extremum,
    opts: &SearchOptions,
) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..opts.disk_radii {
        let rho = r * i as f64 / opts.disk_radii as f64;
        for t in grid_angles(opts.disk_angles) {
            let v = kind.orient(f.value(Complex64::from_polar(rho, t)).norm());
            best = best.min(v);
        }
    }
    kind.orient(best)
}

/// Indices of cyclic grid-local minima of `oriented`, best first, ties by
/// lowest index; at most `limit` of them.
fn grid_candidates(oriented: &[f64], limit: usize) -> Vec<usize> {
    let len = oriented.len();
    let mut idx: Vec<usize> = (0..len)
        .filter(|&i| {
            let prev = oriented[(i + len - 1) % len];
            let next = oriented[(i + 1) % len];
            oriented[i] <= prev && oriented[i] <= next
        })
        .collect();
    idx.sort_by(|&a, &b| {
        oriented[a]
            .partial_cmp(&oriented[b])
            .unwrap_or(Ordering::Equal)
            .then(a.cmp(&b))
    });
    // Plateaus produce runs of adjacent indices; keep one per run.
    let mut picked: Vec<usize> = Vec::new();
    for i in idx {
        if picked
            .iter()
            .all(|&p| (p + len - i) % len > 1 && (i + len - p) % len > 1)
        {
            picked.push(i);
        }
        if picked.len() == limit.max(1) {
            break;
        }
    }
    picked
}

fn golden_section<F: AnalyticFunction + ?Sized>(
    f: &F,
    r: f64,
    kind: Extremum,
    mut a: f64,
    mut b: f64,
    opts: &SearchOptions,
) -> Result<ExtremumResult> {
    let objective = |t: f64| kind.orient(f.value(Complex64::from_polar(r, t)).norm());
    // Sign of the derivative of the oriented objective along the arc.
    let slope = |t: f64| {
        let z = Complex64::from_polar(r, t);
        let (v, d1, _) = f.jet(z);
        let tangential = -(z * d1 / v).im;
        kind.orient(tangential)
    };

    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = objective(x1);
    let mut f2 = objective(x2);
    let mut iterations = 0;
    while b - a > opts.bracket_tol {
        if iterations == opts.max_iter {
            return Err(Error::NoConvergence { iterations });
        }
        iterations += 1;
        let keep_left = if (f1 - f2).abs() <= 8.0 * f64::EPSILON * f1.abs().max(f2.abs()) {
            slope(0.5 * (x1 + x2)) > 0.0
        } else {
            f1 < f2
        };
        if keep_left {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = objective(x2);
        }
    }

    let theta = (0.5 * (a + b)).rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs.
    let theta = if theta >= TAU { 0.0 } else { theta };
    let z0 = Complex64::from_polar(r, theta);
    Ok(ExtremumResult {
        theta,
        z0,
        value: f.value(z0).norm(),
        grid_size: 0,
        refine_iterations: iterations,
        bracket_width: b - a,
    })
}

fn grid_angles(samples: usize) -> impl Iterator<Item = f64> {
    (0..samples).map(move |k| 2.0 * PI * k as f64 / samples as f64)
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidRadius(r))
    }
}
