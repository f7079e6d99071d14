//! Evaluation interface shared by series-backed and closed-form functions,
//! plus the Möbius-of-`z^n` example family.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{check_in_disk, PowerSeries};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// A function analytic on the open unit disk, belonging to `H[a0, n]`.
///
/// Methods do not check `|z| < 1`; callers stay inside the disk.
pub trait AnalyticFunction {
    fn value(&self, z: Complex64) -> Complex64;
    fn deriv1(&self, z: Complex64) -> Complex64;
    fn deriv2(&self, z: Complex64) -> Complex64;

    /// `(f(z), f'(z), f''(z))`.
    fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        (self.value(z), self.deriv1(z), self.deriv2(z))
    }

    /// `f(0)`.
    fn a0(&self) -> Complex64 {
        self.value(ZERO)
    }

    /// Class index `n`: the Taylor expansion has no terms of degree `1..n`.
    fn class_index(&self) -> usize;

    fn label(&self) -> String;

    /// Whether `f ≡ a0`. The default samples `|f(z) - a0|` on a few circles.
    fn is_constant(&self) -> bool {
        let a0 = self.a0();
        let tol = super::series::CONSTANT_COEFF_TOL * a0.norm().max(1.0);
        [0.25, 0.5, 0.75].iter().all(|&r| {
            (0..64).all(|k| {
                let z = Complex64::from_polar(r, 2.0 * PI * k as f64 / 64.0);
                (self.value(z) - a0).norm() < tol
            })
        })
    }
}

impl<T: AnalyticFunction + ?Sized> AnalyticFunction for &T {
    fn value(&self, z: Complex64) -> Complex64 {
        (**self).value(z)
    }
    fn deriv1(&self, z: Complex64) -> Complex64 {
        (**self).deriv1(z)
    }
    fn deriv2(&self, z: Complex64) -> Complex64 {
        (**self).deriv2(z)
    }
    fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        (**self).jet(z)
    }
    fn a0(&self) -> Complex64 {
        (**self).a0()
    }
    fn class_index(&self) -> usize {
        (**self).class_index()
    }
    fn label(&self) -> String {
        (**self).label()
    }
    fn is_constant(&self) -> bool {
        (**self).is_constant()
    }
}

impl<T: AnalyticFunction + ?Sized> AnalyticFunction for Box<T> {
    fn value(&self, z: Complex64) -> Complex64 {
        (**self).value(z)
    }
    fn deriv1(&self, z: Complex64) -> Complex64 {
        (**self).deriv1(z)
    }
    fn deriv2(&self, z: Complex64) -> Complex64 {
        (**self).deriv2(z)
    }
    fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        (**self).jet(z)
    }
    fn a0(&self) -> Complex64 {
        (**self).a0()
    }
    fn class_index(&self) -> usize {
        (**self).class_index()
    }
    fn label(&self) -> String {
        (**self).label()
    }
    fn is_constant(&self) -> bool {
        (**self).is_constant()
    }
}

impl AnalyticFunction for PowerSeries {
    fn value(&self, z: Complex64) -> Complex64 {
        self.eval_unchecked(z)
    }
    fn deriv1(&self, z: Complex64) -> Complex64 {
        self.jet(z).1
    }
    fn deriv2(&self, z: Complex64) -> Complex64 {
        self.jet(z).2
    }
    fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        PowerSeries::jet(self, z)
    }
    fn a0(&self) -> Complex64 {
        PowerSeries::a0(self)
    }
    fn class_index(&self) -> usize {
        self.n()
    }
    fn label(&self) -> String {
        format!("series(n={}, N={})", self.n(), self.order())
    }
    fn is_constant(&self) -> bool {
        PowerSeries::is_constant(self)
    }
}

/// `g = 1/f`. Stays in the same class when `f(0) ≠ 0`.
#[derive(Debug, Clone)]
pub struct Reciprocal<F>(pub F);

impl<F: AnalyticFunction> AnalyticFunction for Reciprocal<F> {
    fn value(&self, z: Complex64) -> Complex64 {
        ONE / self.0.value(z)
    }
    fn deriv1(&self, z: Complex64) -> Complex64 {
        self.jet(z).1
    }
    fn deriv2(&self, z: Complex64) -> Complex64 {
        self.jet(z).2
    }
    fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let (f, d1, d2) = self.0.jet(z);
        let g = ONE / f;
        let g1 = -d1 * g * g;
        let g2 = (d1 * d1 * 2.0 - f * d2) * g * g * g;
        (g, g1, g2)
    }
    fn a0(&self) -> Complex64 {
        ONE / self.0.a0()
    }
    fn class_index(&self) -> usize {
        self.0.class_index()
    }
    fn label(&self) -> String {
        format!("1/({})", self.0.label())
    }
    fn is_constant(&self) -> bool {
        self.0.is_constant()
    }
}

/// `g(z) = f(e^{iφ} z)`.
#[derive(Debug, Clone)]
pub struct Rotated<F> {
    pub inner: F,
    pub phi: f64,
}

impl<F: AnalyticFunction> Rotated<F> {
    fn phase(&self) -> Complex64 {
        Complex64::from_polar(1.0, self.phi)
    }
}

impl<F: AnalyticFunction> AnalyticFunction for Rotated<F> {
    fn value(&self, z: Complex64) -> Complex64 {
        self.inner.value(self.phase() * z)
    }
    fn deriv1(&self, z: Complex64) -> Complex64 {
        self.jet(z).1
    }
    fn deriv2(&self, z: Complex64) -> Complex64 {
        self.jet(z).2
    }
    fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let e = self.phase();
        let (f, d1, d2) = self.inner.jet(e * z);
        (f, e * d1, e * e * d2)
    }
    fn a0(&self) -> Complex64 {
        self.inner.a0()
    }
    fn class_index(&self) -> usize {
        self.inner.class_index()
    }
    fn label(&self) -> String {
        format!("{}(e^(i{})z)", self.inner.label(), self.phi)
    }
    fn is_constant(&self) -> bool {
        self.inner.is_constant()
    }
}

/// `f(z) = scale · exp(h(z))`, never zero. With `h(0) = 0` this lies in
/// `H[scale, n]` where `n` is the class index of `h`.
#[derive(Debug, Clone)]
pub struct ExpOf {
    pub scale: Complex64,
    pub exponent: PowerSeries,
}

impl AnalyticFunction for ExpOf {
    fn value(&self, z: Complex64) -> Complex64 {
        self.scale * self.exponent.eval_unchecked(z).exp()
    }
    fn deriv1(&self, z: Complex64) -> Complex64 {
        self.jet(z).1
    }
    fn deriv2(&self, z: Complex64) -> Complex64 {
        self.jet(z).2
    }
    fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let (h, h1, h2) = self.exponent.jet(z);
        let f = self.scale * h.exp();
        (f, f * h1, f * (h2 + h1 * h1))
    }
    fn a0(&self) -> Complex64 {
        self.scale * self.exponent.a0().exp()
    }
    fn class_index(&self) -> usize {
        self.exponent.n()
    }
    fn label(&self) -> String {
        format!("{}·exp({})", self.scale, self.exponent.label())
    }
    fn is_constant(&self) -> bool {
        self.scale == ZERO || self.exponent.is_constant()
    }
}

/// `f(z) = (a0 + (u - a0) z^n) / (1 - z^n)` with `u = e^{i arg a0}`.
///
/// Expands as `a0 + u z^n + u z^{2n} + …`. Requires `|a0| > 1/2`, which keeps
/// `f` non-vanishing on every sub-disk `|z| ≤ r < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExampleFamily {
    a0: Complex64,
    n: usize,
    u: Complex64,
}

/// Image of `|z| ≤ r`: the closed disk `|w - center| ≤ radius`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageDisk {
    pub center: Complex64,
    pub radius: f64,
}

/// Closed-form minimiser of `|f|` on `|z| ≤ r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinPoint {
    pub z0: Complex64,
    pub min_modulus: f64,
}

/// Closed-form quantities at the minimiser `z0 = r e^{iπ/n}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForms {
    /// `-z0 f'(z0)/f(z0)`.
    pub m: f64,
    /// `n |a0 - f(z0)|² / (|a0|² - |f(z0)|²)`.
    pub bound: f64,
    /// `Re(z0 f''(z0)/f'(z0)) + 1`.
    pub schwarz: f64,
}

impl ExampleFamily {
    pub fn new(a0: Complex64, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidClassIndex);
        }
        if !a0.is_finite() || a0.norm() <= 0.5 {
            return Err(Error::InvalidParameter(format!(
                "the example family requires |a0| > 1/2, got |a0| = {}",
                a0.norm()
            )));
        }
        // Principal argument; any branch yields the same u.
        let u = Complex64::from_polar(1.0, a0.arg());
        Ok(Self { a0, n, u })
    }

    pub fn from_polar(modulus: f64, arg: f64, n: usize) -> Result<Self> {
        Self::new(Complex64::from_polar(modulus, arg), n)
    }

    pub fn a0(&self) -> Complex64 {
        self.a0
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `e^{i arg a0}`.
    pub fn direction(&self) -> Complex64 {
        self.u
    }

    pub fn checked_value(&self, z: Complex64) -> Result<Complex64> {
        check_in_disk(z)?;
        Ok(self.mobius(z))
    }

    /// `(f'(z), f''(z))`.
    pub fn derivatives(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        check_in_disk(z)?;
        let (_, d1, d2) = self.closed_jet(z);
        Ok((d1, d2))
    }

    pub fn image_disk(&self, r: f64) -> Result<ImageDisk> {
        check_radius(r)?;
        let rn = r.powi(self.n as i32);
        let denom = 1.0 - rn * rn;
        Ok(ImageDisk {
            center: self.a0 + self.u * (rn * rn / denom),
            radius: rn / denom,
        })
    }

    pub fn min_point(&self, r: f64) -> Result<MinPoint> {
        check_radius(r)?;
        let rn = r.powi(self.n as i32);
        Ok(MinPoint {
            z0: Complex64::from_polar(r, PI / self.n as f64),
            min_modulus: self.a0.norm() - rn / (1.0 + rn),
        })
    }

    pub fn closed_forms(&self, r: f64) -> Result<ClosedForms> {
        check_radius(r)?;
        let n = self.n as f64;
        let a = self.a0.norm();
        let rn = r.powi(self.n as i32);
        Ok(ClosedForms {
            m: n * rn / ((1.0 + rn) * (a - (1.0 - a) * rn)),
            bound: n * rn / (2.0 * a + (2.0 * a - 1.0) * rn),
            schwarz: n * (1.0 - rn) / (1.0 + rn),
        })
    }

    /// Truncated expansion `a0 + u Σ_{j=1}^{terms} z^{jn}`.
    pub fn series(&self, terms: usize) -> PowerSeries {
        let order = self.n * terms.max(1);
        let mut dense = vec![ZERO; order + 1];
        dense[0] = self.a0;
        for j in 1..=terms.max(1) {
            dense[j * self.n] = self.u;
        }
        PowerSeries::from_dense(&dense, self.n).expect("indices below n are zero")
    }

    fn mobius(&self, z: Complex64) -> Complex64 {
        let w = z.powu(self.n as u32);
        (self.a0 + (self.u - self.a0) * w) / (ONE - w)
    }

    fn closed_jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let n = self.n as f64;
        let w = z.powu(self.n as u32);
        let inv = ONE / (ONE - w);
        let zn1 = z.powu(self.n as u32 - 1);
        // d/dw of the Möbius part is u/(1-w)^2.
        let d1 = self.u * zn1 * n * inv * inv;
        let lead = if self.n >= 2 {
            z.powu(self.n as u32 - 2) * (n * (n - 1.0))
        } else {
            ZERO
        };
        let d2 = self.u * (lead + zn1 * zn1 * (2.0 * n * n) * inv) * inv * inv;
        ((self.a0 + (self.u - self.a0) * w) * inv, d1, d2)
    }
}

impl AnalyticFunction for ExampleFamily {
    fn value(&self, z: Complex64) -> Complex64 {
        self.mobius(z)
    }
    fn deriv1(&self, z: Complex64) -> Complex64 {
        self.closed_jet(z).1
    }
    fn deriv2(&self, z: Complex64) -> Complex64 {
        self.closed_jet(z).2
    }
    fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        self.closed_jet(z)
    }
    fn a0(&self) -> Complex64 {
        self.a0
    }
    fn class_index(&self) -> usize {
        self.n
    }
    fn label(&self) -> String {
        format!("example(a0={}, n={})", self.a0, self.n)
    }
    fn is_constant(&self) -> bool {
        false
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidRadius(r))
    }
}
