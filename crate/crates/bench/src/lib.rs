//! Fixtures shared by the criterion benches.

use diskmod::{ExampleFamily, ExpOf, PowerSeries};
use num_complex::Complex64;

/// A deterministic degree-16 exponent with `Σ|h_k| = 2`, starting at `z^n`.
pub fn exponent(n: usize) -> PowerSeries {
    let raw: Vec<Complex64> = (n..=16)
        .map(|k| Complex64::from_polar(1.0 / k as f64, 0.7 * k as f64))
        .collect();
    let total: f64 = raw.iter().map(|c| c.norm()).sum();
    let coeffs = raw.into_iter().map(|c| c * (2.0 / total)).collect();
    PowerSeries::new(Complex64::default(), n, coeffs).expect("n >= 1")
}

pub fn exp_function(n: usize) -> ExpOf {
    ExpOf {
        scale: Complex64::from_polar(1.3, 0.4),
        exponent: exponent(n),
    }
}

pub fn example_family() -> ExampleFamily {
    ExampleFamily::from_polar(0.9, std::f64::consts::FRAC_PI_3, 3).expect("|a0| > 1/2")
}
