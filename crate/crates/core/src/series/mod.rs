//! Truncated power series in the class `H[a0, n]`.
//!
//! A [`PowerSeries`] stores `a0` and the dense coefficient run `a_n ..= a_N`.
//! Indices `1 ..= n-1` are structurally zero and never stored. A truncated
//! series is treated as the exact polynomial it represents.

mod literal;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use literal::{format_literal, parse_literal};

/// Default truncation order for generated series.
pub const DEFAULT_ORDER: usize = 32;

/// Coefficients below this magnitude count as zero when deciding `f ≡ a0`.
pub const CONSTANT_COEFF_TOL: f64 = 1e-15;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeries {
    a0: Complex64,
    n: usize,
    /// `coeffs[i]` is the coefficient of `z^(n + i)`; never empty.
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Builds `a0 + Σ coeffs[i] z^(n+i)`. An empty coefficient list gives the
    /// constant series with truncation order `n`.
    pub fn new(a0: Complex64, n: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidClassIndex);
        }
        let coeffs = if coeffs.is_empty() { vec![ZERO] } else { coeffs };
        Ok(Self { a0, n, coeffs })
    }

    pub fn constant(a0: Complex64) -> Self {
        Self {
            a0,
            n: 1,
            coeffs: vec![ZERO],
        }
    }

    /// Builds a series from dense coefficients `[c_0, c_1, ..., c_N]`, with
    /// the class index taken as `n`. Entries `1..n` must be zero.
    pub fn from_dense(dense: &[Complex64], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidClassIndex);
        }
        let a0 = dense.first().copied().unwrap_or(ZERO);
        if let Some(k) = (1..n.min(dense.len())).find(|&k| dense[k] != ZERO) {
            return Err(Error::InvalidParameter(format!(
                "coefficient of z^{k} is nonzero but the class index is {n}"
            )));
        }
        let coeffs = dense.get(n..).map(<[_]>::to_vec).unwrap_or_default();
        Self::new(a0, n, coeffs)
    }

    pub fn a0(&self) -> Complex64 {
        self.a0
    }

    /// Index of the first potentially nonzero non-constant coefficient.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.n + self.coeffs.len() - 1
    }

    /// Stored coefficients `a_n ..= a_N`.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero outside the stored range.
    pub fn coeff(&self, k: usize) -> Complex64 {
        if k == 0 {
            self.a0
        } else if k < self.n {
            ZERO
        } else {
            self.coeffs.get(k - self.n).copied().unwrap_or(ZERO)
        }
    }

    /// Dense coefficients `[a0, a_1, ..., a_N]`.
    pub fn to_dense(&self) -> Vec<Complex64> {
        (0..=self.order()).map(|k| self.coeff(k)).collect()
    }

    /// True when every non-constant coefficient is below `1e-15`, i.e. `f ≡ a0`.
    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm() < CONSTANT_COEFF_TOL)
    }

    /// Evaluates the polynomial at `z`, rejecting points outside the unit disk.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        check_in_disk(z)?;
        Ok(self.eval_unchecked(z))
    }

    /// Horner evaluation without the domain check.
    pub fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        let mut acc = ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        // Multiply through z^n only after the stored run: a0 + z^n·(a_n + a_{n+1} z + …).
        acc * z.powu(self.n as u32) + self.a0
    }

    /// Value, first and second derivative by a single nested pass.
    pub fn jet(&self, z: Complex64) -> (Complex64, Complex64, Complex64) {
        let mut p = ZERO;
        let mut d1 = ZERO;
        let mut d2 = ZERO;
        for k in (0..=self.order()).rev() {
            d2 = d2 * z + d1;
            d1 = d1 * z + p;
            p = p * z + self.coeff(k);
        }
        (p, d1, d2 * 2.0)
    }

    /// Termwise derivative. The truncation order drops by one (but never
    /// below the class index of the result).
    pub fn differentiate(&self) -> PowerSeries {
        let scaled = |k: usize| self.coeff(k) * k as f64;
        if self.n == 1 {
            let a0 = scaled(1);
            let coeffs = (2..=self.order()).map(scaled).collect();
            PowerSeries {
                a0,
                n: 1,
                coeffs: non_empty(coeffs),
            }
        } else {
            let coeffs = (self.n..=self.order()).map(scaled).collect();
            PowerSeries {
                a0: ZERO,
                n: self.n - 1,
                coeffs: non_empty(coeffs),
            }
        }
    }

    /// Reciprocal `1/f` truncated at order `order`.
    ///
    /// Uses `c_0 = 1/a0` and `c_k = -(1/a0) Σ_{j=n}^{k} a_j c_{k-j}`, so the
    /// result keeps the class index: `c_1 ..= c_{n-1}` are exactly zero.
    pub fn invert(&self, order: usize) -> Result<PowerSeries> {
        if self.a0 == ZERO {
            return Err(Error::ZeroConstantTerm);
        }
        if order < self.n {
            return Err(Error::InvalidOrder { order, n: self.n });
        }
        let inv_a0 = ONE / self.a0;
        let mut c = vec![ZERO; order + 1];
        c[0] = inv_a0;
        for k in self.n..=order {
            let mut sum = ZERO;
            for j in self.n..=k.min(self.order()) {
                sum += self.coeff(j) * c[k - j];
            }
            c[k] = -inv_a0 * sum;
        }
        Ok(PowerSeries {
            a0: inv_a0,
            n: self.n,
            coeffs: c.split_off(self.n),
        })
    }

    /// `exp(h)` truncated at order `order`, for `h` with zero constant term.
    ///
    /// Recurrence: `e_0 = 1`, `e_k = (1/k) Σ_{j=n}^{k} j h_j e_{k-j}`.
    pub fn exp(h: &PowerSeries, order: usize) -> Result<PowerSeries> {
        if h.a0 != ZERO {
            return Err(Error::NonzeroConstantTerm);
        }
        if order < h.n {
            return Err(Error::InvalidOrder { order, n: h.n });
        }
        let mut e = vec![ZERO; order + 1];
        e[0] = ONE;
        for k in h.n..=order {
            let mut sum = ZERO;
            for j in h.n..=k.min(h.order()) {
                sum += h.coeff(j) * e[k - j] * j as f64;
            }
            e[k] = sum / k as f64;
        }
        Ok(PowerSeries {
            a0: ONE,
            n: h.n,
            coeffs: e.split_off(h.n),
        })
    }

    /// Product truncated at `order`, as dense coefficients `0..=order`.
    pub fn mul_dense(&self, other: &PowerSeries, order: usize) -> Vec<Complex64> {
        let mut out = vec![ZERO; order + 1];
        for (i, slot) in out.iter_mut().enumerate() {
            for j in 0..=i.min(self.order()) {
                *slot += self.coeff(j) * other.coeff(i - j);
            }
        }
        out
    }

    /// Multiplies every coefficient (including `a0`) by `s`.
    pub fn scale(&self, s: Complex64) -> PowerSeries {
        PowerSeries {
            a0: self.a0 * s,
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

fn non_empty(v: Vec<Complex64>) -> Vec<Complex64> {
    if v.is_empty() {
        vec![ZERO]
    } else {
        v
    }
}

pub(crate) fn check_in_disk(z: Complex64) -> Result<()> {
    let r = z.norm();
    if r < 1.0 {
        Ok(())
    } else {
        Err(Error::OutsideDisk(r))
    }
}
