//! Numerical verification of modulus-extremum lemmas for analytic functions
//! on the open unit disk.
//!
//! The crate is organised bottom-up:
//!
//! * [`series`] — truncated power series `a0 + Σ_{k≥n} a_k z^k`, with
//!   reciprocation and exponentiation.
//! * [`functions`] — the [`AnalyticFunction`] evaluation interface and the
//!   Möbius-of-`z^n` example family with its closed forms.
//! * [`extremum`] — minimum and maximum of `|f|` on circles and closed disks.
//! * [`lemma`] — the Miller–Mocanu inequality chain (maximum case) and its
//!   minimum-modulus dual, evaluated at a located extremal point.

pub mod error;
pub mod extremum;
pub mod functions;
pub mod lemma;
pub mod series;

pub use num_complex::Complex64;

pub use error::{Error, Result};
pub use extremum::{
    find_max_on_circle, find_max_on_disk, find_min_on_circle, find_min_on_disk, modulus_profile,
    Extremum, ExtremumResult, SearchOptions,
};
pub use functions::{
    AnalyticFunction, ClosedForms, ExampleFamily, ExpOf, ImageDisk, MinPoint, Reciprocal, Rotated,
};
pub use lemma::{
    check_max_lemma, check_min_theorem, log_derivative, mocanu_bounds, schwarz_quantity, Bounds,
    Link, LinkCheck, LemmaReport, DEFAULT_TOL,
};
pub use series::PowerSeries;
