use thiserror::Error;

use crate::extremum::Extremum;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point with |z| = {0} lies outside the open unit disk")]
    OutsideDisk(f64),

    #[error("radius {0} must lie in (0, 1)")]
    InvalidRadius(f64),

    #[error("class index n must be at least 1")]
    InvalidClassIndex,

    #[error("truncation order {order} is below the class index {n}")]
    InvalidOrder { order: usize, n: usize },

    #[error("constant term is zero; the reciprocal is not analytic at the origin")]
    ZeroConstantTerm,

    #[error("exponent series must have zero constant term")]
    NonzeroConstantTerm,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("|f| reaches {min:e} on the circle; the function vanishes there")]
    ZeroOnCircle { min: f64 },

    #[error("|f| reaches {min:e} inside the disk; the function vanishes there")]
    ZeroInDisk { min: f64 },

    #[error("f(z0) = 0; the minimum-modulus checks require a non-vanishing function")]
    ZeroOnDisk,

    #[error("interior modulus {interior:e} lies below the boundary minimum {boundary:e}")]
    InteriorBelowBoundary { interior: f64, boundary: f64 },

    #[error("interior modulus {interior:e} exceeds the boundary maximum {boundary:e}")]
    InteriorAboveBoundary { interior: f64, boundary: f64 },

    #[error("refinement did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("f(z0) vanishes; z0 f'(z0)/f(z0) is undefined")]
    ZeroDenominator,

    #[error("f'(z0) vanishes; Re(z0 f''(z0)/f'(z0)) is undefined")]
    ZeroDerivative,

    #[error("|f(z0)| equals |a0| to within {tol:e}; the bounds are 0/0")]
    DegenerateModuli { tol: f64 },

    #[error("{case} case requires {expected}, got |f(z0)| = {fz0_abs}, |a0| = {a0_abs}")]
    ModulusOrder {
        case: Extremum,
        expected: &'static str,
        fz0_abs: f64,
        a0_abs: f64,
    },

    #[error("function is constant (f ≡ a0)")]
    ConstantFunction,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
