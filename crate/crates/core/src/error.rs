use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("point {z} lies outside the annulus {inner} < |z| < {outer}")]
    OutsideAnnulus { z: Complex64, inner: f64, outer: f64 },

    #[error("invalid annulus: inner radius {inner}, outer radius {outer}")]
    InvalidAnnulus { inner: f64, outer: f64 },

    #[error("sample count {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("function is not real-valued: conjugate-symmetry defect {0:e}")]
    NotReal(f64),

    #[error("{z} is a singular point (|h_z| - |h_zbar| = {gap:e})")]
    SingularPoint { z: Complex64, gap: f64 },

    #[error("square-root branch point near {z} (|q| = {magnitude:e})")]
    BranchPoint { z: Complex64, magnitude: f64 },

    #[error("boundary Gauss map undefined at {} angle(s): both gamma' and L vanish", .0.len())]
    GaussGap(Vec<f64>),

    #[error("Björling data rejected: {0}")]
    InvalidData(String),

    #[error("degenerate surface: |h_z| = |h_zbar| on the whole verification grid")]
    Degenerate,

    #[error("coefficient tail did not converge: estimated annulus ({inner}, {outer}) does not contain |z| = 1")]
    TailNotConverged { inner: f64, outer: f64 },

    #[error("r0 = {0} is not admissible (must be positive and different from 1)")]
    InvalidRadius(f64),

    #[error("curve is not spacelike: minimum of |f'|² - g'² is {0:e}")]
    NotSpacelike(f64),

    #[error("series residual {residual:e} at r0 = {r0} exceeds {threshold:e}")]
    ResidualTooLarge { r0: f64, residual: f64, threshold: f64 },

    #[error("postcondition failed: {0}")]
    Postcondition(String),

    #[error("quadrature did not converge on [{a}, {b}]")]
    Quadrature { a: f64, b: f64 },
}
