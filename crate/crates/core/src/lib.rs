//! Generalized maximal surfaces in Lorentz–Minkowski space `L³ = C × R`.
//!
//! A surface is a pair `F = (h, w)` of harmonic functions on an annulus
//! `r < |z| < R`, each stored as a truncated Laurent-plus-logarithm series
//!
//! ```text
//! h(z) = Σ a_n z^n + Σ b_n / z̄^n + c·ln|z|,   n ∈ [-N, N]
//! ```
//!
//! The crate provides the surface calculus ([`surface`]), the singular
//! Björling construction for closed null data on the unit circle
//! ([`bjorling`]), and the construction of surfaces through a closed
//! spacelike curve with a special singularity on `|z| = 1`
//! ([`interpolation`]).

pub mod bjorling;
pub mod branch;
pub mod corpus;
pub mod error;
pub mod fourier;
pub mod harmonic;
pub mod height;
pub mod interpolation;
pub mod path;
pub mod quadrature;
pub mod singular;
pub mod surface;

pub use num_complex::Complex64;

pub use crate::bjorling::{BjorlingData, CircleIdentities, ValidationReport};
pub use crate::error::{Error, Result};
pub use crate::fourier::{CircleSamples, FourierSeries};
pub use crate::harmonic::{Annulus, HarmonicOnAnnulus};
pub use crate::interpolation::{ModifiedCoefficients, SearchOptions, SpacelikeCurve};
pub use crate::singular::{Crossing, SingularPoint, SingularSetOptions};
pub use crate::surface::{GaussValue, MaximalSurface, Region, SpacePoint, VerificationGrid};

/// Default truncation of the Laurent series.
pub const DEFAULT_TRUNCATION: usize = 64;

/// Number of equispaced samples used for pointwise checks on circles.
pub const CIRCLE_SAMPLES: usize = 256;
