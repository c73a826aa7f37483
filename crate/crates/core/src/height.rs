//! Recovery of the height coordinate from the complex coordinate:
//!
//! ```text
//! w(z) = 2·Re ∫_{z0}^{z} √(h_z · conj(h_z̄)) dz + w(z0)
//! ```
//!
//! The square root starts on the principal branch at `z0` and is continued
//! along the integration path.

use num_complex::Complex64;

use crate::branch::{nearest_root, BRANCH_POINT_TOL};
use crate::error::{Error, Result};
use crate::harmonic::HarmonicOnAnnulus;
use crate::path::Path;
use crate::quadrature::{integrate_tracked, AdaptiveOptions, GaussLegendre};

fn radicand(h: &HarmonicOnAnnulus, z: Complex64) -> Result<Complex64> {
    let (hz, hzb) = h.gradient(z)?;
    let q = hz * hzb.conj();
    if q.norm() < BRANCH_POINT_TOL {
        return Err(Error::BranchPoint { z, magnitude: q.norm() });
    }
    Ok(q)
}

/// `2·Re ∫ √(h_z conj(h_z̄)) dz` along `path`, plus `w0`.
///
/// The branch at the start of the path is the principal root.
pub fn w_along_path(h: &HarmonicOnAnnulus, path: &Path, w0: f64) -> Result<f64> {
    let Some(first) = path.pieces().first() else {
        return Ok(w0);
    };
    let rule = GaussLegendre::new(10);
    let mut root = radicand(h, first.start())?.sqrt();
    let mut total = Complex64::new(0.0, 0.0);
    for piece in path.pieces() {
        let integrand = |t: f64, prev: &Complex64| -> Result<Option<(Complex64, Complex64)>> {
            let z = piece.point(t);
            let s = nearest_root(radicand(h, z)?, *prev);
            if (s - prev).norm() > 0.25 * s.norm().max(prev.norm()) {
                return Ok(None);
            }
            Ok(Some((s * piece.velocity(t), s)))
        };
        let (value, end) = integrate_tracked(&rule, integrand, 0.0, 1.0, root, AdaptiveOptions::default())?;
        total += value;
        root = end;
    }
    Ok(2.0 * total.re + w0)
}

/// Height at each target, integrating from `z0` along an arc of `|z| = |z0|`
/// followed by a radial segment.
pub fn w_from_h(h: &HarmonicOnAnnulus, z0: Complex64, w0: f64, targets: &[Complex64]) -> Result<Vec<f64>> {
    h.annulus().check(z0)?;
    targets
        .iter()
        .map(|&z| {
            h.annulus().check(z)?;
            w_along_path(h, &Path::arc_then_radial(z0, z), w0)
        })
        .collect()
}
