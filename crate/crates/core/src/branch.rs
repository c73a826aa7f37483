//! Continuous square-root branches along paths.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::path::Path;

/// Below this magnitude a radicand is treated as a branch point.
pub const BRANCH_POINT_TOL: f64 = 1e-14;

/// The root of `q` (out of `±√q`) closest to `reference`.
pub fn nearest_root(q: Complex64, reference: Complex64) -> Complex64 {
    let s = q.sqrt();
    if (s - reference).norm_sqr() <= (s + reference).norm_sqr() {
        s
    } else {
        -s
    }
}

/// Continues `√q` from the principal root at `start` along `path`.
///
/// Steps are halved until consecutive roots differ by less than a quarter of
/// their size, so the continuation cannot jump sheets.
pub fn continue_sqrt<F>(q: F, start: Complex64, path: &Path) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let q0 = q(start)?;
    if q0.norm() < BRANCH_POINT_TOL {
        return Err(Error::BranchPoint { z: start, magnitude: q0.norm() });
    }
    let mut root = q0.sqrt();
    for piece in path.pieces() {
        let mut t = 0.0;
        let mut dt: f64 = 1.0 / 64.0;
        while t < 1.0 {
            let step = dt.min(1.0 - t);
            let z = piece.point(t + step);
            let value = q(z)?;
            if value.norm() < BRANCH_POINT_TOL {
                return Err(Error::BranchPoint { z, magnitude: value.norm() });
            }
            let next = nearest_root(value, root);
            if (next - root).norm() <= 0.25 * next.norm().max(root.norm()) {
                root = next;
                t += step;
                dt = (step * 2.0).min(1.0 / 16.0);
            } else {
                dt = step * 0.5;
                if dt < 1e-12 {
                    return Err(Error::BranchPoint { z, magnitude: value.norm() });
                }
            }
        }
    }
    Ok(root)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn nearest_root_picks_closest_sign() {
        let q = Complex64::new(4.0, 0.0);
        assert_eq!(nearest_root(q, Complex64::new(-1.0, 0.1)), Complex64::new(-2.0, 0.0));
        assert_eq!(nearest_root(q, Complex64::new(1.0, 0.1)), Complex64::new(2.0, 0.0));
    }

    #[test]
    fn sqrt_of_z_squared_follows_z() {
        // principal sqrt(z²) would flip sign past arg = π/2
        let angle = 0.95 * PI;
        let path = Path::arc_from_axis(2.0, angle);
        let root = continue_sqrt(|z| Ok(z * z), Complex64::new(2.0, 0.0), &path).unwrap();
        assert!((root - Complex64::from_polar(2.0, angle)).norm() < 1e-12);
    }

    #[test]
    fn full_loop_around_a_simple_zero_flips_sign() {
        let path = Path::arc_from_axis(1.0, 2.0 * PI);
        let root = continue_sqrt(Ok, Complex64::new(1.0, 0.0), &path).unwrap();
        assert!((root + 1.0).norm() < 1e-12);
    }

    #[test]
    fn zero_radicand_is_a_branch_point() {
        let err = continue_sqrt(|_| Ok(Complex64::new(0.0, 0.0)), Complex64::new(1.0, 0.0), &Path::default());
        assert!(matches!(err, Err(Error::BranchPoint { .. })));
    }
}
