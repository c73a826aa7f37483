//! Radial search for the singular set `|h_z|² = |h_z̄|²`.

use num_complex::Complex64;

use crate::error::Result;
use crate::surface::{MaximalSurface, SINGULAR_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crossing {
    /// `|h_z|² - |h_z̄|²` changes sign.
    Transversal,
    /// Zero without a sign change, found by the magnitude sweep.
    Tangential,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularPoint {
    pub theta: f64,
    pub rho: f64,
    /// `|h_z|² - |h_z̄|²` at the point.
    pub residual: f64,
    pub crossing: Crossing,
}

impl SingularPoint {
    pub fn z(&self) -> Complex64 {
        Complex64::from_polar(self.rho, self.theta)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SingularSetOptions {
    pub subdivisions: usize,
    /// Bisection stops once the bracket is narrower than this.
    pub bisection_width: f64,
    pub tangential_tol: f64,
}

impl Default for SingularSetOptions {
    fn default() -> Self {
        Self {
            subdivisions: 256,
            bisection_width: 1e-10,
            tangential_tol: SINGULAR_TOL,
        }
    }
}

/// Singular points along the rays `θ ∈ thetas` for `ρ` in `rho_bracket`,
/// sorted by `(θ, ρ)`.
pub fn singular_set(
    surface: &MaximalSurface,
    thetas: &[f64],
    rho_bracket: (f64, f64),
    options: &SingularSetOptions,
) -> Result<Vec<SingularPoint>> {
    let mut out = Vec::new();
    for &theta in thetas {
        out.extend(along_ray(surface, theta, rho_bracket, options)?);
    }
    out.sort_by(|a, b| a.theta.total_cmp(&b.theta).then(a.rho.total_cmp(&b.rho)));
    Ok(out)
}

fn along_ray(
    surface: &MaximalSurface,
    theta: f64,
    (lo, hi): (f64, f64),
    options: &SingularSetOptions,
) -> Result<Vec<SingularPoint>> {
    let gap = |rho: f64| surface.singular_gap(Complex64::from_polar(rho, theta));
    let n = options.subdivisions.max(1);
    let rhos: Vec<f64> = (0..=n).map(|k| lo + (hi - lo) * k as f64 / n as f64).collect();
    let values = rhos.iter().map(|&r| gap(r)).collect::<Result<Vec<_>>>()?;

    let mut points = Vec::new();
    let mut near_crossing = vec![false; rhos.len()];
    for k in 0..n {
        let (f0, f1) = (values[k], values[k + 1]);
        if f0 == 0.0 {
            continue; // picked up by the sweep below
        }
        if f0.signum() != f1.signum() && f1 != 0.0 {
            let (mut a, mut b, mut fa) = (rhos[k], rhos[k + 1], f0);
            while b - a > options.bisection_width {
                let m = 0.5 * (a + b);
                let fm = gap(m)?;
                if fm == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if fm.signum() == fa.signum() {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            let rho = 0.5 * (a + b);
            points.push(SingularPoint {
                theta,
                rho,
                residual: gap(rho)?,
                crossing: Crossing::Transversal,
            });
            near_crossing[k] = true;
            near_crossing[k + 1] = true;
        }
    }
    for (k, (&rho, &value)) in rhos.iter().zip(&values).enumerate() {
        if !near_crossing[k] && value.abs() < options.tangential_tol {
            points.push(SingularPoint {
                theta,
                rho,
                residual: value,
                crossing: Crossing::Tangential,
            });
        }
    }
    Ok(points)
}
