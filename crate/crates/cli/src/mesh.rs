//! Surface sampling on `(ρ, θ)` grids: triangle meshes, point clouds, and
//! tables of singular points and Gauss-map values.

use std::f64::consts::TAU;
use std::fmt::Write as _;

use maxsurf_core::singular::singular_set;
use maxsurf_core::{Complex64, Error, GaussValue, MaximalSurface, SingularSetOptions, SpacePoint};

use crate::CliError;

/// `n_rho` linear radii over `[lo, hi]` times `n_theta` angles from `θ = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarGrid {
    pub n_rho: usize,
    pub n_theta: usize,
    pub rho: [f64; 2],
}

impl PolarGrid {
    pub fn radius(&self, i: usize) -> f64 {
        let [lo, hi] = self.rho;
        lo + (hi - lo) * i as f64 / (self.n_rho - 1) as f64
    }

    pub fn angle(&self, j: usize) -> f64 {
        TAU * j as f64 / self.n_theta as f64
    }

    pub fn angles(&self) -> Vec<f64> {
        (0..self.n_theta).map(|j| self.angle(j)).collect()
    }

    /// The radial range must lie strictly inside the surface's annulus.
    pub fn check(&self, surface: &MaximalSurface) -> Result<(), CliError> {
        let a = surface.annulus();
        let [lo, hi] = self.rho;
        if !(lo > a.inner() && hi < a.outer() && lo > 0.0) {
            return Err(CliError::Failure(format!(
                "grid radii [{lo}, {hi}] leave the annulus ({}, {})",
                a.inner(),
                a.outer()
            )));
        }
        Ok(())
    }
}

/// Surface points in radius-major order.
pub fn sample(surface: &MaximalSurface, grid: &PolarGrid) -> Result<Vec<(f64, f64, SpacePoint)>, CliError> {
    grid.check(surface)?;
    let mut out = Vec::with_capacity(grid.n_rho * grid.n_theta);
    for i in 0..grid.n_rho {
        for j in 0..grid.n_theta {
            let (rho, theta) = (grid.radius(i), grid.angle(j));
            out.push((rho, theta, surface.evaluate(Complex64::from_polar(rho, theta))?));
        }
    }
    Ok(out)
}

/// Wavefront-style text mesh: `v x y t` lines, then `f i j k` with 1-based
/// indices. Faces close up in `θ`.
pub fn to_obj(points: &[(f64, f64, SpacePoint)], grid: &PolarGrid) -> String {
    let mut out = String::new();
    for (_, _, p) in points {
        let _ = writeln!(out, "v {} {} {}", p.planar.re, p.planar.im, p.height);
    }
    let index = |i: usize, j: usize| i * grid.n_theta + (j % grid.n_theta) + 1;
    for i in 0..grid.n_rho - 1 {
        for j in 0..grid.n_theta {
            let _ = writeln!(out, "f {} {} {}", index(i, j), index(i + 1, j), index(i + 1, j + 1));
            let _ = writeln!(out, "f {} {} {}", index(i, j), index(i + 1, j + 1), index(i, j + 1));
        }
    }
    out
}

pub fn to_csv(points: &[(f64, f64, SpacePoint)]) -> String {
    let mut out = String::from("rho,theta,x,y,t\n");
    for (rho, theta, p) in points {
        let _ = writeln!(out, "{rho},{theta},{},{},{}", p.planar.re, p.planar.im, p.height);
    }
    out
}

/// `theta,rho,residual` rows of the singular set along the grid's rays.
pub fn singular_csv(surface: &MaximalSurface, grid: &PolarGrid, subdivisions: usize) -> Result<String, CliError> {
    grid.check(surface)?;
    let options = SingularSetOptions {
        subdivisions,
        ..Default::default()
    };
    let points = singular_set(surface, &grid.angles(), (grid.rho[0], grid.rho[1]), &options)?;
    let mut out = String::from("theta,rho,residual\n");
    for p in points {
        let _ = writeln!(out, "{},{},{}", p.theta, p.rho, p.residual);
    }
    Ok(out)
}

/// `rho,theta,kind,re,im` with kind `finite`, `infinity` or `singular`.
pub fn gauss_csv(surface: &MaximalSurface, grid: &PolarGrid) -> Result<String, CliError> {
    grid.check(surface)?;
    let mut out = String::from("rho,theta,kind,re,im\n");
    for i in 0..grid.n_rho {
        for j in 0..grid.n_theta {
            let (rho, theta) = (grid.radius(i), grid.angle(j));
            let row = match surface.gauss_map(Complex64::from_polar(rho, theta)) {
                Ok(GaussValue::Finite(v)) => format!("finite,{},{}", v.re, v.im),
                Ok(GaussValue::Infinity) => "infinity,,".to_string(),
                Err(Error::SingularPoint { .. }) => "singular,,".to_string(),
                Err(e) => return Err(e.into()),
            };
            let _ = writeln!(out, "{rho},{theta},{row}");
        }
    }
    Ok(out)
}
