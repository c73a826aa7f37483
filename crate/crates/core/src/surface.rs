//! Surface calculus for `F = (h, w): A(r, R) → C × R`.
//!
//! A point is singular when `|h_z| = |h_z̄|`; there the metric factor
//! `η = (|h_z| - |h_z̄|)²` vanishes. Regular points split into region
//! [`Region::A`] (`|h_z̄| < |h_z|`) and [`Region::C`] (`|h_z̄| > |h_z|`).

use num_complex::Complex64;

use crate::branch::continue_sqrt;
use crate::error::{Error, Result};
use crate::harmonic::{Annulus, HarmonicOnAnnulus};
use crate::path::Path;
use crate::CIRCLE_SAMPLES;

/// Tolerance on `|h_z|² - |h_z̄|²` below which a point counts as singular.
pub const SINGULAR_TOL: f64 = 1e-9;

/// Tolerance on `||h_z| - |h_z̄||` for the degeneracy certificate.
pub const DEGENERACY_TOL: f64 = 1e-10;

/// Tolerance on `Im w` for a real height function.
pub const REALNESS_TOL: f64 = 1e-10;

/// A point of `L³ = C × R` with metric `|planar|² - height²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacePoint {
    pub planar: Complex64,
    pub height: f64,
}

impl SpacePoint {
    pub fn new(planar: Complex64, height: f64) -> Self {
        Self { planar, height }
    }

    pub fn origin() -> Self {
        Self::new(Complex64::new(0.0, 0.0), 0.0)
    }

    pub fn minkowski_norm_sq(&self) -> f64 {
        self.planar.norm_sqr() - self.height * self.height
    }

    /// Euclidean distance in the underlying `R³`.
    pub fn distance(&self, other: &SpacePoint) -> f64 {
        ((self.planar - other.planar).norm_sqr() + (self.height - other.height).powi(2)).sqrt()
    }

    pub fn translated(&self, by: &SpacePoint) -> SpacePoint {
        SpacePoint::new(self.planar + by.planar, self.height + by.height)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// `|h_z̄| < |h_z|`
    A,
    /// singular: `|h_z̄| = |h_z|`
    B,
    /// `|h_z̄| > |h_z|`
    C,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GaussValue {
    Finite(Complex64),
    /// The denominator of the Gauss map vanishes (e.g. `h_z̄ ≡ 0` on region A).
    Infinity,
}

impl GaussValue {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            GaussValue::Finite(v) => Some(v),
            GaussValue::Infinity => None,
        }
    }
}

/// Polar sampling grid: equispaced angles × log-spaced radii.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationGrid {
    angles: Vec<f64>,
    radii: Vec<f64>,
}

impl VerificationGrid {
    pub fn new(n_theta: usize, n_rho: usize, rho_min: f64, rho_max: f64) -> Self {
        let angles = (0..n_theta).map(|j| crate::fourier::angle(j, n_theta)).collect();
        let radii = match n_rho {
            0 => Vec::new(),
            1 => vec![(rho_min * rho_max).sqrt()],
            _ => {
                let (a, b) = (rho_min.ln(), rho_max.ln());
                (0..n_rho)
                    .map(|k| (a + (b - a) * k as f64 / (n_rho - 1) as f64).exp())
                    .collect()
            }
        };
        Self { angles, radii }
    }

    /// Grid spanning the geometric midpoints between the annulus bounds and
    /// the unit circle (`[0.5, 2]` on unbounded sides).
    pub fn for_annulus(annulus: &Annulus, n_theta: usize, n_rho: usize) -> Self {
        Self::new(n_theta, n_rho, annulus.sampling_inner(), annulus.sampling_outer())
    }

    /// The 64 × 16 grid used for certificates.
    pub fn standard(annulus: &Annulus) -> Self {
        Self::for_annulus(annulus, 64, 16)
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn len(&self) -> usize {
        self.angles.len() * self.radii.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Points ordered by angle, then radius.
    pub fn points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.angles
            .iter()
            .flat_map(move |&t| self.radii.iter().map(move |&r| Complex64::from_polar(r, t)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegeneracyReport {
    /// `max ||h_z| - |h_z̄||` over the grid.
    pub max_gap: f64,
    /// All derivatives vanish: `h` is constant.
    pub trivially_constant: bool,
    pub degenerate: bool,
}

/// Certifies (non-)degeneracy of `h` on `grid`.
pub fn degeneracy(h: &HarmonicOnAnnulus, grid: &VerificationGrid) -> DegeneracyReport {
    let mut max_gap = 0.0f64;
    let mut max_derivative = 0.0f64;
    for z in grid.points() {
        if let Ok((hz, hzb)) = h.gradient(z) {
            max_gap = max_gap.max((hz.norm() - hzb.norm()).abs());
            max_derivative = max_derivative.max(hz.norm()).max(hzb.norm());
        }
    }
    DegeneracyReport {
        max_gap,
        trivially_constant: max_derivative == 0.0,
        degenerate: max_gap < DEGENERACY_TOL,
    }
}

/// `true` iff `||h_z| - |h_z̄||` stays below `1e-10` on the whole grid.
pub fn is_degenerate(h: &HarmonicOnAnnulus, grid: &VerificationGrid) -> bool {
    degeneracy(h, grid).degenerate
}

/// A generalized maximal surface `F = (h, w)`; `w` is real-valued.
#[derive(Debug, Clone, PartialEq)]
pub struct MaximalSurface {
    h: HarmonicOnAnnulus,
    w: HarmonicOnAnnulus,
    annulus: Annulus,
}

impl MaximalSurface {
    /// Pairs `h` and `w`, rejecting a height with a non-negligible imaginary
    /// part on the standard grid.
    ///
    /// Conformality and non-degeneracy are not enforced here; see
    /// [`MaximalSurface::certify`].
    pub fn new(h: HarmonicOnAnnulus, w: HarmonicOnAnnulus) -> Result<Self> {
        let annulus = h.annulus().intersect(&w.annulus());
        let surface = Self { h, w, annulus };
        let defect = surface.max_height_imaginary(&VerificationGrid::standard(&annulus));
        if defect > REALNESS_TOL {
            return Err(Error::NotReal(defect));
        }
        Ok(surface)
    }

    pub fn h(&self) -> &HarmonicOnAnnulus {
        &self.h
    }

    pub fn w(&self) -> &HarmonicOnAnnulus {
        &self.w
    }

    pub fn annulus(&self) -> Annulus {
        self.annulus
    }

    /// Same surface with the annulus narrowed (or widened) to `annulus`.
    pub fn with_annulus(&self, annulus: Annulus) -> Self {
        Self {
            h: self.h.clone().with_annulus(annulus),
            w: self.w.clone().with_annulus(annulus),
            annulus,
        }
    }

    /// `F + p`.
    pub fn translated(&self, p: &SpacePoint) -> Self {
        Self {
            h: self.h.shifted(p.planar),
            w: self.w.shifted(Complex64::new(p.height, 0.0)),
            annulus: self.annulus,
        }
    }

    fn max_height_imaginary(&self, grid: &VerificationGrid) -> f64 {
        grid.points()
            .filter_map(|z| self.w.eval(z).ok())
            .map(|v| v.im.abs() / v.norm().max(1.0))
            .fold(0.0, f64::max)
    }

    pub fn evaluate(&self, z: Complex64) -> Result<SpacePoint> {
        self.annulus.check(z)?;
        Ok(SpacePoint::new(self.h.eval(z)?, self.w.eval(z)?.re))
    }

    /// `h_z · conj(h_z̄) - w_z²`, zero for a conformal parametrization.
    pub fn conformality_residual(&self, z: Complex64) -> Result<Complex64> {
        self.annulus.check(z)?;
        let (hz, hzb) = self.h.gradient(z)?;
        let wz = self.w.d_z(z)?;
        Ok(hz * hzb.conj() - wz * wz)
    }

    /// Largest `|h_z conj(h_z̄) - w_z²|` over the grid.
    pub fn max_conformality_residual(&self, grid: &VerificationGrid) -> f64 {
        grid.points()
            .filter_map(|z| self.conformality_residual(z).ok())
            .map(|r| r.norm())
            .fold(0.0, f64::max)
    }

    /// `|h_z|² - |h_z̄|²`, the Jacobian determinant of `h`.
    pub fn singular_gap(&self, z: Complex64) -> Result<f64> {
        self.annulus.check(z)?;
        let (hz, hzb) = self.h.gradient(z)?;
        Ok(hz.norm_sqr() - hzb.norm_sqr())
    }

    /// `η = (|h_z| - |h_z̄|)²`.
    pub fn metric_factor(&self, z: Complex64) -> Result<f64> {
        self.annulus.check(z)?;
        let (hz, hzb) = self.h.gradient(z)?;
        Ok((hz.norm() - hzb.norm()).powi(2))
    }

    pub fn classify_point(&self, z: Complex64, tol: f64) -> Result<Region> {
        self.annulus.check(z)?;
        let (hz, hzb) = self.h.gradient(z)?;
        let (a, b) = (hz.norm(), hzb.norm());
        Ok(if b < a - tol {
            Region::A
        } else if b > a + tol {
            Region::C
        } else {
            Region::B
        })
    }

    fn regular_gradient(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        self.annulus.check(z)?;
        let (hz, hzb) = self.h.gradient(z)?;
        let gap = hz.norm_sqr() - hzb.norm_sqr();
        if gap.abs() <= SINGULAR_TOL {
            return Err(Error::SingularPoint { z, gap });
        }
        Ok((hz, hzb))
    }

    /// Continues `√q` along the arc of `|z|` from the positive real axis,
    /// falling back to the principal root when the arc meets a zero of `q`.
    fn tracked_sqrt(&self, z: Complex64, q: impl Fn(Complex64) -> Result<Complex64>) -> Result<Complex64> {
        let anchor = Complex64::new(z.norm(), 0.0);
        match continue_sqrt(&q, anchor, &Path::arc_from_axis(z.norm(), z.arg())) {
            Ok(root) => Ok(root),
            Err(Error::BranchPoint { .. }) => Ok(q(z)?.sqrt()),
            Err(e) => Err(e),
        }
    }

    /// Unit normal in the hyperbolic plane `|planar|² - height² = -1`.
    pub fn normal(&self, z: Complex64) -> Result<SpacePoint> {
        let (hz, hzb) = self.regular_gradient(z)?;
        let (a, b) = (hz.norm(), hzb.norm());
        let q = hz * hzb;
        let root = if q.norm() == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            self.tracked_sqrt(z, |p| {
                let (pz, pzb) = self.h.gradient(p)?;
                Ok(pz * pzb)
            })?
        };
        Ok(SpacePoint::new(root * 2.0 / (b - a), (b + a) / (b - a)))
    }

    /// Stereographic image of the normal.
    ///
    /// On region A, `ν = √(h_z / conj(h_z̄))`; on region C,
    /// `ν = -√(h_z̄ / conj(h_z))`. The root is continued along the arc of
    /// `|z|` from the positive real axis, starting from the principal branch.
    pub fn gauss_map(&self, z: Complex64) -> Result<GaussValue> {
        let (hz, hzb) = self.regular_gradient(z)?;
        let region_a = hzb.norm() < hz.norm();
        let (num, den) = if region_a { (hz, hzb) } else { (hzb, hz) };
        if den.norm() <= 1e-14 * num.norm() {
            return Ok(GaussValue::Infinity);
        }
        let root = self.tracked_sqrt(z, |p| {
            let (pz, pzb) = self.h.gradient(p)?;
            Ok(if region_a { pz / pzb.conj() } else { pzb / pz.conj() })
        })?;
        Ok(GaussValue::Finite(if region_a { root } else { -root }))
    }

    /// The image point `p` when `|z| = r` maps to a single point and lies in
    /// the singular set (within `tol`), sampled at 256 angles.
    pub fn special_singularity(&self, r: f64, tol: f64) -> Option<SpacePoint> {
        let mut points = Vec::with_capacity(CIRCLE_SAMPLES);
        for j in 0..CIRCLE_SAMPLES {
            let z = Complex64::from_polar(r, crate::fourier::angle(j, CIRCLE_SAMPLES));
            let p = self.evaluate(z).ok()?;
            if self.metric_factor(z).ok()? >= tol {
                return None;
            }
            points.push(p);
        }
        let first = points[0];
        if points.iter().any(|p| p.distance(&first) >= tol) {
            return None;
        }
        let n = points.len() as f64;
        Some(SpacePoint::new(
            points.iter().map(|p| p.planar).sum::<Complex64>() / n,
            points.iter().map(|p| p.height).sum::<f64>() / n,
        ))
    }

    pub fn special_singularity_check(&self, r: f64, tol: f64) -> bool {
        self.special_singularity(r, tol).is_some()
    }

    /// Conformality and degeneracy certificate on `grid`.
    pub fn certify(&self, grid: &VerificationGrid) -> SurfaceCertificate {
        SurfaceCertificate {
            max_conformality_residual: self.max_conformality_residual(grid),
            max_height_imaginary: self.max_height_imaginary(grid),
            degeneracy: degeneracy(&self.h, grid),
        }
    }

    /// Central-difference partials `(F_x, F_y)`.
    pub fn jacobian_fd(&self, z: Complex64, step: f64) -> Result<(SpacePoint, SpacePoint)> {
        let diff = |dz: Complex64| -> Result<SpacePoint> {
            let p = self.evaluate(z + dz)?;
            let m = self.evaluate(z - dz)?;
            Ok(SpacePoint::new(
                (p.planar - m.planar) / (2.0 * step),
                (p.height - m.height) / (2.0 * step),
            ))
        };
        Ok((diff(Complex64::new(step, 0.0))?, diff(Complex64::new(0.0, step))?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceCertificate {
    pub max_conformality_residual: f64,
    pub max_height_imaginary: f64,
    pub degeneracy: DegeneracyReport,
}
