//! Singular Björling problem for closed curves.
//!
//! Given a closed null curve `γ` and a null vector field `L` on the unit
//! circle with `⟨γ', L⟩ = 0`, there is a unique surface `F = (h, w)` with
//! `F(e^{iθ}) = γ(θ)`, `F_ρ(e^{iθ}) = L(θ)`, singular along `|z| = 1`.
//!
//! On the unit circle the series of a harmonic function satisfies
//! `H = a_0 + Σ (a_n + b_n) e^{inθ}` and `H_ρ = c + Σ n (a_n - b_n) e^{inθ}`,
//! so the coefficients follow mode by mode from the Fourier data.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::{angle, FourierSeries};
use crate::harmonic::{Annulus, HarmonicOnAnnulus};
use crate::surface::{degeneracy, MaximalSurface, VerificationGrid};
use crate::{CIRCLE_SAMPLES, DEFAULT_TRUNCATION};

/// Pointwise tolerance for the nullity and orthogonality constraints.
pub const CONSTRAINT_TOL: f64 = 1e-10;

/// Below this magnitude `γ'` or `L` counts as vanishing at a sample.
const VANISH_TOL: f64 = 1e-12;

/// Closed curve `γ = (γ₁ + iγ₂, γ₃)` and vector field `L = (L₁ + iL₂, L₃)`
/// on the unit circle, in Fourier form.
#[derive(Debug, Clone, PartialEq)]
pub struct BjorlingData {
    gamma_planar: FourierSeries,
    gamma_height: FourierSeries,
    l_planar: FourierSeries,
    l_height: FourierSeries,
}

impl BjorlingData {
    /// Rejects height components that are not real-valued.
    pub fn new(
        gamma_planar: FourierSeries,
        gamma_height: FourierSeries,
        l_planar: FourierSeries,
        l_height: FourierSeries,
    ) -> Result<Self> {
        for height in [&gamma_height, &l_height] {
            let defect = height.reality_defect();
            if defect > CONSTRAINT_TOL * height.max_abs_coeff().max(1.0) {
                return Err(Error::NotReal(defect));
            }
        }
        Ok(Self {
            gamma_planar,
            gamma_height,
            l_planar,
            l_height,
        })
    }

    pub fn gamma_planar(&self) -> &FourierSeries {
        &self.gamma_planar
    }

    pub fn gamma_height(&self) -> &FourierSeries {
        &self.gamma_height
    }

    pub fn l_planar(&self) -> &FourierSeries {
        &self.l_planar
    }

    pub fn l_height(&self) -> &FourierSeries {
        &self.l_height
    }

    /// Componentwise sum (constraints are not preserved).
    pub fn add(&self, other: &Self) -> Self {
        Self {
            gamma_planar: self.gamma_planar.add(&other.gamma_planar),
            gamma_height: self.gamma_height.add(&other.gamma_height),
            l_planar: self.l_planar.add(&other.l_planar),
            l_height: self.l_height.add(&other.l_height),
        }
    }

    /// `(γ', L)` sampled at `m` angles: `(γ'_planar, γ'_height, L_planar, L_height)`.
    fn samples(&self, m: usize) -> Vec<CircleSample> {
        let dg = self.gamma_planar.derivative();
        let dg3 = self.gamma_height.derivative();
        (0..m)
            .map(|j| {
                let t = angle(j, m);
                CircleSample {
                    theta: t,
                    dgamma: dg.eval(t),
                    dgamma3: dg3.eval(t).re,
                    l: self.l_planar.eval(t),
                    l3: self.l_height.eval(t).re,
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
struct CircleSample {
    theta: f64,
    dgamma: Complex64,
    dgamma3: f64,
    l: Complex64,
    l3: f64,
}

/// Result of checking the Björling constraints on 256 samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    /// `max |γ'₁² + γ'₂² - γ'₃²|`
    pub gamma_nullity: f64,
    /// `max |L₁² + L₂² - L₃²|`
    pub l_nullity: f64,
    /// `max |γ'₁L₁ + γ'₂L₂ - γ'₃L₃|`
    pub orthogonality: f64,
    /// Largest `|γ'|` and `|L|` over the samples.
    pub gamma_prime_max: f64,
    pub l_max: f64,
    /// Highest Fourier modes carried by the data.
    pub max_mode: usize,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks nullity of `γ'` and `L`, `⟨γ', L⟩ = 0`, and that not both vanish.
pub fn validate(data: &BjorlingData) -> ValidationReport {
    let samples = data.samples(CIRCLE_SAMPLES);
    let mut report = ValidationReport {
        gamma_nullity: 0.0,
        l_nullity: 0.0,
        orthogonality: 0.0,
        gamma_prime_max: 0.0,
        l_max: 0.0,
        max_mode: [&data.gamma_planar, &data.gamma_height, &data.l_planar, &data.l_height]
            .iter()
            .map(|s| s.effective_max_mode(0.0))
            .max()
            .unwrap_or(0),
        failures: Vec::new(),
    };
    for s in &samples {
        report.gamma_nullity = report.gamma_nullity.max((s.dgamma.norm_sqr() - s.dgamma3 * s.dgamma3).abs());
        report.l_nullity = report.l_nullity.max((s.l.norm_sqr() - s.l3 * s.l3).abs());
        let inner = s.dgamma.re * s.l.re + s.dgamma.im * s.l.im - s.dgamma3 * s.l3;
        report.orthogonality = report.orthogonality.max(inner.abs());
        report.gamma_prime_max = report
            .gamma_prime_max
            .max((s.dgamma.norm_sqr() + s.dgamma3 * s.dgamma3).sqrt());
        report.l_max = report.l_max.max((s.l.norm_sqr() + s.l3 * s.l3).sqrt());
    }
    if report.gamma_nullity > CONSTRAINT_TOL {
        report.failures.push(format!("gamma' is not null (residual {:e})", report.gamma_nullity));
    }
    if report.l_nullity > CONSTRAINT_TOL {
        report.failures.push(format!("L is not null (residual {:e})", report.l_nullity));
    }
    if report.orthogonality > CONSTRAINT_TOL {
        report
            .failures
            .push(format!("<gamma', L> is not zero (residual {:e})", report.orthogonality));
    }
    if report.gamma_prime_max < VANISH_TOL && report.l_max < VANISH_TOL {
        report.failures.push("gamma' and L both vanish identically".to_string());
    }
    report
}

/// Boundary Gauss map `g` on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryGauss {
    pub thetas: Vec<f64>,
    pub values: Vec<Complex64>,
    /// `max |g₁ - g₂|` where both `L` and `γ'` are nonzero.
    pub consistency: f64,
}

/// `g = √((L₁ + iL₂)/(L₁ - iL₂))`, or `√((γ'₁ + iγ'₂)/(γ'₁ - iγ'₂))` where
/// `L` vanishes, continued in `θ` from the principal root at `θ = 0`.
pub fn boundary_gauss(data: &BjorlingData) -> Result<BoundaryGauss> {
    let samples = data.samples(CIRCLE_SAMPLES);
    let ratio = |v: Complex64| v / v.conj();
    let mut gaps = Vec::new();
    let mut consistency = 0.0f64;
    let mut ratios = Vec::with_capacity(samples.len());
    for s in &samples {
        let from_l = (s.l.norm() > VANISH_TOL).then(|| ratio(s.l));
        let from_gamma = (s.dgamma.norm() > VANISH_TOL).then(|| ratio(s.dgamma));
        if let (Some(a), Some(b)) = (from_l, from_gamma) {
            consistency = consistency.max((a.sqrt() - b.sqrt()).norm().min((a.sqrt() + b.sqrt()).norm()));
        }
        match from_l.or(from_gamma) {
            Some(r) => ratios.push(r),
            None => gaps.push(s.theta),
        }
    }
    if !gaps.is_empty() {
        return Err(Error::GaussGap(gaps));
    }
    let mut values = Vec::with_capacity(ratios.len());
    let mut prev = ratios[0].sqrt();
    for r in ratios {
        prev = crate::branch::nearest_root(r, prev);
        values.push(prev);
    }
    Ok(BoundaryGauss {
        thetas: samples.iter().map(|s| s.theta).collect(),
        values,
        consistency,
    })
}

/// Harmonic function with prescribed values `position` and radial derivative
/// `velocity` on the unit circle (the linear stage of [`solve`]).
///
/// `a_n = (p_n + v_n/n)/2`, `b_n = (p_n - v_n/n)/2` for `n ≠ 0`;
/// `a_0 = p_0`, `b_0 = 0`, log coefficient `v_0`.
pub fn harmonic_from_boundary(position: &FourierSeries, velocity: &FourierSeries) -> HarmonicOnAnnulus {
    let n_max = position.max_mode().max(velocity.max_mode());
    let mut h = HarmonicOnAnnulus::zero(n_max, Annulus::punctured_plane());
    h.set_holo(0, position.coeff(0));
    h.set_log(velocity.coeff(0));
    for n in (-(n_max as i64)..=n_max as i64).filter(|&n| n != 0) {
        let p = position.coeff(n);
        let v = velocity.coeff(n) / n as f64;
        h.set_holo(n, (p + v) * 0.5);
        h.set_antiholo(n, (p - v) * 0.5);
    }
    h
}

/// Raw linear solve `(h, w)` without validation or annulus estimation.
pub fn linear_solve(data: &BjorlingData) -> (HarmonicOnAnnulus, HarmonicOnAnnulus) {
    (
        harmonic_from_boundary(&data.gamma_planar, &data.l_planar),
        harmonic_from_boundary(&data.gamma_height, &data.l_height),
    )
}

/// The annulus is estimated from the upper half of a band at least
/// `DEFAULT_TRUNCATION` wide, so data with few modes yields `0 < |z| < ∞`.
fn estimate_annulus(h: &HarmonicOnAnnulus, w: &HarmonicOnAnnulus) -> Result<Annulus> {
    let band = h.max_mode().max(w.max_mode()).max(DEFAULT_TRUNCATION);
    let (hi, ho) = widen(h, band).estimate_annulus();
    let (wi, wo) = widen(w, band).estimate_annulus();
    let (inner, outer) = (hi.max(wi), ho.min(wo));
    Annulus::new(inner, outer).map_err(|_| Error::TailNotConverged { inner, outer })
}

fn widen(h: &HarmonicOnAnnulus, band: usize) -> HarmonicOnAnnulus {
    HarmonicOnAnnulus::zero(band, h.annulus()).add(h)
}

/// Constructs the unique surface through the data.
pub fn solve(data: &BjorlingData) -> Result<MaximalSurface> {
    let report = validate(data);
    if !report.passed() {
        return Err(Error::InvalidData(report.failures.join("; ")));
    }
    let (h, w) = linear_solve(data);
    let annulus = estimate_annulus(&h, &w)?;
    let h = h.with_annulus(annulus);
    let w = w.with_annulus(annulus);
    if degeneracy(&h, &VerificationGrid::standard(&annulus)).degenerate {
        return Err(Error::Degenerate);
    }
    MaximalSurface::new(h, w)
}

/// Residuals of the unit-circle identities, each a maximum over 256 samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleIdentities {
    /// `|4 h_z conj(h_z̄) e^{2iθ} - (L₃² - γ'₃² - 2iL₃γ'₃)|`
    pub product: f64,
    /// `|4 w_z² e^{2iθ} - (L₃² - γ'₃² - 2iL₃γ'₃)|`
    pub height_square: f64,
    /// `||h_z|² - |h_z̄|² - (L₁γ'₂ - L₂γ'₁)|`
    pub jacobian: f64,
    /// `|h_z|² - |h_z̄|²` itself (zero on a singular circle).
    pub singular_gap: f64,
}

impl CircleIdentities {
    pub fn max(&self) -> f64 {
        self.product.max(self.height_square).max(self.jacobian)
    }
}

pub fn circle_identities(surface: &MaximalSurface, data: &BjorlingData) -> Result<CircleIdentities> {
    let mut out = CircleIdentities {
        product: 0.0,
        height_square: 0.0,
        jacobian: 0.0,
        singular_gap: 0.0,
    };
    for s in data.samples(CIRCLE_SAMPLES) {
        let z = Complex64::from_polar(1.0, s.theta);
        let (hz, hzb) = surface.h().gradient(z)?;
        let wz = surface.w().d_z(z)?;
        let rot = Complex64::from_polar(4.0, 2.0 * s.theta);
        let rhs = Complex64::new(s.l3 * s.l3 - s.dgamma3 * s.dgamma3, -2.0 * s.l3 * s.dgamma3);
        out.product = out.product.max((hz * hzb.conj() * rot - rhs).norm());
        out.height_square = out.height_square.max((wz * wz * rot - rhs).norm());
        let gap = hz.norm_sqr() - hzb.norm_sqr();
        let cross = s.l.re * s.dgamma.im - s.l.im * s.dgamma.re;
        out.jacobian = out.jacobian.max((gap - cross).abs());
        out.singular_gap = out.singular_gap.max(gap.abs());
    }
    Ok(out)
}
