//! Surfaces through a closed spacelike curve with a special singularity at
//! the origin.
//!
//! For a curve `(f(θ), g(θ))` and a radius `r0 ≠ 1` the candidate surface is
//!
//! ```text
//! h = Σ c_n (z^n - 1/z̄^n) + c ln|z|,   w = Σ d_n (z^n - 1/z̄^n) + d ln|z|
//! ```
//!
//! which collapses `|z| = 1` to the origin and passes through the curve on
//! `|z| = r0`. It is a maximal surface exactly when every coefficient of
//! `4(h_z conj(h_z̄) - w_z²) = Σ R_k z^{k-2}` vanishes.

use num_complex::Complex64;

use crate::bjorling::harmonic_from_boundary;
use crate::error::{Error, Result};
use crate::fourier::{angle, fourier_analyze, CircleSamples, FourierSeries};
use crate::harmonic::{Annulus, HarmonicOnAnnulus};
use crate::surface::{degeneracy, MaximalSurface, SpacePoint, VerificationGrid, SINGULAR_TOL};
use crate::CIRCLE_SAMPLES;

/// Minimum of `γ'₁² + γ'₂² - γ'₃²` required of a spacelike curve.
pub const SPACELIKE_MARGIN: f64 = 1e-10;

/// Series residual below which `r0` is accepted.
pub const ROOT_THRESHOLD: f64 = 1e-8;

/// Closed curve `θ ↦ (f(θ), g(θ))` with `g` real.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacelikeCurve {
    planar: FourierSeries,
    height: FourierSeries,
}

impl SpacelikeCurve {
    /// Rejects a non-real height and curves that are not strictly spacelike.
    pub fn new(planar: FourierSeries, height: FourierSeries) -> Result<Self> {
        let defect = height.reality_defect();
        if defect > 1e-10 * height.max_abs_coeff().max(1.0) {
            return Err(Error::NotReal(defect));
        }
        let curve = Self { planar, height };
        let margin = curve.spacelike_margin();
        if margin <= SPACELIKE_MARGIN {
            return Err(Error::NotSpacelike(margin));
        }
        Ok(curve)
    }

    pub fn planar(&self) -> &FourierSeries {
        &self.planar
    }

    pub fn height(&self) -> &FourierSeries {
        &self.height
    }

    /// Largest mode present in either component.
    pub fn max_mode(&self) -> usize {
        self.planar.effective_max_mode(0.0).max(self.height.effective_max_mode(0.0))
    }

    /// `min (|f'|² - g'²)` over 256 samples.
    pub fn spacelike_margin(&self) -> f64 {
        let df = self.planar.derivative();
        let dg = self.height.derivative();
        (0..CIRCLE_SAMPLES)
            .map(|j| {
                let t = angle(j, CIRCLE_SAMPLES);
                df.eval(t).norm_sqr() - dg.eval(t).re.powi(2)
            })
            .fold(f64::INFINITY, f64::min)
    }

    pub fn eval(&self, theta: f64) -> SpacePoint {
        SpacePoint::new(self.planar.eval(theta), self.height.eval(theta).re)
    }

    /// The curve minus `p`.
    pub fn translated(&self, p: &SpacePoint) -> Self {
        Self {
            planar: self.planar.add(&FourierSeries::constant(-p.planar)),
            height: self.height.add(&FourierSeries::constant(Complex64::new(-p.height, 0.0))),
        }
    }
}

/// Coefficients of the candidate surface for one `r0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModifiedCoefficients {
    pub r0: f64,
    /// `c_n` (the mode-0 slot is unused).
    pub planar: FourierSeries,
    /// `c`
    pub planar_log: Complex64,
    /// `d_n` (the mode-0 slot is unused).
    pub height: FourierSeries,
    /// `d`
    pub height_log: f64,
}

impl ModifiedCoefficients {
    pub fn max_mode(&self) -> usize {
        self.planar.max_mode().max(self.height.max_mode())
    }

    pub fn c(&self, n: i64) -> Complex64 {
        if n == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            self.planar.coeff(n)
        }
    }

    pub fn d(&self, n: i64) -> Complex64 {
        if n == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            self.height.coeff(n)
        }
    }

    /// `(h, w)` on the punctured plane.
    pub fn harmonics(&self) -> (HarmonicOnAnnulus, HarmonicOnAnnulus) {
        let n_max = self.max_mode();
        let build = |coeff: &dyn Fn(i64) -> Complex64, log: Complex64| {
            let mut f = HarmonicOnAnnulus::zero(n_max.max(1), Annulus::punctured_plane());
            for n in (-(n_max as i64)..=n_max as i64).filter(|&n| n != 0) {
                f.set_holo(n, coeff(n));
                f.set_antiholo(n, -coeff(n));
            }
            f.set_log(log);
            f
        };
        (
            build(&|n| self.c(n), self.planar_log),
            build(&|n| self.d(n), Complex64::new(self.height_log, 0.0)),
        )
    }
}

/// Divides out the evaluation weights `r0^n - r0^{-n}` (and `ln r0` for
/// the log term) so the series reproduce the curve on `|z| = r0`.
pub fn modified_coeffs(curve: &SpacelikeCurve, r0: f64) -> Result<ModifiedCoefficients> {
    if !(r0 > 0.0) || !r0.is_finite() {
        return Err(Error::InvalidRadius(r0));
    }
    let t = r0.ln();
    if t.abs() < 1e-12 {
        return Err(Error::InvalidRadius(r0));
    }
    let divide = |series: &FourierSeries| {
        let mut out = FourierSeries::zeros(series.max_mode());
        for (n, v) in series.modes() {
            if n != 0 {
                out.set(n, v / (2.0 * (n as f64 * t).sinh()));
            }
        }
        out
    };
    Ok(ModifiedCoefficients {
        r0,
        planar: divide(&curve.planar),
        planar_log: curve.planar.coeff(0) / t,
        height: divide(&curve.height),
        height_log: curve.height.coeff(0).re / t,
    })
}

/// `R_k` for `|k| ≤ k_max`, indexed by `k + k_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesResiduals {
    pub k_max: usize,
    pub values: Vec<Complex64>,
}

impl SeriesResiduals {
    pub fn get(&self, k: i64) -> Complex64 {
        let i = k + self.k_max as i64;
        if i < 0 || i as usize >= self.values.len() {
            Complex64::new(0.0, 0.0)
        } else {
            self.values[i as usize]
        }
    }

    /// The `k = 0` residual (real).
    pub fn zeroth(&self) -> f64 {
        self.get(0).re
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let k_max = self.k_max as i64;
        self.values.iter().enumerate().map(move |(i, v)| (i as i64 - k_max, *v))
    }
}

/// Coefficients `R_k` of `4(h_z conj(h_z̄) - w_z²) = Σ R_k z^{k-2}`:
///
/// ```text
/// R_k = Σ 4n(n-k)(c_n conj(c_{n-k}) - d_n conj(d_{n-k}))
///       + 2k(c_k conj(c) - c conj(c_{-k})) - 4k d_k d         (k ≠ 0)
/// R_0 = Σ 4n²(|c_n|² - |d_n|²) + |c|² - d²
/// ```
pub fn series_residuals(mc: &ModifiedCoefficients, k_max: usize) -> SeriesResiduals {
    let n_max = mc.max_mode() as i64;
    let c = mc.planar_log;
    let d = mc.height_log;
    let values = (-(k_max as i64)..=k_max as i64)
        .map(|k| {
            let mut sum = Complex64::new(0.0, 0.0);
            for n in -n_max..=n_max {
                let m = n - k;
                if n == 0 || m == 0 || m.abs() > n_max {
                    continue;
                }
                let weight = 4.0 * (n * m) as f64;
                sum += (mc.c(n) * mc.c(m).conj() - mc.d(n) * mc.d(m).conj()) * weight;
            }
            if k == 0 {
                sum + c.norm_sqr() - d * d
            } else {
                let kf = k as f64;
                sum + (mc.c(k) * c.conj() - c * mc.c(-k).conj()) * (2.0 * kf) - mc.d(k) * (4.0 * kf * d)
            }
        })
        .collect();
    SeriesResiduals { k_max, values }
}

/// `max_k |R_k|`; `k_max = None` uses twice the curve's highest mode.
pub fn scalar_residual(curve: &SpacelikeCurve, r0: f64, k_max: Option<usize>) -> Result<f64> {
    let mc = modified_coeffs(curve, r0)?;
    let k_max = k_max.unwrap_or(2 * mc.max_mode());
    Ok(series_residuals(&mc, k_max).max_abs())
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Log-spaced scan points per sub-bracket.
    pub scan_points: usize,
    /// Gap left on each side of `r0 = 1`.
    pub split_delta: f64,
    /// Golden-section refinement stops at this bracket width.
    pub width: f64,
    pub threshold: f64,
    pub k_max: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            scan_points: 512,
            split_delta: 1e-3,
            width: 1e-10,
            threshold: ROOT_THRESHOLD,
            k_max: None,
        }
    }
}

/// Roots together with every scanned `(r0, residual)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub roots: Vec<f64>,
    pub scan: Vec<(f64, f64)>,
}

/// Radii `r0` in `bracket` whose scalar residual is below the threshold,
/// ascending. Empty when there are none.
pub fn search_r0(curve: &SpacelikeCurve, bracket: (f64, f64), options: &SearchOptions) -> Result<Vec<f64>> {
    Ok(search_r0_detailed(curve, bracket, options)?.roots)
}

pub fn search_r0_detailed(
    curve: &SpacelikeCurve,
    (lo, hi): (f64, f64),
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(Error::InvalidData(format!("invalid bracket ({lo}, {hi})")));
    }
    let residual = |r: f64| scalar_residual(curve, r, options.k_max);
    let mut sub = Vec::new();
    if lo < 1.0 - options.split_delta {
        sub.push((lo, hi.min(1.0 - options.split_delta)));
    }
    if hi > 1.0 + options.split_delta {
        sub.push((lo.max(1.0 + options.split_delta), hi));
    }

    let mut scan = Vec::new();
    let mut roots: Vec<f64> = Vec::new();
    for (a, b) in sub {
        let n = options.scan_points.max(3);
        let (la, lb) = (a.ln(), b.ln());
        let xs: Vec<f64> = (0..n).map(|j| la + (lb - la) * j as f64 / (n - 1) as f64).collect();
        let vs = xs.iter().map(|&x| residual(x.exp())).collect::<Result<Vec<_>>>()?;
        for j in 0..n {
            let left = if j == 0 { f64::INFINITY } else { vs[j - 1] };
            let right = if j + 1 == n { f64::INFINITY } else { vs[j + 1] };
            let is_min = vs[j] <= left && vs[j] <= right;
            let boundary = j == 0 || j + 1 == n;
            if !is_min || (boundary && vs[j] >= options.threshold) {
                continue;
            }
            let x0 = xs[j.saturating_sub(1)];
            let x1 = xs[(j + 1).min(n - 1)];
            let (r, v) = golden_section(|x| residual(x.exp()), x0, x1, options.width)?;
            let r = r.exp();
            if v < options.threshold && !roots.iter().any(|&q| (q - r).abs() <= 1e-6 * r) {
                roots.push(r);
            }
        }
        scan.extend(xs.iter().map(|x| x.exp()).zip(vs));
    }
    roots.sort_by(f64::total_cmp);
    Ok(SearchOutcome { roots, scan })
}

/// Minimum of a unimodal `f` on `[a, b]` (in log radius); stops once the
/// bracket in `r = e^x` is narrower than `width`.
fn golden_section(f: impl Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, width: f64) -> Result<(f64, f64)> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - inv_phi * (b - a);
    let mut x2 = a + inv_phi * (b - a);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..200 {
        if b.exp() - a.exp() <= width {
            break;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2)?;
        }
    }
    Ok(if f1 <= f2 { (x1, f1) } else { (x2, f2) })
}

/// Assembles the surface for an accepted `r0` and verifies it: the unit
/// circle maps to the origin, `|z| = r0` maps onto the curve, the surface is
/// conformal and non-degenerate, and its unit-circle data solve back to the
/// same coefficients.
pub fn build_surface(curve: &SpacelikeCurve, r0: f64) -> Result<MaximalSurface> {
    let margin = curve.spacelike_margin();
    if margin <= SPACELIKE_MARGIN {
        return Err(Error::NotSpacelike(margin));
    }
    let mc = modified_coeffs(curve, r0)?;
    let residuals = series_residuals(&mc, 2 * mc.max_mode());
    let residual = residuals.max_abs();
    if residual >= ROOT_THRESHOLD {
        return Err(Error::ResidualTooLarge {
            r0,
            residual,
            threshold: ROOT_THRESHOLD,
        });
    }
    let (h, w) = mc.harmonics();
    let surface = MaximalSurface::new(h, w)?;
    let scale = surface.h().max_abs_coeff().max(surface.w().max_abs_coeff()).max(1.0);

    let origin = surface
        .special_singularity(1.0, SINGULAR_TOL)
        .ok_or_else(|| Error::Postcondition("unit circle is not a special singularity".into()))?;
    if origin.planar.norm().max(origin.height.abs()) > 1e-10 * scale {
        return Err(Error::Postcondition(format!("unit circle maps to {origin:?}, not the origin")));
    }

    let mut on_curve = 0.0f64;
    for j in 0..CIRCLE_SAMPLES {
        let t = angle(j, CIRCLE_SAMPLES);
        let p = surface.evaluate(Complex64::from_polar(r0, t))?;
        let q = curve.eval(t);
        on_curve = on_curve.max((p.planar - q.planar).norm().max((p.height - q.height).abs()));
    }
    if on_curve > 1e-9 * scale {
        return Err(Error::Postcondition(format!("curve mismatch {on_curve:e} on |z| = r0")));
    }

    // Φ = ¼ Σ R_k z^{k-2} is holomorphic, so it is bounded on the grid by
    // the accepted residual level.
    let (rho_min, rho_max) = (r0.min(1.0 / r0), r0.max(1.0 / r0));
    let grid = VerificationGrid::new(64, 16, rho_min, rho_max);
    let bound: f64 = residuals
        .iter()
        .map(|(k, v)| 0.25 * v.norm() * rho_max.powi(k as i32 - 2).max(rho_min.powi(k as i32 - 2)))
        .sum();
    let conformality = surface.max_conformality_residual(&grid);
    if conformality > 1e-10 + 2.0 * bound {
        return Err(Error::Postcondition(format!("conformality residual {conformality:e}")));
    }

    if degeneracy(surface.h(), &grid).degenerate {
        return Err(Error::Degenerate);
    }

    let drift = bjorling_cross_check(&surface)?;
    if drift > 1e-10 * scale {
        return Err(Error::Postcondition(format!("Björling cross-check drift {drift:e}")));
    }
    Ok(surface)
}

/// Reads `(F, F_ρ)` off the unit circle, solves the linear Björling stage,
/// and returns the largest coefficient difference to the input surface.
pub fn bjorling_cross_check(surface: &MaximalSurface) -> Result<f64> {
    let sample = |f: &dyn Fn(Complex64) -> Result<Complex64>| -> Result<FourierSeries> {
        let values = (0..CIRCLE_SAMPLES)
            .map(|j| f(Complex64::from_polar(1.0, angle(j, CIRCLE_SAMPLES))))
            .collect::<Result<Vec<_>>>()?;
        let series = fourier_analyze(&CircleSamples::new(values)?);
        Ok(series.truncated(CIRCLE_SAMPLES / 2 - 1).0)
    };
    let solve = |f: &HarmonicOnAnnulus| -> Result<HarmonicOnAnnulus> {
        let position = sample(&|z| f.eval(z))?;
        let velocity = sample(&|z| f.d_rho(z))?;
        Ok(harmonic_from_boundary(&position, &velocity))
    };
    let h = solve(surface.h())?;
    let w = solve(surface.w())?;
    Ok(h.max_coeff_diff(surface.h()).max(w.max_coeff_diff(surface.w())))
}

/// Builds the surface with its special singularity at `p` instead of the
/// origin.
pub fn build_surface_through(curve: &SpacelikeCurve, r0: f64, p: &SpacePoint) -> Result<MaximalSurface> {
    Ok(build_surface(&translate_to_origin(curve, p), r0)?.translated(p))
}

/// The curve shifted by `-p`, so a singularity at `p` becomes one at the origin.
pub fn translate_to_origin(curve: &SpacelikeCurve, p: &SpacePoint) -> SpacelikeCurve {
    curve.translated(p)
}

/// `(a₁e^{-iθ} + a₃e^{3iθ}, 2b₂ cos 2θ)` with `a₁ = ½(c - 1/c)`,
/// `a₃ = ⅙(c³ - 1/c³)`, `b₂ = ¼(c² - 1/c²)`. Its surface is singular at the
/// origin with `r0 = c`.
pub fn family_curve(c: f64) -> Result<SpacelikeCurve> {
    if !(c > 0.0) || (c - 1.0).abs() < 1e-12 || !c.is_finite() {
        return Err(Error::InvalidRadius(c));
    }
    let a1 = 0.5 * (c - 1.0 / c);
    let a3 = (c.powi(3) - c.powi(-3)) / 6.0;
    let b2 = 0.25 * (c * c - 1.0 / (c * c));
    let re = |x: f64| Complex64::new(x, 0.0);
    SpacelikeCurve::new(
        FourierSeries::from_modes(&[(-1, re(a1)), (3, re(a3))]),
        FourierSeries::from_modes(&[(-2, re(b2)), (2, re(b2))]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn catenoid_coefficients() {
        let mc = modified_coeffs(&corpus::catenoid_curve(), 0.5).unwrap();
        assert!((mc.c(1) - c(0.5, 0.0)).norm() < 1e-15);
        assert!((mc.height_log - 1.0).abs() < 1e-15);
        assert_eq!(mc.planar_log, c(0.0, 0.0));
        let mc2 = modified_coeffs(&corpus::catenoid_curve(), 2.0).unwrap();
        assert!((mc2.c(1) + c(0.5, 0.0)).norm() < 1e-15);
        assert!((mc2.height_log + 1.0).abs() < 1e-15);
    }

    #[test]
    fn family_coefficients() {
        let curve = family_curve(2.0).unwrap();
        assert!((curve.planar().coeff(-1) - c(0.75, 0.0)).norm() < 1e-15);
        assert!((curve.planar().coeff(3) - c(21.0 / 16.0, 0.0)).norm() < 1e-15);
        assert!((curve.height().coeff(2) - c(15.0 / 16.0, 0.0)).norm() < 1e-15);
        let mc = modified_coeffs(&curve, 2.0).unwrap();
        assert!((mc.c(-1) + c(0.5, 0.0)).norm() < 1e-15);
        assert!((mc.c(3) - c(1.0 / 6.0, 0.0)).norm() < 1e-15);
        assert!((mc.d(2) - c(0.25, 0.0)).norm() < 1e-15);
        assert!((mc.d(-2) + c(0.25, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn radius_one_is_rejected() {
        assert!(matches!(
            modified_coeffs(&corpus::catenoid_curve(), 1.0),
            Err(Error::InvalidRadius(_))
        ));
    }

    #[test]
    fn circle_residual_closed_form() {
        let curve = corpus::scaled_circle_curve(1.0);
        for r0 in [0.5, 2.0, 5.0] {
            let t = f64::ln(r0);
            let expected = (1.0 / t.sinh().powi(2) - 1.0 / (t * t)).abs();
            let got = scalar_residual(&curve, r0, None).unwrap();
            assert!((got - expected).abs() < 1e-14, "r0 = {r0}");
            assert!(got > 0.1);
        }
    }

    #[test]
    fn catenoid_roots() {
        let roots = search_r0(&corpus::catenoid_curve(), (0.05, 20.0), &SearchOptions::default()).unwrap();
        assert_eq!(roots.len(), 2, "{roots:?}");
        assert!((roots[0] - 0.5).abs() < 1e-6 && (roots[1] - 2.0).abs() < 1e-6);
    }

    #[test]
    fn enlarged_circle_has_two_roots() {
        let roots = search_r0(&corpus::scaled_circle_curve(1.1), (0.01, 100.0), &SearchOptions::default()).unwrap();
        assert_eq!(roots.len(), 2, "{roots:?}");
        assert!(roots[0] < 1.0 && roots[1] > 1.0);
        assert!((roots[0] * roots[1] - 1.0).abs() < 1e-8);
    }

    #[test]
    fn enlarged_circle_roots_approach_one() {
        let mut previous = f64::INFINITY;
        for eps in [0.1, 0.05, 0.01] {
            let roots = search_r0(&corpus::scaled_circle_curve(1.0 + eps), (0.01, 100.0), &SearchOptions::default())
                .unwrap();
            assert_eq!(roots.len(), 2, "eps = {eps}: {roots:?}");
            let spread = roots[1].ln();
            // sinh t = (1 + ε) t, so t ≈ √(6ε)
            assert!((spread - (6.0 * eps).sqrt()).abs() < 0.1 * spread);
            assert!(spread < previous);
            previous = spread;
        }
    }

    #[test]
    fn shrunk_circle_has_no_roots() {
        for eps in [0.1, 0.05, 0.01] {
            let curve = corpus::scaled_circle_curve(1.0 - eps);
            assert!(search_r0(&curve, (0.01, 100.0), &SearchOptions::default()).unwrap().is_empty());
        }
    }

    #[test]
    fn catenoid_surface() {
        let f = build_surface(&corpus::catenoid_curve(), 0.5).unwrap();
        assert!(f.h().max_coeff_diff(&corpus::catenoid_h()) < 1e-15);
        assert!(f.w().max_coeff_diff(&corpus::catenoid_w()) < 1e-15);
    }

    #[test]
    fn family_surface() {
        let f = build_surface(&family_curve(2.0).unwrap(), 2.0).unwrap();
        assert!(f.h().max_coeff_diff(&corpus::family_h()) < 1e-15);
        assert!(f.w().max_coeff_diff(&corpus::family_w()) < 1e-15);
    }

    #[test]
    fn circle_is_rejected() {
        assert!(matches!(
            build_surface(&corpus::scaled_circle_curve(1.0), 2.0),
            Err(Error::ResidualTooLarge { .. })
        ));
    }

    #[test]
    fn timelike_curve_is_rejected() {
        let r = SpacelikeCurve::new(
            FourierSeries::from_modes(&[(1, c(0.5, 0.0))]),
            FourierSeries::from_modes(&[(1, c(0.5, 0.0)), (-1, c(0.5, 0.0))]),
        );
        assert!(matches!(r, Err(Error::NotSpacelike(_))));
    }

    #[test]
    fn translated_pipeline() {
        let p = SpacePoint::new(c(1.0, 0.0), 0.0);
        let shifted = corpus::catenoid_curve().translated(&SpacePoint::new(c(-1.0, 0.0), 0.0));
        let back = translate_to_origin(&shifted, &p);
        assert_eq!(back, corpus::catenoid_curve());
        let f = build_surface_through(&shifted, 0.5, &p).unwrap();
        let z = c(0.3, 1.1);
        let expected = corpus::catenoid().evaluate(z).unwrap().translated(&p);
        assert!(f.evaluate(z).unwrap().distance(&expected) < 1e-14);
    }
}
