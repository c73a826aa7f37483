//! Closed-form surfaces and data used as reference cases.

use num_complex::Complex64;

use crate::bjorling::BjorlingData;
use crate::fourier::FourierSeries;
use crate::harmonic::{Annulus, HarmonicOnAnnulus};
use crate::interpolation::SpacelikeCurve;
use crate::surface::MaximalSurface;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// `½(z - 1/z̄)`.
pub fn catenoid_h() -> HarmonicOnAnnulus {
    HarmonicOnAnnulus::zero(1, Annulus::punctured_plane())
        .with_holo(1, c(0.5))
        .with_antiholo(1, c(-0.5))
}

/// `ln|z| = ½ log(z z̄)`.
pub fn catenoid_w() -> HarmonicOnAnnulus {
    HarmonicOnAnnulus::zero(1, Annulus::punctured_plane()).with_log(c(1.0))
}

/// The elliptic catenoid, singular on `|z| = 1`.
pub fn catenoid() -> MaximalSurface {
    MaximalSurface::new(catenoid_h(), catenoid_w()).expect("catenoid height is real")
}

/// `⅙(z³ - 1/z̄³) + ½(z̄ - 1/z)`.
pub fn family_h() -> HarmonicOnAnnulus {
    HarmonicOnAnnulus::zero(3, Annulus::punctured_plane())
        .with_holo(3, c(1.0 / 6.0))
        .with_antiholo(3, c(-1.0 / 6.0))
        .with_antiholo(-1, c(0.5))
        .with_holo(-1, c(-0.5))
}

/// `¼(z² - 1/z̄² - 1/z² + z̄²)`.
pub fn family_w() -> HarmonicOnAnnulus {
    HarmonicOnAnnulus::zero(2, Annulus::punctured_plane())
        .with_holo(2, c(0.25))
        .with_antiholo(2, c(-0.25))
        .with_holo(-2, c(-0.25))
        .with_antiholo(-2, c(0.25))
}

/// The member `c = 2` of the one-parameter family with a special
/// singularity at the origin.
pub fn family_surface() -> MaximalSurface {
    MaximalSurface::new(family_h(), family_w()).expect("family height is real")
}

/// `e^z + z̄` with the exponential truncated after `z^n_max`.
pub fn exp_plus_conj_h(n_max: usize) -> HarmonicOnAnnulus {
    let mut h = HarmonicOnAnnulus::zero(n_max.max(1), Annulus::punctured_plane());
    let mut factorial = 1.0;
    for n in 0..=n_max {
        if n > 0 {
            factorial *= n as f64;
        }
        h.set_holo(n as i64, c(1.0 / factorial));
    }
    h.set_antiholo(-1, c(1.0));
    h
}

/// `sin z + sin z̄` truncated after degree `n_max`; degenerate everywhere.
pub fn sin_degenerate_h(n_max: usize) -> HarmonicOnAnnulus {
    let mut h = HarmonicOnAnnulus::zero(n_max.max(1), Annulus::punctured_plane());
    let mut factorial = 1.0;
    for n in 1..=n_max {
        factorial *= n as f64;
        if n % 2 == 1 {
            let sign = if (n / 2) % 2 == 0 { 1.0 } else { -1.0 };
            h.set_holo(n as i64, c(sign / factorial));
            h.set_antiholo(-(n as i64), c(sign / factorial));
        }
    }
    h
}

/// `γ ≡ (k, k)` (planar part `k + ik`, height `k`) and `L = (e^{iθ}, 1)`.
pub fn catenoid_bjorling_shifted(k: f64) -> BjorlingData {
    BjorlingData::new(
        FourierSeries::constant(Complex64::new(k, k)),
        FourierSeries::constant(c(k)),
        FourierSeries::from_modes(&[(1, c(1.0))]),
        FourierSeries::constant(c(1.0)),
    )
    .expect("real height components")
}

/// `γ ≡ 0`, `L = (e^{iθ}, 1)`; solves to the elliptic catenoid.
pub fn catenoid_bjorling() -> BjorlingData {
    catenoid_bjorling_shifted(0.0)
}

/// `(-¾e^{iθ}, ln ½)`, the catenoid's image of `|z| = ½`.
pub fn catenoid_curve() -> SpacelikeCurve {
    SpacelikeCurve::new(
        FourierSeries::from_modes(&[(1, c(-0.75))]),
        FourierSeries::constant(c(0.5f64.ln())),
    )
    .expect("real height")
}

/// `(scale·e^{iθ}, 1)`; `scale = 1` admits no surface with a special
/// singularity.
pub fn scaled_circle_curve(scale: f64) -> SpacelikeCurve {
    SpacelikeCurve::new(
        FourierSeries::from_modes(&[(1, c(scale))]),
        FourierSeries::constant(c(1.0)),
    )
    .expect("real height")
}

/// `2(e^{z/2} + e^{z̄/2})`, the height paired with [`exp_plus_conj_h`].
pub fn exp_plus_conj_w(n_max: usize) -> HarmonicOnAnnulus {
    let mut w = HarmonicOnAnnulus::zero(n_max.max(1), Annulus::punctured_plane());
    let mut term = 2.0;
    for n in 0..=n_max {
        if n > 0 {
            term /= 2.0 * n as f64;
            w.set_antiholo(-(n as i64), c(term));
        }
        w.set_holo(n as i64, c(if n == 0 { 2.0 * term } else { term }));
    }
    w
}

/// `F = (e^z + z̄, 2(e^{z/2} + e^{z̄/2}))`, truncated after degree `n_max`.
pub fn exp_plus_conj(n_max: usize) -> MaximalSurface {
    MaximalSurface::new(exp_plus_conj_h(n_max), exp_plus_conj_w(n_max)).expect("real height")
}

/// Valid Björling data built from two real trigonometric polynomials.
///
/// With `u = e^{i(mθ + phase)}` and real `s`, `t`, the fields
/// `γ' = (s·u, s)` and `L = (t·u, t)` are null and orthogonal. `s_modes[k]`
/// is `ŝ_{k+1}`; modes `0` and `±m` of `s` are dropped so that `γ` closes.
/// `t_modes[k]` is `t̂_k` (`t̂_0` uses only the real part).
pub fn null_bjorling(m: i64, phase: f64, s_modes: &[Complex64], t_modes: &[Complex64]) -> BjorlingData {
    assert!(m != 0, "m = 0 gives a constant direction");
    let mut s = FourierSeries::zeros(s_modes.len());
    for (k, &v) in s_modes.iter().enumerate() {
        let n = k as i64 + 1;
        if n != m.abs() {
            s.set(n, v);
            s.set(-n, v.conj());
        }
    }
    let mut t = FourierSeries::zeros(t_modes.len().max(1));
    for (n, &v) in t_modes.iter().enumerate() {
        let n = n as i64;
        if n == 0 {
            t.set(0, c(v.re));
        } else {
            t.set(n, v);
            t.set(-n, v.conj());
        }
    }
    let rot = Complex64::from_polar(1.0, phase);
    let times_u = |f: &FourierSeries| {
        let mut out = FourierSeries::zeros(f.max_mode() + m.unsigned_abs() as usize);
        for (n, v) in f.modes() {
            out.set(n + m, v * rot);
        }
        out
    };
    let integrate = |f: &FourierSeries| {
        let mut out = FourierSeries::zeros(f.max_mode());
        for (n, v) in f.modes() {
            if n != 0 {
                out.set(n, v / Complex64::new(0.0, n as f64));
            }
        }
        out
    };
    BjorlingData::new(integrate(&times_u(&s)), integrate(&s), times_u(&t), t).expect("real height")
}
