//! Harmonic functions on annuli in Laurent-plus-logarithm form.
//!
//! ```text
//! H(z) = Σ a_n z^n + Σ b_n z̄^{-n} + c·ln|z|,   n ∈ [-N, N],  b_0 = 0
//! ```
//!
//! The logarithmic term uses `ln|z|`, so that on the unit circle
//! `H_ρ = Σ n (a_n - b_n) e^{inθ} + c`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Safety factor applied to decay-based radius estimates.
const RADIUS_SAFETY: f64 = 1.05;

/// Open annulus `inner < |z| < outer` with `inner < 1 < outer`.
///
/// `inner = 0` and `outer = ∞` stand for an unbounded side (the series
/// is a finite Laurent polynomial there). `z = 0` is always excluded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    inner: f64,
    outer: f64,
}

impl Annulus {
    pub fn new(inner: f64, outer: f64) -> Result<Self> {
        if !((0.0..1.0).contains(&inner) && outer > 1.0) {
            return Err(Error::InvalidAnnulus { inner, outer });
        }
        Ok(Self { inner, outer })
    }

    /// `C \ {0}`.
    pub fn punctured_plane() -> Self {
        Self {
            inner: 0.0,
            outer: f64::INFINITY,
        }
    }

    pub fn inner(&self) -> f64 {
        self.inner
    }

    pub fn outer(&self) -> f64 {
        self.outer
    }

    pub fn contains_radius(&self, rho: f64) -> bool {
        rho > self.inner && rho < self.outer && rho > 0.0
    }

    pub fn contains(&self, z: Complex64) -> bool {
        self.contains_radius(z.norm())
    }

    pub fn check(&self, z: Complex64) -> Result<()> {
        if self.contains(z) {
            Ok(())
        } else {
            Err(Error::OutsideAnnulus {
                z,
                inner: self.inner,
                outer: self.outer,
            })
        }
    }

    pub fn intersect(&self, other: &Annulus) -> Annulus {
        Annulus {
            inner: self.inner.max(other.inner),
            outer: self.outer.min(other.outer),
        }
    }

    /// A radius strictly between `inner` and 1, for sampling grids.
    pub fn sampling_inner(&self) -> f64 {
        if self.inner > 0.0 {
            self.inner.sqrt()
        } else {
            0.5
        }
    }

    /// A radius strictly between 1 and `outer`, for sampling grids.
    pub fn sampling_outer(&self) -> f64 {
        if self.outer.is_finite() {
            self.outer.sqrt()
        } else {
            2.0
        }
    }
}

/// Truncated Laurent-plus-log series on an annulus.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicOnAnnulus {
    max_mode: usize,
    holo: Vec<Complex64>,
    antiholo: Vec<Complex64>,
    log: Complex64,
    annulus: Annulus,
}

impl HarmonicOnAnnulus {
    pub fn zero(max_mode: usize, annulus: Annulus) -> Self {
        let zeros = vec![Complex64::new(0.0, 0.0); 2 * max_mode + 1];
        Self {
            max_mode,
            holo: zeros.clone(),
            antiholo: zeros,
            log: Complex64::new(0.0, 0.0),
            annulus,
        }
    }

    pub fn max_mode(&self) -> usize {
        self.max_mode
    }

    pub fn annulus(&self) -> Annulus {
        self.annulus
    }

    pub fn with_annulus(mut self, annulus: Annulus) -> Self {
        self.annulus = annulus;
        self
    }

    fn index(&self, n: i64) -> Option<usize> {
        (n.unsigned_abs() as usize <= self.max_mode).then(|| (n + self.max_mode as i64) as usize)
    }

    fn widen_to(&mut self, n: i64) {
        let needed = n.unsigned_abs() as usize;
        if needed <= self.max_mode {
            return;
        }
        let mut grown = Self::zero(needed, self.annulus);
        for (k, a, b) in self.coefficients() {
            let i = (k + needed as i64) as usize;
            grown.holo[i] = a;
            grown.antiholo[i] = b;
        }
        grown.log = self.log;
        *self = grown;
    }

    /// Coefficient `a_n` of `z^n`.
    pub fn holo(&self, n: i64) -> Complex64 {
        self.index(n).map_or(Complex64::new(0.0, 0.0), |i| self.holo[i])
    }

    /// Coefficient `b_n` of `z̄^{-n}`.
    pub fn antiholo(&self, n: i64) -> Complex64 {
        self.index(n).map_or(Complex64::new(0.0, 0.0), |i| self.antiholo[i])
    }

    /// Coefficient of `ln|z|`.
    pub fn log_coeff(&self) -> Complex64 {
        self.log
    }

    pub fn set_holo(&mut self, n: i64, value: Complex64) {
        self.widen_to(n);
        let i = self.index(n).expect("widened");
        self.holo[i] = value;
    }

    /// Sets `b_n`. A constant (`n = 0`) is folded into `a_0` to keep `b_0 = 0`.
    pub fn set_antiholo(&mut self, n: i64, value: Complex64) {
        if n == 0 {
            let a0 = self.holo(0);
            self.set_holo(0, a0 + value);
            return;
        }
        self.widen_to(n);
        let i = self.index(n).expect("widened");
        self.antiholo[i] = value;
    }

    pub fn set_log(&mut self, value: Complex64) {
        self.log = value;
    }

    pub fn with_holo(mut self, n: i64, value: Complex64) -> Self {
        self.set_holo(n, value);
        self
    }

    pub fn with_antiholo(mut self, n: i64, value: Complex64) -> Self {
        self.set_antiholo(n, value);
        self
    }

    pub fn with_log(mut self, value: Complex64) -> Self {
        self.log = value;
        self
    }

    /// `(n, a_n, b_n)` for `n ∈ [-N, N]`.
    pub fn coefficients(&self) -> impl Iterator<Item = (i64, Complex64, Complex64)> + '_ {
        let k = self.max_mode as i64;
        (0..self.holo.len()).map(move |i| (i as i64 - k, self.holo[i], self.antiholo[i]))
    }

    /// Largest coefficient magnitude, including the log term.
    pub fn max_abs_coeff(&self) -> f64 {
        self.coefficients()
            .flat_map(|(_, a, b)| [a.norm(), b.norm()])
            .fold(self.log.norm(), f64::max)
    }

    /// Coefficient-wise `self + other` over the intersected annulus.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.annulus = self.annulus.intersect(&other.annulus);
        for (n, a, b) in other.coefficients() {
            out.set_holo(n, out.holo(n) + a);
            if n != 0 {
                out.set_antiholo(n, out.antiholo(n) + b);
            }
        }
        out.log += other.log;
        out
    }

    /// Adds a constant to the function (stored in `a_0`).
    pub fn shifted(&self, constant: Complex64) -> Self {
        let mut out = self.clone();
        out.set_holo(0, self.holo(0) + constant);
        out
    }

    /// Largest coefficient difference against `other`.
    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        let k = self.max_mode.max(other.max_mode) as i64;
        (-k..=k)
            .flat_map(|n| {
                [
                    (self.holo(n) - other.holo(n)).norm(),
                    (self.antiholo(n) - other.antiholo(n)).norm(),
                ]
            })
            .fold((self.log - other.log).norm(), f64::max)
    }

    fn powers(&self, base: Complex64) -> Vec<Complex64> {
        // base^n for n in [-N, N]
        let n = self.max_mode;
        let mut out = vec![Complex64::new(1.0, 0.0); 2 * n + 1];
        let inv = base.inv();
        for k in 1..=n {
            out[n + k] = out[n + k - 1] * base;
            out[n - k] = out[n - k + 1] * inv;
        }
        out
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.annulus.check(z)?;
        let zp = self.powers(z);
        let wp = self.powers(z.conj().inv());
        let series: Complex64 = (0..zp.len())
            .map(|i| self.holo[i] * zp[i] + self.antiholo[i] * wp[i])
            .sum();
        Ok(series + self.log * z.norm().ln())
    }

    /// Wirtinger derivative `∂/∂z`.
    pub fn d_z(&self, z: Complex64) -> Result<Complex64> {
        self.annulus.check(z)?;
        let zp = self.powers(z);
        let zinv = z.inv();
        let series: Complex64 = self
            .coefficients()
            .zip(&zp)
            .filter(|((n, _, _), _)| *n != 0)
            .map(|((n, a, _), p)| a * (n as f64) * p * zinv)
            .sum();
        Ok(series + self.log * 0.5 * zinv)
    }

    /// Wirtinger derivative `∂/∂z̄`.
    pub fn d_zbar(&self, z: Complex64) -> Result<Complex64> {
        self.annulus.check(z)?;
        let zb_inv = z.conj().inv();
        let wp = self.powers(zb_inv);
        let series: Complex64 = self
            .coefficients()
            .zip(&wp)
            .filter(|((n, _, _), _)| *n != 0)
            .map(|((n, _, b), p)| -b * (n as f64) * p * zb_inv)
            .sum();
        Ok(series + self.log * 0.5 * zb_inv)
    }

    /// Both Wirtinger derivatives at once.
    pub fn gradient(&self, z: Complex64) -> Result<(Complex64, Complex64)> {
        Ok((self.d_z(z)?, self.d_zbar(z)?))
    }

    /// Radial derivative `∂/∂ρ` at `z = ρe^{iθ}`.
    pub fn d_rho(&self, z: Complex64) -> Result<Complex64> {
        let (hz, hzb) = self.gradient(z)?;
        let u = z / z.norm();
        Ok(hz * u + hzb * u.conj())
    }

    /// Angular derivative `∂/∂θ` at `z = ρe^{iθ}`.
    pub fn d_theta(&self, z: Complex64) -> Result<Complex64> {
        let (hz, hzb) = self.gradient(z)?;
        Ok(Complex64::i() * (z * hz - z.conj() * hzb))
    }

    /// Decay-based estimate of the annulus on which the full (untruncated)
    /// series would converge.
    ///
    /// Only the upper half of the mode band is inspected; if it is below the
    /// noise floor the corresponding side is treated as unbounded.
    pub fn estimate_annulus(&self) -> (f64, f64) {
        let n_max = self.max_mode as i64;
        let floor = 1e-15 * self.max_abs_coeff().max(f64::MIN_POSITIVE);
        let start = n_max / 2 + 1;
        let mut outward = 0.0f64;
        let mut inward = 0.0f64;
        for n in start..=n_max {
            let pos = self.holo(n).norm().max(self.antiholo(-n).norm());
            let neg = self.holo(-n).norm().max(self.antiholo(n).norm());
            if pos > floor {
                outward = outward.max(pos.powf(1.0 / n as f64));
            }
            if neg > floor {
                inward = inward.max(neg.powf(1.0 / n as f64));
            }
        }
        let inner = RADIUS_SAFETY * inward;
        let outer = if outward > 0.0 {
            1.0 / (RADIUS_SAFETY * outward)
        } else {
            f64::INFINITY
        };
        (inner, outer)
    }
}
