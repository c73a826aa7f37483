//! Periodic data on circles: equispaced samples and their Fourier series.
//!
//! Samples `x_j` live at `θ_j = 2πj/M`. The series convention is
//! `x(θ) = Σ t_n e^{inθ}`, i.e. `t_n = (1/M) Σ_j x_j e^{-inθ_j}`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// Equispaced samples of a periodic complex function on `[0, 2π)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleSamples {
    values: Vec<Complex64>,
}

impl CircleSamples {
    pub fn new(values: Vec<Complex64>) -> Result<Self> {
        if !values.len().is_power_of_two() {
            return Err(Error::NotPowerOfTwo(values.len()));
        }
        Ok(Self { values })
    }

    /// Samples `f` at `m` equispaced angles.
    pub fn from_fn(m: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        Self::new((0..m).map(|j| f(angle(j, m))).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        let m = self.values.len();
        (0..m).map(move |j| angle(j, m))
    }

    pub fn max_abs_diff(&self, other: &CircleSamples) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// `2πj/m`.
pub fn angle(j: usize, m: usize) -> f64 {
    2.0 * PI * j as f64 / m as f64
}

/// Dense Fourier coefficients `t_n` for `n ∈ [-K, K]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSeries {
    max_mode: usize,
    coeffs: Vec<Complex64>,
}

impl FourierSeries {
    pub fn zeros(max_mode: usize) -> Self {
        Self {
            max_mode,
            coeffs: vec![Complex64::new(0.0, 0.0); 2 * max_mode + 1],
        }
    }

    /// Builds a series from sparse `(n, t_n)` entries; repeated modes add up.
    pub fn from_modes(modes: &[(i64, Complex64)]) -> Self {
        let max_mode = modes.iter().map(|(n, _)| n.unsigned_abs() as usize).max().unwrap_or(0);
        let mut series = Self::zeros(max_mode);
        for &(n, t) in modes {
            series.coeffs[(n + max_mode as i64) as usize] += t;
        }
        series
    }

    /// A constant function.
    pub fn constant(value: Complex64) -> Self {
        Self::from_modes(&[(0, value)])
    }

    pub fn max_mode(&self) -> usize {
        self.max_mode
    }

    pub fn coeff(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.max_mode {
            return Complex64::new(0.0, 0.0);
        }
        self.coeffs[(n + self.max_mode as i64) as usize]
    }

    pub fn set(&mut self, n: i64, value: Complex64) {
        if n.unsigned_abs() as usize > self.max_mode {
            self.grow(n.unsigned_abs() as usize);
        }
        let k = self.max_mode as i64;
        self.coeffs[(n + k) as usize] = value;
    }

    /// `(n, t_n)` pairs in increasing `n`.
    pub fn modes(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let k = self.max_mode as i64;
        self.coeffs.iter().enumerate().map(move |(i, &t)| (i as i64 - k, t))
    }

    fn grow(&mut self, max_mode: usize) {
        let mut grown = Self::zeros(max_mode);
        for (n, t) in self.modes() {
            grown.coeffs[(n + max_mode as i64) as usize] = t;
        }
        *self = grown;
    }

    /// Same coefficients stored over a band of at least `max_mode`.
    pub fn widened(&self, max_mode: usize) -> Self {
        let mut out = self.clone();
        if max_mode > self.max_mode {
            out.grow(max_mode);
        }
        out
    }

    pub fn eval(&self, theta: f64) -> Complex64 {
        self.modes()
            .map(|(n, t)| t * Complex64::from_polar(1.0, n as f64 * theta))
            .sum()
    }

    /// Term-wise `d/dθ`.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .modes()
            .map(|(n, t)| Complex64::new(0.0, n as f64) * t)
            .collect();
        Self {
            max_mode: self.max_mode,
            coeffs,
        }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            max_mode: self.max_mode,
            coeffs: self.coeffs.iter().map(|t| t * factor).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = self.max_mode.max(other.max_mode);
        let mut out = Self::zeros(k);
        for (n, t) in self.modes().chain(other.modes()) {
            out.coeffs[(n + k as i64) as usize] += t;
        }
        out
    }

    /// Largest `|t_n|` over `|n| > n_max`.
    pub fn tail_beyond(&self, n_max: usize) -> f64 {
        self.modes()
            .filter(|(n, _)| n.unsigned_abs() as usize > n_max)
            .map(|(_, t)| t.norm())
            .fold(0.0, f64::max)
    }

    /// Restriction to `[-n_max, n_max]` together with the discarded tail.
    pub fn truncated(&self, n_max: usize) -> (Self, f64) {
        let mut out = Self::zeros(n_max);
        for (n, t) in self.modes() {
            if n.unsigned_abs() as usize <= n_max {
                out.coeffs[(n + n_max as i64) as usize] = t;
            }
        }
        (out, self.tail_beyond(n_max))
    }

    /// Highest `|n|` whose coefficient exceeds `tol`; 0 for a constant.
    pub fn effective_max_mode(&self, tol: f64) -> usize {
        self.modes()
            .filter(|(_, t)| t.norm() > tol)
            .map(|(n, _)| n.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|t| t.norm()).fold(0.0, f64::max)
    }

    /// `max_n |t_{-n} - conj(t_n)|`; zero exactly when the function is real.
    pub fn reality_defect(&self) -> f64 {
        self.modes()
            .map(|(n, t)| (self.coeff(-n) - t.conj()).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|t| t.norm() == 0.0)
    }

    /// Values at `m` equispaced angles (aliasing folds modes beyond `m/2`).
    pub fn synthesize(&self, m: usize) -> Result<CircleSamples> {
        if !m.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(m));
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); m];
        for (n, t) in self.modes() {
            buf[n.rem_euclid(m as i64) as usize] += t;
        }
        FftPlanner::new().plan_fft_inverse(m).process(&mut buf);
        CircleSamples::new(buf)
    }
}

/// Fourier analysis of equispaced samples.
///
/// Returns the coefficients over `[-M/2, M/2]`; the Nyquist coefficient is
/// split evenly between `±M/2` so that synthesis at `M` points reproduces
/// the samples.
pub fn fourier_analyze(samples: &CircleSamples) -> FourierSeries {
    let m = samples.len();
    let mut buf = samples.values().to_vec();
    FftPlanner::new().plan_fft_forward(m).process(&mut buf);
    let scale = 1.0 / m as f64;
    let half = m / 2;
    let mut out = FourierSeries::zeros(half);
    for (k, x) in buf.into_iter().enumerate() {
        let t = x * scale;
        if m > 1 && k == half {
            out.set(half as i64, t * 0.5);
            out.set(-(half as i64), t * 0.5);
        } else {
            let n = if k > half { k as i64 - m as i64 } else { k as i64 };
            out.set(n, t);
        }
    }
    out
}
