//! Inputs shared by the benchmarks.

use maxsurf_core::{Complex64, FourierSeries};

/// `n` points on a spiral through the annulus `0.5 < |z| < 2`.
pub fn spiral_points(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|k| {
            let t = k as f64 / n as f64;
            Complex64::from_polar(0.55 + 1.3 * t, 6.0 * std::f64::consts::PI * t)
        })
        .collect()
}

/// A real trigonometric polynomial with decaying coefficients.
pub fn decaying_series(max_mode: usize) -> FourierSeries {
    let mut s = FourierSeries::zeros(max_mode);
    for n in 1..=max_mode as i64 {
        let v = Complex64::new(0.5f64.powi(n as i32), 0.25f64.powi(n as i32));
        s.set(n, v);
        s.set(-n, v.conj());
    }
    s
}
