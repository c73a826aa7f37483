//! Adaptive Gauss–Legendre quadrature with in-order evaluation.
//!
//! Nodes are always visited from left to right, and a caller-supplied state
//! is threaded through the evaluations. This lets integrands carry a
//! continuously tracked branch (e.g. of a square root) along the path.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Gauss–Legendre rule on `[-1, 1]` with ascending nodes.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let n = order as f64;
        for i in 0..order.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre(order, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(order, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[derive(Debug, Clone, Copy)]
pub struct AdaptiveOptions {
    /// Accept a panel when halving changes its estimate by less than this.
    pub tolerance: f64,
    pub max_depth: usize,
}

impl Default for AdaptiveOptions {
    fn default() -> Self {
        Self {
            tolerance: 1e-12,
            max_depth: 40,
        }
    }
}

/// Integrand step: `Ok(None)` asks for a finer subdivision (the tracked state
/// could not be continued reliably over the gap from the previous node).
pub type Step<S> = Result<Option<(Complex64, S)>>;

struct Panel<S> {
    value: Complex64,
    end: S,
}

/// Adaptive integral of `f` over `[a, b]`, threading `state` left to right.
///
/// Returns the integral and the state continued to `b`.
pub fn integrate_tracked<S, F>(
    rule: &GaussLegendre,
    mut f: F,
    a: f64,
    b: f64,
    state: S,
    options: AdaptiveOptions,
) -> Result<(Complex64, S)>
where
    S: Clone,
    F: FnMut(f64, &S) -> Step<S>,
{
    let whole = panel(rule, &mut f, a, b, &state)?;
    let out = refine(rule, &mut f, a, b, state, whole, 0, options)?;
    Ok((out.value, out.end))
}

fn panel<S, F>(rule: &GaussLegendre, f: &mut F, a: f64, b: f64, start: &S) -> Result<Option<Panel<S>>>
where
    S: Clone,
    F: FnMut(f64, &S) -> Step<S>,
{
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut state = start.clone();
    let mut sum = Complex64::new(0.0, 0.0);
    for (x, w) in rule.nodes().iter().zip(rule.weights()) {
        match f(mid + half * x, &state)? {
            Some((v, s)) => {
                sum += v * *w;
                state = s;
            }
            None => return Ok(None),
        }
    }
    match f(b, &state)? {
        Some((_, s)) => Ok(Some(Panel {
            value: sum * half,
            end: s,
        })),
        None => Ok(None),
    }
}

#[allow(clippy::too_many_arguments)]
fn refine<S, F>(
    rule: &GaussLegendre,
    f: &mut F,
    a: f64,
    b: f64,
    state: S,
    whole: Option<Panel<S>>,
    depth: usize,
    options: AdaptiveOptions,
) -> Result<Panel<S>>
where
    S: Clone,
    F: FnMut(f64, &S) -> Step<S>,
{
    let m = 0.5 * (a + b);
    let left = panel(rule, f, a, m, &state)?;
    let right = match &left {
        Some(l) => panel(rule, f, m, b, &l.end)?,
        None => None,
    };
    if let (Some(w), Some(l), Some(r)) = (&whole, &left, &right) {
        let sum = l.value + r.value;
        if (sum - w.value).norm() <= options.tolerance {
            return Ok(Panel {
                value: sum,
                end: r.end.clone(),
            });
        }
    }
    if depth >= options.max_depth {
        return match (left, right) {
            (Some(l), Some(r)) => Ok(Panel {
                value: l.value + r.value,
                end: r.end,
            }),
            _ => Err(Error::Quadrature { a, b }),
        };
    }
    let l = refine(rule, f, a, m, state, left, depth + 1, options)?;
    let right_whole = panel(rule, f, m, b, &l.end)?;
    let r = refine(rule, f, m, b, l.end, right_whole, depth + 1, options)?;
    Ok(Panel {
        value: l.value + r.value,
        end: r.end,
    })
}
