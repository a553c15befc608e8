//! Gauss-Legendre quadrature on finite intervals, plus composite panels for
//! oscillatory integrands.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Nodes and positive weights on an interval; Σ weights = interval length.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub interval: (f64, f64),
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_and_deriv(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p0 = 1.0f64;
    let mut p1 = x;
    for kk in 2..=n {
        let kf = kk as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
fn legendre_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0f64; n];
    let mut w = vec![0.0f64; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-like initial guess
        let mut xi = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p1, dp) = legendre_and_deriv(n, xi);
            let dx = p1 / dp;
            xi -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        if n % 2 == 1 && i == m - 1 {
            xi = 0.0;
        }
        // refresh the derivative at the converged node before weighting
        let (_, dp) = legendre_and_deriv(n, xi);
        x[i] = -xi.abs(); // enforce exact symmetry
        x[n - 1 - i] = xi.abs();
        let wi = 2.0 / ((1.0 - xi * xi) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Gauss-Legendre rule of order `n` on `interval`; exact for polynomials of
/// degree <= 2n - 1.
pub fn gauss_legendre(n: usize, interval: (f64, f64)) -> Result<QuadratureRule> {
    let (lo, hi) = interval;
    if n < 1 {
        return Err(Error::Domain("quadrature order must be >= 1".into()));
    }
    if !(lo < hi) {
        return Err(Error::Domain(format!("invalid interval ({lo}, {hi})")));
    }
    let (x, w) = legendre_nodes(n);
    let c = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let nodes: Vec<f64> = x.iter().map(|&t| c + half * t).collect();
    let weights: Vec<f64> = w.iter().map(|&t| half * t).collect();
    Ok(QuadratureRule {
        nodes,
        weights,
        interval,
    })
}

/// Composite rule: `panels` equal panels of an order-`n` Gauss rule each.
/// Intended for integrands whose phase grows over the interval.
pub fn gauss_legendre_composite(
    n: usize,
    panels: usize,
    interval: (f64, f64),
) -> Result<QuadratureRule> {
    let (lo, hi) = interval;
    if panels < 1 {
        return Err(Error::Domain("panel count must be >= 1".into()));
    }
    if !(lo < hi) {
        return Err(Error::Domain(format!("invalid interval ({lo}, {hi})")));
    }
    let width = (hi - lo) / panels as f64;
    let mut nodes = Vec::with_capacity(n * panels);
    let mut weights = Vec::with_capacity(n * panels);
    for p in 0..panels {
        let a = lo + p as f64 * width;
        let rule = gauss_legendre(n, (a, a + width))?;
        nodes.extend(rule.nodes);
        weights.extend(rule.weights);
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        interval,
    })
}

impl QuadratureRule {
    /// Weighted sum over the nodes in fixed (ascending-node) order, so
    /// results are bit-reproducible regardless of caller parallelism.
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(0.0, |acc, (&x, &w)| acc + w * f(x))
    }

    pub fn integrate_complex<F: FnMut(f64) -> Complex64>(&self, mut f: F) -> Complex64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(Complex64::new(0.0, 0.0), |acc, (&x, &w)| acc + w * f(x))
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}
