use super::MultiIndex;
use crate::scalar::{to_f64, Q};

const NODES: usize = 4000;

/// Trapezoid rule for `∫ x^a e^{-τx²/4} dx`. The integrand is analytic and
/// decays like a Gaussian, so the rule converges geometrically.
fn one_dim(a: u32, tau: f64) -> f64 {
    let half_width = (4.0 * 90.0 / tau).sqrt();
    let h = half_width / NODES as f64;
    let mut sum = 0.0;
    for k in -(NODES as i64)..=NODES as i64 {
        let x = k as f64 * h;
        let w = if k.unsigned_abs() as usize == NODES { 0.5 } else { 1.0 };
        sum += w * x.powi(a as i32) * (-tau * x * x / 4.0).exp();
    }
    sum * h
}

/// `∫_{ℝ⁴} z^α e^{-τ|z|²/4} d⁴z` by product quadrature, `(4π)²` included.
pub fn moment_oracle(alpha: &MultiIndex, tau: &Q) -> f64 {
    let t = to_f64(tau);
    alpha.iter().map(|&a| one_dim(a, t)).product()
}
