//! Moments of polynomial weights against the isotropic Gaussian
//! `exp(-τ|z|²/4)` on ℝ⁴.
//!
//! With `(4π)²` factored out,
//!
//! ```text
//! ∫ z^α φ(z) e^{-τ|z|²/4} d⁴z = (4π)² τ^{-2} (e^{τ^{-1} Δ} (z^α φ))(0)
//! ```
//!
//! and the right side is expanded into [`WickTerm`]s, each a derivative of
//! the test function at the origin.

mod quadrature;
mod wick;

pub use quadrature::moment_oracle;
pub use wick::{wick_expand, wick_moment, GaussianIntegrand, WickTerm, DEFAULT_MAX_ORDER};

/// Exponents of `z¹..z⁴`, or orders of `∂/∂z¹..∂/∂z⁴`.
pub type MultiIndex = [u32; 4];

pub fn degree(alpha: &MultiIndex) -> u32 {
    alpha.iter().sum()
}

pub fn unit(i: usize) -> MultiIndex {
    let mut m = [0; 4];
    m[i] += 1;
    m
}

pub fn add(a: &MultiIndex, b: &MultiIndex) -> MultiIndex {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}
