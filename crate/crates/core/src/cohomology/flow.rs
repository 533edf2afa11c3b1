use std::f64::consts::PI;

use super::CohomologyError;
use crate::scalar::{to_f64, Q};

/// `g(λ)` at length scale `λ` relative to the reference scale, where
/// `g(1) = g0`. Shrinking `λ` raises the energy, so
/// `dg/d log λ = -b' g³` with `b' = b/16π²`, solved by
/// `g² = g0² / (1 + 2 b' g0² log λ)`.
pub fn running_coupling(b: &Q, g0: f64, lambda: f64) -> Result<f64, CohomologyError> {
    if !(g0 > 0.0 && g0.is_finite()) {
        return Err(CohomologyError::Domain(format!("g0 must be positive, got {g0}")));
    }
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(CohomologyError::Domain(format!("lambda must be positive, got {lambda}")));
    }
    let bp = to_f64(b) / (16.0 * PI * PI);
    let denom = 1.0 + 2.0 * bp * g0 * g0 * lambda.ln();
    if denom <= 0.0 {
        let lambda_crit = (-1.0 / (2.0 * bp * g0 * g0)).exp();
        return Err(CohomologyError::Pole { lambda, lambda_crit });
    }
    Ok(g0 / denom.sqrt())
}
