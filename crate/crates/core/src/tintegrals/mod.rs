//! Logarithmic singular parts of heat-time integrals
//! `∫∫_{[ε,L]²} t₁^p t₂^q (t₁+t₂)^{-r} dt₁ dt₂`.
//!
//! The exact path is a homogeneity test plus a Beta function; the quadrature
//! fit in [`numeric`] exists to check it.

mod exact;
pub mod numeric;

pub use exact::{clear_tau, log_coefficient, log_coefficient_sum, TRationalSum, TRationalTerm};
pub use numeric::{
    numeric_singular_fit, numeric_singular_fit_with, wheel_convergence_check, FitOptions,
    FitReport, WheelReport,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum TIntegralError {
    #[error("exponents (p, q, r) = ({p}, {q}, {r}) are outside the supported family")]
    UnsupportedExponent { p: i32, q: i32, r: i32 },
    #[error("least-squares fit is ill-conditioned (condition number {condition_number:e})")]
    IllConditioned { condition_number: f64 },
    #[error("bad grid: {0}")]
    BadGrid(String),
    #[error("wheel check supports 2 to 5 vertices, got {0}")]
    WheelSize(usize),
}
