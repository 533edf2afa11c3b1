//! One-loop beta coefficient of first-order Yang-Mills theory in exact arithmetic.

pub mod cohomology;
pub mod diagrams;
pub mod gaussian;
pub mod golden;
pub mod lie;
pub mod repcheck;
pub mod scalar;
pub mod spacetime;
pub mod tintegrals;
