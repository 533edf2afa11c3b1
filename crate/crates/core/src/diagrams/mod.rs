//! One-loop counterterms of the two-leg wheel.
//!
//! Each diagram's counterterm is a sum over propagator and vertex indices of
//! a combinatorial weight times an analytic weight. The analytic weights are
//! the `log ε` coefficients of heat-time integrals; the results are quadratic
//! local functionals of the abelian fields, first in a raw basis of
//! derivative monomials and then in the basis `FF`, `FB`, `BB`.

pub mod analytic;
pub mod combinatorial;
mod functional;
mod reduce;
mod registry;

pub use functional::{Basis, LieSlot, LocalFunctional};
pub use reduce::{bb_in_m, dada_in_ff, dada_in_j, fb_in_k, j_basis_reduce, ReduceError};
pub use registry::{
    analytic_iii, build_registry, diagram_counterterm, report, Diagram, DiagramError, DiagramRegistry,
    DiagramReport, DiagramShape, Label, PropagatorKind, reduced_sum,
};
