//! The constant-coefficient fiber of the first-order theory on ℝ⁴: forms,
//! self-dual 2-forms, spinors, and the combinatorial parts of kernels,
//! propagators and vertices.

pub mod fiber;
pub mod forms;
pub mod gamma;
pub mod kernels;
pub mod tensor;

pub use fiber::{koszul_sign, pairing, pairing_matrix, BasisElement, Species};
pub use forms::{hodge_star, hodge_star_indices, sigma, sigma1, Form, Monomial, Star};
pub use gamma::{four_trace_closed_form, GammaAlgebra, CLIFFORD_SIGN};
pub use kernels::{heat_kernel_summands, propagator_summands, vertex_tensors, HeatKernels, Propagators, Vertex, Vertices};
pub use tensor::{CombinatorialTensor, TensorError};
