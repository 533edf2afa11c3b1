//! Semisimple Lie algebra data, matter representations, and the two Lie
//! factors `C(𝔤)` and `C(V)` that multiply the abelian diagram weights.
//!
//! In-memory indices are 0-based. Data files and validation reports use
//! 1-based indices.

mod builtin;
mod factors;
mod io;
mod validate;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::scalar::{inverse, mat_mul, real_mat, transpose, zeros, Gq, Mat, Q};

pub use builtin::{adjoint, su, SpecialUnitary, BUILTIN_REPS};
pub use factors::{
    adjoint_tensor, casimir_adjoint, casimir_per_factor, lie_factor_matter, matter_per_factor,
    matter_tensor, simple_factors, FactorValue, LieError, CASIMIR_KAPPA_EXPONENT,
};
pub use io::{
    algebra_to_toml, parse_algebra, parse_representation, representation_to_toml, FormatError,
};
pub use validate::{
    validate_algebra, validate_representation, StructuralError, ValidationReport, Violation,
};

/// Sparse `f^{ab}_c` keyed by `(a, b, c)`.
pub type StructureConstants = BTreeMap<(usize, usize, usize), Q>;
/// Sparse `α^{ai}_j` keyed by `(a, i, j)`: entry `(i, j)` of the matrix of `e_a`.
pub type ActionTensor = BTreeMap<(usize, usize, usize), Gq>;

#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebraData {
    pub name: String,
    pub dim: usize,
    pub f: StructureConstants,
    /// `κ^{ab}`.
    pub kappa: Mat<Q>,
    /// `κ_{ab}`, absent when `κ` is singular.
    pub kappa_inv: Option<Mat<Q>>,
}

impl LieAlgebraData {
    /// Drops zero structure constants and computes `κ_{ab}`.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        f: StructureConstants,
        kappa: Mat<Q>,
    ) -> Result<Self, StructuralError> {
        let f = f.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let kappa_inv = inverse(&kappa);
        let data = Self { name: name.into(), dim, f, kappa, kappa_inv };
        validate::check_algebra_shape(&data)?;
        Ok(data)
    }

    /// Block-diagonal sum; the basis of `other` follows that of `self`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut f = self.f.clone();
        f.extend(other.f.iter().map(|(&(a, b, c), v)| ((a + n, b + n, c + n), v.clone())));
        let kappa = block_diag(&self.kappa, &other.kappa);
        let kappa_inv = inverse(&kappa);
        Self { name: format!("{} + {}", self.name, other.name), dim: n + other.dim, f, kappa, kappa_inv }
    }

    pub fn structure_constant(&self, a: usize, b: usize, c: usize) -> Q {
        self.f.get(&(a, b, c)).cloned().unwrap_or_else(Q::zero)
    }

    /// The same brackets with `κ` replaced by `s κ`.
    pub fn with_scaled_kappa(&self, s: &Q) -> Self {
        let kappa: Mat<Q> = self.kappa.iter().map(|r| r.iter().map(|x| x * s).collect()).collect();
        let kappa_inv = inverse(&kappa);
        Self { kappa, kappa_inv, ..self.clone() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RepresentationData {
    pub name: String,
    pub dim_v: usize,
    pub alpha: ActionTensor,
    /// `μ^{ij}`.
    pub mu: Mat<Gq>,
    /// `μ_{ij}`, absent when `μ` is singular.
    pub mu_inv: Option<Mat<Gq>>,
}

impl RepresentationData {
    pub fn new(
        name: impl Into<String>,
        dim_v: usize,
        alpha: ActionTensor,
        mu: Mat<Gq>,
    ) -> Result<Self, StructuralError> {
        let alpha = alpha.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let mu_inv = if dim_v == 0 { Some(Vec::new()) } else { inverse(&mu) };
        let data = Self { name: name.into(), dim_v, alpha, mu, mu_inv };
        validate::check_representation_shape(&data)?;
        Ok(data)
    }

    /// Builds the sparse action tensor from one dense matrix per generator.
    pub fn from_matrices(
        name: impl Into<String>,
        matrices: &[Mat<Gq>],
        mu: Mat<Gq>,
    ) -> Result<Self, StructuralError> {
        let dim_v = mu.len();
        let mut alpha = ActionTensor::new();
        for (a, m) in matrices.iter().enumerate() {
            if m.len() != dim_v || m.iter().any(|r| r.len() != dim_v) {
                return Err(StructuralError::Dimension { what: "action matrix", expected: dim_v, got: m.len() });
            }
            for (i, row) in m.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        alpha.insert((a, i, j), x.clone());
                    }
                }
            }
        }
        Self::new(name, dim_v, alpha, mu)
    }

    /// The representation with `dim V = 0`.
    pub fn zero() -> Self {
        Self { name: "0".into(), dim_v: 0, alpha: ActionTensor::new(), mu: Vec::new(), mu_inv: Some(Vec::new()) }
    }

    /// Dense matrix of generator `a`.
    pub fn action_matrix(&self, a: usize) -> Mat<Gq> {
        let mut m: Mat<Gq> = zeros(self.dim_v, self.dim_v);
        for (&(_, i, j), v) in self.alpha.range((a, 0, 0)..(a + 1, 0, 0)) {
            m[i][j] = v.clone();
        }
        m
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim_v;
        let mut alpha = self.alpha.clone();
        alpha.extend(other.alpha.iter().map(|(&(a, i, j), v)| ((a, i + n, j + n), v.clone())));
        let mu = block_diag(&self.mu, &other.mu);
        let mu_inv = match (&self.mu_inv, &other.mu_inv) {
            (Some(x), Some(y)) => Some(block_diag(x, y)),
            _ => None,
        };
        let name = match (self.dim_v, other.dim_v) {
            (0, _) => other.name.clone(),
            (_, 0) => self.name.clone(),
            _ => format!("{} + {}", self.name, other.name),
        };
        Self { name, dim_v: n + other.dim_v, alpha, mu, mu_inv }
    }

    /// `n` copies in direct sum.
    pub fn repeated(&self, n: usize) -> Self {
        let mut out = Self::zero();
        for _ in 0..n {
            out = out.direct_sum(self);
        }
        if n > 1 {
            out.name = format!("{}^{n}", self.name);
        }
        out
    }

    /// The same representation in coordinates `v' = P v`: `α' = P α P⁻¹`,
    /// `μ' = P⁻ᵀ μ P⁻¹`. `None` if `P` is singular.
    pub fn change_basis(&self, p: &Mat<Gq>) -> Option<Self> {
        let p_inv = inverse(p)?;
        let matrices: Vec<Mat<Gq>> = (0..self.generator_count())
            .map(|a| mat_mul(&mat_mul(p, &self.action_matrix(a)), &p_inv))
            .collect();
        let mu = mat_mul(&mat_mul(&transpose(&p_inv), &self.mu), &p_inv);
        Self::from_matrices(self.name.clone(), &matrices, mu).ok()
    }

    /// Change of basis by a real matrix.
    pub fn change_basis_real(&self, p: &Mat<Q>) -> Option<Self> {
        self.change_basis(&real_mat(p))
    }

    /// One more than the largest generator index with a nonzero matrix.
    pub fn generator_count(&self) -> usize {
        self.alpha.keys().map(|&(a, _, _)| a + 1).max().unwrap_or(0)
    }
}

fn block_diag<T: crate::scalar::Field>(x: &Mat<T>, y: &Mat<T>) -> Mat<T> {
    let (n, m) = (x.len(), y.len());
    let mut out = zeros(n + m, n + m);
    for i in 0..n {
        out[i][..n].clone_from_slice(&x[i]);
    }
    for i in 0..m {
        out[n + i][n..].clone_from_slice(&y[i]);
    }
    out
}
