//! Combinatorial weights: propagator fibers contracted with vertex tensors
//! around the two-vertex wheel.
//!
//! Vertex `U` carries the external element `u` and vertex `W` carries `w`.
//! A propagator summand `p₀ ⊗ p₁` runs from `W` (slot 0) to `U` (slot 1), so
//! the wheel evaluates to
//!
//! ```text
//! Σ p q · U(u, q₁, p₁) · W(w, p₀, q₀)
//! ```
//!
//! with a sign `-1` when the loop is made of ghosts or spinors.

use num_traits::Zero;

use crate::scalar::{Gq, Q};
use crate::spacetime::kernels::{elementary_aa, propagator_a_dual_c, propagator_ab, propagator_psi};
use crate::spacetime::{vertex_tensors, BasisElement, CombinatorialTensor, GammaAlgebra, Species, TensorError};

use BasisElement::*;

/// One end of the wheel: a vertex tensor and the external element on it.
#[derive(Debug, Clone, Copy)]
pub struct End<'a> {
    pub vertex: &'a CombinatorialTensor,
    pub external: BasisElement,
}

pub fn wheel_contraction(
    u: End<'_>,
    w: End<'_>,
    p: &CombinatorialTensor,
    q: &CombinatorialTensor,
) -> Result<Gq, TensorError> {
    let mut total = Gq::zero();
    for (pk, pv) in p.entries() {
        for (qk, qv) in q.entries() {
            let at_u = u.vertex.evaluate(&[u.external, qk[1], pk[1]])?;
            if at_u.is_zero() {
                continue;
            }
            let at_w = w.vertex.evaluate(&[w.external, pk[0], qk[0]])?;
            let mut term = pv * qv * at_u * at_w;
            if pk[0].is_odd_field() || pk[1].is_odd_field() {
                term = -term;
            }
            total += term;
        }
    }
    Ok(total)
}

fn starting_in(t: CombinatorialTensor, s: Species) -> CombinatorialTensor {
    t.filter(|k| k[0].species() == s)
}

fn real(v: Gq) -> Q {
    assert!(v.im.is_zero(), "combinatorial weights are real");
    v.re
}

/// Vertex tensors and gamma matrices shared by all weights.
pub struct CombinatorialData {
    vertices: crate::spacetime::Vertices,
    gamma: GammaAlgebra,
}

impl Default for CombinatorialData {
    fn default() -> Self {
        Self::new()
    }
}

impl CombinatorialData {
    pub fn new() -> Self {
        Self { vertices: vertex_tensors(), gamma: GammaAlgebra::new() }
    }

    fn aab(&self, external: BasisElement) -> End<'_> {
        End { vertex: &self.vertices.aab.tensor, external }
    }

    /// Diagram I, external `dx^a` and `dx^b`, propagators `P_AB^i` (A end at
    /// `W`) and `P_AB^j` (B end at `W`).
    pub fn weight_i(&self, a: usize, b: usize, i: usize, j: usize) -> Result<Q, TensorError> {
        let p = starting_in(propagator_ab(i), Species::A);
        let q = starting_in(propagator_ab(j), Species::B);
        wheel_contraction(self.aab(OneForm(a)), self.aab(OneForm(b)), &p, &q).map(real)
    }

    /// Diagram II: the ghost loop through two `A A^∨ c` vertices.
    pub fn weight_ii(&self, a: usize, b: usize, i: usize, j: usize) -> Result<Q, TensorError> {
        let v = &self.vertices.aa_dual_c.tensor;
        let p = starting_in(propagator_a_dual_c(i), Species::Ghost);
        let q = starting_in(propagator_a_dual_c(j), Species::ADual);
        let u = End { vertex: v, external: OneForm(a) };
        let w = End { vertex: v, external: OneForm(b) };
        wheel_contraction(u, w, &p, &q).map(real)
    }

    /// Diagram III, external `dx^a` at `W` and `σ^{1b}` at `U`, with the
    /// elementary `dx^k ⊗ dy^j` of `P_AA` and `P_AB^i` (B end at `W`).
    pub fn weight_iii(&self, a: usize, b: usize, i: usize, j: usize, k: usize) -> Result<Q, TensorError> {
        let p = elementary_aa(k, j);
        let q = starting_in(propagator_ab(i), Species::B);
        wheel_contraction(self.aab(SelfDual(b)), self.aab(OneForm(a)), &p, &q).map(real)
    }

    /// Diagram IV, external `σ^{1a}` at `U` and `σ^{1b}` at `W`, with the
    /// elementary kernels `dx^n ⊗ dy^j` and `dx^i ⊗ dy^m`.
    pub fn weight_iv(&self, a: usize, b: usize, i: usize, j: usize, m: usize, n: usize) -> Result<Q, TensorError> {
        let p = elementary_aa(n, j);
        let q = elementary_aa(i, m);
        wheel_contraction(self.aab(SelfDual(a)), self.aab(SelfDual(b)), &p, &q).map(real)
    }

    /// Diagram V: the spinor loop through two `A ψ' ψ` vertices.
    pub fn weight_v(&self, a: usize, b: usize, i: usize, j: usize) -> Result<Q, TensorError> {
        let v = &self.vertices.a_psi_psi.tensor;
        let p = starting_in(propagator_psi(&self.gamma, i), Species::Psi);
        let q = starting_in(propagator_psi(&self.gamma, j), Species::PsiDual);
        let u = End { vertex: v, external: OneForm(a) };
        let w = End { vertex: v, external: OneForm(b) };
        wheel_contraction(u, w, &p, &q).map(real)
    }
}

/// The one-vertex wheel: a propagator closing on a single vertex,
/// `Σ p · V(v, p₀, p₁)`.
pub fn tadpole_contraction(v: End<'_>, p: &CombinatorialTensor) -> Result<Gq, TensorError> {
    let mut total = Gq::zero();
    for (pk, pv) in p.entries() {
        total += pv * v.vertex.evaluate(&[v.external, pk[0], pk[1]])?;
    }
    Ok(total)
}
