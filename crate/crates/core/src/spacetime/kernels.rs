//! Combinatorial factors of heat kernels, propagators and vertices.
//!
//! Two-slot tensors put the `x` end in slot 0 and the `y` end in slot 1.

use num_traits::Zero;

use super::fiber::{expand_form, BasisElement, Species};
use super::forms::{sigma, sigma1, Form};
use super::gamma::GammaAlgebra;
use super::tensor::CombinatorialTensor;
use crate::scalar::{q, qi, Q};

use BasisElement::*;

#[derive(Debug, Clone, PartialEq)]
pub struct HeatKernels {
    pub aa_dual: CombinatorialTensor,
    pub bb_dual: CombinatorialTensor,
    pub cc_dual: CombinatorialTensor,
}

pub fn heat_kernel_summands() -> HeatKernels {
    let mut aa = CombinatorialTensor::new(2);
    for j in 1..=4 {
        aa.add_real(vec![OneForm(j), ThreeForm(j)], qi(1)).expect("degree 1");
        aa.add_real(vec![ThreeForm(j), OneForm(j)], qi(1)).expect("degree 1");
    }
    let mut bb = CombinatorialTensor::new(2);
    for j in 2..=4 {
        bb.add_real(vec![SelfDual(j), SelfDualShift(j)], q(-1, 2)).expect("degree 1");
        bb.add_real(vec![SelfDualShift(j), SelfDual(j)], q(-1, 2)).expect("degree 1");
    }
    let mut cc = CombinatorialTensor::new(2);
    cc.add_real(vec![GhostDual, Ghost], qi(-1)).expect("degree 1");
    cc.add_real(vec![Ghost, GhostDual], qi(-1)).expect("degree 1");
    HeatKernels { aa_dual: aa, bb_dual: bb, cc_dual: cc }
}

fn push_product(t: &mut CombinatorialTensor, x: &[(BasisElement, Q)], y: &[(BasisElement, Q)], scale: &Q) {
    for (ex, cx) in x {
        for (ey, cy) in y {
            t.add_real(vec![*ex, *ey], cx.clone() * cy.clone() * scale.clone())
                .expect("propagator summands are homogeneous");
        }
    }
}

fn expand(f: &Form, s: Species) -> Vec<(BasisElement, Q)> {
    expand_form(f, s).unwrap_or_else(|| panic!("{f} does not lie in the {s:?} span"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Propagators {
    /// `P_AB^i`, indexed by `i - 1`.
    pub ab: Vec<CombinatorialTensor>,
    /// `P_{A∨c}^i`.
    pub a_dual_c: Vec<CombinatorialTensor>,
    /// `P_AA^{ij}` at `[i - 1][j - 1]`.
    pub aa: Vec<Vec<CombinatorialTensor>>,
    pub b_dual_c: CombinatorialTensor,
    /// `P_ψ^i`.
    pub psi: Vec<CombinatorialTensor>,
}

/// `P_AB^i = σ^{ij}_x ⊗ dy^j + ∗(dx^i σ^{1j})_x ⊗ σ^{1j}_y`.
pub fn propagator_ab(i: usize) -> CombinatorialTensor {
    let mut t = CombinatorialTensor::new(2);
    let one = qi(1);
    for j in 1..=4 {
        push_product(&mut t, &expand(&sigma(i, j), Species::B), &[(OneForm(j), qi(1))], &one);
    }
    for j in 2..=4 {
        let x = Form::dx(i).wedge(&sigma1(j)).star();
        push_product(&mut t, &expand(&x, Species::A), &[(SelfDual(j), qi(1))], &one);
    }
    t
}

/// `P_{A∨c}^i = 1 ⊗ ∗dy^i + ∗dx^i ⊗ 1`.
pub fn propagator_a_dual_c(i: usize) -> CombinatorialTensor {
    let mut t = CombinatorialTensor::new(2);
    t.add_real(vec![Ghost, ThreeForm(i)], qi(1)).expect("degree 0");
    t.add_real(vec![ThreeForm(i), Ghost], qi(1)).expect("degree 0");
    t
}

/// `P_AA^{ij} = 4(δ^{ij} dx^l - δ^{il} dx^j) ⊗ dy^l`.
pub fn propagator_aa(i: usize, j: usize) -> CombinatorialTensor {
    let mut t = CombinatorialTensor::new(2);
    for l in 1..=4 {
        let mut x = Form::zero();
        if i == j {
            x = x.plus(&Form::dx(l));
        }
        if i == l {
            x = x.minus(&Form::dx(j));
        }
        push_product(&mut t, &expand(&x, Species::A), &[(OneForm(l), qi(1))], &qi(4));
    }
    t
}

/// The elementary kernel `dx^k ⊗ dy^j`; `P_AA` is a combination of these
/// with the index structure moved into the analytic factor.
pub fn elementary_aa(k: usize, j: usize) -> CombinatorialTensor {
    let mut t = CombinatorialTensor::new(2);
    t.add_real(vec![OneForm(k), OneForm(j)], qi(1)).expect("degree 0");
    t
}

/// `P_ψ^i = (Γ^i ψ^j) ⊗ ψ'^j + ψ'^j ⊗ (Γ^i ψ^j)`.
pub fn propagator_psi(gamma: &GammaAlgebra, i: usize) -> CombinatorialTensor {
    let g = gamma.gamma(i);
    let mut t = CombinatorialTensor::new(2);
    for j in 1..=4 {
        for k in 1..=4 {
            let c = g[k - 1][j - 1].clone();
            t.add(vec![Spinor(k), SpinorShift(j)], c.clone()).expect("degree 1");
            t.add(vec![SpinorShift(j), Spinor(k)], c).expect("degree 1");
        }
    }
    t
}

pub fn propagator_summands() -> Propagators {
    let gamma = GammaAlgebra::new();
    Propagators {
        ab: (1..=4).map(propagator_ab).collect(),
        a_dual_c: (1..=4).map(propagator_a_dual_c).collect(),
        aa: (1..=4).map(|i| (1..=4).map(|j| propagator_aa(i, j)).collect()).collect(),
        b_dual_c: CombinatorialTensor::new(2),
        psi: (1..=4).map(|i| propagator_psi(&gamma, i)).collect(),
    }
}

/// A cubic vertex: its combinatorial tensor and the power of `g` it carries.
#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    pub tensor: CombinatorialTensor,
    pub coupling_power: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Vertices {
    pub aab: Vertex,
    pub aa_dual_c: Vertex,
    pub a_psi_psi: Vertex,
}

/// `AAB(u, v, w) = top(u ∧ v ∧ w)` in every slot order. It is odd under
/// exchange of the two `A` slots; the antisymmetric structure constants that
/// multiply it restore the Koszul symmetry of the full vertex.
fn aab() -> CombinatorialTensor {
    let mut t = CombinatorialTensor::new(3);
    let a_elems: Vec<BasisElement> = (1..=4).map(OneForm).collect();
    let b_elems: Vec<BasisElement> = (2..=4).map(SelfDual).collect();
    for &u in &a_elems {
        for &v in &a_elems {
            for &w in &b_elems {
                for key in [[u, v, w], [u, w, v], [w, u, v]] {
                    let forms: Vec<Form> = key.iter().map(|e| e.form().expect("bosonic")).collect();
                    let val = Form::wedge_all(&forms.iter().collect::<Vec<_>>()).top();
                    t.add_real(key.to_vec(), val).expect("degree 0");
                }
            }
        }
    }
    t
}

/// `⟨dx^a, ∗dx^b, 1⟩ = δ^{ab}`, extended to all slot orders by Koszul signs.
fn aa_dual_c() -> CombinatorialTensor {
    let mut t = CombinatorialTensor::new(3);
    for a in 1..=4 {
        t.add_real(vec![OneForm(a), ThreeForm(a), Ghost], qi(1)).expect("degree 0");
    }
    t.graded_orbits()
}

/// `⟨dx^a, ψ'^k, ψ^l⟩ = Γ^a_{kl}`, extended by Koszul signs.
fn a_psi_psi(gamma: &GammaAlgebra) -> CombinatorialTensor {
    let mut t = CombinatorialTensor::new(3);
    for a in 1..=4 {
        let g = gamma.gamma(a);
        for k in 1..=4 {
            for l in 1..=4 {
                let c = g[k - 1][l - 1].clone();
                if !c.is_zero() {
                    t.add(vec![OneForm(a), SpinorShift(k), Spinor(l)], c).expect("degree 1");
                }
            }
        }
    }
    t.graded_orbits()
}

/// The three cubic vertices, each carrying one power of the coupling.
pub fn vertex_tensors() -> Vertices {
    let gamma = GammaAlgebra::new();
    let v = |tensor| Vertex { tensor, coupling_power: 1 };
    Vertices { aab: v(aab()), aa_dual_c: v(aa_dual_c()), a_psi_psi: v(a_psi_psi(&gamma)) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gi, gr, Gq};
    use crate::spacetime::fiber::pairing;

    #[test]
    fn heat_kernel_entries() {
        let k = heat_kernel_summands();
        assert_eq!(k.aa_dual.get(&[OneForm(1), ThreeForm(1)]), gr(qi(1)));
        assert_eq!(k.aa_dual.get(&[OneForm(1), ThreeForm(2)]), gr(qi(0)));
        assert_eq!(k.bb_dual.get(&[SelfDual(2), SelfDualShift(2)]), gr(q(-1, 2)));
    }

    /// Contracting a kernel's second slot with the pairing gives a signed
    /// identity on its sector.
    #[test]
    fn kernels_invert_the_pairing() {
        let k = heat_kernel_summands();
        for kernel in [&k.aa_dual, &k.bb_dual, &k.cc_dual] {
            let sector: Vec<BasisElement> = kernel.entries().map(|(key, _)| key[0]).collect();
            for &w in &sector {
                for &u in &sector {
                    let v = kernel
                        .entries()
                        .filter(|(key, _)| key[0] == u)
                        .fold(Gq::zero(), |acc, (key, c)| acc + c.clone() * gr(pairing(key[1], w)));
                    if u == w {
                        assert!(v == gr(qi(1)) || v == gr(qi(-1)), "{u} {w}: {v}");
                    } else {
                        assert_eq!(v, Gq::zero());
                    }
                }
            }
        }
    }

    #[test]
    fn propagator_entries() {
        let p = propagator_summands();
        let p11 = &p.aa[0][0];
        assert_eq!(p11.get(&[OneForm(1), OneForm(1)]), gr(qi(0)));
        for l in 2..=4 {
            assert_eq!(p11.get(&[OneForm(l), OneForm(l)]), gr(qi(4)));
        }
        assert!(p.b_dual_c.is_zero());
        let gamma = GammaAlgebra::new();
        assert_eq!(p.psi[0].get(&[Spinor(1), SpinorShift(4)]), gamma.gamma(1)[0][3]);
        assert_eq!(p.psi[0].get(&[SpinorShift(4), Spinor(1)]), -gi());
        // σ^{12} ⊗ dy^2 is the only summand of P_AB^1 landing on (B, dy^2).
        assert_eq!(p.ab[0].get(&[SelfDual(2), OneForm(2)]), gr(qi(1)));
    }

    #[test]
    fn vertex_values() {
        let v = vertex_tensors();
        assert_eq!(v.aab.tensor.get(&[OneForm(1), OneForm(2), SelfDual(2)]), gr(qi(1)));
        assert_eq!(v.aab.tensor.get(&[OneForm(1), OneForm(1), SelfDual(2)]), gr(qi(0)));
        for (key, val) in v.aab.tensor.entries() {
            if key[0].species() == key[1].species() {
                assert_eq!(v.aab.tensor.get(&[key[1], key[0], key[2]]), -val.clone());
            }
        }
        assert_eq!(v.a_psi_psi.tensor.koszul_swap(1), v.a_psi_psi.tensor);
        assert_eq!(v.aa_dual_c.tensor.koszul_swap(1), v.aa_dual_c.tensor);
        assert!(v.aab.tensor.evaluate(&[OneForm(1), OneForm(2), SelfDualShift(2)]).is_err());
    }
}
