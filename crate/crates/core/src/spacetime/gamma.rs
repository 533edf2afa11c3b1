use num_traits::{One, Zero};

use crate::scalar::{gi, gr, identity, mat_add, mat_mul, mat_scale, qi, trace, zeros, Gq, Mat};

/// Euclidean Dirac matrices in a chiral basis,
///
/// ```text
/// Γᵏ = [[0, -iσ_k], [iσ_k, 0]]  (k = 1, 2, 3),   Γ⁴ = [[0, 1], [1, 0]],
/// ```
///
/// with `ΓⁱΓʲ + ΓʲΓⁱ = 2 s δ^{ij}` and `s = +1`. No real 4×4 representation
/// of this Clifford algebra exists, so entries are Gaussian rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaAlgebra {
    gammas: [Mat<Gq>; 4],
}

/// Sign `s` in the Clifford relation.
pub const CLIFFORD_SIGN: i64 = 1;

fn pauli(k: usize) -> Mat<Gq> {
    let (z, o, i) = (Gq::zero(), Gq::one(), gi());
    match k {
        1 => vec![vec![z.clone(), o.clone()], vec![o, z]],
        2 => vec![vec![z.clone(), -i.clone()], vec![i, z]],
        3 => vec![vec![o.clone(), z.clone()], vec![z, -o]],
        _ => unreachable!(),
    }
}

fn blocks(upper_right: &Mat<Gq>, lower_left: &Mat<Gq>) -> Mat<Gq> {
    let mut m = zeros(4, 4);
    for r in 0..2 {
        for c in 0..2 {
            m[r][c + 2] = upper_right[r][c].clone();
            m[r + 2][c] = lower_left[r][c].clone();
        }
    }
    m
}

impl GammaAlgebra {
    pub fn new() -> Self {
        let g = |k: usize| {
            let s = pauli(k);
            blocks(&mat_scale(&s, &-gi()), &mat_scale(&s, &gi()))
        };
        let one = identity(2);
        Self { gammas: [g(1), g(2), g(3), blocks(&one, &one)] }
    }

    /// `Γⁱ`, `i ∈ 1..=4`.
    pub fn gamma(&self, i: usize) -> &Mat<Gq> {
        &self.gammas[i - 1]
    }

    pub fn anticommutator(&self, i: usize, j: usize) -> Mat<Gq> {
        let (a, b) = (self.gamma(i), self.gamma(j));
        mat_add(&mat_mul(a, b), &mat_mul(b, a))
    }

    /// Trace of `Γ^{i₁}⋯Γ^{i_n}`.
    pub fn trace_product(&self, indices: &[usize]) -> Gq {
        let prod = indices
            .iter()
            .fold(identity(4), |acc: Mat<Gq>, &i| mat_mul(&acc, self.gamma(i)));
        trace(&prod)
    }
}

impl Default for GammaAlgebra {
    fn default() -> Self {
        Self::new()
    }
}

/// `4(δ^{ia}δ^{jb} - δ^{ij}δ^{ab} + δ^{ib}δ^{aj})`.
pub fn four_trace_closed_form(i: usize, a: usize, j: usize, b: usize) -> Gq {
    let d = |x: usize, y: usize| i64::from(x == y);
    gr(qi(4 * (d(i, a) * d(j, b) - d(i, j) * d(a, b) + d(i, b) * d(a, j))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_relation() {
        let g = GammaAlgebra::new();
        for i in 1..=4 {
            for j in 1..=4 {
                let want = if i == j {
                    mat_scale(&identity(4), &gr(qi(2 * CLIFFORD_SIGN)))
                } else {
                    zeros(4, 4)
                };
                assert_eq!(g.anticommutator(i, j), want, "({i}, {j})");
            }
        }
    }

    #[test]
    fn two_trace() {
        let g = GammaAlgebra::new();
        assert_eq!(g.trace_product(&[2, 2]), gr(qi(4)));
        assert_eq!(g.trace_product(&[1, 3]), gr(qi(0)));
        assert_eq!(g.trace_product(&[1, 2, 3]), gr(qi(0)));
    }
}
