//! Analytic weights: logarithmic parts of two-kernel integrals
//! `∫ φ(x, y) D₁k_{t₁}(x, y) D₂k_{t₂}(x, y)` for derivative operators `D`.
//!
//! Each weight is a map from a derivative marker `β` to the coefficient of
//! `(1/16π²) ∫ (∂^β_x φ)(x, x)`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::gaussian::{self, wick_expand, GaussianIntegrand, MultiIndex};
use crate::scalar::{q, Q};
use crate::tintegrals::{log_coefficient, TIntegralError};

pub type Markers = BTreeMap<MultiIndex, Q>;

/// `Σ c · z^α t^n`, a derivative of the scalar heat kernel with the
/// Gaussian factor `(4π)^{-2} e^{-|z|²/4t}` stripped, `z = x - y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeatPolynomial {
    terms: BTreeMap<(MultiIndex, i32), Q>,
}

impl HeatPolynomial {
    /// `k_t` itself: `t^{-2}`.
    pub fn kernel() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(([0; 4], -2), q(1, 1));
        Self { terms }
    }

    fn push(&mut self, alpha: MultiIndex, n: i32, c: Q) {
        let e = self.terms.entry((alpha, n)).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(alpha, n));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, i32, &Q)> {
        self.terms.iter().map(|((a, n), c)| (a, *n, c))
    }

    /// `∂/∂x^i`, with `i` 1-based.
    pub fn dx(&self, i: usize) -> Self {
        let m = i - 1;
        let mut out = Self { terms: BTreeMap::new() };
        for (alpha, n, c) in self.terms() {
            if alpha[m] > 0 {
                let mut lower = *alpha;
                lower[m] -= 1;
                out.push(lower, n, c * Q::from_integer(alpha[m].into()));
            }
            out.push(gaussian::add(alpha, &gaussian::unit(m)), n - 1, -c * q(1, 2));
        }
        out
    }

    /// `∂/∂t`.
    pub fn dt(&self) -> Self {
        let mut out = Self { terms: BTreeMap::new() };
        for (alpha, n, c) in self.terms() {
            if n != 0 {
                out.push(*alpha, n - 1, c * Q::from_integer(n.into()));
            }
            for m in 0..4 {
                let mut up = *alpha;
                up[m] += 2;
                out.push(up, n - 2, c * q(1, 4));
            }
        }
        out
    }

    /// Multiplies by `t^k`.
    pub fn times_t(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(&(a, n), c)| ((a, n + k), c.clone())).collect() }
    }

    /// `Σ_m ∂²/∂(x^m)²`.
    pub fn laplacian(&self) -> Self {
        let mut out = Self { terms: BTreeMap::new() };
        for m in 1..=4 {
            for (alpha, n, c) in self.dx(m).dx(m).terms() {
                out.push(*alpha, n, c.clone());
            }
        }
        out
    }
}

/// The product integrand of `p₁` at `t₁` and `p₂` at `t₂`.
pub fn pair(p1: &HeatPolynomial, p2: &HeatPolynomial) -> GaussianIntegrand {
    let mut g = GaussianIntegrand::new();
    for (a1, n1, c1) in p1.terms() {
        for (a2, n2, c2) in p2.terms() {
            g.push(c1 * c2, gaussian::add(a1, a2), n1, n2);
        }
    }
    g
}

/// Expands far enough that every term whose heat-time integral can be
/// critical is produced, then keeps the `log ε` coefficients.
pub fn log_part(g: &GaussianIntegrand) -> Result<Markers, TIntegralError> {
    // A term c t₁^a t₂^b τ^{-n} is critical when n = -2 - a - b, and the
    // order-k Wick term carries n = 2 + ceil(|α|/2) + k.
    let order = g
        .terms()
        .map(|(alpha, a, b, _)| -4 - a - b - gaussian::degree(alpha).div_ceil(2) as i32)
        .max()
        .unwrap_or(0)
        .max(0) as u32;
    let mut out = Markers::new();
    for term in wick_expand(g, order) {
        let c = log_coefficient(&term.t_rational())?;
        if c.is_zero() {
            continue;
        }
        let e = out.entry(term.beta).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            out.remove(&term.beta);
        }
    }
    Ok(out)
}

fn weight(p1: HeatPolynomial, p2: HeatPolynomial) -> Markers {
    log_part(&pair(&p1, &p2)).expect("heat-kernel derivatives give supported exponents")
}

fn k() -> HeatPolynomial {
    HeatPolynomial::kernel()
}

/// `∂_i k_{t₁} · ∂_j k_{t₂}`.
pub fn analytic_weight_i1(i: usize, j: usize) -> Markers {
    weight(k().dx(i), k().dx(j))
}

/// `t₂ · ∂_i k_{t₁} · ∂_t k_{t₂}`.
pub fn analytic_weight_xt(i: usize) -> Markers {
    weight(k().dx(i), k().dt().times_t(1))
}

/// `t₂ · ∂_i k_{t₁} · ∂_j ∂_k k_{t₂}`.
pub fn analytic_weight_xxx(i: usize, j: usize, l: usize) -> Markers {
    weight(k().dx(i), k().dx(j).dx(l).times_t(1))
}

/// `t₁ t₂ · ∂_t k_{t₁} · ∂_t k_{t₂}`.
pub fn analytic_weight_tt() -> Markers {
    weight(k().dt().times_t(1), k().dt().times_t(1))
}

/// `t₁ t₂ · ∂_i ∂_t k_{t₁} · ∂_j k_{t₂}`.
pub fn analytic_weight_xxt(i: usize, j: usize) -> Markers {
    weight(k().dx(i).dt().times_t(1), k().dx(j).times_t(1))
}

/// `t₁ t₂ · ∂_m ∂_i k_{t₁} · ∂_j k_{t₂}`.
pub fn analytic_weight_xxx2(m: usize, i: usize, j: usize) -> Markers {
    weight(k().dx(m).dx(i).times_t(1), k().dx(j).times_t(1))
}

/// All weights on 1-based index ranges, computed once.
pub(crate) struct WeightTables {
    pub i1: Vec<Vec<Markers>>,
    pub xt: Vec<Markers>,
    pub xxx: Vec<Vec<Vec<Markers>>>,
    pub tt: Markers,
    pub xxt: Vec<Vec<Markers>>,
    pub xxx2: Vec<Vec<Vec<Markers>>>,
}

pub(crate) fn tables() -> &'static WeightTables {
    static TABLES: OnceLock<WeightTables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let r = 1..=4;
        WeightTables {
            i1: r.clone().map(|i| r.clone().map(|j| analytic_weight_i1(i, j)).collect()).collect(),
            xt: r.clone().map(analytic_weight_xt).collect(),
            xxx: r
                .clone()
                .map(|i| r.clone().map(|j| r.clone().map(|l| analytic_weight_xxx(i, j, l)).collect()).collect())
                .collect(),
            tt: analytic_weight_tt(),
            xxt: r.clone().map(|i| r.clone().map(|j| analytic_weight_xxt(i, j)).collect()).collect(),
            xxx2: r
                .clone()
                .map(|m| r.clone().map(|i| r.clone().map(|j| analytic_weight_xxx2(m, i, j)).collect()).collect())
                .collect(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The scalar kernel solves the heat equation.
    #[test]
    fn heat_equation() {
        let k = HeatPolynomial::kernel();
        assert_eq!(k.dt(), k.laplacian());
        let d = k.dx(2);
        assert_eq!(d.dt(), d.laplacian());
    }

    #[test]
    fn first_derivative() {
        let d = HeatPolynomial::kernel().dx(1);
        let terms: Vec<_> = d.terms().collect();
        assert_eq!(terms, vec![(&[1, 0, 0, 0], -3, &q(-1, 2))]);
    }
}
