use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::MultiIndex;
use crate::scalar::Q;
use crate::tintegrals::{clear_tau, TRationalTerm};

/// Orders of `τ^{-1}Δ` kept beyond the leading term of each monomial.
pub const DEFAULT_MAX_ORDER: u32 = 3;

/// `Σ c · t₁^a t₂^b · z^α` against `exp(-τ|z|²/4)`, `τ = 1/t₁ + 1/t₂`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GaussianIntegrand {
    terms: BTreeMap<(MultiIndex, i32, i32), Q>,
}

impl GaussianIntegrand {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: Q, alpha: MultiIndex) -> Self {
        let mut g = Self::new();
        g.push(coeff, alpha, 0, 0);
        g
    }

    /// Adds `coeff · t₁^a t₂^b z^alpha`.
    pub fn push(&mut self, coeff: Q, alpha: MultiIndex, a: i32, b: i32) {
        let key = (alpha, a, b);
        let e = self.terms.entry(key).or_insert_with(Q::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, i32, i32, &Q)> {
        self.terms.iter().map(|((al, a, b), c)| (al, *a, *b, c))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, s: &Q) -> Self {
        let mut out = Self::new();
        for (al, a, b, c) in self.terms() {
            out.push(c.clone() * s.clone(), *al, a, b);
        }
        out
    }
}

impl std::ops::Add for &GaussianIntegrand {
    type Output = GaussianIntegrand;

    fn add(self, rhs: &GaussianIntegrand) -> GaussianIntegrand {
        let mut out = self.clone();
        for (al, a, b, c) in rhs.terms() {
            out.push(c.clone(), *al, a, b);
        }
        out
    }
}

/// `coefficient · t₁^{t1} t₂^{t2} · τ^{-tau_power} · (∂^β φ)(0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WickTerm {
    pub beta: MultiIndex,
    pub coefficient: Q,
    pub tau_power: i32,
    pub t1: i32,
    pub t2: i32,
}

impl WickTerm {
    /// The heat-time factor with `τ` cleared.
    pub fn t_rational(&self) -> TRationalTerm {
        clear_tau(self.coefficient.clone(), -self.t1, -self.t2, self.tau_power)
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All `γ` with `|γ| = k` and `2γ ≥ α` componentwise.
fn gammas(alpha: &MultiIndex, k: u32) -> Vec<MultiIndex> {
    fn rec(alpha: &MultiIndex, slot: usize, left: u32, cur: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
        if slot == 3 {
            if 2 * left >= alpha[3] {
                cur[3] = left;
                out.push(*cur);
            }
            return;
        }
        let lo = alpha[slot].div_ceil(2);
        for g in lo..=left {
            cur[slot] = g;
            rec(alpha, slot + 1, left - g, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(alpha, 0, k, &mut [0; 4], &mut out);
    out
}

/// Expands each monomial through `max_order` orders past its leading term.
///
/// The order-`k` term of `e^{τ^{-1}Δ}` is `τ^{-k} Σ_{|γ|=k} ∂^{2γ}/γ!`, and
/// `∂^{2γ}(z^α φ)(0) = (2γ)!/(2γ-α)! · ∂^{2γ-α}φ(0)`.
pub fn wick_expand(g: &GaussianIntegrand, max_order: u32) -> Vec<WickTerm> {
    let mut acc: BTreeMap<(MultiIndex, i32, i32, i32), Q> = BTreeMap::new();
    for (alpha, a, b, c) in g.terms() {
        let kmin = super::degree(alpha).div_ceil(2);
        for k in kmin..=kmin + max_order {
            for gamma in gammas(alpha, k) {
                let mut num = BigInt::one();
                let mut den = BigInt::one();
                let mut beta = [0; 4];
                for m in 0..4 {
                    let two_g = 2 * gamma[m];
                    beta[m] = two_g - alpha[m];
                    num *= factorial(two_g);
                    den *= factorial(gamma[m]) * factorial(beta[m]);
                }
                let coeff = c.clone() * Q::new(num, den);
                let key = (beta, 2 + k as i32, a, b);
                let e = acc.entry(key).or_insert_with(Q::zero);
                *e += coeff;
            }
        }
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((beta, n, t1, t2), coefficient)| WickTerm { beta, coefficient, tau_power: n, t1, t2 })
        .collect()
}

/// `∫ z^α e^{-τ|z|²/4} / (4π)²` as `(c, n)` meaning `c τ^{-n}`, read off the
/// `β = 0` part of the expansion.
pub fn wick_moment(alpha: MultiIndex) -> (Q, i32) {
    let terms = wick_expand(&GaussianIntegrand::monomial(Q::one(), alpha), 0);
    let n = 2 + super::degree(&alpha) as i32 / 2;
    let c = terms
        .iter()
        .filter(|t| t.beta == [0; 4])
        .fold(Q::zero(), |acc, t| acc + t.coefficient.clone());
    (c, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    #[test]
    fn constant_monomial() {
        let t = wick_expand(&GaussianIntegrand::monomial(qi(1), [0; 4]), 0);
        assert_eq!(
            t,
            vec![WickTerm { beta: [0; 4], coefficient: qi(1), tau_power: 2, t1: 0, t2: 0 }]
        );
    }

    #[test]
    fn quadratic_leading_term() {
        let t = wick_expand(&GaussianIntegrand::monomial(qi(1), [2, 0, 0, 0]), 0);
        assert_eq!(t[0].beta, [0; 4]);
        assert_eq!(t[0].coefficient, qi(2));
        assert_eq!(t[0].tau_power, 3);
        let mixed = wick_expand(&GaussianIntegrand::monomial(qi(1), [1, 1, 0, 0]), 0);
        assert!(mixed.iter().all(|t| t.beta != [0; 4]));
    }

    #[test]
    fn odd_monomials_have_no_even_markers() {
        let t = wick_expand(&GaussianIntegrand::monomial(qi(1), [1, 0, 0, 0]), 4);
        assert!(!t.is_empty());
        assert!(t.iter().all(|t| super::super::degree(&t.beta) % 2 == 1));
        assert_eq!(wick_moment([1, 2, 0, 0]).0, qi(0));
    }
}
