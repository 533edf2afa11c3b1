use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::TIntegralError;
use crate::scalar::{fmt_q, Q};

/// `coeff · t₁^p t₂^q (t₁+t₂)^{-r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TRationalTerm {
    pub coeff: Q,
    pub p: i32,
    pub q: i32,
    pub r: i32,
}

impl TRationalTerm {
    pub fn new(coeff: Q, p: i32, q: i32, r: i32) -> Self {
        Self { coeff, p, q, r }
    }

    pub fn unit(p: i32, q: i32, r: i32) -> Self {
        Self::new(Q::one(), p, q, r)
    }

    /// Total homogeneity degree of the integrand.
    pub fn degree(&self) -> i32 {
        self.p + self.q - self.r
    }

    /// The same integrand with t₁ and t₂ exchanged.
    pub fn swapped(&self) -> Self {
        Self::new(self.coeff.clone(), self.q, self.p, self.r)
    }
}

impl fmt::Display for TRationalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} t1^{} t2^{} (t1+t2)^-{}",
            fmt_q(&self.coeff),
            self.p,
            self.q,
            self.r
        )
    }
}

/// Canonical sum of [`TRationalTerm`]s: equal exponents merged, zeros dropped.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TRationalSum {
    terms: BTreeMap<(i32, i32, i32), Q>,
}

impl TRationalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, t: TRationalTerm) {
        let key = (t.p, t.q, t.r);
        let e = self.terms.entry(key).or_insert_with(Q::zero);
        *e += t.coeff;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = TRationalTerm> + '_ {
        self.terms
            .iter()
            .map(|(&(p, q, r), c)| TRationalTerm::new(c.clone(), p, q, r))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<TRationalTerm> for TRationalSum {
    fn from_iter<I: IntoIterator<Item = TRationalTerm>>(iter: I) -> Self {
        let mut s = Self::new();
        for t in iter {
            s.push(t);
        }
        s
    }
}

/// Rewrite `coeff · t₁^{-a} t₂^{-b} τ^{-k}`, with `τ = 1/t₁ + 1/t₂`, over a
/// common denominator.
pub fn clear_tau(coeff: Q, a: i32, b: i32, k: i32) -> TRationalTerm {
    TRationalTerm::new(coeff, k - a, k - b, k)
}

fn factorial(n: i32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Coefficient of `log ε` as `ε → 0` with `L` fixed.
///
/// Only the scale-critical degree `p + q − r = −2` produces a logarithm, with
/// coefficient `−B(p+1, q+1)`. Other degrees are convergent or pure power
/// divergences.
pub fn log_coefficient(term: &TRationalTerm) -> Result<Q, TIntegralError> {
    let TRationalTerm { p, q, r, .. } = *term;
    let unsupported = TIntegralError::UnsupportedExponent { p, q, r };
    if r < 0 || p < -2 || q < -2 {
        return Err(unsupported);
    }
    if term.degree() != -2 {
        return Ok(Q::zero());
    }
    // A negative exponent at criticality makes the Beta integral diverge and
    // brings in log² ε.
    if p < 0 || q < 0 {
        return Err(unsupported);
    }
    let beta = Q::new(factorial(p) * factorial(q), factorial(p + q + 1));
    Ok(-beta * term.coeff.clone())
}

pub fn log_coefficient_sum(sum: &TRationalSum) -> Result<Q, TIntegralError> {
    sum.terms()
        .try_fold(Q::zero(), |acc, t| Ok(acc + log_coefficient(&t)?))
}
