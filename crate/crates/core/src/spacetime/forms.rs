use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::{qi, Q};

/// Constant-coefficient wedge monomial `dx^{i₁}∧⋯∧dx^{i_k}`, `i₁ < ⋯ < i_k`,
/// stored as a bitmask (bit `i-1` for `dx^i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(u8);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);
    pub const VOL: Monomial = Monomial(0b1111);

    /// `dx^i` for `i ∈ 1..=4`.
    pub fn dx(i: usize) -> Self {
        assert!((1..=4).contains(&i), "dx^{i} is out of range");
        Monomial(1 << (i - 1))
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    /// Ascending 1-based generator indices.
    pub fn indices(self) -> Vec<usize> {
        (1..=4).filter(|i| self.0 & (1 << (i - 1)) != 0).collect()
    }

    pub fn complement(self) -> Self {
        Monomial(!self.0 & 0b1111)
    }

    /// `self ∧ other` as `(sign, monomial)`, `None` if a generator repeats.
    pub fn wedge(self, other: Monomial) -> Option<(i32, Monomial)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        let mut swaps = 0;
        for j in other.indices() {
            swaps += self.indices().iter().filter(|&&i| i > j).count();
        }
        let sign = if swaps % 2 == 0 { 1 } else { -1 };
        Some((sign, Monomial(self.0 | other.0)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("dx{i}")).collect();
        write!(f, "{}", parts.join("^"))
    }
}

/// Outcome of starring a product of generators given as raw indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Star {
    Term { sign: i32, monomial: Monomial },
    /// A generator repeated, so the product was already zero.
    Degenerate,
}

/// Euclidean star with `dx¹∧dx²∧dx³∧dx⁴ = dvol`: `m ∧ ∗m = dvol`.
pub fn hodge_star(m: Monomial) -> (i32, Monomial) {
    let c = m.complement();
    let (sign, _) = m.wedge(c).expect("complement is disjoint");
    (sign, c)
}

/// Star of `dx^{i₁}∧⋯∧dx^{i_k}` for indices in any order.
pub fn hodge_star_indices(indices: &[usize]) -> Star {
    let mut acc = (1, Monomial::ONE);
    for &i in indices {
        match acc.1.wedge(Monomial::dx(i)) {
            Some((s, m)) => acc = (acc.0 * s, m),
            None => return Star::Degenerate,
        }
    }
    let (s, m) = hodge_star(acc.1);
    Star::Term { sign: acc.0 * s, monomial: m }
}

/// Constant-coefficient differential form on ℝ⁴.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Form {
    terms: BTreeMap<Monomial, Q>,
}

impl Form {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Q::one(), Monomial::ONE)
    }

    pub fn vol() -> Self {
        Self::monomial(Q::one(), Monomial::VOL)
    }

    pub fn dx(i: usize) -> Self {
        Self::monomial(Q::one(), Monomial::dx(i))
    }

    pub fn monomial(c: Q, m: Monomial) -> Self {
        let mut f = Self::zero();
        f.add_term(c, m);
        f
    }

    pub fn add_term(&mut self, c: Q, m: Monomial) {
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Q)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coefficient(&self, m: Monomial) -> Q {
        self.terms.get(&m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, s: &Q) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            out.add_term(c.clone() * s.clone(), m);
        }
        out
    }

    pub fn plus(&self, other: &Form) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(c.clone(), m);
        }
        out
    }

    pub fn minus(&self, other: &Form) -> Self {
        self.plus(&other.scaled(&qi(-1)))
    }

    pub fn wedge(&self, other: &Form) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some((s, m)) = a.wedge(b) {
                    out.add_term(ca.clone() * cb.clone() * qi(s as i64), m);
                }
            }
        }
        out
    }

    pub fn star(&self) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            let (s, sm) = hodge_star(m);
            out.add_term(c.clone() * qi(s as i64), sm);
        }
        out
    }

    /// Coefficient of `dvol`.
    pub fn top(&self) -> Q {
        self.coefficient(Monomial::VOL)
    }

    /// Wedge of many forms, left to right.
    pub fn wedge_all(forms: &[&Form]) -> Self {
        forms.iter().fold(Form::one(), |acc, f| acc.wedge(f))
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(m, c)| format!("{} {}", crate::scalar::fmt_q(c), m))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `σ^{ij} = dx^i∧dx^j + ∗(dx^i∧dx^j)`, zero when `i = j`.
pub fn sigma(i: usize, j: usize) -> Form {
    let w = Form::dx(i).wedge(&Form::dx(j));
    w.plus(&w.star())
}

/// The self-dual basis element `σ^{1j}`, `j ∈ 2..=4`.
pub fn sigma1(j: usize) -> Form {
    assert!((2..=4).contains(&j), "self-dual index {j} is out of range");
    sigma(1, j)
}

/// Coordinates of a self-dual 2-form in the basis `σ^{12}, σ^{13}, σ^{14}`,
/// `None` if it has an anti-self-dual part.
pub fn self_dual_coordinates(f: &Form) -> Option<[Q; 3]> {
    let half = Q::new(1.into(), 2.into());
    let c = [2, 3, 4].map(|j| f.wedge(&sigma1(j)).top() * half.clone());
    let rebuilt = (0..3).fold(Form::zero(), |acc, k| acc.plus(&sigma1(k + 2).scaled(&c[k])));
    (rebuilt == *f).then_some(c)
}
