use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::scalar::{fmt_q, Q};

/// Basis of quadratic local functionals of the abelian fields. Indices are
/// 1-based; `σ` indices run over `2..=4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Basis {
    /// `J^{abij} = ∫ ∂_i ∂_j A_a · A_b`. Symmetric in `(i, j)` and, by two
    /// integrations by parts, in `(a, b)`.
    J { a: usize, b: usize, i: usize, j: usize },
    /// `K^{abl} = ∫ ∂_l A_a · B_b`.
    K { a: usize, b: usize, l: usize },
    /// `M^{ab} = ∫ B_a B_b`, symmetric.
    M { a: usize, b: usize },
    /// `∫ F₊ ∧ F₊`.
    FF,
    /// `∫ F ∧ B`.
    FB,
    /// `∫ B ∧ B`.
    BB,
    /// `∫ dA ∧ ∗dA`.
    DADA,
}

impl Basis {
    /// Applies the symmetries of `J` and `M` so that equal functionals share
    /// one key.
    pub fn canonical(self) -> Self {
        match self {
            Basis::J { a, b, i, j } => Basis::J { a: a.min(b), b: a.max(b), i: i.min(j), j: i.max(j) },
            Basis::M { a, b } => Basis::M { a: a.min(b), b: a.max(b) },
            other => other,
        }
    }

    pub fn is_geometric(self) -> bool {
        matches!(self, Basis::FF | Basis::FB | Basis::BB | Basis::DADA)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::J { a, b, i, j } => write!(f, "J^{{{a}{b}{i}{j}}}"),
            Basis::K { a, b, l } => write!(f, "K^{{{a}{b}{l}}}"),
            Basis::M { a, b } => write!(f, "M^{{{a}{b}}}"),
            Basis::FF => write!(f, "FF"),
            Basis::FB => write!(f, "FB"),
            Basis::BB => write!(f, "BB"),
            Basis::DADA => write!(f, "dAdA"),
        }
    }
}

/// Which Lie-theoretic constant multiplies an abelian functional.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LieSlot {
    /// `C(𝔤)`.
    Adjoint,
    /// `C(V)`.
    Matter,
    /// No Lie factor.
    Number,
}

impl fmt::Display for LieSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieSlot::Adjoint => "C_adj",
            LieSlot::Matter => "C_matter",
            LieSlot::Number => "1",
        })
    }
}

/// `g^k / (16π²) · Σ c_e e` over [`Basis`] elements `e`, times a Lie factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalFunctional {
    terms: BTreeMap<Basis, Q>,
    pub coupling_power: u32,
    pub lie: LieSlot,
}

impl LocalFunctional {
    pub fn new(coupling_power: u32, lie: LieSlot) -> Self {
        Self { terms: BTreeMap::new(), coupling_power, lie }
    }

    /// A pure number times one basis element.
    pub fn single(e: Basis, c: Q) -> Self {
        let mut f = Self::new(0, LieSlot::Number);
        f.add(e, c);
        f
    }

    pub fn add(&mut self, e: Basis, c: Q) {
        if c.is_zero() {
            return;
        }
        let key = e.canonical();
        let v = self.terms.entry(key).or_insert_with(Q::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn get(&self, e: Basis) -> Q {
        self.terms.get(&e.canonical()).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Basis, &Q)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, s: &Q) -> Self {
        let mut out = Self::new(self.coupling_power, self.lie);
        for (e, c) in self.terms() {
            out.add(e, c * s);
        }
        out
    }

    /// Sum of coefficients; the prefactor and Lie slot of `self` are kept.
    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add(e, c.clone());
        }
        out
    }

    /// The same coefficients with another prefactor and Lie slot.
    pub fn relabelled(&self, coupling_power: u32, lie: LieSlot) -> Self {
        Self { terms: self.terms.clone(), coupling_power, lie }
    }

    /// `(label, "num/den")` pairs in basis order.
    pub fn entries(&self) -> Vec<(String, String)> {
        self.terms().map(|(e, c)| (e.to_string(), fmt_q(c))).collect()
    }
}

impl fmt::Display for LocalFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let body: Vec<String> = self.terms().map(|(e, c)| format!("{} {e}", fmt_q(c))).collect();
        write!(f, "g^{}/(16pi^2) {} [{}]", self.coupling_power, self.lie, body.join(" + "))
    }
}
