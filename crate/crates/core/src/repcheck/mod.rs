//! Finite-dimensional representations of `spin(4) = su(2) × su(2)` as
//! multisets of irreducible labels `(j₁, j₂)`.
//!
//! Spins are stored doubled, so `(½, 0)` is `(1, 0)`.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Spin4Rep {
    /// Multiplicity of each irreducible, keyed by `(2j₁, 2j₂)`.
    terms: BTreeMap<(u32, u32), u32>,
}

fn fmt_spin(twice: u32) -> String {
    if twice % 2 == 0 {
        (twice / 2).to_string()
    } else {
        format!("{twice}/2")
    }
}

impl Spin4Rep {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The irreducible `(j₁, j₂)` from doubled spins.
    pub fn irrep(twice_j1: u32, twice_j2: u32) -> Self {
        let mut r = Self::zero();
        r.terms.insert((twice_j1, twice_j2), 1);
        r
    }

    pub fn trivial() -> Self {
        Self::irrep(0, 0)
    }

    /// `S₊ = (½, 0)`.
    pub fn s_plus() -> Self {
        Self::irrep(1, 0)
    }

    /// `S₋ = (0, ½)`.
    pub fn s_minus() -> Self {
        Self::irrep(0, 1)
    }

    /// `Symⁿ S₊ = (n/2, 0)`.
    pub fn sym_plus(n: u32) -> Self {
        Self::irrep(n, 0)
    }

    /// `Symⁿ S₋ = (0, n/2)`.
    pub fn sym_minus(n: u32) -> Self {
        Self::irrep(0, n)
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, &m) in &other.terms {
            *out.terms.entry(k).or_insert(0) += m;
        }
        out
    }

    pub fn dimension(&self) -> u64 {
        self.terms.iter().map(|(&(a, b), &m)| u64::from(m) * u64::from(a + 1) * u64::from(b + 1)).sum()
    }

    pub fn multiplicity(&self, twice_j1: u32, twice_j2: u32) -> u32 {
        self.terms.get(&(twice_j1, twice_j2)).copied().unwrap_or(0)
    }

    /// `((2j₁, 2j₂), multiplicity)` in label order.
    pub fn summands(&self) -> impl Iterator<Item = ((u32, u32), u32)> + '_ {
        self.terms.iter().map(|(&k, &m)| (k, m))
    }

    /// Number of irreducible summands counted with multiplicity.
    pub fn summand_count(&self) -> u32 {
        self.terms.values().sum()
    }
}

/// `j ⊗ j' = |j - j'| ⊕ … ⊕ (j + j')`, doubled spins.
fn clebsch_gordan(a: u32, b: u32) -> impl Iterator<Item = u32> {
    (a.abs_diff(b)..=a + b).step_by(2)
}

pub fn tensor_decompose(a: &Spin4Rep, b: &Spin4Rep) -> Spin4Rep {
    let mut out = Spin4Rep::zero();
    for (&(a1, a2), &ma) in &a.terms {
        for (&(b1, b2), &mb) in &b.terms {
            for c1 in clebsch_gordan(a1, b1) {
                for c2 in clebsch_gordan(a2, b2) {
                    *out.terms.entry((c1, c2)).or_insert(0) += ma * mb;
                }
            }
        }
    }
    out
}

pub fn has_trivial_summand(r: &Spin4Rep) -> bool {
    r.multiplicity(0, 0) > 0
}

/// `K(1) = S₊ ⊕ S₋`.
pub fn k1() -> Spin4Rep {
    Spin4Rep::s_plus().plus(&Spin4Rep::s_minus())
}

/// `K(2) = (S₊ ⊗ Sym²S₋) ⊕ (S₋ ⊗ Sym²S₊)`.
pub fn k2() -> Spin4Rep {
    let a = tensor_decompose(&Spin4Rep::s_plus(), &Spin4Rep::sym_minus(2));
    let b = tensor_decompose(&Spin4Rep::s_minus(), &Spin4Rep::sym_plus(2));
    a.plus(&b)
}

impl fmt::Display for Spin4Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(a, b), &m)| {
                let label = format!("({},{})", fmt_spin(a), fmt_spin(b));
                if m == 1 {
                    label
                } else {
                    format!("{m}{label}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
