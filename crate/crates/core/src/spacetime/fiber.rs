use std::fmt;

use num_traits::Zero;

use super::forms::{hodge_star, sigma1, Form, Monomial};
use crate::scalar::{qi, Mat, Q};

/// Which summand of the fiber an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Species {
    Ghost,
    GhostDual,
    A,
    ADual,
    B,
    BDual,
    Psi,
    PsiDual,
}

/// Basis of the constant-coefficient fiber. Spatial indices run over `1..=4`,
/// self-dual indices `j` over `2..=4` (standing for `σ^{1j}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    /// The ghost `c`, the constant function `1`.
    Ghost,
    /// `c^∨`, the volume form.
    GhostDual,
    /// `dx^a`.
    OneForm(usize),
    /// `∗dx^a`.
    ThreeForm(usize),
    /// `σ^{1j}` in degree 0.
    SelfDual(usize),
    /// `σ'^{1j}`, the same form shifted to degree 1.
    SelfDualShift(usize),
    /// `ψ^j`.
    Spinor(usize),
    /// `ψ'^j`.
    SpinorShift(usize),
}

use BasisElement::*;

impl BasisElement {
    pub fn species(self) -> Species {
        match self {
            Ghost => Species::Ghost,
            GhostDual => Species::GhostDual,
            OneForm(_) => Species::A,
            ThreeForm(_) => Species::ADual,
            SelfDual(_) => Species::B,
            SelfDualShift(_) => Species::BDual,
            Spinor(_) => Species::Psi,
            SpinorShift(_) => Species::PsiDual,
        }
    }

    /// Cohomological degree.
    pub fn degree(self) -> i32 {
        match self {
            Ghost => -1,
            GhostDual => 2,
            OneForm(_) | SelfDual(_) | Spinor(_) => 0,
            ThreeForm(_) | SelfDualShift(_) | SpinorShift(_) => 1,
        }
    }

    pub fn fermion_number(self) -> i32 {
        i32::from(matches!(self, Spinor(_) | SpinorShift(_)))
    }

    /// Total parity governing Koszul signs.
    pub fn parity(self) -> i32 {
        (self.degree() + self.fermion_number()).rem_euclid(2)
    }

    /// Odd fields whose closed loops carry an extra sign.
    pub fn is_odd_field(self) -> bool {
        matches!(self, Ghost | Spinor(_))
    }

    /// Underlying differential form; `None` for spinors.
    pub fn form(self) -> Option<Form> {
        match self {
            Ghost => Some(Form::one()),
            GhostDual => Some(Form::vol()),
            OneForm(a) => Some(Form::dx(a)),
            ThreeForm(a) => Some(Form::dx(a).star()),
            SelfDual(j) | SelfDualShift(j) => Some(sigma1(j)),
            Spinor(_) | SpinorShift(_) => None,
        }
    }

    /// All 24 elements in a fixed order.
    pub fn all() -> Vec<BasisElement> {
        let mut v = vec![Ghost, GhostDual];
        v.extend((1..=4).map(OneForm));
        v.extend((1..=4).map(ThreeForm));
        v.extend((2..=4).map(SelfDual));
        v.extend((2..=4).map(SelfDualShift));
        v.extend((1..=4).map(Spinor));
        v.extend((1..=4).map(SpinorShift));
        v
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ghost => write!(f, "c"),
            GhostDual => write!(f, "c*"),
            OneForm(a) => write!(f, "dx{a}"),
            ThreeForm(a) => write!(f, "*dx{a}"),
            SelfDual(j) => write!(f, "s1{j}"),
            SelfDualShift(j) => write!(f, "s'1{j}"),
            Spinor(j) => write!(f, "psi{j}"),
            SpinorShift(j) => write!(f, "psi'{j}"),
        }
    }
}

/// `(-1)^{|u||v|}`.
pub fn koszul_sign(u: BasisElement, v: BasisElement) -> i32 {
    if u.parity() * v.parity() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The shifted symplectic pairing `⟨u, v⟩` on the fiber.
///
/// Field-first orderings are `top(u ∧ v)` for forms and `δ` for spinors;
/// the opposite ordering is fixed by graded antisymmetry.
pub fn pairing(u: BasisElement, v: BasisElement) -> Q {
    fn forward(u: BasisElement, v: BasisElement) -> Option<Q> {
        match (u, v) {
            (Ghost, GhostDual) | (OneForm(_), ThreeForm(_)) | (SelfDual(_), SelfDualShift(_)) => {
                Some(u.form()?.wedge(&v.form()?).top())
            }
            (Spinor(j), SpinorShift(k)) => Some(qi(i64::from(j == k))),
            _ => None,
        }
    }
    if let Some(x) = forward(u, v) {
        return x;
    }
    match forward(v, u) {
        Some(x) => -x * qi(koszul_sign(u, v) as i64),
        None => Q::zero(),
    }
}

pub fn pairing_matrix() -> Mat<Q> {
    let all = BasisElement::all();
    all.iter()
        .map(|&u| all.iter().map(|&v| pairing(u, v)).collect())
        .collect()
}

/// Coordinates of a constant form in the basis elements of the given species.
/// Returns `None` if the form does not lie in their span.
pub fn expand_form(f: &Form, species: Species) -> Option<Vec<(BasisElement, Q)>> {
    let degree_ok = f.terms().all(|(m, _)| {
        let d = m.degree();
        match species {
            Species::Ghost => d == 0,
            Species::GhostDual => d == 4,
            Species::A => d == 1,
            Species::ADual => d == 3,
            Species::B | Species::BDual => d == 2,
            Species::Psi | Species::PsiDual => false,
        }
    });
    if !degree_ok {
        return None;
    }
    let out = match species {
        Species::Ghost => vec![(Ghost, f.coefficient(Monomial::ONE))],
        Species::GhostDual => vec![(GhostDual, f.top())],
        Species::A => (1..=4).map(|a| (OneForm(a), f.coefficient(Monomial::dx(a)))).collect(),
        Species::ADual => (1..=4)
            .map(|a| {
                let (s, m) = hodge_star(Monomial::dx(a));
                (ThreeForm(a), f.coefficient(m) * qi(s as i64))
            })
            .collect(),
        Species::B | Species::BDual => {
            let c = super::forms::self_dual_coordinates(f)?;
            let make = |j| if species == Species::B { SelfDual(j) } else { SelfDualShift(j) };
            (2..=4).zip(c).map(|(j, x)| (make(j), x)).collect()
        }
        Species::Psi | Species::PsiDual => return None,
    };
    Some(out.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}
