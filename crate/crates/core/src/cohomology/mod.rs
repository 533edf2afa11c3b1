//! Degree-0 cohomology of local functionals and the one-loop beta
//! coefficient.
//!
//! The target is one-dimensional and spanned by `[∫F₊∧F₊]`. The
//! coboundaries `d(∫F₊∧B^∨) = 2(FF - FB)` and `d(∫B∧B^∨) = 2(FB - BB)`
//! identify `[FF] = [FB] = [BB]`, and `∫dA∧∗dA = 2∫F₊∧F₊`.

mod flow;
mod framing;

use std::fmt;

use num_traits::Zero;

use crate::diagrams::{j_basis_reduce, report, Basis, DiagramError, DiagramReport, LieSlot, LocalFunctional};
use crate::lie::{casimir_adjoint, lie_factor_matter, LieAlgebraData, LieError, RepresentationData};
use crate::scalar::{fmt_q, qi, Q};

pub use flow::running_coupling;
pub use framing::{build_framings, ActionFraming, Framing, FramingRegistry, SelfDualFraming, DEFAULT_FRAMING};

#[derive(Debug, thiserror::Error)]
pub enum CohomologyError {
    #[error("{basis} is not in the geometric basis; reduce it first")]
    Unreduced { basis: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("unknown framing {0:?}")]
    UnknownFraming(String),
    #[error("lambda = {lambda} is past the Landau pole at lambda = {lambda_crit}")]
    Pole { lambda: f64, lambda_crit: f64 },
    #[error("{0}")]
    Domain(String),
}

/// `coefficient · g^k/(16π²) · lie · [∫F₊∧F₊]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub coefficient: Q,
    pub coupling_power: u32,
    pub lie: LieSlot,
}

impl CohomologyClass {
    /// The representative `coefficient · FF`.
    pub fn representative(&self) -> LocalFunctional {
        let mut f = LocalFunctional::new(self.coupling_power, self.lie);
        f.add(Basis::FF, self.coefficient.clone());
        f
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g^{}/(16pi^2) {} {} [FF]", self.coupling_power, self.lie, fmt_q(&self.coefficient))
    }
}

pub fn reduce_to_class(f: &LocalFunctional) -> Result<CohomologyClass, CohomologyError> {
    let mut c = Q::zero();
    for (e, v) in f.terms() {
        let weight = match e {
            Basis::FF | Basis::FB | Basis::BB => qi(1),
            Basis::DADA => qi(2),
            other => return Err(CohomologyError::Unreduced { basis: other.to_string() }),
        };
        c += v * weight;
    }
    Ok(CohomologyClass { coefficient: c, coupling_power: f.coupling_power, lie: f.lie })
}

/// `d(∫F₊∧B^∨)`.
pub fn coboundary_f_bdual() -> LocalFunctional {
    let mut f = LocalFunctional::new(0, LieSlot::Number);
    f.add(Basis::FF, qi(2));
    f.add(Basis::FB, qi(-2));
    f
}

/// `d(∫B∧B^∨)`.
pub fn coboundary_b_bdual() -> LocalFunctional {
    let mut f = LocalFunctional::new(0, LieSlot::Number);
    f.add(Basis::FB, qi(2));
    f.add(Basis::BB, qi(-2));
    f
}

/// `∫B∧F₊ - ½∫B∧B`.
pub fn first_order_action() -> LocalFunctional {
    let mut f = LocalFunctional::new(0, LieSlot::Number);
    f.add(Basis::FB, qi(1));
    f.add(Basis::BB, crate::scalar::q(-1, 2));
    f
}

/// The summed counterterm of all diagrams in one Lie slot, as a class.
pub fn slot_class(reports: &[DiagramReport], slot: LieSlot) -> Result<CohomologyClass, CohomologyError> {
    let mut total = LocalFunctional::new(2, slot);
    for r in reports.iter().filter(|r| r.lie_slot == slot) {
        total = total.plus(&r.raw);
    }
    let reduced = j_basis_reduce(&total).map_err(DiagramError::from)?;
    reduce_to_class(&reduced)
}

/// `β(g) = b g³/(16π²)` together with the conventions it depends on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaCoefficient {
    pub b: Q,
    pub casimir_adjoint: Q,
    pub matter_factor: Q,
    /// Classes of the adjoint and matter slots before the framing.
    pub adjoint_class: CohomologyClass,
    pub matter_class: CohomologyClass,
    pub framing: &'static str,
    pub framing_factor: Q,
    pub kappa: String,
}

fn describe_kappa(l: &LieAlgebraData) -> String {
    let n = l.dim;
    let off_diagonal = (0..n).any(|a| (0..n).any(|b| a != b && !l.kappa[a][b].is_zero()));
    if n == 0 {
        return "empty".into();
    }
    let d = &l.kappa[0][0];
    if !off_diagonal && (0..n).all(|a| &l.kappa[a][a] == d) {
        if *d == qi(1) {
            "identity".into()
        } else {
            format!("{} * identity", fmt_q(d))
        }
    } else {
        "general".into()
    }
}

pub fn beta_one_loop(l: &LieAlgebraData, r: &RepresentationData) -> Result<BetaCoefficient, CohomologyError> {
    beta_one_loop_with(l, r, &ActionFraming)
}

pub fn beta_one_loop_with(
    l: &LieAlgebraData,
    r: &RepresentationData,
    framing: &dyn Framing,
) -> Result<BetaCoefficient, CohomologyError> {
    let reports = report()?;
    beta_from_reports(&reports, l, r, framing)
}

/// As [`beta_one_loop_with`] on already evaluated diagrams.
pub fn beta_from_reports(
    reports: &[DiagramReport],
    l: &LieAlgebraData,
    r: &RepresentationData,
    framing: &dyn Framing,
) -> Result<BetaCoefficient, CohomologyError> {
    let casimir = casimir_adjoint(l)?;
    let matter = lie_factor_matter(l, r)?;
    let adjoint_class = slot_class(reports, LieSlot::Adjoint)?;
    let matter_class = slot_class(reports, LieSlot::Matter)?;
    let factor = framing.factor();
    let b = &factor * (&adjoint_class.coefficient * &casimir + &matter_class.coefficient * &matter);
    Ok(BetaCoefficient {
        b,
        casimir_adjoint: casimir,
        matter_factor: matter,
        adjoint_class,
        matter_class,
        framing: framing.name(),
        framing_factor: factor,
        kappa: describe_kappa(l),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn generators_are_exact() {
        for g in [coboundary_f_bdual(), coboundary_b_bdual()] {
            assert!(reduce_to_class(&g).unwrap().coefficient.is_zero());
        }
    }

    #[test]
    fn action_is_half() {
        assert_eq!(reduce_to_class(&first_order_action()).unwrap().coefficient, q(1, 2));
    }

    #[test]
    fn raw_terms_are_rejected() {
        let f = LocalFunctional::single(Basis::M { a: 2, b: 2 }, qi(1));
        assert!(matches!(reduce_to_class(&f), Err(CohomologyError::Unreduced { .. })));
    }
}
