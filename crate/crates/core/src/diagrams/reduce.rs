use num_traits::Zero;

use super::functional::{Basis, LieSlot, LocalFunctional};
use crate::scalar::{qi, Q};
use crate::spacetime::{sigma1, Form};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReduceError {
    #[error("{part} terms are not a multiple of {target}; residue {residue}")]
    Residue { part: &'static str, target: &'static str, residue: LocalFunctional },
}

/// `∫ dA ∧ ∗dA = Σ_{i,j} (J^{jiij} - J^{jjii})`, from
/// `dA ∧ ∗dA = Σ_{i,j} (∂_i A_j ∂_i A_j - ∂_i A_j ∂_j A_i) dvol` and one
/// integration by parts per term.
pub fn dada_in_j() -> LocalFunctional {
    let mut f = LocalFunctional::new(0, LieSlot::Number);
    for i in 1..=4 {
        for j in 1..=4 {
            f.add(Basis::J { a: j, b: i, i, j }, qi(1));
            f.add(Basis::J { a: j, b: j, i, j: i }, qi(-1));
        }
    }
    f
}

/// `∫ F ∧ B = Σ top(dx^l dx^a σ^{1b}) K^{abl}`.
pub fn fb_in_k() -> LocalFunctional {
    let mut f = LocalFunctional::new(0, LieSlot::Number);
    for l in 1..=4 {
        for a in 1..=4 {
            for b in 2..=4 {
                let e = Form::dx(l).wedge(&Form::dx(a)).wedge(&sigma1(b)).top();
                f.add(Basis::K { a, b, l }, e);
            }
        }
    }
    f
}

/// `∫ B ∧ B = Σ top(σ^{1a} σ^{1b}) M^{ab}`.
pub fn bb_in_m() -> LocalFunctional {
    let mut f = LocalFunctional::new(0, LieSlot::Number);
    for a in 2..=4 {
        for b in 2..=4 {
            f.add(Basis::M { a, b }, sigma1(a).wedge(&sigma1(b)).top());
        }
    }
    f
}

/// `∫ dA ∧ ∗dA = 2 ∫ F₊ ∧ F₊` for compactly supported abelian `A`.
pub fn dada_in_ff() -> Q {
    qi(2)
}

fn part(f: &LocalFunctional, keep: impl Fn(Basis) -> bool) -> LocalFunctional {
    let mut out = LocalFunctional::new(f.coupling_power, f.lie);
    for (e, c) in f.terms() {
        if keep(e) {
            out.add(e, c.clone());
        }
    }
    out
}

/// The `c` with `f = c · target`, or the residue left by the best attempt.
fn multiple_of(
    f: &LocalFunctional,
    target: &LocalFunctional,
    part_name: &'static str,
    target_name: &'static str,
) -> Result<Q, ReduceError> {
    let c = target
        .terms()
        .find_map(|(e, t)| {
            let v = f.get(e);
            (!v.is_zero()).then(|| v / t)
        })
        .unwrap_or_else(Q::zero);
    let residue = f.plus(&target.scaled(&-c.clone()));
    if residue.is_zero() {
        Ok(c)
    } else {
        Err(ReduceError::Residue { part: part_name, target: target_name, residue })
    }
}

/// Rewrites the raw `J`, `K`, `M` terms in the geometric basis `FF`, `FB`,
/// `BB`; `dAdA` is folded into `FF`.
pub fn j_basis_reduce(f: &LocalFunctional) -> Result<LocalFunctional, ReduceError> {
    let j = part(f, |e| matches!(e, Basis::J { .. }));
    let k = part(f, |e| matches!(e, Basis::K { .. }));
    let m = part(f, |e| matches!(e, Basis::M { .. }));
    let dada = multiple_of(&j, &dada_in_j(), "J", "dAdA")? + f.get(Basis::DADA);
    let fb = multiple_of(&k, &fb_in_k(), "K", "FB")? + f.get(Basis::FB);
    let bb = multiple_of(&m, &bb_in_m(), "M", "BB")? + f.get(Basis::BB);
    let mut out = LocalFunctional::new(f.coupling_power, f.lie);
    out.add(Basis::FF, f.get(Basis::FF) + dada * dada_in_ff());
    out.add(Basis::FB, fb);
    out.add(Basis::BB, bb);
    Ok(out)
}
