use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;

use super::analytic::{tables, Markers};
use super::combinatorial::CombinatorialData;
use super::functional::{Basis, LieSlot, LocalFunctional};
use super::reduce::{j_basis_reduce, ReduceError};
use crate::gaussian::MultiIndex;
use crate::scalar::{qi, Q};
use crate::spacetime::{Species, TensorError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    I,
    II,
    III,
    IV,
    V,
}

impl Label {
    pub const ALL: [Label; 5] = [Label::I, Label::II, Label::III, Label::IV, Label::V];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::I => "I",
            Label::II => "II",
            Label::III => "III",
            Label::IV => "IV",
            Label::V => "V",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Label::ALL.into_iter().find(|l| l.as_str() == s).ok_or_else(|| format!("unknown diagram {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropagatorKind {
    AB,
    ADualC,
    AA,
    Psi,
}

/// Labelling of the two-vertex wheel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramShape {
    pub label: Label,
    /// Species of the external legs at `U` and `W`.
    pub legs: [Species; 2],
    /// Internal propagators at heat times `t₁` and `t₂`.
    pub propagators: [PropagatorKind; 2],
    /// Number of equal propagator-slot assignments the contraction stands for.
    pub symmetry_factor: Q,
    /// Overall sign of the contraction.
    pub sign: i32,
    pub lie_slot: LieSlot,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DiagramError {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error("diagram {label}: indices {indices:?} do not fit ranges {ranges:?}")]
    Indices { label: Label, indices: Vec<usize>, ranges: Vec<RangeInclusive<usize>> },
    #[error("diagram {label}: derivative marker {marker:?} with coefficient {coefficient} has no basis element")]
    UnsupportedMarker { label: Label, marker: MultiIndex, coefficient: String },
}

pub trait Diagram: Send + Sync {
    fn shape(&self) -> &DiagramShape;

    /// 1-based ranges of the combinatorial weight's indices, external first.
    fn index_ranges(&self) -> Vec<RangeInclusive<usize>>;

    /// The weight at one index tuple, without checking ranges.
    fn weight_unchecked(&self, data: &CombinatorialData, idx: &[usize]) -> Result<Q, TensorError>;

    /// `Σ C · I` over all indices, before the symmetry factor and sign.
    fn contraction(&self, data: &CombinatorialData) -> Result<LocalFunctional, DiagramError>;

    fn combinatorial_weight(&self, data: &CombinatorialData, idx: &[usize]) -> Result<Q, DiagramError> {
        let ranges = self.index_ranges();
        if idx.len() != ranges.len() || idx.iter().zip(&ranges).any(|(i, r)| !r.contains(i)) {
            return Err(DiagramError::Indices { label: self.shape().label, indices: idx.to_vec(), ranges });
        }
        Ok(self.weight_unchecked(data, idx)?)
    }

    fn counterterm(&self, data: &CombinatorialData) -> Result<LocalFunctional, DiagramError> {
        let shape = self.shape();
        let s = &shape.symmetry_factor * qi(shape.sign.into());
        Ok(self.contraction(data)?.scaled(&s).relabelled(COUPLING_POWER, shape.lie_slot))
    }
}

/// Two cubic vertices, one power of `g` each.
const COUPLING_POWER: u32 = 2;

fn spatial() -> RangeInclusive<usize> {
    1..=4
}

fn self_dual() -> RangeInclusive<usize> {
    2..=4
}

/// The 1-based index pair of a second-order marker.
fn second_order(beta: &MultiIndex) -> Option<(usize, usize)> {
    let mut idx = Vec::new();
    for (m, &n) in beta.iter().enumerate() {
        idx.extend(std::iter::repeat_n(m + 1, n as usize));
    }
    (idx.len() == 2).then(|| (idx[0], idx[1]))
}

fn first_order(beta: &MultiIndex) -> Option<usize> {
    (beta.iter().sum::<u32>() == 1).then(|| beta.iter().position(|&n| n == 1).map(|m| m + 1)).flatten()
}

fn unsupported(label: Label, marker: &MultiIndex, c: &Q) -> DiagramError {
    DiagramError::UnsupportedMarker { label, marker: *marker, coefficient: crate::scalar::fmt_q(c) }
}

/// `Σ_{a,b,i,j} C(a,b,i,j) I₁(i,j)` with `φ = A_a(x) A_b(y)`, landing on `J`.
fn contract_i1(
    label: Label,
    weight: impl Fn(usize, usize, usize, usize) -> Result<Q, TensorError>,
) -> Result<LocalFunctional, DiagramError> {
    let t = tables();
    let mut out = LocalFunctional::new(0, LieSlot::Number);
    for a in spatial() {
        for b in spatial() {
            for i in spatial() {
                for j in spatial() {
                    let c = weight(a, b, i, j)?;
                    if c.is_zero() {
                        continue;
                    }
                    for (beta, v) in &t.i1[i - 1][j - 1] {
                        let (k, l) = second_order(beta).ok_or_else(|| unsupported(label, beta, v))?;
                        out.add(Basis::J { a, b, i: k, j: l }, &c * v);
                    }
                }
            }
        }
    }
    Ok(out)
}

struct Shape(DiagramShape);

macro_rules! shape_accessor {
    () => {
        fn shape(&self) -> &DiagramShape {
            &self.0 .0
        }
    };
}

/// `A A` external, two `P_AB` propagators.
pub struct DiagramI(Shape);
/// `A A` external, the ghost loop.
pub struct DiagramII(Shape);
/// `A B` external, `P_AB` and `P_AA`.
pub struct DiagramIII(Shape);
/// `B B` external, two `P_AA`.
pub struct DiagramIV(Shape);
/// `A A` external, the spinor loop.
pub struct DiagramV(Shape);

impl Diagram for DiagramI {
    shape_accessor!();

    fn index_ranges(&self) -> Vec<RangeInclusive<usize>> {
        vec![spatial(); 4]
    }

    fn weight_unchecked(&self, data: &CombinatorialData, idx: &[usize]) -> Result<Q, TensorError> {
        data.weight_i(idx[0], idx[1], idx[2], idx[3])
    }

    fn contraction(&self, data: &CombinatorialData) -> Result<LocalFunctional, DiagramError> {
        contract_i1(Label::I, |a, b, i, j| data.weight_i(a, b, i, j))
    }
}

impl Diagram for DiagramII {
    shape_accessor!();

    fn index_ranges(&self) -> Vec<RangeInclusive<usize>> {
        vec![spatial(); 4]
    }

    fn weight_unchecked(&self, data: &CombinatorialData, idx: &[usize]) -> Result<Q, TensorError> {
        data.weight_ii(idx[0], idx[1], idx[2], idx[3])
    }

    fn contraction(&self, data: &CombinatorialData) -> Result<LocalFunctional, DiagramError> {
        contract_i1(Label::II, |a, b, i, j| data.weight_ii(a, b, i, j))
    }
}

impl Diagram for DiagramV {
    shape_accessor!();

    fn index_ranges(&self) -> Vec<RangeInclusive<usize>> {
        vec![spatial(); 4]
    }

    fn weight_unchecked(&self, data: &CombinatorialData, idx: &[usize]) -> Result<Q, TensorError> {
        data.weight_v(idx[0], idx[1], idx[2], idx[3])
    }

    fn contraction(&self, data: &CombinatorialData) -> Result<LocalFunctional, DiagramError> {
        contract_i1(Label::V, |a, b, i, j| data.weight_v(a, b, i, j))
    }
}

/// The analytic factor of diagram III at `(i, j, k)`: the `∗Δ` piece
/// `4 δ^{jk} · t₂ ∂_i k₁ ∂_t k₂` minus the `d∗d` piece
/// `4 · t₂ ∂_i k₁ ∂_j ∂_k k₂`.
pub fn analytic_iii(i: usize, j: usize, k: usize) -> Markers {
    let t = tables();
    let mut out = Markers::new();
    let mut push = |m: &Markers, s: Q| {
        for (beta, v) in m {
            let e = out.entry(*beta).or_insert_with(Q::zero);
            *e += v * &s;
        }
    };
    if j == k {
        push(&t.xt[i - 1], qi(4));
    }
    push(&t.xxx[i - 1][j - 1][k - 1], qi(-4));
    out.retain(|_, v| !v.is_zero());
    out
}

impl Diagram for DiagramIII {
    shape_accessor!();

    fn index_ranges(&self) -> Vec<RangeInclusive<usize>> {
        vec![spatial(), self_dual(), spatial(), spatial(), spatial()]
    }

    fn weight_unchecked(&self, data: &CombinatorialData, idx: &[usize]) -> Result<Q, TensorError> {
        data.weight_iii(idx[0], idx[1], idx[2], idx[3], idx[4])
    }

    fn contraction(&self, data: &CombinatorialData) -> Result<LocalFunctional, DiagramError> {
        let mut analytic = BTreeMap::new();
        for i in spatial() {
            for j in spatial() {
                for k in spatial() {
                    analytic.insert((i, j, k), analytic_iii(i, j, k));
                }
            }
        }
        let mut out = LocalFunctional::new(0, LieSlot::Number);
        for a in spatial() {
            for b in self_dual() {
                for (&(i, j, k), markers) in &analytic {
                    let c = data.weight_iii(a, b, i, j, k)?;
                    if c.is_zero() {
                        continue;
                    }
                    for (beta, v) in markers {
                        let l = first_order(beta).ok_or_else(|| unsupported(Label::III, beta, v))?;
                        out.add(Basis::K { a, b, l }, &c * v);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl Diagram for DiagramIV {
    shape_accessor!();

    fn index_ranges(&self) -> Vec<RangeInclusive<usize>> {
        vec![self_dual(), self_dual(), spatial(), spatial(), spatial(), spatial()]
    }

    fn weight_unchecked(&self, data: &CombinatorialData, idx: &[usize]) -> Result<Q, TensorError> {
        data.weight_iv(idx[0], idx[1], idx[2], idx[3], idx[4], idx[5])
    }

    /// `4 C_{abmnmn} · tt + 8 C_{abinmn} · xxt(m, i) + 4 C_{abijmn} · xxx2(m, i, j)`
    /// with `∂_n` moved onto the first external field in the last term.
    fn contraction(&self, data: &CombinatorialData) -> Result<LocalFunctional, DiagramError> {
        let t = tables();
        let mut out = LocalFunctional::new(0, LieSlot::Number);
        let r = spatial();
        for a in self_dual() {
            for b in self_dual() {
                let mut markers: Markers = Markers::new();
                let mut push = |beta: MultiIndex, v: Q| {
                    let e = markers.entry(beta).or_insert_with(Q::zero);
                    *e += v;
                };
                for m in r.clone() {
                    for n in r.clone() {
                        let c = data.weight_iv(a, b, m, n, m, n)?;
                        for (beta, v) in &t.tt {
                            push(*beta, qi(4) * &c * v);
                        }
                        for i in r.clone() {
                            let c = data.weight_iv(a, b, i, n, m, n)?;
                            for (beta, v) in &t.xxt[m - 1][i - 1] {
                                push(*beta, qi(8) * &c * v);
                            }
                            for j in r.clone() {
                                let c = data.weight_iv(a, b, i, j, m, n)?;
                                for (beta, v) in &t.xxx2[m - 1][i - 1][j - 1] {
                                    let mut shifted = *beta;
                                    shifted[n - 1] += 1;
                                    push(shifted, qi(4) * &c * v);
                                }
                            }
                        }
                    }
                }
                for (beta, v) in markers {
                    if v.is_zero() {
                        continue;
                    }
                    if beta != [0; 4] {
                        return Err(unsupported(Label::IV, &beta, &v));
                    }
                    out.add(Basis::M { a, b }, v);
                }
            }
        }
        Ok(out)
    }
}

fn shape(
    label: Label,
    legs: [Species; 2],
    propagators: [PropagatorKind; 2],
    symmetry_factor: i64,
    sign: i32,
    lie_slot: LieSlot,
) -> Shape {
    Shape(DiagramShape { label, legs, propagators, symmetry_factor: qi(symmetry_factor), sign, lie_slot })
}

pub type DiagramRegistry = BTreeMap<Label, Arc<dyn Diagram>>;

/// The five labellings of the two-leg wheel.
pub fn build_registry() -> DiagramRegistry {
    use PropagatorKind::*;
    use Species::{A, B};
    let mut m: DiagramRegistry = BTreeMap::new();
    m.insert(Label::I, Arc::new(DiagramI(shape(Label::I, [A, A], [AB, AB], 1, 1, LieSlot::Adjoint))));
    m.insert(Label::II, Arc::new(DiagramII(shape(Label::II, [A, A], [ADualC, ADualC], 1, 1, LieSlot::Adjoint))));
    m.insert(Label::III, Arc::new(DiagramIII(shape(Label::III, [B, A], [AB, AA], 2, 1, LieSlot::Adjoint))));
    m.insert(Label::IV, Arc::new(DiagramIV(shape(Label::IV, [B, B], [AA, AA], 1, -1, LieSlot::Adjoint))));
    m.insert(Label::V, Arc::new(DiagramV(shape(Label::V, [A, A], [Psi, Psi], 1, 1, LieSlot::Matter))));
    m
}

/// Counterterm of one diagram, in the raw basis.
pub fn diagram_counterterm(d: &dyn Diagram) -> Result<LocalFunctional, DiagramError> {
    d.counterterm(&CombinatorialData::new())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReport {
    pub label: Label,
    pub raw: LocalFunctional,
    /// `None` when the diagram alone is not a multiple of the geometric basis.
    pub reduced: Option<LocalFunctional>,
    pub lie_slot: LieSlot,
}

/// Every diagram's raw and reduced counterterm, in label order.
pub fn report() -> Result<Vec<DiagramReport>, DiagramError> {
    use rayon::prelude::*;
    let registry = build_registry();
    let data = CombinatorialData::new();
    let diagrams: Vec<&Arc<dyn Diagram>> = registry.values().collect();
    diagrams
        .par_iter()
        .map(|d| {
            let raw = d.counterterm(&data)?;
            let reduced = j_basis_reduce(&raw).ok();
            Ok(DiagramReport { label: d.shape().label, raw, reduced, lie_slot: d.shape().lie_slot })
        })
        .collect()
}

/// The reduced sum of the raw counterterms of `labels`, which must share a
/// Lie slot.
pub fn reduced_sum(reports: &[DiagramReport], labels: &[Label]) -> Result<LocalFunctional, DiagramError> {
    let mut picked = reports.iter().filter(|r| labels.contains(&r.label));
    let first = picked.next().map(|r| r.raw.clone()).unwrap_or_else(|| LocalFunctional::new(COUPLING_POWER, LieSlot::Number));
    let total = picked.fold(first, |acc, r| {
        debug_assert_eq!(acc.lie, r.lie_slot);
        acc.plus(&r.raw)
    });
    Ok(j_basis_reduce(&total)?)
}
