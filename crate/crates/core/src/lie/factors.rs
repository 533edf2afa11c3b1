use num_traits::Zero;
use rayon::prelude::*;

use super::validate::{validate_algebra, validate_representation, StructuralError, ValidationReport};
use super::{LieAlgebraData, RepresentationData};
use crate::scalar::{fmt_q, mat_mul, transpose, zeros, Gq, Mat, Q};

/// Under `κ ↦ s κ` both Lie factors scale as `s^CASIMIR_KAPPA_EXPONENT`:
/// the contracted tensors are unchanged (adjoint) or independent of `κ`
/// (matter) while the reference `κ^{ef}` picks up one factor of `s`.
pub const CASIMIR_KAPPA_EXPONENT: i32 = -1;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LieError {
    #[error(transparent)]
    Structural(#[from] StructuralError),
    #[error("invalid input: {0}")]
    Invalid(ValidationReport),
    #[error("contraction is not proportional to kappa (residual {})", show(.residual))]
    NotProportional { residual: Mat<Q> },
    #[error("matter contraction has an imaginary part at ({a}, {b})")]
    NotReal { a: usize, b: usize },
    #[error("matter contraction couples the simple factors containing generators {a} and {b}")]
    MixedFactors { a: usize, b: usize },
}

fn show(m: &Mat<Q>) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}]", r.iter().map(fmt_q).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

/// One Lie factor per simple factor of the algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorValue {
    /// 0-based generator indices spanning the factor.
    pub indices: Vec<usize>,
    pub value: Q,
}

fn require_valid(report: ValidationReport) -> Result<(), LieError> {
    if report.is_empty() {
        Ok(())
    } else {
        Err(LieError::Invalid(report))
    }
}

/// Simple factors as connected components of the generators linked by
/// nonzero brackets or pairings. This presumes a basis adapted to the
/// decomposition, which holds for direct sums built from simple pieces.
pub fn simple_factors(l: &LieAlgebraData) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..l.dim).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut join = |x: usize, y: usize| {
        let (a, b) = (root(&mut parent, x), root(&mut parent, y));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    };
    for &(a, b, c) in l.f.keys() {
        join(a, b);
        join(a, c);
    }
    for a in 0..l.dim {
        for b in 0..l.dim {
            if !l.kappa[a][b].is_zero() {
                join(a, b);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..l.dim {
        let r = root(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    groups.into_values().collect()
}

/// `T^{ef} = V^{eac} V^{fbd} κ_{ab} κ_{cd}` with `V^{eac} = f^{ac}_d κ^{de}`.
pub fn adjoint_tensor(l: &LieAlgebraData) -> Result<Mat<Q>, LieError> {
    require_valid(validate_algebra(l)?)?;
    let n = l.dim;
    let kinv = l.kappa_inv.as_ref().expect("validated kappa is invertible");
    let mut v: Vec<Mat<Q>> = vec![zeros(n, n); n];
    for (&(a, c, d), x) in &l.f {
        for (e, ve) in v.iter_mut().enumerate() {
            if !l.kappa[d][e].is_zero() {
                ve[a][c] += x * &l.kappa[d][e];
            }
        }
    }
    let kinv_t = transpose(kinv);
    let w: Vec<Mat<Q>> = v.par_iter().map(|ve| mat_mul(&mat_mul(&kinv_t, ve), kinv)).collect();
    let t = (0..n)
        .into_par_iter()
        .map(|e| (0..n).map(|f| frobenius(&w[e], &v[f])).collect())
        .collect();
    Ok(t)
}

fn frobenius<T: crate::scalar::Field>(x: &Mat<T>, y: &Mat<T>) -> T {
    let mut s = T::zero();
    for (rx, ry) in x.iter().zip(y) {
        for (p, q) in rx.iter().zip(ry) {
            if !p.is_zero() && !q.is_zero() {
                s = s + p.clone() * q.clone();
            }
        }
    }
    s
}

/// `M^{ab} = W^a_{ik} W^b_{jl} μ_{ij} μ_{kl}` with `W^a = μ α^a`: the
/// lowered generator, raised back with `μ_{ij}` and contracted against the
/// same tensor for `b`. It equals `-tr(α^a α^b)`.
pub fn matter_tensor(l: &LieAlgebraData, r: &RepresentationData) -> Result<Mat<Q>, LieError> {
    require_valid(validate_algebra(l)?)?;
    require_valid(validate_representation(l, r)?)?;
    let n = l.dim;
    if r.dim_v == 0 {
        return Ok(zeros(n, n));
    }
    let mu_inv = r.mu_inv.as_ref().expect("validated mu is invertible");
    let mu_inv_t = transpose(mu_inv);
    let lowered: Vec<Mat<Gq>> = (0..n).map(|a| mat_mul(&r.mu, &r.action_matrix(a))).collect();
    let raised: Vec<Mat<Gq>> = lowered
        .par_iter()
        .map(|w| mat_mul(&mat_mul(&mu_inv_t, w), mu_inv))
        .collect();
    let rows: Vec<Vec<Gq>> = (0..n)
        .into_par_iter()
        .map(|a| (0..n).map(|b| frobenius(&raised[a], &lowered[b])).collect())
        .collect();
    let mut out = zeros(n, n);
    for (a, row) in rows.into_iter().enumerate() {
        for (b, x) in row.into_iter().enumerate() {
            if !x.im.is_zero() {
                return Err(LieError::NotReal { a: a + 1, b: b + 1 });
            }
            out[a][b] = x.re;
        }
    }
    Ok(out)
}

/// The constant `c` with `t = c κ` on the block `idx`.
fn proportionality(t: &Mat<Q>, kappa: &Mat<Q>, idx: &[usize]) -> Result<Q, LieError> {
    let mut c = None;
    'find: for &e in idx {
        for &f in idx {
            if !kappa[e][f].is_zero() {
                c = Some(&t[e][f] / &kappa[e][f]);
                break 'find;
            }
        }
    }
    let c = c.unwrap_or_else(Q::zero);
    let residual: Mat<Q> = idx
        .iter()
        .map(|&e| idx.iter().map(|&f| &t[e][f] - &c * &kappa[e][f]).collect())
        .collect();
    if residual.iter().flatten().all(Zero::is_zero) {
        Ok(c)
    } else {
        Err(LieError::NotProportional { residual })
    }
}

/// `C(𝔤)`, defined by `T^{ef} = C(𝔤) κ^{ef}`. Semisimple inputs whose
/// factors carry different constants fail here; use [`casimir_per_factor`].
pub fn casimir_adjoint(l: &LieAlgebraData) -> Result<Q, LieError> {
    let t = adjoint_tensor(l)?;
    let all: Vec<usize> = (0..l.dim).collect();
    proportionality(&t, &l.kappa, &all)
}

/// `C(V)`, defined by `M^{ab} = C(V) κ^{ab}`.
pub fn lie_factor_matter(l: &LieAlgebraData, r: &RepresentationData) -> Result<Q, LieError> {
    let m = matter_tensor(l, r)?;
    let all: Vec<usize> = (0..l.dim).collect();
    proportionality(&m, &l.kappa, &all)
}

fn per_factor(l: &LieAlgebraData, t: &Mat<Q>) -> Result<Vec<FactorValue>, LieError> {
    let factors = simple_factors(l);
    let mut owner = vec![0; l.dim];
    for (k, idx) in factors.iter().enumerate() {
        for &i in idx {
            owner[i] = k;
        }
    }
    for a in 0..l.dim {
        for b in 0..l.dim {
            if owner[a] != owner[b] && !t[a][b].is_zero() {
                return Err(LieError::MixedFactors { a: a + 1, b: b + 1 });
            }
        }
    }
    factors
        .into_iter()
        .map(|indices| {
            let value = proportionality(t, &l.kappa, &indices)?;
            Ok(FactorValue { indices, value })
        })
        .collect()
}

pub fn casimir_per_factor(l: &LieAlgebraData) -> Result<Vec<FactorValue>, LieError> {
    per_factor(l, &adjoint_tensor(l)?)
}

pub fn matter_per_factor(
    l: &LieAlgebraData,
    r: &RepresentationData,
) -> Result<Vec<FactorValue>, LieError> {
    per_factor(l, &matter_tensor(l, r)?)
}
