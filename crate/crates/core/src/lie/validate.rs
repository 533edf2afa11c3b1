use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use super::{LieAlgebraData, RepresentationData};
use crate::scalar::{gr, mat_add, mat_mul, mat_sub, transpose, Gq, Mat, Q};

/// Input whose shape does not match its declared dimensions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructuralError {
    #[error("{what}: expected dimension {expected}, got {got}")]
    Dimension { what: &'static str, expected: usize, got: usize },
    #[error("{what} index {index} is outside 1..={dim}")]
    IndexOutOfRange { what: &'static str, index: usize, dim: usize },
}

/// A violated invariant, with 1-based indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    /// `f^{ab}_c + f^{ba}_c ≠ 0`.
    Antisymmetry { a: usize, b: usize, c: usize },
    Jacobi { a: usize, b: usize, c: usize, d: usize },
    KappaNotSymmetric { a: usize, b: usize },
    KappaDegenerate,
    /// The stored `κ_{ab}` is not the inverse of `κ^{ab}`.
    KappaInverse,
    /// `f^{ab}_d κ^{dc}` is not antisymmetric in `(b, c)`.
    NotInvariant { a: usize, b: usize, c: usize },
    /// `[α^a, α^b] - f^{ab}_c α^c` is nonzero at `(i, j)`.
    Representation { a: usize, b: usize, i: usize, j: usize },
    MuNotSymmetric { i: usize, j: usize },
    MuDegenerate,
    MuInverse,
    /// `(α^a)ᵀ μ + μ α^a` is nonzero at `(i, j)`.
    MuNotInvariant { a: usize, i: usize, j: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Antisymmetry { a, b, c } => write!(f, "f not antisymmetric at ({a}, {b}, {c})"),
            Self::Jacobi { a, b, c, d } => write!(f, "Jacobi identity fails at ({a}, {b}, {c}, {d})"),
            Self::KappaNotSymmetric { a, b } => write!(f, "kappa not symmetric at ({a}, {b})"),
            Self::KappaDegenerate => write!(f, "kappa is degenerate"),
            Self::KappaInverse => write!(f, "kappa_inv * kappa is not the identity"),
            Self::NotInvariant { a, b, c } => write!(f, "kappa not ad-invariant at ({a}, {b}, {c})"),
            Self::Representation { a, b, i, j } => {
                write!(f, "representation property fails for ({a}, {b}) at entry ({i}, {j})")
            }
            Self::MuNotSymmetric { i, j } => write!(f, "mu not symmetric at ({i}, {j})"),
            Self::MuDegenerate => write!(f, "mu is degenerate"),
            Self::MuInverse => write!(f, "mu_inv * mu is not the identity"),
            Self::MuNotInvariant { a, i, j } => {
                write!(f, "generator {a} does not preserve mu at ({i}, {j})")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "no violations");
        }
        let lines: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{}", lines.join("; "))
    }
}

fn square(what: &'static str, m: &[Vec<impl Sized>], n: usize) -> Result<(), StructuralError> {
    if m.len() != n {
        return Err(StructuralError::Dimension { what, expected: n, got: m.len() });
    }
    match m.iter().find(|r| r.len() != n) {
        Some(r) => Err(StructuralError::Dimension { what, expected: n, got: r.len() }),
        None => Ok(()),
    }
}

fn in_range(what: &'static str, index: usize, dim: usize) -> Result<(), StructuralError> {
    if index < dim {
        Ok(())
    } else {
        Err(StructuralError::IndexOutOfRange { what, index: index + 1, dim })
    }
}

pub(super) fn check_algebra_shape(l: &LieAlgebraData) -> Result<(), StructuralError> {
    square("kappa", &l.kappa, l.dim)?;
    if let Some(inv) = &l.kappa_inv {
        square("kappa_inv", inv, l.dim)?;
    }
    for &(a, b, c) in l.f.keys() {
        for i in [a, b, c] {
            in_range("structure constant", i, l.dim)?;
        }
    }
    Ok(())
}

pub(super) fn check_representation_shape(r: &RepresentationData) -> Result<(), StructuralError> {
    square("mu", &r.mu, r.dim_v)?;
    if let Some(inv) = &r.mu_inv {
        square("mu_inv", inv, r.dim_v)?;
    }
    for &(_, i, j) in r.alpha.keys() {
        in_range("representation", i, r.dim_v)?;
        in_range("representation", j, r.dim_v)?;
    }
    Ok(())
}

fn inverse_ok<T: crate::scalar::Field>(m: &Mat<T>, inv: &Mat<T>) -> bool {
    let p = mat_mul(inv, m);
    p.iter().enumerate().all(|(i, r)| {
        r.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}

/// Checks antisymmetry, Jacobi, and the symmetry, nondegeneracy and
/// invariance of `κ`.
pub fn validate_algebra(l: &LieAlgebraData) -> Result<ValidationReport, StructuralError> {
    check_algebra_shape(l)?;
    let n = l.dim;
    let mut out = BTreeSet::new();

    for (&(a, b, c), v) in &l.f {
        if a == b {
            out.insert(Violation::Antisymmetry { a: a + 1, b: b + 1, c: c + 1 });
        } else if v.clone() + l.structure_constant(b, a, c) != Q::zero() {
            let (x, y) = (a.min(b), a.max(b));
            out.insert(Violation::Antisymmetry { a: x + 1, b: y + 1, c: c + 1 });
        }
    }

    // Sum each cyclic term of the Jacobi identity into a sparse table.
    let mut by_first: BTreeMap<usize, Vec<(usize, usize, &Q)>> = BTreeMap::new();
    for (&(e, c, d), v) in &l.f {
        by_first.entry(e).or_default().push((c, d, v));
    }
    let mut jacobi: BTreeMap<(usize, usize, usize, usize), Q> = BTreeMap::new();
    for (&(x, y, e), v) in &l.f {
        for &(z, d, w) in by_first.get(&e).map_or(&[][..], Vec::as_slice) {
            let vw = v * w;
            // f^{xy}_e f^{ez}_d enters at (a,b,c) = (x,y,z), (z,x,y) and (y,z,x).
            for key in [(x, y, z, d), (z, x, y, d), (y, z, x, d)] {
                *jacobi.entry(key).or_insert_with(Q::zero) += vw.clone();
            }
        }
    }
    for (&(a, b, c, d), v) in &jacobi {
        if !v.is_zero() {
            out.insert(Violation::Jacobi { a: a + 1, b: b + 1, c: c + 1, d: d + 1 });
        }
    }

    for a in 0..n {
        for b in a + 1..n {
            if l.kappa[a][b] != l.kappa[b][a] {
                out.insert(Violation::KappaNotSymmetric { a: a + 1, b: b + 1 });
            }
        }
    }
    match &l.kappa_inv {
        None => {
            out.insert(Violation::KappaDegenerate);
        }
        Some(inv) if !inverse_ok(&l.kappa, inv) => {
            out.insert(Violation::KappaInverse);
        }
        Some(_) => {}
    }

    // F^{abc} = f^{ab}_d κ^{dc} must be antisymmetric in (b, c).
    let mut lowered: BTreeMap<(usize, usize, usize), Q> = BTreeMap::new();
    for (&(a, b, d), v) in &l.f {
        for c in 0..n {
            if !l.kappa[d][c].is_zero() {
                *lowered.entry((a, b, c)).or_insert_with(Q::zero) += v * &l.kappa[d][c];
            }
        }
    }
    let get = |k: (usize, usize, usize)| lowered.get(&k).cloned().unwrap_or_else(Q::zero);
    for &(a, b, c) in lowered.keys() {
        if !(get((a, b, c)) + get((a, c, b))).is_zero() {
            let (x, y) = (b.min(c), b.max(c));
            out.insert(Violation::NotInvariant { a: a + 1, b: x + 1, c: y + 1 });
        }
    }

    Ok(ValidationReport { violations: out.into_iter().collect() })
}

/// Checks the representation property against `l` and the symmetry,
/// nondegeneracy and invariance of `μ`.
pub fn validate_representation(
    l: &LieAlgebraData,
    r: &RepresentationData,
) -> Result<ValidationReport, StructuralError> {
    check_algebra_shape(l)?;
    check_representation_shape(r)?;
    for &(a, _, _) in r.alpha.keys() {
        in_range("generator", a, l.dim)?;
    }
    let n = r.dim_v;
    let mut out = BTreeSet::new();
    let mats: Vec<Mat<Gq>> = (0..l.dim).map(|a| r.action_matrix(a)).collect();

    for a in 0..l.dim {
        for b in a + 1..l.dim {
            let mut m = mat_sub(&mat_mul(&mats[a], &mats[b]), &mat_mul(&mats[b], &mats[a]));
            for (&(_, _, c), v) in l.f.range((a, b, 0)..(a, b + 1, 0)) {
                let g = gr(v.clone());
                for i in 0..n {
                    for j in 0..n {
                        if !mats[c][i][j].is_zero() {
                            m[i][j] = m[i][j].clone() - g.clone() * mats[c][i][j].clone();
                        }
                    }
                }
            }
            for (i, row) in m.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        out.insert(Violation::Representation { a: a + 1, b: b + 1, i: i + 1, j: j + 1 });
                    }
                }
            }
        }
    }

    for i in 0..n {
        for j in i + 1..n {
            if r.mu[i][j] != r.mu[j][i] {
                out.insert(Violation::MuNotSymmetric { i: i + 1, j: j + 1 });
            }
        }
    }
    match &r.mu_inv {
        None => {
            out.insert(Violation::MuDegenerate);
        }
        Some(inv) if n > 0 && !inverse_ok(&r.mu, inv) => {
            out.insert(Violation::MuInverse);
        }
        Some(_) => {}
    }

    for (a, m) in mats.iter().enumerate() {
        let lhs = mat_add(&mat_mul(&transpose(m), &r.mu), &mat_mul(&r.mu, m));
        for (i, row) in lhs.iter().enumerate() {
            for (j, x) in row.iter().enumerate().skip(i) {
                if !x.is_zero() {
                    out.insert(Violation::MuNotInvariant { a: a + 1, i: i + 1, j: j + 1 });
                }
            }
        }
    }

    Ok(ValidationReport { violations: out.into_iter().collect() })
}
