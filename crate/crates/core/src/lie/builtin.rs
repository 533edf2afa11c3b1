//! `su(N)` and its standard representations, generated from explicit
//! matrices at run time.

use num_traits::{One, Zero};

use super::validate::{validate_algebra, validate_representation};
use super::{LieAlgebraData, RepresentationData, StructureConstants};
use crate::scalar::{gi, gr, identity, inverse, mat_mul, mat_sub, q, qi, real_mat, trace, zeros, Gq, Mat, Q};

/// Names accepted by [`SpecialUnitary::representation`].
pub const BUILTIN_REPS: [&str; 3] = ["adjoint", "fund", "fundc"];

/// `su(N)` in the basis of anti-Hermitian matrices
///
/// ```text
/// X_{jk} = -(i/2)(E_jk + E_kj),  Y_{jk} = -(1/2)(E_jk - E_kj)   (j < k),
/// H_j = -(i/2)(E_jj - E_{j+1,j+1}),
/// ```
///
/// ordered `X_{jk}, Y_{jk}` pair by pair and then the `H_j`, with
/// `κ(X, Y) = -2 tr(XY)`. For `N = 2` this is `f^{ab}_c = ε_{abc}`, `κ = 1`.
#[derive(Debug, Clone)]
pub struct SpecialUnitary {
    n: usize,
    generators: Vec<Mat<Gq>>,
    algebra: LieAlgebraData,
}

fn unit(n: usize, j: usize, k: usize) -> Mat<Gq> {
    let mut m: Mat<Gq> = zeros(n, n);
    m[j][k] = Gq::one();
    m
}

fn scale(m: &Mat<Gq>, s: &Gq) -> Mat<Gq> {
    m.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

fn add(x: &Mat<Gq>, y: &Mat<Gq>) -> Mat<Gq> {
    x.iter().zip(y).map(|(a, b)| a.iter().zip(b).map(|(u, v)| u + v).collect()).collect()
}

fn trace_form(x: &Mat<Gq>, y: &Mat<Gq>) -> Q {
    let t = trace(&mat_mul(x, y)) * gr(qi(-2));
    assert!(t.im.is_zero(), "trace form of anti-Hermitian matrices is real");
    t.re
}

fn conj(m: &Mat<Gq>) -> Mat<Gq> {
    m.iter().map(|r| r.iter().map(Gq::conj).collect()).collect()
}

impl SpecialUnitary {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "su(N) needs N >= 2");
        let half_i = gi() * gr(q(-1, 2));
        let mut generators = Vec::new();
        for j in 0..n {
            for k in j + 1..n {
                generators.push(scale(&add(&unit(n, j, k), &unit(n, k, j)), &half_i));
                generators.push(scale(&mat_sub(&unit(n, k, j), &unit(n, j, k)), &gr(q(1, 2))));
            }
        }
        for j in 0..n - 1 {
            generators.push(scale(&mat_sub(&unit(n, j, j), &unit(n, j + 1, j + 1)), &half_i));
        }
        let dim = generators.len();
        let kappa: Mat<Q> = generators
            .iter()
            .map(|x| generators.iter().map(|y| trace_form(x, y)).collect())
            .collect();
        let kinv = inverse(&kappa).expect("trace form is nondegenerate on su(N)");
        let mut f = StructureConstants::new();
        for a in 0..dim {
            for b in 0..dim {
                let ta = &generators[a];
                let tb = &generators[b];
                let br = mat_sub(&mat_mul(ta, tb), &mat_mul(tb, ta));
                let proj: Vec<Q> = generators.iter().map(|td| trace_form(td, &br)).collect();
                for c in 0..dim {
                    let v = (0..dim).fold(Q::zero(), |acc, d| acc + &proj[d] * &kinv[d][c]);
                    if !v.is_zero() {
                        f.insert((a, b, c), v);
                    }
                }
            }
        }
        let algebra = LieAlgebraData::new(format!("su({n})"), dim, f, kappa).expect("shapes agree");
        let report = validate_algebra(&algebra).expect("shapes agree");
        assert!(report.is_empty(), "generated su({n}) fails validation: {report}");
        Self { n, generators, algebra }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn algebra(&self) -> &LieAlgebraData {
        &self.algebra
    }

    /// The defining `N × N` anti-Hermitian matrices.
    pub fn generators(&self) -> &[Mat<Gq>] {
        &self.generators
    }

    /// Fundamental ⊕ conjugate as a real `2N`-dimensional representation:
    /// `X = A + iB ↦ [[A, -B], [B, A]]` with `μ = 1`.
    pub fn fundamental_real(&self) -> RepresentationData {
        let n = self.n;
        let mats: Vec<Mat<Gq>> = self
            .generators
            .iter()
            .map(|x| {
                let mut m: Mat<Gq> = zeros(2 * n, 2 * n);
                for i in 0..n {
                    for j in 0..n {
                        let (re, im) = (gr(x[i][j].re.clone()), gr(x[i][j].im.clone()));
                        m[i][j] = re.clone();
                        m[i][j + n] = -im.clone();
                        m[i + n][j] = im;
                        m[i + n][j + n] = re;
                    }
                }
                m
            })
            .collect();
        self.checked(RepresentationData::from_matrices("fund", &mats, identity(2 * n)))
    }

    /// Fundamental ⊕ conjugate with complex entries: `X ↦ diag(X, X̄)`,
    /// paired by `μ = [[0, 1], [1, 0]]`.
    pub fn fundamental_complex(&self) -> RepresentationData {
        let n = self.n;
        let mats: Vec<Mat<Gq>> = self
            .generators
            .iter()
            .map(|x| {
                let xc = conj(x);
                let mut m: Mat<Gq> = zeros(2 * n, 2 * n);
                for i in 0..n {
                    for j in 0..n {
                        m[i][j] = x[i][j].clone();
                        m[i + n][j + n] = xc[i][j].clone();
                    }
                }
                m
            })
            .collect();
        let mut mu: Mat<Gq> = zeros(2 * n, 2 * n);
        for i in 0..n {
            mu[i][i + n] = Gq::one();
            mu[i + n][i] = Gq::one();
        }
        self.checked(RepresentationData::from_matrices("fundc", &mats, mu))
    }

    /// One of [`BUILTIN_REPS`].
    pub fn representation(&self, name: &str) -> Option<RepresentationData> {
        match name {
            "adjoint" => Some(adjoint(&self.algebra)),
            "fund" => Some(self.fundamental_real()),
            "fundc" => Some(self.fundamental_complex()),
            _ => None,
        }
    }

    fn checked(&self, r: Result<RepresentationData, super::StructuralError>) -> RepresentationData {
        let r = r.expect("generated shapes agree");
        let report = validate_representation(&self.algebra, &r).expect("generated shapes agree");
        assert!(report.is_empty(), "generated {} fails validation: {report}", r.name);
        r
    }
}

/// `su(N)` alone.
pub fn su(n: usize) -> LieAlgebraData {
    SpecialUnitary::new(n).algebra
}

/// `(ad_a)_{ij} = f^{aj}_i`, paired by `κ`.
pub fn adjoint(l: &LieAlgebraData) -> RepresentationData {
    let alpha = l.f.iter().map(|(&(a, j, i), v)| ((a, i, j), gr(v.clone()))).collect();
    RepresentationData::new("adjoint", l.dim, alpha, real_mat(&l.kappa)).expect("square kappa")
}
