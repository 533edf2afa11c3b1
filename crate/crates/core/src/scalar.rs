//! Exact scalars and the small amount of dense linear algebra the pipeline needs.

use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational.
pub type Q = BigRational;
/// Exact Gaussian rational `a + b i`.
pub type Gq = Complex<Q>;
/// Dense row-major matrix.
pub type Mat<T> = Vec<Vec<T>>;

pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn gq(re: Q, im: Q) -> Gq {
    Complex::new(re, im)
}

pub fn gr(re: Q) -> Gq {
    Complex::new(re, Q::zero())
}

/// The imaginary unit.
pub fn gi() -> Gq {
    Complex::new(Q::zero(), Q::one())
}

/// Serialize as `num/den`, always with an explicit denominator.
pub fn fmt_q(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Gaussian rational as `re` or `re + im i`, components in `num/den` form.
pub fn fmt_gq(x: &Gq) -> String {
    if x.im.is_zero() {
        fmt_q(&x.re)
    } else if x.im.is_negative() {
        format!("{} - {} i", fmt_q(&x.re), fmt_q(&-x.im.clone()))
    } else {
        format!("{} + {} i", fmt_q(&x.re), fmt_q(&x.im))
    }
}

/// Parse `7`, `-3/4` and friends.
pub fn parse_q(s: &str) -> Result<Q, String> {
    let t = s.trim();
    let r = Q::from_str(t).map_err(|e| format!("bad rational `{t}`: {e}"))?;
    if r.denom().is_zero() {
        return Err(format!("zero denominator in `{t}`"));
    }
    Ok(r)
}

pub fn to_f64(x: &Q) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Anything we can run Gauss-Jordan elimination over exactly.
pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

pub fn identity<T: Field>(n: usize) -> Mat<T> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect()
}

pub fn zeros<T: Field>(r: usize, c: usize) -> Mat<T> {
    vec![vec![T::zero(); c]; r]
}

pub fn mat_mul<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    let mut out: Mat<T> = zeros(n, m);
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] = out[i][j].clone() + a[i][l].clone() * b[l][j].clone();
                }
            }
        }
    }
    out
}

pub fn transpose<T: Field>(a: &Mat<T>) -> Mat<T> {
    let r = a.len();
    let c = a.first().map_or(0, Vec::len);
    (0..c).map(|j| (0..r).map(|i| a[i][j].clone()).collect()).collect()
}

pub fn mat_add<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.clone() + y.clone()).collect())
        .collect()
}

pub fn mat_sub<T: Field>(a: &Mat<T>, b: &Mat<T>) -> Mat<T> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.clone() - y.clone()).collect())
        .collect()
}

pub fn mat_scale<T: Field>(a: &Mat<T>, s: &T) -> Mat<T> {
    a.iter()
        .map(|r| r.iter().map(|x| x.clone() * s.clone()).collect())
        .collect()
}

pub fn is_zero_mat<T: Field>(a: &Mat<T>) -> bool {
    a.iter().all(|r| r.iter().all(Zero::is_zero))
}

pub fn trace<T: Field>(a: &Mat<T>) -> T {
    (0..a.len()).fold(T::zero(), |acc, i| acc + a[i][i].clone())
}

/// Row-reduce a copy; returns (rank, reduced matrix).
fn row_reduce<T: Field>(a: &Mat<T>) -> (usize, Mat<T>) {
    let mut m = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let piv = m[rank][col].clone();
        for j in 0..cols {
            m[rank][j] = m[rank][j].clone() / piv.clone();
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..cols {
                    let v = m[rank][j].clone();
                    m[r][j] = m[r][j].clone() - f.clone() * v;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (rank, m)
}

pub fn rank<T: Field>(a: &Mat<T>) -> usize {
    row_reduce(a).0
}

/// Exact inverse, `None` when singular.
pub fn inverse<T: Field>(a: &Mat<T>) -> Option<Mat<T>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return None;
    }
    let aug: Mat<T> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            row
        })
        .collect();
    let (_, red) = row_reduce(&aug);
    for (i, row) in red.iter().enumerate() {
        for (j, x) in row.iter().take(n).enumerate() {
            let want = if i == j { T::one() } else { T::zero() };
            if *x != want {
                return None;
            }
        }
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn real_mat(a: &Mat<Q>) -> Mat<Gq> {
    a.iter().map(|r| r.iter().cloned().map(gr).collect()).collect()
}
