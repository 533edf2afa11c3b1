//! Quadrature oracle for heat-time integrals.
//!
//! Integrals are evaluated in double-double precision with composite
//! Gauss-Legendre rules on geometrically graded panels, then fitted by
//! double-double least squares. Strong power divergences cancel many digits
//! before the `log ε` coefficient becomes visible, which is why plain `f64`
//! is not enough here.

use std::sync::OnceLock;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use twofloat::TwoFloat;

use super::{TIntegralError, TRationalTerm};

const GL_ORDER: usize = 24;
/// Relative accuracy assumed for each quadrature value when bounding the
/// error of the fitted log coefficient.
const VALUE_REL_ERROR: f64 = 1e-27;
/// Largest tolerated propagated error on the fitted log coefficient.
const MAX_FIT_ERROR: f64 = 1e-6;

fn tf(x: f64) -> TwoFloat {
    TwoFloat::from(x)
}

/// `a / b` to full double-double accuracy; the library quotient only
/// carries the leading word.
fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q1 = tf(a.hi() / b.hi());
    let r = a - b * q1;
    let q2 = tf(r.hi() / b.hi());
    let r = r - b * q2;
    q1 + q2 + tf(r.hi() / b.hi())
}

/// `ln 2` as a double-double.
fn ln2() -> TwoFloat {
    tf(std::f64::consts::LN_2) + tf(2.319_046_813_846_299_6e-17)
}

/// `e^y` by reduction modulo `ln 2`, a Taylor series on `r / 2⁵`
/// and repeated squaring. The `twofloat` transcendental functions are only
/// accurate to about `1e-12`.
fn dd_exp(y: TwoFloat) -> TwoFloat {
    let k = (y.hi() / std::f64::consts::LN_2).round();
    let r = (y - ln2() * tf(k)) * tf(1.0 / 32.0);
    let mut term = tf(1.0);
    let mut sum = tf(1.0);
    for n in 1..=20 {
        term = dd_div(term * r, tf(n as f64));
        sum += term;
    }
    for _ in 0..5 {
        sum = sum * sum;
    }
    sum * tf(2f64.powi(k as i32))
}

fn dd_ln(x: TwoFloat) -> TwoFloat {
    let mut y = tf(x.hi().ln());
    for _ in 0..2 {
        y += x * dd_exp(-y) - tf(1.0);
    }
    y
}

fn gauss_legendre() -> &'static [(TwoFloat, TwoFloat)] {
    static NODES: OnceLock<Vec<(TwoFloat, TwoFloat)>> = OnceLock::new();
    NODES.get_or_init(|| {
        let n = GL_ORDER;
        let mut out = Vec::with_capacity(n);
        for i in 1..=n {
            let guess = (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
            let mut x = tf(guess);
            let mut dp = tf(1.0);
            for _ in 0..12 {
                let (mut p0, mut p1) = (tf(1.0), x);
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = dd_div(x * p1 * tf(2.0 * kf - 1.0) - p0 * tf(kf - 1.0), tf(kf));
                    p0 = p1;
                    p1 = p2;
                }
                dp = dd_div((x * p1 - p0) * tf(n as f64), x * x - tf(1.0));
                x -= dd_div(p1, dp);
            }
            let w = dd_div(tf(2.0), (tf(1.0) - x * x) * dp * dp);
            out.push((x, w));
        }
        out
    })
}

/// Quadrature nodes on `[a, b]` with panels doubling in width away from `a`.
fn graded_nodes(a: TwoFloat, b: TwoFloat, first_width: TwoFloat) -> Vec<(TwoFloat, TwoFloat)> {
    let mut breaks = vec![a];
    let mut width = first_width;
    let mut x = a;
    while x + width < b {
        x += width;
        breaks.push(x);
        width *= tf(2.0);
    }
    breaks.push(b);
    let rule = gauss_legendre();
    let mut nodes = Vec::with_capacity((breaks.len() - 1) * rule.len());
    for w in breaks.windows(2) {
        let half = (w[1] - w[0]) / tf(2.0);
        let mid = (w[1] + w[0]) / tf(2.0);
        for &(x, wt) in rule {
            nodes.push((mid + half * x, half * wt));
        }
    }
    nodes
}

fn dd_powi(x: TwoFloat, n: i32) -> TwoFloat {
    if n >= 0 {
        x.powi(n)
    } else {
        dd_div(tf(1.0), x).powi(-n)
    }
}

/// `∫∫_{[ε,L]²} t₁^p t₂^q (t₁+t₂)^{-r}`, coefficient included.
fn t_integral(term: &TRationalTerm, eps: TwoFloat, l: TwoFloat) -> TwoFloat {
    let nodes = graded_nodes(eps, l, eps);
    let tp: Vec<TwoFloat> = nodes.iter().map(|&(t, w)| w * dd_powi(t, term.p)).collect();
    let tq: Vec<TwoFloat> = nodes.iter().map(|&(t, w)| w * dd_powi(t, term.q)).collect();
    let mut total = tf(0.0);
    for (i, &(t1, _)) in nodes.iter().enumerate() {
        let mut row = tf(0.0);
        for (j, &(t2, _)) in nodes.iter().enumerate() {
            row += tq[j] * dd_powi(t1 + t2, -term.r);
        }
        total += tp[i] * row;
    }
    total * tf(term.coeff.to_f64().unwrap_or(f64::NAN))
}

/// Fit model columns beyond the log and constant terms.
#[derive(Debug, Clone, PartialEq)]
pub struct FitOptions {
    /// Highest inverse power `ε^{-k}` included in the model.
    pub max_inverse_power: u32,
    /// Number of vanishing corrections `ε^j` and `ε^j log ε`, `j = 1..=n`.
    pub corrections: u32,
}

impl FitOptions {
    /// Inverse powers up to the homogeneity-allowed divergence, at least one.
    pub fn for_term(term: &TRationalTerm) -> Self {
        let m = (term.r - term.p - term.q - 2).max(1) as u32;
        Self { max_inverse_power: m, corrections: 2 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub log_coefficient: f64,
    /// Coefficients of `ε^{-1}, ε^{-2}, …`.
    pub inverse_powers: Vec<f64>,
    pub constant: f64,
    pub condition_number: f64,
    /// Propagated bound on the error of `log_coefficient` from rounding in the data.
    pub error_bound: f64,
}

fn check_grid(l: f64, grid: &[f64]) -> Result<(), TIntegralError> {
    if grid.len() < 2 {
        return Err(TIntegralError::BadGrid("need at least two points".into()));
    }
    if grid.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(TIntegralError::BadGrid("grid must be strictly decreasing".into()));
    }
    if grid.iter().any(|&e| !(e > 0.0 && e < l)) {
        return Err(TIntegralError::BadGrid("points must lie in (0, L)".into()));
    }
    Ok(())
}

fn dot(x: &[TwoFloat], y: &[TwoFloat]) -> TwoFloat {
    x.iter().zip(y).fold(tf(0.0), |acc, (&a, &b)| acc + a * b)
}

/// Least squares by twice-iterated modified Gram-Schmidt in double-double.
/// Returns the coefficients and the row of the pseudo-inverse that yields
/// coefficient 0.
fn least_squares(rows: &[Vec<TwoFloat>], y: &[TwoFloat]) -> (Vec<f64>, Vec<f64>) {
    let (m, n) = (rows.len(), rows[0].len());
    let mut q: Vec<Vec<TwoFloat>> = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    // A = Q R with orthogonal, unnormalized columns and unit upper triangular R.
    let mut r = vec![vec![tf(0.0); n]; n];
    let mut norms = vec![tf(0.0); n];
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let c = dd_div(dot(&q[k], &q[j]), norms[k]);
                r[k][j] += c;
                for i in 0..m {
                    let v = q[k][i];
                    q[j][i] -= c * v;
                }
            }
        }
        r[j][j] = tf(1.0);
        norms[j] = dot(&q[j], &q[j]);
    }
    let mut resid = y.to_vec();
    let mut c = vec![tf(0.0); n];
    for _ in 0..2 {
        for k in 0..n {
            let ck = dd_div(dot(&q[k], &resid), norms[k]);
            c[k] += ck;
            for i in 0..m {
                resid[i] -= ck * q[k][i];
            }
        }
    }
    let mut x = vec![tf(0.0); n];
    for j in (0..n).rev() {
        x[j] = c[j] - (j + 1..n).fold(tf(0.0), |acc, k| acc + r[j][k] * x[k]);
    }
    // w = e₀ᵀ R⁻¹, then g = Σ_k w_k q_k / |q_k|².
    let mut w = vec![tf(0.0); n];
    w[0] = tf(1.0);
    for k in 1..n {
        w[k] = -(0..k).fold(tf(0.0), |acc, j| acc + w[j] * r[j][k]);
    }
    let g = (0..m)
        .map(|i| (0..n).fold(tf(0.0), |acc, k| acc + dd_div(w[k] * q[k][i], norms[k])).hi())
        .collect();
    (x.iter().map(|v| v.hi()).collect(), g)
}

/// Least squares of `values` against the model columns; column 0 is `log ε`.
fn fit(grid: &[f64], values: &[TwoFloat], opts: &FitOptions) -> Result<FitReport, TIntegralError> {
    let columns = |e: f64| -> Vec<TwoFloat> {
        let e = tf(e);
        let le = dd_ln(e);
        let mut c = vec![le, tf(1.0)];
        for k in 1..=opts.max_inverse_power {
            c.push(dd_powi(e, -(k as i32)));
        }
        for j in 1..=opts.corrections {
            let ej = dd_powi(e, j as i32);
            c.push(ej);
            c.push(ej * le);
        }
        c
    };
    let rows: Vec<Vec<TwoFloat>> = grid.iter().map(|&e| columns(e)).collect();
    let ncol = rows[0].len();
    if grid.len() < ncol {
        return Err(TIntegralError::BadGrid(format!(
            "{} points cannot determine {ncol} coefficients",
            grid.len()
        )));
    }

    let norms: Vec<f64> = (0..ncol)
        .map(|j| rows.iter().map(|r| r[j].hi() * r[j].hi()).sum::<f64>().sqrt())
        .collect();
    let scaled = nalgebra::DMatrix::from_fn(rows.len(), ncol, |i, j| rows[i][j].hi() / norms[j]);
    let sv = scaled.singular_values();
    let condition_number = sv.max() / sv.min();

    let (coeffs, g) = least_squares(&rows, values);
    let error_bound = g
        .iter()
        .zip(values)
        .map(|(gi, v)| gi.abs() * v.hi().abs() * VALUE_REL_ERROR)
        .sum::<f64>();
    if !(error_bound < MAX_FIT_ERROR) {
        return Err(TIntegralError::IllConditioned { condition_number });
    }
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(TIntegralError::IllConditioned { condition_number: f64::INFINITY });
    }
    let m = opts.max_inverse_power as usize;
    Ok(FitReport {
        log_coefficient: coeffs[0],
        constant: coeffs[1],
        inverse_powers: coeffs[2..2 + m].to_vec(),
        condition_number,
        error_bound,
    })
}

/// Fitted `log ε` coefficient of the integral of `term` over `[ε, L]²`.
pub fn numeric_singular_fit(term: &TRationalTerm, l: f64, eps_grid: &[f64]) -> Result<f64, TIntegralError> {
    numeric_singular_fit_with(term, l, eps_grid, &FitOptions::for_term(term)).map(|r| r.log_coefficient)
}

pub fn numeric_singular_fit_with(
    term: &TRationalTerm,
    l: f64,
    eps_grid: &[f64],
    opts: &FitOptions,
) -> Result<FitReport, TIntegralError> {
    check_grid(l, eps_grid)?;
    let values: Vec<TwoFloat> = eps_grid
        .par_iter()
        .map(|&e| t_integral(term, tf(e), tf(l)))
        .collect();
    fit(eps_grid, &values, opts)
}

/// `n` logarithmically spaced points from `hi` down to `lo`.
pub fn log_grid(hi: f64, lo: f64, n: usize) -> Vec<f64> {
    let (a, b) = (hi.ln(), lo.ln());
    (0..n)
        .map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp())
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct WheelReport {
    pub vertices: usize,
    pub log_coefficient: f64,
    pub inverse_power: f64,
    pub constant: f64,
    /// Both divergent coefficients below [`WHEEL_TOLERANCE`].
    pub bounded: bool,
}

pub const WHEEL_TOLERANCE: f64 = 1e-2;

/// Irwin-Hall density of the sum of `n` independent uniforms on `[0, 1]`.
fn irwin_hall(n: usize, x: TwoFloat) -> TwoFloat {
    let mut binom = 1.0f64;
    let mut fact = 1.0f64;
    for k in 1..n {
        fact *= k as f64;
    }
    let mut acc = tf(0.0);
    for k in 0..=n {
        let shifted = x - tf(k as f64);
        if shifted.hi() > 0.0 {
            let term = shifted.powi((n - 1) as i32) * tf(binom);
            if k % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    dd_div(acc, tf(fact))
}

/// `∫_{[ε,L]^n} (t₁+⋯+t_n)^{-2}` through the density of the sum.
fn wheel_integral(n: usize, eps: TwoFloat, l: TwoFloat) -> TwoFloat {
    let w = l - eps;
    let ne = eps * tf(n as f64);
    let scale = dd_div(ne, w);
    let mut total = tf(0.0);
    for k in 0..n {
        let (a, b) = (tf(k as f64), tf(k as f64 + 1.0));
        let nodes = if k == 0 { graded_nodes(a, b, scale) } else { graded_nodes(a, b, b - a) };
        for (x, wt) in nodes {
            let s = ne + w * x;
            total += dd_div(wt * irwin_hall(n, x), s * s);
        }
    }
    total * w.powi(n as i32)
}

/// Fits the `n`-fold wheel t-integral on a decreasing ε grid.
pub fn wheel_convergence_check(n_vertices: usize) -> Result<WheelReport, TIntegralError> {
    if !(2..=5).contains(&n_vertices) {
        return Err(TIntegralError::WheelSize(n_vertices));
    }
    let l = 1.0;
    let grid = log_grid(1e-2, 1e-6, 16);
    let values: Vec<TwoFloat> = grid
        .par_iter()
        .map(|&e| wheel_integral(n_vertices, tf(e), tf(l)))
        .collect();
    let opts = FitOptions { max_inverse_power: 1, corrections: 2 };
    let r = fit(&grid, &values, &opts)?;
    let bounded = r.log_coefficient.abs() < WHEEL_TOLERANCE && r.inverse_powers[0].abs() < WHEEL_TOLERANCE;
    Ok(WheelReport {
        vertices: n_vertices,
        log_coefficient: r.log_coefficient,
        inverse_power: r.inverse_powers[0],
        constant: r.constant,
        bounded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qi;

    #[test]
    fn elementary_functions() {
        let e = dd_exp(tf(1.0));
        assert!((e - tf(std::f64::consts::E) - tf(1.445_646_891_729_250_2e-16)).abs().hi() < 1e-30);
        let l10 = dd_ln(tf(10.0));
        let want = tf(std::f64::consts::LN_10) - tf(2.170_756_223_382_249_5e-16);
        assert!((l10 - want).abs().hi() < 1e-30);
        assert!((dd_ln(tf(1.0 / 1024.0)) + tf(10.0) * ln2()).abs().hi() < 1e-29);
    }

    #[test]
    fn nodes_integrate_polynomials() {
        let one: TwoFloat = gauss_legendre().iter().fold(tf(0.0), |acc, &(_, w)| acc + w);
        assert!((one - tf(2.0)).abs().hi() < 1e-30);
        let x10: TwoFloat = gauss_legendre().iter().fold(tf(0.0), |acc, &(x, w)| acc + w * x.powi(10));
        assert!((x10 - dd_div(tf(2.0), tf(11.0))).abs().hi() < 1e-30);
    }

    #[test]
    fn convergent_integral_matches_closed_form() {
        let t = TRationalTerm::new(qi(1), 0, 0, 2);
        let v = t_integral(&t, tf(1.0), tf(2.0));
        let exact = 2.0 * 3.0f64.ln() - 3.0 * 2.0f64.ln();
        assert!((v.hi() - exact).abs() < 1e-14, "{} vs {exact}", v.hi());
    }

    #[test]
    fn irwin_hall_is_a_density() {
        for n in 2..=5 {
            let nodes: Vec<_> = (0..n)
                .flat_map(|k| graded_nodes(tf(k as f64), tf(k as f64 + 1.0), tf(1.0)))
                .collect();
            let mass: TwoFloat = nodes.iter().fold(tf(0.0), |acc, &(x, w)| acc + w * irwin_hall(n, x));
            assert!((mass - tf(1.0)).abs().hi() < 1e-25, "n = {n}");
        }
    }

    #[test]
    fn grid_validation() {
        let t = TRationalTerm::unit(0, 1, 3);
        assert!(numeric_singular_fit(&t, 1.0, &[1e-3, 1e-2]).is_err());
        assert!(numeric_singular_fit(&t, 1.0, &[2.0, 1e-2]).is_err());
    }
}
