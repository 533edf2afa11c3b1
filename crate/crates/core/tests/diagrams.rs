use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use proptest::prelude::*;
use ymbeta::diagrams::analytic::{
    analytic_weight_i1, analytic_weight_tt, analytic_weight_xt, analytic_weight_xxt, analytic_weight_xxx,
    analytic_weight_xxx2, HeatPolynomial, Markers,
};
use ymbeta::diagrams::combinatorial::{tadpole_contraction, CombinatorialData, End};
use ymbeta::diagrams::{
    analytic_iii, build_registry, dada_in_j, j_basis_reduce, reduced_sum, report, Basis, DiagramError, DiagramReport,
    Label, LieSlot, LocalFunctional,
};
use ymbeta::gaussian::{self, MultiIndex};
use ymbeta::lie::{adjoint_tensor, matter_tensor, su, SpecialUnitary};
use ymbeta::scalar::{q, qi, Gq, Q};
use ymbeta::spacetime::kernels::{elementary_aa, propagator_ab};
use ymbeta::spacetime::{vertex_tensors, BasisElement, Species};

fn e(i: usize) -> MultiIndex {
    gaussian::unit(i - 1)
}

fn ee(i: usize, j: usize) -> MultiIndex {
    gaussian::add(&e(i), &e(j))
}

fn markers(entries: &[(MultiIndex, Q)]) -> Markers {
    entries.iter().filter(|(_, v)| !v.is_zero()).cloned().collect()
}

fn delta(i: usize, j: usize) -> i64 {
    i64::from(i == j)
}

fn levi_civita(idx: [usize; 4]) -> i64 {
    let mut sign = 1;
    for x in 0..4 {
        for y in x + 1..4 {
            match idx[x].cmp(&idx[y]) {
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Equal => return 0,
                _ => {}
            }
        }
    }
    sign
}

fn multi_indices(degree: u32) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    for a in 0..=degree {
        for b in 0..=degree - a {
            for c in 0..=degree - a - b {
                out.push([a, b, c, degree - a - b - c]);
            }
        }
    }
    out
}

fn factorial(n: u32) -> Q {
    (1..=n).fold(Q::one(), |acc, k| acc * qi(k.into()))
}

fn odd_double_factorial(k: u32) -> Q {
    (1..=k).fold(Q::one(), |acc, m| acc * qi((2 * m - 1).into()))
}

/// Log part by direct moments, without the Wick expansion. Substituting
/// `x = y + z` and Taylor expanding the test function gives marker `β` the
/// weight `(1/β!) ∫ z^β D₁k D₂k`. With the Gaussian stripped, each 1D moment
/// is `(2k-1)!! 2^k τ^{-k-1/2}` up to the common `π²`, and a term
/// `t₁^{n₁} t₂^{n₂} τ^{-2-K}` of degree `-2` has log coefficient
/// `-∫₀¹ u^{n₁+2+K} (1-u)^{n₂+2+K} du`.
fn moment_oracle(p1: &HeatPolynomial, p2: &HeatPolynomial) -> Markers {
    let mut out = Markers::new();
    for (a1, n1, c1) in p1.terms() {
        for (a2, n2, c2) in p2.terms() {
            let alpha = gaussian::add(a1, a2);
            let k = -4 - n1 - n2;
            let deg_beta = 2 * k - gaussian::degree(&alpha) as i32;
            if k < 0 || deg_beta < 0 {
                continue;
            }
            for beta in multi_indices(deg_beta as u32) {
                let gamma = gaussian::add(&alpha, &beta);
                if gamma.iter().any(|g| g % 2 == 1) {
                    continue;
                }
                let moment = gamma
                    .iter()
                    .fold(Q::one(), |acc, &g| acc * odd_double_factorial(g / 2) * qi(1 << (g / 2)));
                let (p, r) = (n1 + 2 + k, n2 + 2 + k);
                assert!(p >= 0 && r >= 0, "oracle only handles convergent u-integrals");
                let (p, r) = (p as u32, r as u32);
                let beta_fn = factorial(p) * factorial(r) / factorial(p + r + 1);
                let beta_fact = beta.iter().fold(Q::one(), |acc, &b| acc * factorial(b));
                *out.entry(beta).or_insert_with(Q::zero) -= c1 * c2 * moment * beta_fn / beta_fact;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn k() -> HeatPolynomial {
    HeatPolynomial::kernel()
}

#[test]
fn analytic_weights_agree_with_moment_oracle() {
    for i in 1..=4 {
        assert_eq!(analytic_weight_xt(i), moment_oracle(&k().dx(i), &k().dt().times_t(1)));
        for j in 1..=4 {
            assert_eq!(analytic_weight_i1(i, j), moment_oracle(&k().dx(i), &k().dx(j)));
            let xxt = moment_oracle(&k().dx(i).dt().times_t(1), &k().dx(j).times_t(1));
            assert_eq!(analytic_weight_xxt(i, j), xxt);
            for l in 1..=4 {
                let xxx = moment_oracle(&k().dx(i), &k().dx(j).dx(l).times_t(1));
                assert_eq!(analytic_weight_xxx(i, j, l), xxx);
                let xxx2 = moment_oracle(&k().dx(i).dx(j).times_t(1), &k().dx(l).times_t(1));
                assert_eq!(analytic_weight_xxx2(i, j, l), xxx2);
            }
        }
    }
    assert_eq!(analytic_weight_tt(), moment_oracle(&k().dt().times_t(1), &k().dt().times_t(1)));
}

#[test]
fn first_derivative_pair() {
    for i in 1..=4 {
        for j in 1..=4 {
            let expected: Vec<(MultiIndex, Q)> = if i == j {
                (1..=4).map(|m| (ee(m, m), if m == i { q(-1, 4) } else { q(-1, 12) })).collect()
            } else {
                vec![(ee(i, j), q(-1, 6))]
            };
            assert_eq!(analytic_weight_i1(i, j), markers(&expected), "({i}, {j})");
            assert_eq!(analytic_weight_i1(i, j), analytic_weight_i1(j, i));
        }
    }
}

#[test]
fn first_times_second_derivative() {
    for i in 1..=4 {
        for j in 1..=4 {
            for l in 1..=4 {
                let mut m = Markers::new();
                for (idx, c) in [(l, delta(i, j)), (j, delta(i, l)), (i, -2 * delta(j, l))] {
                    *m.entry(e(idx)).or_insert_with(Q::zero) += q(c, 12);
                }
                m.retain(|_, v| !v.is_zero());
                assert_eq!(analytic_weight_xxx(i, j, l), m, "({i}, {j}, {l})");
            }
        }
    }
}

/// `∂_t k = Δk` turns the time derivative into a trace of second
/// derivatives, which fixes `-1/2`.
#[test]
fn time_derivative_is_trace_of_second_derivatives() {
    for i in 1..=4 {
        let mut trace = Markers::new();
        for j in 1..=4 {
            for (b, v) in analytic_weight_xxx(i, j, j) {
                *trace.entry(b).or_insert_with(Q::zero) += v;
            }
        }
        assert_eq!(analytic_weight_xt(i), trace);
        assert_eq!(analytic_weight_xt(i), markers(&[(e(i), q(-1, 2))]));
    }
}

#[test]
fn second_order_time_weights() {
    assert_eq!(analytic_weight_tt(), markers(&[([0; 4], qi(-1))]));
    for i in 1..=4 {
        for j in 1..=4 {
            assert_eq!(analytic_weight_xxt(i, j), markers(&[([0; 4], q(delta(i, j), 4))]));
            for m in 1..=4 {
                assert!(analytic_weight_xxx2(m, i, j).is_empty());
            }
        }
    }
}

#[test]
fn diagram_i_case_table() {
    let d = CombinatorialData::new();
    for a in 1..=4 {
        for b in 1..=4 {
            for i in 1..=4 {
                for j in 1..=4 {
                    let c = d.weight_i(a, b, i, j).unwrap();
                    let eps = levi_civita([i, j, a, b]);
                    let expected = if a == b {
                        match (i == j, i == a) {
                            (false, _) => 0,
                            (true, true) => 3,
                            (true, false) => -2,
                        }
                    } else if (i, j) == (b, a) {
                        3
                    } else if (i, j) == (a, b) {
                        2
                    } else {
                        -2 * eps
                    };
                    assert_eq!(c, qi(expected), "C_I({a},{b},{i},{j})");
                }
            }
        }
    }
}

/// The `ε` entries of the diagram I table are antisymmetric in `(i, j)` and
/// contract to zero against the symmetric analytic weight.
#[test]
fn levi_civita_part_drops_out() {
    let d = CombinatorialData::new();
    for a in 1..=4 {
        for b in (1..=4).filter(|&b| b != a) {
            let mut total = Markers::new();
            for i in 1..=4 {
                for j in 1..=4 {
                    if levi_civita([i, j, a, b]) == 0 {
                        continue;
                    }
                    let c = d.weight_i(a, b, i, j).unwrap();
                    assert_eq!(c, -d.weight_i(a, b, j, i).unwrap());
                    for (beta, v) in analytic_weight_i1(i, j) {
                        *total.entry(beta).or_insert_with(Q::zero) += &c * v;
                    }
                }
            }
            total.retain(|_, v| !v.is_zero());
            assert!(total.is_empty(), "a={a} b={b}: {total:?}");
        }
    }
}

#[test]
fn ghost_and_spinor_tables() {
    let d = CombinatorialData::new();
    for a in 1..=4 {
        for b in 1..=4 {
            for i in 1..=4 {
                for j in 1..=4 {
                    assert_eq!(d.weight_ii(a, b, i, j).unwrap(), qi(-delta(i, a) * delta(j, b)));
                    let trace = 4 * (delta(i, a) * delta(j, b) - delta(i, j) * delta(a, b) + delta(i, b) * delta(a, j));
                    assert_eq!(d.weight_v(a, b, i, j).unwrap(), qi(-trace), "C_V({a},{b},{i},{j})");
                }
            }
        }
    }
}

#[test]
fn diagram_iii_traces() {
    let d = CombinatorialData::new();
    for b in 2..=4 {
        for k in 1..=4 {
            let mut s = [Q::zero(), Q::zero(), Q::zero()];
            for i in 1..=4 {
                s[0] += d.weight_iii(1, b, i, i, k).unwrap();
                s[1] += d.weight_iii(1, b, i, k, i).unwrap();
                s[2] += d.weight_iii(1, b, k, i, i).unwrap();
            }
            let dk = delta(b, k);
            assert_eq!(s, [qi(-4 * dk), qi(-3 * dk), qi(dk)], "b={b} k={k}");
        }
    }
}

#[test]
fn diagram_iv_trace() {
    let d = CombinatorialData::new();
    for a in 2..=4 {
        for b in 2..=4 {
            let mut s = Q::zero();
            for m in 1..=4 {
                for n in 1..=4 {
                    s += d.weight_iv(a, b, m, n, m, n).unwrap();
                }
            }
            assert_eq!(s, qi(-4 * delta(a, b)));
        }
    }
}

#[test]
fn out_of_range_indices_are_rejected() {
    let reg = build_registry();
    let data = CombinatorialData::new();
    let err = reg[&Label::III].combinatorial_weight(&data, &[1, 1, 1, 1, 1]).unwrap_err();
    assert!(matches!(err, DiagramError::Indices { label: Label::III, .. }));
    assert!(reg[&Label::I].combinatorial_weight(&data, &[1, 2, 3]).is_err());
    assert_eq!(reg[&Label::I].combinatorial_weight(&data, &[1, 1, 1, 1]).unwrap(), qi(3));
}

fn adjoint_functional(entries: impl IntoIterator<Item = (Basis, Q)>, lie: LieSlot) -> LocalFunctional {
    let mut f = LocalFunctional::new(2, lie);
    for (b, c) in entries {
        f.add(b, c);
    }
    f
}

fn reports() -> &'static [DiagramReport] {
    static R: OnceLock<Vec<DiagramReport>> = OnceLock::new();
    R.get_or_init(|| report().unwrap())
}

fn raw(label: Label) -> LocalFunctional {
    reports().iter().find(|r| r.label == label).unwrap().raw.clone()
}

#[test]
fn diagram_i_raw() {
    let mut want = Vec::new();
    for a in 1..=4 {
        want.push((Basis::J { a, b: a, i: a, j: a }, q(-3, 12)));
        for i in (1..=4).filter(|&i| i != a) {
            want.push((Basis::J { a, b: a, i, j: i }, q(7, 12)));
            want.push((Basis::J { a, b: i, i, j: a }, q(-5, 6)));
        }
    }
    assert_eq!(raw(Label::I), adjoint_functional(want, LieSlot::Adjoint));
}

#[test]
fn diagram_ii_raw() {
    let mut want = Vec::new();
    for a in 1..=4 {
        want.push((Basis::J { a, b: a, i: a, j: a }, q(3, 12)));
        for m in (1..=4).filter(|&m| m != a) {
            want.push((Basis::J { a, b: m, i: m, j: a }, q(1, 6)));
            want.push((Basis::J { a, b: a, i: m, j: m }, q(1, 12)));
        }
    }
    assert_eq!(raw(Label::II), adjoint_functional(want, LieSlot::Adjoint));
}

#[test]
fn diagram_iii_raw_for_first_component() {
    let f = raw(Label::III);
    for b in 2..=4 {
        for l in 1..=4 {
            assert_eq!(f.get(Basis::K { a: 1, b, l }), qi(2 * delta(b, l)));
        }
    }
}

#[test]
fn diagram_iv_raw() {
    let want = (2..=4).map(|a| (Basis::M { a, b: a }, qi(-8)));
    assert_eq!(raw(Label::IV), adjoint_functional(want, LieSlot::Adjoint));
}

#[test]
fn reduced_counterterms() {
    let r = reports();
    let reduced = |l: Label| r.iter().find(|x| x.label == l).unwrap().reduced.clone();
    assert_eq!(reduced(Label::I), None);
    assert_eq!(reduced(Label::II), None);
    assert_eq!(
        reduced_sum(r, &[Label::I, Label::II]).unwrap(),
        adjoint_functional([(Basis::FF, q(-4, 3))], LieSlot::Adjoint)
    );
    assert_eq!(reduced(Label::III), Some(adjoint_functional([(Basis::FB, qi(-2))], LieSlot::Adjoint)));
    assert_eq!(reduced(Label::IV), Some(adjoint_functional([(Basis::BB, qi(-4))], LieSlot::Adjoint)));
    assert_eq!(reduced(Label::V), Some(adjoint_functional([(Basis::FF, q(8, 3))], LieSlot::Matter)));
    let labels: Vec<Label> = r.iter().map(|x| x.label).collect();
    assert_eq!(labels, Label::ALL);
}

#[test]
fn registry_shapes() {
    let reg = build_registry();
    assert_eq!(reg.keys().copied().collect::<Vec<_>>(), Label::ALL);
    assert_eq!(reg[&Label::III].shape().symmetry_factor, qi(2));
    assert_eq!(reg[&Label::III].shape().legs, [Species::B, Species::A]);
    assert_eq!(reg[&Label::V].shape().lie_slot, LieSlot::Matter);
    for l in Label::ALL {
        assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
    }
    assert!("VI".parse::<Label>().is_err());
}

/// Grouping the `∗Δ` piece of diagram III as a trace of second derivatives
/// instead of a time derivative gives the same counterterm.
#[test]
fn diagram_iii_alternative_grouping() {
    let d = CombinatorialData::new();
    let mut direct = LocalFunctional::new(0, LieSlot::Number);
    let mut traced = LocalFunctional::new(0, LieSlot::Number);
    for a in 1..=4 {
        for b in 2..=4 {
            for i in 1..=4 {
                for j in 1..=4 {
                    for kk in 1..=4 {
                        let c = d.weight_iii(a, b, i, j, kk).unwrap();
                        if c.is_zero() {
                            continue;
                        }
                        for (beta, v) in analytic_iii(i, j, kk) {
                            let l = beta.iter().position(|&n| n == 1).unwrap() + 1;
                            direct.add(Basis::K { a, b, l }, &c * v * qi(2));
                        }
                        let mut alt: Vec<(MultiIndex, Q)> =
                            analytic_weight_xxx(i, j, kk).into_iter().map(|(b, v)| (b, v * qi(-4))).collect();
                        if j == kk {
                            for m in 1..=4 {
                                alt.extend(analytic_weight_xxx(i, m, m).into_iter().map(|(b, v)| (b, v * qi(4))));
                            }
                        }
                        for (beta, v) in alt {
                            let l = beta.iter().position(|&n| n == 1).unwrap() + 1;
                            traced.add(Basis::K { a, b, l }, &c * v * qi(2));
                        }
                    }
                }
            }
        }
    }
    assert_eq!(direct, traced);
    assert_eq!(direct, raw(Label::III).relabelled(0, LieSlot::Number));
}

/// Coefficients of `t^n` at `z = 0`.
fn at_coincidence(p: &HeatPolynomial) -> BTreeMap<i32, Q> {
    p.terms().filter(|(a, _, _)| **a == [0; 4]).map(|(_, n, c)| (n, c.clone())).collect()
}

/// A propagator closing on a single vertex is a first derivative of the
/// kernel at coincident points, which vanishes, or a second derivative,
/// which is proportional to `δ` and meets a vertex antisymmetric in its two
/// `A` slots.
#[test]
fn tadpoles_vanish() {
    for i in 1..=4 {
        assert!(at_coincidence(&k().dx(i)).is_empty());
        for j in 1..=4 {
            assert_eq!(at_coincidence(&k().dx(i).dx(j)).is_empty(), i != j);
        }
    }
    let v = vertex_tensors();
    let externals = (1..=4).map(BasisElement::OneForm).chain((2..=4).map(BasisElement::SelfDual));
    for ext in externals {
        let aab = End { vertex: &v.aab.tensor, external: ext };
        let mut trace = Gq::zero();
        for j in 1..=4 {
            trace += tadpole_contraction(aab, &elementary_aa(j, j)).unwrap();
        }
        assert!(trace.is_zero(), "{ext:?}");
    }
}

type Poly = BTreeMap<MultiIndex, Q>;

/// `∂_i (p e^{-|x|²/2}) = (∂_i p - x_i p) e^{-|x|²/2}`.
fn d(p: &Poly, i: usize) -> Poly {
    let m = i - 1;
    let mut out = Poly::new();
    for (alpha, c) in p {
        if alpha[m] > 0 {
            let mut lower = *alpha;
            lower[m] -= 1;
            *out.entry(lower).or_insert_with(Q::zero) += c * qi(alpha[m].into());
        }
        let mut upper = *alpha;
        upper[m] += 1;
        *out.entry(upper).or_insert_with(Q::zero) -= c;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `∫ p e^{-|x|²/2} · r e^{-|x|²/2}` in units of `π²`.
fn integral(p: &Poly, r: &Poly) -> Q {
    let mut s = Q::zero();
    for (a, c) in p {
        for (b, c2) in r {
            let g = gaussian::add(a, b);
            if g.iter().any(|x| x % 2 == 1) {
                continue;
            }
            let m = g.iter().fold(Q::one(), |acc, &x| acc * odd_double_factorial(x / 2) / qi(1 << (x / 2)));
            s += c * c2 * m;
        }
    }
    s
}

#[derive(Debug)]
struct Fields {
    a: [Poly; 4],
    /// `B_2, B_3, B_4`.
    b: [Poly; 3],
}

impl Fields {
    fn f(&self, i: usize, j: usize) -> Poly {
        let mut out = d(&self.a[j - 1], i);
        for (k, v) in d(&self.a[i - 1], j) {
            *out.entry(k).or_insert_with(Q::zero) -= v;
        }
        out
    }

    fn bb(&self, b: usize) -> &Poly {
        &self.b[b - 2]
    }

    /// `Σ_{i<j} ∫ F_ij²`.
    fn f_squared(&self) -> Q {
        let mut s = Q::zero();
        for i in 1..=4 {
            for j in i + 1..=4 {
                s += integral(&self.f(i, j), &self.f(i, j));
            }
        }
        s
    }

    fn eval_basis(&self, e: Basis) -> Q {
        match e {
            Basis::J { a, b, i, j } => integral(&d(&d(&self.a[a - 1], i), j), &self.a[b - 1]),
            Basis::K { a, b, l } => integral(&d(&self.a[a - 1], l), self.bb(b)),
            Basis::M { a, b } => integral(self.bb(a), self.bb(b)),
            // ∫F∧F vanishes, so ∫F₊∧F₊ = ½∫F∧∗F
            Basis::FF => self.f_squared() * q(1, 2),
            Basis::DADA => self.f_squared(),
            Basis::FB => {
                let plus = |x: Poly, y: Poly, s: i64| {
                    let mut out = x;
                    for (k, v) in y {
                        *out.entry(k).or_insert_with(Q::zero) += v * qi(s);
                    }
                    out
                };
                integral(self.bb(2), &plus(self.f(1, 2), self.f(3, 4), 1))
                    + integral(self.bb(3), &plus(self.f(1, 3), self.f(2, 4), -1))
                    + integral(self.bb(4), &plus(self.f(1, 4), self.f(2, 3), 1))
            }
            Basis::BB => (2..=4).map(|b| integral(self.bb(b), self.bb(b))).sum::<Q>() * qi(2),
        }
    }

    fn eval(&self, f: &LocalFunctional) -> Q {
        f.terms().map(|(e, c)| self.eval_basis(e) * c).sum()
    }
}

fn low_monomials() -> Vec<MultiIndex> {
    (0..=2).flat_map(multi_indices).collect()
}

fn fields() -> impl Strategy<Value = Fields> {
    let n = low_monomials().len();
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), 7).prop_map(|cs| {
        let mons = low_monomials();
        let poly = |c: &Vec<i64>| -> Poly {
            mons.iter().zip(c).filter(|(_, &x)| x != 0).map(|(m, &x)| (*m, qi(x))).collect()
        };
        Fields {
            a: [poly(&cs[0]), poly(&cs[1]), poly(&cs[2]), poly(&cs[3])],
            b: [poly(&cs[4]), poly(&cs[5]), poly(&cs[6])],
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The reduction agrees with direct integration of the raw monomials
    /// on polynomial-times-Gaussian fields.
    #[test]
    fn reduction_matches_integration(fl in fields()) {
        let r = reports();
        for x in r {
            if let Some(reduced) = &x.reduced {
                prop_assert_eq!(fl.eval(&x.raw), fl.eval(reduced), "{}", x.label);
            }
        }
        let mut pair = raw(Label::I);
        pair = pair.plus(&raw(Label::II));
        prop_assert_eq!(fl.eval(&pair), fl.eval(&reduced_sum(r, &[Label::I, Label::II]).unwrap()));
        prop_assert_eq!(fl.eval(&dada_in_j()), fl.f_squared());
    }

    /// `Σ_{a≠m} J^{aamm} - Σ_{a≠b} J^{abba}` integrates to `-∫dA∧∗dA`.
    #[test]
    fn ghost_combination(fl in fields()) {
        let mut f = LocalFunctional::new(0, LieSlot::Number);
        for a in 1..=4 {
            for m in (1..=4).filter(|&m| m != a) {
                f.add(Basis::J { a, b: a, i: m, j: m }, qi(1));
                f.add(Basis::J { a, b: m, i: m, j: a }, qi(-1));
            }
        }
        prop_assert_eq!(fl.eval(&f), -fl.f_squared());
        prop_assert_eq!(j_basis_reduce(&f).unwrap(), LocalFunctional::single(Basis::FF, qi(-2)));
    }
}

#[test]
fn zero_reduces_to_zero() {
    let z = LocalFunctional::new(0, LieSlot::Number);
    assert!(j_basis_reduce(&z).unwrap().is_zero());
}

#[test]
fn non_cocycle_is_an_error() {
    let f = LocalFunctional::single(Basis::J { a: 1, b: 1, i: 1, j: 1 }, qi(1));
    assert!(j_basis_reduce(&f).is_err());
}

/// Diagram I on su(2) with the Lie indices carried through the same loop as
/// the form indices. The result is the abelian weight times the Lie wheel,
/// and the Lie wheel is `-T`; the spinor wheel on the fundamental is `-M`
/// with the same sign, so the ratio of the two slots is orientation free.
#[test]
fn lie_factorization_su2() {
    let l = su(2);
    let n = l.dim;
    let kinv = l.kappa_inv.clone().unwrap();
    let lie_v = |e: usize, a: usize, c: usize| -> Q {
        (0..n).map(|dd| l.structure_constant(a, c, dd) * &l.kappa[dd][e]).sum()
    };
    let v = vertex_tensors();
    let aab = &v.aab.tensor;
    let t = adjoint_tensor(&l).unwrap();
    let data = CombinatorialData::new();
    for (a, b, i, j) in [(1, 1, 1, 1), (1, 2, 2, 1), (2, 3, 4, 1), (3, 3, 2, 2)] {
        let p = propagator_ab(i).filter(|kk| kk[0].species() == Species::A);
        let qp = propagator_ab(j).filter(|kk| kk[0].species() == Species::B);
        for al in 0..n {
            for be in 0..n {
                let mut full = Q::zero();
                for (pk, pv) in p.entries() {
                    for (qk, qv) in qp.entries() {
                        let st = aab.get(&[BasisElement::OneForm(a), qk[1], pk[1]])
                            * aab.get(&[BasisElement::OneForm(b), pk[0], qk[0]])
                            * pv
                            * qv;
                        if st.is_zero() {
                            continue;
                        }
                        for p0 in 0..n {
                            for p1 in 0..n {
                                for q0 in 0..n {
                                    for q1 in 0..n {
                                        let lie = lie_v(al, q1, p1) * lie_v(be, p0, q0) * &kinv[p0][p1] * &kinv[q0][q1];
                                        full += &st.re * lie;
                                    }
                                }
                            }
                        }
                    }
                }
                let c = data.weight_i(a, b, i, j).unwrap();
                assert_eq!(full, -c * &t[al][be], "({a},{b},{i},{j}) Lie ({al},{be})");
            }
        }
    }
    let fund = SpecialUnitary::new(2).fundamental_complex();
    let m = matter_tensor(&l, &fund).unwrap();
    for al in 0..n {
        for be in 0..n {
            let (x, y) = (fund.action_matrix(al), fund.action_matrix(be));
            let mut tr = Gq::zero();
            for r in 0..fund.dim_v {
                for s in 0..fund.dim_v {
                    tr += &x[r][s] * &y[s][r];
                }
            }
            assert!(tr.im.is_zero());
            assert_eq!(tr.re, -m[al][be].clone());
        }
    }
}
