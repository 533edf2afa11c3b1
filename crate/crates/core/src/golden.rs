//! Published reference values, recomputed through the full pipeline.

use num_traits::Zero;

use crate::cohomology::{
    beta_from_reports, coboundary_b_bdual, coboundary_f_bdual, first_order_action, reduce_to_class, ActionFraming,
};
use crate::diagrams::analytic::{
    analytic_weight_i1, analytic_weight_tt, analytic_weight_xt, analytic_weight_xxt, analytic_weight_xxx,
    analytic_weight_xxx2, Markers,
};
use crate::diagrams::combinatorial::CombinatorialData;
use crate::diagrams::{reduced_sum, report, Basis, Label};
use crate::gaussian::{self, MultiIndex};
use crate::lie::{RepresentationData, SpecialUnitary};
use crate::repcheck::{has_trivial_summand, k1, k2, tensor_decompose, Spin4Rep};
use crate::scalar::{fmt_q, q, qi, Q};
use crate::spacetime::GammaAlgebra;
use crate::tintegrals::{log_coefficient, TRationalTerm};

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GoldenCheck {
    pub name: String,
    pub published: String,
    pub computed: String,
    pub passed: bool,
}

struct Suite(Vec<GoldenCheck>);

impl Suite {
    fn rational(&mut self, name: impl Into<String>, published: Q, computed: Q) {
        self.0.push(GoldenCheck {
            name: name.into(),
            passed: published == computed,
            published: fmt_q(&published),
            computed: fmt_q(&computed),
        });
    }

    fn holds(&mut self, name: impl Into<String>, published: &str, computed: String, passed: bool) {
        self.0.push(GoldenCheck { name: name.into(), published: published.into(), computed, passed });
    }
}

fn marker(m: &Markers, beta: MultiIndex) -> Q {
    m.get(&beta).cloned().unwrap_or_else(Q::zero)
}

fn e(i: usize) -> MultiIndex {
    gaussian::unit(i - 1)
}

fn ee(i: usize, j: usize) -> MultiIndex {
    gaussian::add(&e(i), &e(j))
}

fn delta(i: usize, j: usize) -> i64 {
    i64::from(i == j)
}

fn levi_civita(idx: [usize; 4]) -> i64 {
    let mut sign = 1;
    for x in 0..4 {
        for y in x + 1..4 {
            if idx[x] == idx[y] {
                return 0;
            }
            if idx[x] > idx[y] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Every index tuple where `computed` differs from `published`, summarized.
fn table_mismatches<I>(tuples: I, published: impl Fn(&[usize]) -> Q, computed: impl Fn(&[usize]) -> Q) -> (usize, String)
where
    I: IntoIterator<Item = Vec<usize>>,
{
    let bad: Vec<String> = tuples
        .into_iter()
        .filter_map(|t| {
            let (p, c) = (published(&t), computed(&t));
            (p != c).then(|| format!("{t:?}: {} vs {}", fmt_q(&c), fmt_q(&p)))
        })
        .collect();
    let summary = match bad.len() {
        0 => "all entries agree".to_string(),
        n => format!("{n} entries differ, e.g. {}", bad[0]),
    };
    (bad.len(), summary)
}

fn tuples(ranges: &[std::ops::RangeInclusive<usize>]) -> Vec<Vec<usize>> {
    ranges.iter().fold(vec![vec![]], |acc, r| {
        acc.into_iter().flat_map(|t| r.clone().map(move |x| [t.clone(), vec![x]].concat())).collect()
    })
}

#[derive(Debug, thiserror::Error)]
pub enum GoldenError {
    #[error(transparent)]
    TIntegral(#[from] crate::tintegrals::TIntegralError),
    #[error(transparent)]
    Diagram(#[from] crate::diagrams::DiagramError),
    #[error(transparent)]
    Cohomology(#[from] crate::cohomology::CohomologyError),
}

pub fn golden_suite() -> Result<Vec<GoldenCheck>, GoldenError> {
    let mut s = Suite(Vec::new());

    for (p, q_, r, want) in [(0, 1, 3, q(-1, 2)), (0, 0, 3, qi(0)), (1, 1, 4, q(-1, 6)), (2, 0, 4, q(-1, 3))] {
        let got = log_coefficient(&TRationalTerm::unit(p, q_, r))?;
        s.rational(format!("t-integral t1^{p} t2^{q_} (t1+t2)^-{r}"), want, got);
    }

    let i1_mixed = analytic_weight_i1(1, 2);
    s.rational("first-derivative pair, mixed", q(-1, 6), marker(&i1_mixed, ee(1, 2)));
    let i1_diag = analytic_weight_i1(1, 1);
    s.rational("first-derivative pair, diagonal", q(-1, 6) + q(-1, 12), marker(&i1_diag, ee(1, 1)));
    s.rational("first-derivative pair, trace part", q(-1, 12), marker(&i1_diag, ee(2, 2)));
    s.rational("derivative times time derivative", q(-1, 4), marker(&analytic_weight_xt(1), e(1)));
    s.rational("first times second derivative, trace", q(-2, 12), marker(&analytic_weight_xxx(1, 2, 2), e(1)));
    s.rational("first times second derivative, mixed", q(1, 12), marker(&analytic_weight_xxx(1, 1, 2), e(2)));
    s.rational("time derivative pair", qi(-1), marker(&analytic_weight_tt(), [0; 4]));
    s.rational("second derivative times time derivative", q(1, 4), marker(&analytic_weight_xxt(1, 1), [0; 4]));
    s.rational("second derivative times time derivative, off-diagonal", qi(0), marker(&analytic_weight_xxt(1, 2), [0; 4]));
    let xxx2_nonzero = tuples(&[1..=4, 1..=4, 1..=4])
        .into_iter()
        .filter(|t| !analytic_weight_xxx2(t[0], t[1], t[2]).is_empty())
        .count();
    s.holds(
        "second times first derivative",
        "identically 0",
        format!("{xxx2_nonzero} nonzero index tuples"),
        xxx2_nonzero == 0,
    );

    let data = CombinatorialData::new();
    let c_i_published = |t: &[usize]| {
        let (a, b, i, j) = (t[0], t[1], t[2], t[3]);
        qi(if a == b {
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
            levi_civita([i, j, a, b])
        })
    };
    let weight = |r: Result<Q, _>| r.expect("indices are in range");
    let all4 = || tuples(&[1..=4, 1..=4, 1..=4, 1..=4]);
    let (n, summary) = table_mismatches(all4(), c_i_published, |t| weight(data.weight_i(t[0], t[1], t[2], t[3])));
    s.holds("diagram I case table", "3 / -2 / 0; 3 / 2 / ±1 / 0", summary, n == 0);
    let (n, summary) = table_mismatches(
        all4(),
        |t| qi(-delta(t[2], t[0]) * delta(t[3], t[1])),
        |t| weight(data.weight_ii(t[0], t[1], t[2], t[3])),
    );
    s.holds("diagram II table", "-δ^{ia} δ^{jb}", summary, n == 0);
    let gamma = GammaAlgebra::new();
    let closed = |i, a, j, b| qi(4 * (delta(i, a) * delta(j, b) - delta(i, j) * delta(a, b) + delta(i, b) * delta(a, j)));
    let (n_trace, trace_summary) = table_mismatches(
        all4(),
        |t| closed(t[0], t[1], t[2], t[3]),
        |t| {
            let tr = gamma.trace_product(t);
            assert!(tr.im.is_zero());
            tr.re
        },
    );
    let (n_loop, loop_summary) =
        table_mismatches(all4(), |t| -closed(t[2], t[0], t[3], t[1]), |t| weight(data.weight_v(t[0], t[1], t[2], t[3])));
    s.holds(
        "gamma four-trace identity",
        "4(δ^{ia}δ^{jb} - δ^{ij}δ^{ab} + δ^{ib}δ^{aj})",
        format!("trace: {trace_summary}; spinor loop: {loop_summary}"),
        n_trace + n_loop == 0,
    );

    for (name, idx, want) in [("i = j", 0usize, -4), ("i = k", 1, -3), ("j = k", 2, 1)] {
        let (n, summary) = table_mismatches(
            tuples(&[2..=4, 1..=4]),
            |t| qi(want * delta(t[0], t[1])),
            |t| {
                let (b, k) = (t[0], t[1]);
                (1..=4)
                    .map(|i| {
                        let (ii, jj, kk) = match idx {
                            0 => (i, i, k),
                            1 => (i, k, i),
                            _ => (k, i, i),
                        };
                        weight(data.weight_iii(1, b, ii, jj, kk))
                    })
                    .sum()
            },
        );
        s.holds(format!("diagram III trace over {name}"), &format!("{want}δ"), summary, n == 0);
    }
    let (n, summary) = table_mismatches(
        tuples(&[2..=4, 2..=4]),
        |t| qi(-4 * delta(t[0], t[1])),
        |t| {
            tuples(&[1..=4, 1..=4]).into_iter().map(|mn| weight(data.weight_iv(t[0], t[1], mn[0], mn[1], mn[0], mn[1]))).sum()
        },
    );
    s.holds("diagram IV trace", "-4δ", summary, n == 0);

    let reports = report()?;
    let geometric = |labels: &[Label], e: Basis| -> Result<Q, crate::diagrams::DiagramError> {
        Ok(reduced_sum(&reports, labels)?.get(e))
    };
    s.rational("diagrams I + II", q(-4, 3), geometric(&[Label::I, Label::II], Basis::FF)?);
    s.rational("diagram III", qi(-2), geometric(&[Label::III], Basis::FB)?);
    s.rational("diagram IV", qi(-4), geometric(&[Label::IV], Basis::BB)?);
    s.rational("diagram V", q(8, 3), geometric(&[Label::V], Basis::FF)?);

    s.rational("coboundary d(F B^v)", qi(0), reduce_to_class(&coboundary_f_bdual())?.coefficient);
    s.rational("coboundary d(B B^v)", qi(0), reduce_to_class(&coboundary_b_bdual())?.coefficient);
    s.rational("first-order action", q(1, 2), reduce_to_class(&first_order_action())?.coefficient);
    for n in [2, 3] {
        let g = SpecialUnitary::new(n);
        for (rname, r) in [("no matter", RepresentationData::zero()), ("adjoint matter", g.representation("adjoint").expect("built in"))] {
            let beta = beta_from_reports(&reports, g.algebra(), &r, &ActionFraming)?;
            let want = q(-11, 3) * &beta.casimir_adjoint + q(4, 3) * &beta.matter_factor;
            s.rational(format!("b for su({n}), {rname}"), want, beta.b);
        }
    }

    let prod = tensor_decompose(&k1(), &k2());
    s.holds("K(1) x K(2) invariants", "no trivial summand", prod.to_string(), !has_trivial_summand(&prod));
    let sq = tensor_decompose(&Spin4Rep::s_plus(), &Spin4Rep::s_plus());
    s.holds(
        "S+ x S+ invariants",
        "exactly one (0,0)",
        sq.to_string(),
        sq.multiplicity(0, 0) == 1,
    );

    Ok(s.0)
}
