use num_traits::Zero;
use proptest::prelude::*;
use ymbeta::lie::*;
use ymbeta::scalar::{gr, identity, mat_mul, q, qi, Gq, Mat, Q};

fn epsilon(i: usize, j: usize, k: usize) -> i64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1,
        _ => 0,
    }
}

fn su2_by_hand() -> LieAlgebraData {
    let mut f = StructureConstants::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if epsilon(a, b, c) != 0 {
                    f.insert((a, b, c), qi(epsilon(a, b, c)));
                }
            }
        }
    }
    LieAlgebraData::new("su(2)", 3, f, identity(3)).unwrap()
}

/// Gell-Mann structure constants with `λ₈` rescaled to `diag(1, 1, -2)` so
/// every constant is rational. Entries `(a, b, c, r, root3)` stand for the
/// totally antisymmetric `f_{abc} = r` or `r √3`.
fn su3_gell_mann() -> LieAlgebraData {
    let table: [(usize, usize, usize, Q, bool); 9] = [
        (1, 2, 3, qi(1), false),
        (1, 4, 7, q(1, 2), false),
        (1, 5, 6, q(-1, 2), false),
        (2, 4, 6, q(1, 2), false),
        (2, 5, 7, q(1, 2), false),
        (3, 4, 5, q(1, 2), false),
        (3, 6, 7, q(-1, 2), false),
        (4, 5, 8, q(1, 2), true),
        (6, 7, 8, q(1, 2), true),
    ];
    let mut f = StructureConstants::new();
    for (a, b, c, r, root3) in table {
        let perms = [(a, b, c, 1), (b, c, a, 1), (c, a, b, 1), (b, a, c, -1), (a, c, b, -1), (c, b, a, -1)];
        for (x, y, z, s) in perms {
            // f'^{xy}_z = f_{xyz} λ_x λ_y / λ_z with λ₈ = √3.
            let power = i32::from(root3) + i32::from(x == 8) + i32::from(y == 8) - i32::from(z == 8);
            assert!(power % 2 == 0);
            let v = r.clone() * qi(s) * qi(3i64.pow((power / 2) as u32));
            f.insert((x - 1, y - 1, z - 1), v);
        }
    }
    let mut kappa: Mat<Q> = identity(8);
    kappa[7][7] = qi(3);
    LieAlgebraData::new("su(3) Gell-Mann", 8, f, kappa).unwrap()
}

/// Dense loop over every index tuple of `V^{eac} V^{fbd} κ_{ab} κ_{cd}`,
/// returning the constant `c` with `T = c κ`.
fn casimir_oracle(l: &LieAlgebraData) -> Q {
    let n = l.dim;
    let kinv = l.kappa_inv.as_ref().unwrap();
    let fc = |a, b, c| l.structure_constant(a, b, c);
    let mut v = vec![vec![vec![Q::zero(); n]; n]; n];
    for e in 0..n {
        for a in 0..n {
            for c in 0..n {
                for g in 0..n {
                    v[e][a][c] += fc(a, c, g) * &l.kappa[g][e];
                }
            }
        }
    }
    let mut t = vec![vec![Q::zero(); n]; n];
    for e in 0..n {
        for f in 0..n {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            t[e][f] += &v[e][a][c] * &v[f][b][d] * &kinv[a][b] * &kinv[c][d];
                        }
                    }
                }
            }
        }
    }
    proportional(&t, &l.kappa)
}

/// `-Σ_{l,n} α^{an}_l α^{bl}_n` by nested loops, and its constant.
fn matter_oracle(l: &LieAlgebraData, r: &RepresentationData) -> Q {
    let mut m = vec![vec![Q::zero(); l.dim]; l.dim];
    let alpha = |a, i, j| r.alpha.get(&(a, i, j)).cloned().unwrap_or_else(Gq::zero);
    for a in 0..l.dim {
        for b in 0..l.dim {
            let mut s = Gq::zero();
            for ll in 0..r.dim_v {
                for nn in 0..r.dim_v {
                    s = s + alpha(a, nn, ll) * alpha(b, ll, nn);
                }
            }
            assert!(s.im.is_zero());
            m[a][b] = -s.re;
        }
    }
    proportional(&m, &l.kappa)
}

fn proportional(t: &[Vec<Q>], kappa: &[Vec<Q>]) -> Q {
    let c = &t[0][0] / &kappa[0][0];
    for (rt, rk) in t.iter().zip(kappa) {
        for (x, k) in rt.iter().zip(rk) {
            assert_eq!(*x, &c * k);
        }
    }
    c
}

#[test]
fn su2_with_epsilon_constants_is_valid() {
    let l = su2_by_hand();
    assert!(validate_algebra(&l).unwrap().is_empty());
    assert_eq!(su(2).f, l.f);
    assert_eq!(su(2).kappa, l.kappa);
}

#[test]
fn flipped_structure_constant_is_reported() {
    let mut l = su2_by_hand();
    l.f.insert((0, 1, 2), qi(-1));
    let report = validate_algebra(&l).unwrap();
    assert!(report.violations.contains(&Violation::Antisymmetry { a: 1, b: 2, c: 3 }), "{report}");
    assert!(matches!(casimir_adjoint(&l), Err(LieError::Invalid(_))));
}

#[test]
fn abelian_line() {
    let l = LieAlgebraData::new("u(1)", 1, StructureConstants::new(), vec![vec![qi(1)]]).unwrap();
    assert!(validate_algebra(&l).unwrap().is_empty());
    assert_eq!(casimir_adjoint(&l).unwrap(), qi(0));
}

#[test]
fn structural_errors_are_separate() {
    let mut l = su(2);
    l.kappa.pop();
    assert!(matches!(validate_algebra(&l), Err(StructuralError::Dimension { .. })));
    let mut f = StructureConstants::new();
    f.insert((0, 0, 5), qi(1));
    assert!(matches!(
        LieAlgebraData::new("bad", 3, f, identity(3)),
        Err(StructuralError::IndexOutOfRange { index: 6, .. })
    ));
}

#[test]
fn degenerate_and_non_invariant_kappa() {
    let mut l = su2_by_hand();
    l.kappa[2][2] = qi(2);
    l.kappa_inv = ymbeta::scalar::inverse(&l.kappa);
    let report = validate_algebra(&l).unwrap();
    assert!(report.violations.iter().any(|v| matches!(v, Violation::NotInvariant { .. })));

    let zero = LieAlgebraData::new("degenerate", 3, su2_by_hand().f, vec![vec![qi(0); 3]; 3]).unwrap();
    assert!(validate_algebra(&zero).unwrap().violations.contains(&Violation::KappaDegenerate));
}

#[test]
fn casimir_of_su2_matches_oracle() {
    let l = su2_by_hand();
    assert_eq!(casimir_oracle(&l), qi(2));
    assert_eq!(casimir_adjoint(&l).unwrap(), qi(2));
}

#[test]
fn casimir_of_su3_matches_oracle() {
    let l = su3_gell_mann();
    assert!(validate_algebra(&l).unwrap().is_empty());
    let oracle = casimir_oracle(&l);
    assert_eq!(oracle, qi(3));
    assert_eq!(casimir_adjoint(&l).unwrap(), oracle);
    assert_eq!(casimir_oracle(&su(3)), casimir_adjoint(&su(3)).unwrap());
}

#[test]
fn special_unitary_family() {
    for n in 2..=5 {
        let g = SpecialUnitary::new(n);
        let l = g.algebra();
        assert_eq!(l.dim, n * n - 1);
        assert_eq!(casimir_adjoint(l).unwrap(), qi(n as i64), "su({n})");
        assert_eq!(lie_factor_matter(l, &g.fundamental_real()).unwrap(), qi(1));
        assert_eq!(lie_factor_matter(l, &g.fundamental_complex()).unwrap(), qi(1));
    }
}

#[test]
fn adjoint_matter_equals_casimir() {
    for l in [su2_by_hand(), su(3), su3_gell_mann()] {
        let r = adjoint(&l);
        assert!(validate_representation(&l, &r).unwrap().is_empty());
        assert_eq!(lie_factor_matter(&l, &r).unwrap(), casimir_adjoint(&l).unwrap(), "{}", l.name);
    }
}

#[test]
fn zero_representation() {
    assert_eq!(lie_factor_matter(&su(2), &RepresentationData::zero()).unwrap(), qi(0));
}

#[test]
fn su2_fundamental_plus_conjugate_matches_oracle() {
    let g = SpecialUnitary::new(2);
    for r in [g.fundamental_real(), g.fundamental_complex()] {
        assert_eq!(r.dim_v, 4);
        let oracle = matter_oracle(g.algebra(), &r);
        assert_eq!(lie_factor_matter(g.algebra(), &r).unwrap(), oracle, "{}", r.name);
    }
}

#[test]
fn broken_representation_is_reported() {
    let g = SpecialUnitary::new(2);
    let mut r = g.fundamental_real();
    let key = *r.alpha.keys().next().unwrap();
    r.alpha.insert(key, gr(qi(7)));
    let report = validate_representation(g.algebra(), &r).unwrap();
    assert!(report.violations.iter().any(|v| matches!(v, Violation::Representation { .. })));
    assert!(report.violations.iter().any(|v| matches!(v, Violation::MuNotInvariant { .. })));
}

#[test]
fn semisimple_input_gets_one_constant_per_factor() {
    let l = su(2).direct_sum(&su(3));
    assert!(validate_algebra(&l).unwrap().is_empty());
    assert!(matches!(casimir_adjoint(&l), Err(LieError::NotProportional { .. })));
    let per: Vec<Q> = casimir_per_factor(&l).unwrap().into_iter().map(|f| f.value).collect();
    assert_eq!(per, vec![qi(2), qi(3)]);

    // A doublet of the su(2) factor, inert under su(3).
    let fund = SpecialUnitary::new(2).fundamental_real();
    let matter: Vec<Q> = matter_per_factor(&l, &fund).unwrap().into_iter().map(|f| f.value).collect();
    assert_eq!(matter, vec![qi(1), qi(0)]);
}

#[test]
fn toml_round_trip() {
    let g = SpecialUnitary::new(3);
    let l = g.algebra().clone();
    let text = algebra_to_toml(&l);
    let back = parse_algebra(&text).unwrap();
    assert_eq!(back, l);
    assert_eq!(algebra_to_toml(&back), text);

    let r = g.fundamental_complex();
    let text = representation_to_toml(&r);
    let back = parse_representation(&text).unwrap();
    assert_eq!(back, r);
    assert_eq!(representation_to_toml(&back), text);
}

#[test]
fn malformed_files() {
    let dup = "name = \"x\"\ndim = 1\nf = []\nkappa = [[1, 1, \"1\"], [1, 1, \"2\"]]\n";
    assert!(matches!(parse_algebra(dup), Err(FormatError::Entry { field: "kappa", entry: 2, .. })));
    let range = "name = \"x\"\ndim = 1\nf = [[1, 1, 2, \"1\"]]\nkappa = [[1, 1, \"1\"]]\n";
    assert!(matches!(parse_algebra(range), Err(FormatError::Entry { field: "f", .. })));
    assert!(matches!(parse_algebra("dim = 1"), Err(FormatError::Toml(_))));
    let zero_den = "name = \"x\"\ndim = 1\nf = []\nkappa = [[1, 1, \"1/0\"]]\n";
    assert!(parse_algebra(zero_den).is_err());
}

fn reps_of(g: &SpecialUnitary) -> Vec<RepresentationData> {
    BUILTIN_REPS.iter().map(|n| g.representation(n).unwrap()).collect()
}

/// An invertible rational matrix as a unit lower triangular factor times an
/// upper triangular factor with nonzero diagonal.
fn invertible(n: usize) -> impl Strategy<Value = Mat<Q>> {
    let entry = (-3i64..=3, 1i64..=3).prop_map(|(a, b)| q(a, b));
    let diag = prop_oneof![(1i64..=3), (-3i64..=-1)].prop_map(qi);
    (
        proptest::collection::vec(entry.clone(), n * n),
        proptest::collection::vec(entry, n * n),
        proptest::collection::vec(diag, n),
    )
        .prop_map(move |(lo, up, d)| {
            let lower: Mat<Q> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { qi(1) } else if j < i { lo[i * n + j].clone() } else { qi(0) }).collect())
                .collect();
            let upper: Mat<Q> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { d[i].clone() } else if j > i { up[i * n + j].clone() } else { qi(0) }).collect())
                .collect();
            mat_mul(&lower, &upper)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn matter_factor_is_basis_independent(p in invertible(6), complex in any::<bool>()) {
        let g = SpecialUnitary::new(3);
        let r = if complex { g.fundamental_complex() } else { g.fundamental_real() };
        let moved = r.change_basis_real(&p).unwrap();
        prop_assert!(validate_representation(g.algebra(), &moved).unwrap().is_empty());
        prop_assert_eq!(lie_factor_matter(g.algebra(), &moved).unwrap(), qi(1));
    }

    #[test]
    fn matter_factor_is_additive(i in 0usize..3, j in 0usize..3, n in 2usize..=3) {
        let g = SpecialUnitary::new(n);
        let reps = reps_of(&g);
        let l = g.algebra();
        let sum = reps[i].direct_sum(&reps[j]);
        prop_assert_eq!(
            lie_factor_matter(l, &sum).unwrap(),
            lie_factor_matter(l, &reps[i]).unwrap() + lie_factor_matter(l, &reps[j]).unwrap()
        );
    }

    #[test]
    fn casimir_scales_with_the_derived_exponent(num in 1i64..=12, den in 1i64..=12, neg in any::<bool>()) {
        let s = q(if neg { -num } else { num }, den);
        for l in [su(2), su(3)] {
            let base = casimir_adjoint(&l).unwrap();
            let scaled = casimir_adjoint(&l.with_scaled_kappa(&s)).unwrap();
            let factor = num_traits::pow::Pow::pow(&s, CASIMIR_KAPPA_EXPONENT);
            prop_assert_eq!(scaled, base * factor);
        }
    }
}

#[test]
fn factors_of_a_sum_are_components() {
    let l = su(2).direct_sum(&su(2));
    let f = simple_factors(&l);
    assert_eq!(f, vec![vec![0, 1, 2], vec![3, 4, 5]]);
}
