mod common;

use common::*;
use deforma_core::linalg::Matrix;
use deforma_core::polyring::{LinearMap, Monomial};
use deforma_core::projdef::{
    cone_nonrigid, pairing, sl_action, smooth_curve_table, triviality_system, triviality_test, TracelessMatrix,
    TrivialityVerdict, Unknown,
};
use deforma_core::{Polynomial, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const FERMAT: &str = "x^4 + y^4 + z^4";

/// Columns `x_j ∂_i F` for all `i, j` plus `F`, over the degree-`d` monomials.
fn gl_image(f: &Polynomial, d: u32) -> (Vec<Monomial>, Matrix) {
    let n = f.nvars();
    let mons = Monomial::all_of_degree(n, d);
    let mut cols = Vec::new();
    for i in 0..n {
        let di = f.differentiate(i).unwrap();
        for j in 0..n {
            cols.push(&di * &Polynomial::var(f.ring(), j).unwrap());
        }
    }
    cols.push(f.clone());
    let rows = mons
        .iter()
        .map(|m| cols.iter().map(|c| c.coefficient(m)).collect())
        .collect();
    (mons, Matrix::from_rows(rows).unwrap())
}

fn oracle_trivial(f: &Polynomial, g: &Polynomial) -> bool {
    let (mons, a) = gl_image(f, 4);
    let b: Vec<Rational> = mons.iter().map(|m| g.coefficient(m)).collect();
    column_span_contains(&a, &b)
}

fn random_traceless(rng: &mut ChaCha8Rng, n: usize) -> TracelessMatrix {
    let mut rows: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(|_| random_rational(rng, 4)).collect()).collect();
    let tr: Rational = (0..n - 1).map(|i| rows[i][i].clone()).sum();
    rows[n - 1][n - 1] = -tr;
    TracelessMatrix::new(Matrix::from_rows(rows).unwrap()).unwrap()
}

fn check_verdict(f: &Polynomial, g: &Polynomial, v: &TrivialityVerdict) {
    match v {
        TrivialityVerdict::Trivial { m, c } => {
            let lhs = &sl_action(m, f).unwrap() + &f.scale(c);
            assert_eq!(&lhs, g);
        }
        TrivialityVerdict::Nontrivial { certificate, .. } => {
            assert!(!pairing(certificate, g).is_zero());
            assert!(pairing(certificate, f).is_zero());
            let n = f.nvars();
            for i in 0..n {
                for j in 0..n {
                    if i == n - 1 && j == n - 1 {
                        continue;
                    }
                    let mut e = Matrix::zeros(n, n);
                    e.set(i, j, Rational::from_integer(1.into()));
                    if i == j {
                        e.set(n - 1, n - 1, Rational::from_integer((-1).into()));
                    }
                    let e = TracelessMatrix::new(e).unwrap();
                    assert!(pairing(certificate, &sl_action(&e, f).unwrap()).is_zero());
                }
            }
        }
    }
}

#[test]
fn fermat_quartic_monomials() {
    let r = ring(&["x", "y", "z"]);
    let f = p(FERMAT, &r);
    let mut trivial = Vec::new();
    for m in Monomial::all_of_degree(3, 4) {
        let g = Polynomial::term(&r, m.clone(), int(1));
        let v = triviality_test(&f, &g).unwrap();
        assert_eq!(v.is_trivial(), oracle_trivial(&f, &g), "{g}");
        check_verdict(&f, &g, &v);
        if v.is_trivial() {
            trivial.push(g.to_string());
        }
    }
    trivial.sort();
    let mut expected: Vec<String> = ["x^4", "y^4", "z^4", "x^3*y", "x^3*z", "x*y^3", "y^3*z", "x*z^3", "y*z^3"]
        .iter()
        .map(|s| p(s, &r).to_string())
        .collect();
    expected.sort();
    assert_eq!(trivial, expected);
}

#[test]
fn named_examples() {
    let r = ring(&["x", "y", "z"]);
    let f = p(FERMAT, &r);
    assert!(!triviality_test(&f, &p("x^2*y^2", &r)).unwrap().is_trivial());
    match triviality_test(&f, &p("x^3*y", &r)).unwrap() {
        TrivialityVerdict::Trivial { m, c } => {
            assert_eq!(m.get(0, 1), &q(1, 4));
            assert!(c.is_zero());
        }
        other => panic!("{:?}", other),
    }
    match triviality_test(&f, &f).unwrap() {
        TrivialityVerdict::Trivial { m, c } => {
            assert!(m.is_zero());
            assert_eq!(c, int(1));
        }
        other => panic!("{:?}", other),
    }
    match triviality_test(&f, &Polynomial::zero(&r)).unwrap() {
        TrivialityVerdict::Trivial { m, c } => assert!(m.is_zero() && c.is_zero()),
        other => panic!("{:?}", other),
    }
}

#[test]
fn system_shape() {
    let r = ring(&["x", "y", "z"]);
    let sys = triviality_system(&p(FERMAT, &r), &p("x^2*y^2", &r)).unwrap();
    assert_eq!((sys.matrix.rows(), sys.matrix.cols()), (15, 9));
    assert_eq!(sys.rows.len(), 15);
    assert_eq!(sys.rows[0].exponents(), &[4, 0, 0]);
    assert_eq!(sys.unknowns[0], Unknown::Entry(0, 0));
    assert_eq!(sys.unknowns[8], Unknown::Scale);
    assert!(!sys.unknowns.contains(&Unknown::Entry(2, 2)));
}

#[test]
fn random_pairs_agree_with_span_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let r = ring(&["x", "y", "z"]);
    let mut counts = (0, 0);
    for k in 0..40 {
        let f = random_form(&mut rng, &r, 4, 4);
        if f.is_zero() {
            continue;
        }
        let g = if k % 2 == 0 {
            let m = random_traceless(&mut rng, 3);
            &sl_action(&m, &f).unwrap() + &f.scale(&random_rational(&mut rng, 3))
        } else {
            random_form(&mut rng, &r, 3, 4)
        };
        let v = triviality_test(&f, &g).unwrap();
        assert_eq!(v.is_trivial(), oracle_trivial(&f, &g), "{f} / {g}");
        check_verdict(&f, &g, &v);
        if v.is_trivial() {
            counts.0 += 1;
        } else {
            counts.1 += 1;
        }
    }
    assert!(counts.0 >= 10 && counts.1 >= 5, "{:?}", counts);
}

#[test]
fn action_is_first_order_substitution() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let r = ring(&["x", "y", "z"]);
    for _ in 0..10 {
        let f = random_form(&mut rng, &r, 5, 4);
        if f.is_zero() {
            continue;
        }
        let m = random_traceless(&mut rng, 3);
        // D(t)/t is a cubic; Lagrange at t = 0 from t = 1..4
        let weights = [int(4), int(-6), int(4), int(-1)];
        let mut a1 = Polynomial::zero(&r);
        for (k, w) in weights.iter().enumerate() {
            let t = int(k as i64 + 1);
            let mut a = Matrix::identity(3);
            for i in 0..3 {
                for j in 0..3 {
                    a.set(i, j, a.get(i, j) + &t * m.get(i, j));
                }
            }
            let d = &f.apply_linear(&LinearMap::new(a).unwrap()).unwrap() - &f;
            a1 = &a1 + &d.scale(&(w / &t));
        }
        assert_eq!(a1, sl_action(&m, &f).unwrap());
    }
}

#[test]
fn nilpotent_one_parameter_group() {
    let r = ring(&["x", "y", "z"]);
    let f = p(FERMAT, &r);
    let m = TracelessMatrix::elementary(3, 0, 1, int(1)).unwrap();
    let t = q(1, 3);
    let mut a = Matrix::identity(3);
    a.set(0, 1, t.clone());
    let moved = f.apply_linear(&LinearMap::new(a).unwrap()).unwrap();
    // x -> x + t y: (x + t y)^4 - x^4 = 4t x^3 y + O(t^2)
    let first = sl_action(&m, &f).unwrap().scale(&t);
    let rest = &(&moved - &f) - &first;
    assert!(rest.terms().all(|(mon, _)| mon.exponents()[1] >= 2));
}

#[test]
fn curve_table_and_cones() {
    let expected = [(0, 0, true), (1, 1, false), (2, 3, false), (3, 6, false), (10, 27, false)];
    for (g, d, rigid) in expected {
        let row = smooth_curve_table(g);
        assert_eq!((row.dim_t1, row.h0_omega_sq, row.rigid), (d, d, rigid));
    }
    assert!(cone_nonrigid(1));
    assert!(!cone_nonrigid(0));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_is_linear_and_a_derivation(seed in any::<u64>(), s in -4i64..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = ring(&["x", "y", "z"]);
        let f = random_form(&mut rng, &r, 4, 2);
        let h = random_form(&mut rng, &r, 3, 2);
        prop_assume!(!f.is_zero() && !h.is_zero() && !(&f * &h).is_zero());
        let a = random_traceless(&mut rng, 3);
        let b = random_traceless(&mut rng, 3);
        let s = int(s);
        let mut sum = Matrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                sum.set(i, j, a.get(i, j) + &s * b.get(i, j));
            }
        }
        let sum = TracelessMatrix::new(sum).unwrap();
        prop_assert_eq!(
            sl_action(&sum, &f).unwrap(),
            &sl_action(&a, &f).unwrap() + &sl_action(&b, &f).unwrap().scale(&s)
        );
        let fh = &f * &h;
        prop_assert_eq!(
            sl_action(&a, &fh).unwrap(),
            &(&sl_action(&a, &f).unwrap() * &h) + &(&f * &sl_action(&a, &h).unwrap())
        );
        let out = sl_action(&a, &f).unwrap();
        prop_assert!(out.is_zero() || out.is_homogeneous().map(|x| x.degree) == Some(2));
    }
}
