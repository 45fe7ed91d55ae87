mod common;

use std::sync::Arc;

use common::*;
use deforma_core::gbasis::{
    module_standard_basis, standard_basis, FreeModuleElement, GbError, Ideal, Limits, QuotientDimension, Submodule,
};
use deforma_core::polyring::{Monomial, MonomialOrdering, OrderingKind, Ring};
use deforma_core::Polynomial;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| p(g, r)).collect()).unwrap()
}

fn local(n: usize) -> MonomialOrdering {
    MonomialOrdering::local(n)
}

fn global(n: usize) -> MonomialOrdering {
    MonomialOrdering::degrevlex(n)
}

fn lim() -> Limits {
    Limits::default()
}

fn leads(b: &deforma_core::StandardBasis) -> Vec<Monomial> {
    let mut l: Vec<Monomial> = b.leading_terms().into_iter().map(|(_, m)| m).collect();
    l.sort();
    l
}

#[test]
fn basis_examples() {
    let r = ring(&["x", "y"]);
    let b = standard_basis(&ideal(&r, &["x", "y"]), &local(2), &lim()).unwrap();
    assert_eq!(leads(&b), vec![Monomial::new(vec![0, 1]), Monomial::new(vec![1, 0])]);
    let b = standard_basis(&ideal(&r, &["x*y", "x", "y"]), &global(2), &lim()).unwrap();
    assert_eq!(b.len(), 2);
    let b = standard_basis(&ideal(&r, &["y^2-x^3-x^2", "-3*x^2-2*x", "2*y"]), &local(2), &lim()).unwrap();
    assert_eq!(leads(&b), vec![Monomial::new(vec![0, 1]), Monomial::new(vec![1, 0])]);
    assert_eq!(b.quotient_dimension(), QuotientDimension::Finite(1));
}

#[test]
fn normal_form_examples() {
    let r = ring(&["x", "y"]);
    let b = standard_basis(&ideal(&r, &["x", "y"]), &global(2), &lim()).unwrap();
    assert!(b.normal_form(&p("x*y", &r)).unwrap().is_zero());
    assert_eq!(b.normal_form(&p("1", &r)).unwrap(), p("1", &r));
    let b = standard_basis(&ideal(&r, &["y", "x^2"]), &global(2), &lim()).unwrap();
    assert!(b.normal_form(&p("x^3", &r)).unwrap().is_zero());
    assert_eq!(b.normal_form(&p("x + 3*y + x^5", &r)).unwrap(), p("x", &r));
    let lb = standard_basis(&ideal(&r, &["y", "x^2"]), &local(2), &lim()).unwrap();
    assert_eq!(lb.normal_form(&p("x + x^2*y + 2", &r)).unwrap(), p("x + 2", &r));
}

#[test]
fn dimension_examples() {
    let r2 = ring(&["x", "y"]);
    let r3 = ring(&["x", "y", "z"]);
    let b = standard_basis(&ideal(&r2, &["x", "y"]), &local(2), &lim()).unwrap();
    assert_eq!(b.quotient_dimension(), QuotientDimension::Finite(1));
    let b = standard_basis(&ideal(&r3, &["x", "y"]), &local(3), &lim()).unwrap();
    assert_eq!(b.quotient_dimension(), QuotientDimension::Infinite(1));
    assert_eq!(b.krull_dimension(), 1);
    let b = standard_basis(&ideal(&r2, &["y", "x^2"]), &local(2), &lim()).unwrap();
    assert_eq!(b.quotient_dimension(), QuotientDimension::Finite(2));
    assert_eq!(
        b.standard_monomials().unwrap(),
        vec![(0, Monomial::new(vec![0, 0])), (0, Monomial::new(vec![1, 0]))]
    );
    assert_eq!(ideal_oracle(&[p("y", &r2), p("x^2", &r2)], 6), Some(2));
    let b = standard_basis(&Ideal::zero(&r2), &global(2), &lim()).unwrap();
    assert_eq!(b.krull_dimension(), 2);
    let b = standard_basis(&ideal(&r3, &["x^2+y^2", "x", "y"]), &global(3), &lim()).unwrap();
    assert_eq!(b.krull_dimension(), 1);
}

#[test]
fn module_cokernel_of_a_diagonal_matrix() {
    let r = ring(&["x", "y"]);
    let zero = Polynomial::zero(&r);
    // O^2 / ((x, 0), (0, y^2), (y, 0), (0, x)) has dimension 1 + 2
    let gens = vec![
        FreeModuleElement::new(&r, vec![p("x", &r), zero.clone()]).unwrap(),
        FreeModuleElement::new(&r, vec![zero.clone(), p("y^2", &r)]).unwrap(),
        FreeModuleElement::new(&r, vec![p("y", &r), zero.clone()]).unwrap(),
        FreeModuleElement::new(&r, vec![zero, p("x", &r)]).unwrap(),
    ];
    let m = Submodule::new(&r, 2, gens.clone()).unwrap();
    let b = module_standard_basis(&m, &local(2), &lim()).unwrap();
    assert_eq!(b.quotient_dimension(), QuotientDimension::Finite(3));
    assert!(b.spairs_reduce_to_zero().unwrap());
    let vs: Vec<Vec<Polynomial>> = gens.iter().map(|g| g.components().to_vec()).collect();
    assert_eq!(module_oracle(&vs, 2, 2, 8), Some(3));
    for g in &gens {
        assert!(b.contains_vector(g).unwrap());
    }
}

#[test]
fn module_normal_form_sees_lower_components() {
    // x·e1 ≡ e2 modulo (x·e1 − e2, x·e2): the quotient is O/(x^2)
    let r = ring(&["x"]);
    let zero = Polynomial::zero(&r);
    let gens = vec![
        FreeModuleElement::new(&r, vec![p("x", &r), p("-1", &r)]).unwrap(),
        FreeModuleElement::new(&r, vec![zero.clone(), p("x", &r)]).unwrap(),
    ];
    let b = module_standard_basis(&Submodule::new(&r, 2, gens).unwrap(), &local(1), &lim()).unwrap();
    assert_eq!(b.quotient_dimension(), QuotientDimension::Finite(2));
    let xe1 = FreeModuleElement::new(&r, vec![p("x", &r), zero.clone()]).unwrap();
    let nf = b.normal_form_vector(&xe1).unwrap();
    assert_eq!(nf.components(), &[zero.clone(), p("1", &r)]);
    assert!(!b.contains_vector(&xe1).unwrap());
    let x2e1 = FreeModuleElement::new(&r, vec![p("x^2", &r), zero]).unwrap();
    assert!(b.contains_vector(&x2e1).unwrap());
}

#[test]
fn dense_local_ideals_truncate_at_the_corner() {
    // x^2 + y^3 + z^4 after a dense linear change: tails would grow without
    // the corner
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let r = ring(&["x", "y", "z"]);
    let f = p("x^2 + y^3 + z^4", &r);
    for _ in 0..5 {
        let g = f.apply_linear(&random_invertible(&mut rng, 3)).unwrap();
        let gens = tjurina_generators(&g);
        let b = standard_basis(&Ideal::new(&r, gens.clone()).unwrap(), &local(3), &lim()).unwrap();
        assert_eq!(b.quotient_dimension(), QuotientDimension::Finite(6));
        assert_eq!(ideal_oracle(&gens, 10), Some(6));
        for h in &gens {
            assert!(b.contains(h).unwrap());
        }
        let nf = b.normal_form(&p("x^5 + y*z", &r)).unwrap();
        assert!(nf.terms().all(|(m, _)| m.degree() < 4));
    }
}

#[test]
fn resource_caps_are_distinct_errors() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x*y - z^2", "x*z - y^2", "y*z - x^2"]);
    let tight = Limits {
        max_pairs: 1,
        max_degree: 64,
    };
    assert_eq!(standard_basis(&i, &global(3), &tight).unwrap_err(), GbError::PairLimit { limit: 1 });
    let shallow = Limits {
        max_pairs: 100_000,
        max_degree: 2,
    };
    let e = standard_basis(&i, &global(3), &shallow).unwrap_err();
    assert_eq!(e, GbError::DegreeLimit { limit: 2 });
    assert!(e.is_resource_limit());
    assert!(!GbError::RingMismatch.is_resource_limit());
}

#[test]
fn spairs_reduce_to_zero_on_random_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..40 {
        let n = 2 + round % 2;
        let r = ring(&["x", "y", "z"][..n]);
        let gens = random_ideal(&mut rng, &r, 2 + round % 2, 3, 3);
        if gens.is_empty() {
            continue;
        }
        let i = Ideal::new(&r, gens.clone()).unwrap();
        for ord in [global(n), local(n)] {
            let b = standard_basis(&i, &ord, &lim()).unwrap();
            assert!(b.spairs_reduce_to_zero().unwrap(), "{:?}", gens);
            for g in &gens {
                assert!(b.contains(g).unwrap(), "generator {} not reduced to zero", g);
            }
        }
    }
}

#[test]
fn oracle_agrees_with_local_quotients() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let r = ring(&["x", "y"]);
    let mut checked = 0;
    for _ in 0..120 {
        let gens = random_ideal(&mut rng, &r, 3, 3, 4);
        if gens.is_empty() {
            continue;
        }
        let b = standard_basis(&Ideal::new(&r, gens.clone()).unwrap(), &local(2), &lim()).unwrap();
        match b.quotient_dimension() {
            QuotientDimension::Finite(d) if d <= 12 => {
                assert_eq!(ideal_oracle(&gens, 16), Some(d), "{:?}", gens);
                assert_eq!(b.krull_dimension(), 0);
                checked += 1;
            }
            QuotientDimension::Finite(_) => {}
            QuotientDimension::Infinite(k) => {
                assert!(k >= 1);
                assert_eq!(ideal_oracle(&gens, 8), None, "{:?}", gens);
            }
        }
    }
    assert!(checked >= 30, "only {checked} finite cases");
}

#[test]
fn oracle_agrees_with_homogeneous_global_quotients() {
    let r = ring(&["x", "y", "z"]);
    let cases: [&[&str]; 4] = [
        &["x^2", "y^2", "z^2"],
        &["x^2 + y*z", "y^2 + x*z", "z^2 + x*y"],
        &["x*y", "y*z", "x*z", "x^2 + y^2 + z^2"],
        &["x^3", "y^2 - x*z", "z^2"],
    ];
    for gens in cases {
        let ps: Vec<Polynomial> = gens.iter().map(|g| p(g, &r)).collect();
        let b = standard_basis(&Ideal::new(&r, ps.clone()).unwrap(), &global(3), &lim()).unwrap();
        let d = b.quotient_dimension().finite().expect("zero-dimensional");
        assert_eq!(ideal_oracle(&ps, 12), Some(d), "{:?}", gens);
    }
}

#[test]
fn membership_is_ordering_independent() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let r = ring(&["x", "y", "z"]);
    let orders = [
        global(3),
        MonomialOrdering::with_permutation(OrderingKind::Degrevlex, vec![2, 0, 1]).unwrap(),
        MonomialOrdering::with_permutation(OrderingKind::Degrevlex, vec![1, 2, 0]).unwrap(),
    ];
    for _ in 0..15 {
        let gens = random_ideal(&mut rng, &r, 2, 3, 2);
        if gens.is_empty() {
            continue;
        }
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let bases: Vec<_> = orders.iter().map(|o| standard_basis(&i, o, &lim()).unwrap()).collect();
        let mut member = Polynomial::zero(&r);
        for g in &gens {
            member = &member + &(&random_poly(&mut rng, &r, 2, 2) * g);
        }
        let outsider = random_poly(&mut rng, &r, 3, 2);
        for f in [member, outsider] {
            let verdicts: Vec<bool> = bases.iter().map(|b| b.normal_form(&f).unwrap().is_zero()).collect();
            assert!(verdicts.iter().all(|&v| v == verdicts[0]), "{} in {:?}", f, gens);
        }
    }
}

#[test]
fn quotient_dimension_invariant_under_linear_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let r = ring(&["x", "y"]);
    let ideals: [&[&str]; 4] = [&["y", "x^2"], &["x^2 + y^3", "x*y"], &["x*y", "x^3 + y^3"], &["y^2 - x^3", "x^2", "y"]];
    for gens in ideals {
        let ps: Vec<Polynomial> = gens.iter().map(|g| p(g, &r)).collect();
        let base = standard_basis(&Ideal::new(&r, ps.clone()).unwrap(), &local(2), &lim())
            .unwrap()
            .quotient_dimension();
        for _ in 0..5 {
            let a = random_invertible(&mut rng, 2);
            let moved: Vec<Polynomial> = ps.iter().map(|f| f.apply_linear(&a).unwrap()).collect();
            let b = standard_basis(&Ideal::new(&r, moved).unwrap(), &local(2), &lim()).unwrap();
            assert_eq!(b.quotient_dimension(), base, "{:?}", gens);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn finite_staircase_iff_krull_zero(exps in prop::collection::vec(prop::collection::vec(0u32..4, 3), 1..5)) {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<Polynomial> = exps
            .into_iter()
            .map(|e| Polynomial::term(&r, Monomial::new(e), int(1)))
            .collect();
        let b = standard_basis(&Ideal::new(&r, gens).unwrap(), &global(3), &lim()).unwrap();
        prop_assert_eq!(b.quotient_dimension().is_finite(), b.krull_dimension() == 0);
        if let QuotientDimension::Infinite(k) = b.quotient_dimension() {
            prop_assert_eq!(k, b.krull_dimension());
        }
    }

    #[test]
    fn local_and_global_agree_on_monomial_ideals(exps in prop::collection::vec(prop::collection::vec(0u32..4, 2), 1..4)) {
        let r = ring(&["x", "y"]);
        let gens: Vec<Polynomial> = exps
            .into_iter()
            .map(|e| Polynomial::term(&r, Monomial::new(e), int(1)))
            .collect();
        let i = Ideal::new(&r, gens).unwrap();
        let g = standard_basis(&i, &global(2), &lim()).unwrap();
        let l = standard_basis(&i, &local(2), &lim()).unwrap();
        prop_assert_eq!(g.quotient_dimension(), l.quotient_dimension());
    }
}
