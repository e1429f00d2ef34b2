mod common;

use common::*;
use fsclass::algebra::{
    casimir_element, check_cstar, real_form_from_s, separability_idempotent, separability_idempotent_rotated,
};
use fsclass::constructors::group_star_algebra;
use fsclass::corpus;
use fsclass::error::Error;
use fsclass::matrix::SeededRng;
use proptest::prelude::*;

#[test]
fn idempotent_and_casimir_invariants() {
    let t = tol();
    for name in MASTER {
        let c = case(name);
        let alg = &c.algebra;
        let e = separability_idempotent(alg, &t).unwrap();
        assert!(e.deviation(alg) < 1e-8, "{name}");
        let v = casimir_element(alg, &t).unwrap();
        for i in 0..alg.dim() {
            let b = alg.basis(i);
            assert!((alg.product(&v, &b) - alg.product(&b, &v)).norm() < 1e-8, "{name}: v not central");
        }
        assert!(alg.is_positive_invertible(&v, &t), "{name}: v not positive definite");
        let rf = real_form_from_s(alg, &c.antipode, &t).unwrap();
        assert_eq!(rf.real_dim(), alg.dim(), "{name}");
    }
}

#[test]
fn group_algebras_are_cstar() {
    for name in GROUPS {
        let alg = group_star_algebra(&corpus::group(name).unwrap(), &tol()).unwrap();
        assert!(check_cstar(&alg).is_cstar, "{name}");
    }
}

#[test]
fn dual_numbers_rejected_by_analysis() {
    let c = algebra_case("dual_numbers");
    assert!(!c.algebra.is_cstar());
    let res = fsclass::indicator::Analysis::new(&c.algebra, &c.antipode, 0, &tol());
    assert!(matches!(res, Err(Error::NotCStar)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn rotated_idempotents_are_valid(name in prop::sample::select(MASTER), seed in any::<u64>()) {
        let c = case(name);
        let e = separability_idempotent_rotated(&c.algebra, &mut SeededRng::new(seed), &tol()).unwrap();
        prop_assert!(e.deviation(&c.algebra) < 1e-8);
    }

    #[test]
    fn star_is_antimultiplicative(name in prop::sample::select(MASTER), seed in any::<u64>()) {
        let c = case(name);
        let alg = &c.algebra;
        let mut rng = SeededRng::new(seed);
        let (a, b) = (rng.complex_vector(alg.dim()), rng.complex_vector(alg.dim()));
        let lhs = alg.star_of(&alg.product(&a, &b));
        let rhs = alg.product(&alg.star_of(&b), &alg.star_of(&a));
        prop_assert!((lhs - rhs).norm() < 1e-9 * (1.0 + a.norm() * b.norm()));
        prop_assert!((alg.star_of(&alg.star_of(&a)) - &a).norm() < 1e-9 * (1.0 + a.norm()));
    }
}
