mod common;

use common::*;
use fsclass::constructors::group_star_algebra;
use fsclass::corep::{compact_decompose, dualize, dualize_co, CoalgebraAnalysis, Corepresentation};
use fsclass::corpus;
use fsclass::indicator::Analysis;
use fsclass::instance::Instance;
use fsclass::matrix::SeededRng;
use proptest::prelude::*;

fn coalgebra_analysis(c: &Case) -> CoalgebraAnalysis {
    let (co, vs) = c.instance.coalgebra(&tol()).unwrap();
    CoalgebraAnalysis::new(&co, &vs, 0, &tol()).unwrap()
}

#[test]
fn dualize_round_trips() {
    let t = tol();
    for name in MASTER {
        let alg = case(name).algebra;
        let back = dualize_co(&dualize(&alg, &t).unwrap(), &t).unwrap();
        assert!((back.unit() - alg.unit()).norm() < 1e-12, "{name}");
        assert!((back.star_matrix() - alg.star_matrix()).norm() < 1e-12, "{name}");
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let (a, b) = (alg.basis(i), alg.basis(j));
                assert!((back.product(&a, &b) - alg.product(&a, &b)).norm() < 1e-12, "{name}");
            }
        }
    }
}

/// Irreducible modules of A give corepresentations of A* whose characters
/// are the module characters read on the basis.
#[test]
fn modules_and_corepresentations_correspond() {
    let t = tol();
    for name in MASTER {
        let c = case(name);
        let co = dualize(&c.algebra, &t).unwrap();
        let an = Analysis::new(&c.algebra, &c.antipode, 0, &t).unwrap();
        for v in an.irreps() {
            let u = Corepresentation::from_representation(&v);
            let entries = (0..u.dim() * u.dim()).map(|ij| u.entry(ij / u.dim(), ij % u.dim()).clone()).collect();
            let checked = Corepresentation::new(&co, u.dim(), entries, None, &t).unwrap();
            let ch = v.character();
            let tv = checked.character();
            for m in 0..c.algebra.dim() {
                assert!((tv[m] - ch.at(&c.algebra.basis(m))).norm() < 1e-10, "{name}");
            }
            let back = u.to_representation(&c.algebra);
            for (x, y) in back.matrices().iter().zip(v.matrices()) {
                assert!((x - y).norm() < 1e-12, "{name}");
            }
        }
    }
}

#[test]
fn dual_of_cyclic_group_algebra_splits_into_characters() {
    let t = tol();
    let alg = group_star_algebra(&corpus::group("z3").unwrap(), &t).unwrap();
    let dec = compact_decompose(&dualize(&alg, &t).unwrap(), 0, &t).unwrap();
    assert_eq!(dec.coreps.len(), 3);
    assert!(dec.coreps.iter().all(|u| u.dim() == 1));
}

#[test]
fn group_gamma_is_the_counit() {
    for name in ["z2", "s3", "q8"] {
        let an = coalgebra_analysis(&group_case(name));
        assert!((&an.gamma.gamma - an.coalgebra.counit()).norm() < 1e-8, "{name}");
    }
}

#[test]
fn corep_indicators_of_small_groups() {
    let t = tol();
    let expected: &[(&str, &[i64])] =
        &[("z1", &[1]), ("z2", &[1, 1]), ("z4", &[1, 1, 0, 0]), ("q8", &[1, 1, 1, 1, -1]), ("s3", &[1, 1, 1])];
    for &(name, nus) in expected {
        let an = coalgebra_analysis(&group_case(name));
        let got = sorted_round((0..an.coreps().len()).map(|i| an.corep_indicator(i, &t).unwrap()));
        assert_eq!(got, nus, "{name}");
    }
    let an = coalgebra_analysis(&group_case("q8"));
    let two = (0..an.coreps().len()).find(|&i| an.coreps()[i].dim() == 2).unwrap();
    assert!((an.corep_indicator(two, &t).unwrap() + 1.0).abs() < 1e-8);
}

#[test]
fn matrix_coalgebra_file() {
    let t = tol();
    let (co, vs) = corpus::coalgebra("m2c").unwrap().build(&t).unwrap();
    let an = CoalgebraAnalysis::new(&co, &vs, 0, &t).unwrap();
    assert_eq!(an.coreps().len(), 1);
    assert_eq!(an.coreps()[0].dim(), 2);
    let nu = an.corep_indicator(0, &t).unwrap();
    assert!((nu - an.algebra_report(0, &t).unwrap().nu_formula).abs() < 1e-8);
    let inst = Instance::Coalgebra { coalgebra: co, varsigma: vs };
    assert!(inst.verify(0, &t).unwrap().iter().all(|c| c.holds));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn character_ignores_change_of_basis(name in prop::sample::select(MASTER), seed in any::<u64>()) {
        let t = tol();
        let an = coalgebra_analysis(&case(name));
        let mut rng = SeededRng::new(seed);
        for u in an.coreps() {
            let p = rng.complex_matrix(u.dim(), u.dim()) + fsclass::CMatrix::identity(u.dim(), u.dim()) * fsclass::matrix::r(3.0);
            let w = u.change_basis(&p, &t).unwrap();
            let entries = (0..w.dim() * w.dim()).map(|ij| w.entry(ij / w.dim(), ij % w.dim()).clone()).collect();
            prop_assert!(Corepresentation::new(&an.coalgebra, w.dim(), entries, None, &t).is_ok());
            prop_assert!((w.character() - u.character()).norm() < 1e-8 * (1.0 + u.character().norm()));
        }
    }

    #[test]
    fn coseparability_form_is_valid_for_every_seed(name in prop::sample::select(MASTER), seed in any::<u64>()) {
        let t = tol();
        let (co, _) = case(name).instance.coalgebra(&t).unwrap();
        let dec = compact_decompose(&co, seed, &t).unwrap();
        prop_assert!(dec.idempotent.deviation(&co) < 1e-8);
        prop_assert!(dec.idempotent.is_positive(&co, &t));
    }
}
