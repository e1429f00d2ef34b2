mod common;

use common::*;
use fsclass::constructors::{
    drinfeld_double, group_hopf, groupoid_weak_hopf, haar_integral, hopf_separability_idempotent, table_algebra,
    table_indicator, twisted_product_element, GroupTable, Involution,
};
use fsclass::corpus;
use fsclass::error::Error;
use fsclass::indicator::Analysis;
use fsclass::CMatrix;

const GROUPOIDS: &[&str] = &["pair1", "pair2", "pair3", "pair4", "z2_disjoint_z2", "z3_single"];

#[test]
fn constructed_algebras_are_cstar() {
    let t = tol();
    for name in GROUPS {
        let g = corpus::group(name).unwrap();
        assert!(group_hopf(&g, &t).unwrap().algebra().is_cstar(), "{name}");
        match drinfeld_double(&g, &t) {
            Ok(w) => assert!(w.algebra().is_cstar(), "D({name})"),
            Err(Error::TooLarge { dim, .. }) => assert_eq!(dim, g.order() * g.order()),
            Err(e) => panic!("D({name}): {e}"),
        }
    }
    for name in GROUPOIDS {
        assert!(groupoid_weak_hopf(&corpus::groupoid(name).unwrap(), &t).unwrap().algebra().is_cstar(), "{name}");
    }
    for name in ["c5", "c5_p", "petersen"] {
        assert!(table_algebra(&corpus::scheme(name).unwrap(), &t).unwrap().algebra.is_cstar(), "{name}");
    }
}

#[test]
fn haar_idempotents_separate() {
    let t = tol();
    let mut hopfs: Vec<_> = GROUPS.iter().map(|g| group_hopf(&corpus::group(g).unwrap(), &t).unwrap()).collect();
    hopfs.extend(GROUPOIDS.iter().map(|g| groupoid_weak_hopf(&corpus::groupoid(g).unwrap(), &t).unwrap()));
    for w in &hopfs {
        let haar = haar_integral(w, &t).unwrap();
        let e = hopf_separability_idempotent(w, &haar);
        assert!(e.deviation(w.algebra()) < 1e-8);
        let n = w.dim();
        let z = twisted_product_element(w, &haar, &CMatrix::identity(n, n));
        assert!(w.algebra().is_central(&z, &t));
    }
}

#[test]
fn doubles_have_trivial_canonical_element() {
    let t = tol();
    for name in ["z2", "z3", "s3", "q8"] {
        let w = drinfeld_double(&corpus::group(name).unwrap(), &t).unwrap();
        assert!(w.is_hopf(&t), "D({name})");
        let s = w.antipode();
        let n = w.dim();
        assert!((s.squared() - CMatrix::identity(n, n)).norm() < 1e-9, "D({name})");
        let an = Analysis::new(w.algebra(), s, 0, &t).unwrap();
        assert!((&an.canonical.g - w.algebra().unit()).norm() < 1e-8, "D({name})");
    }
}

#[test]
fn table_formula_matches_generic_indicator() {
    let t = tol();
    for name in ["c5", "c5_p", "petersen"] {
        let data = corpus::scheme(name).unwrap();
        let tbl = table_algebra(&data, &t).unwrap();
        let an = Analysis::new(&tbl.algebra, &tbl.antipode, 0, &t).unwrap();
        for (i, v) in an.irreps().iter().enumerate() {
            let nu = table_indicator(&data, &tbl, v, None, &t).unwrap();
            let k = nu.round();
            assert!([-1.0, 0.0, 1.0].contains(&k) && (nu - k).abs() < 1e-8, "{name}: {nu}");
            let generic = an.irrep_report(i, &t).unwrap().nu_formula;
            assert!((nu - generic).abs() < 1e-8, "{name}: table {nu} vs generic {generic}");
        }
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(matches!(corpus::scheme("broken"), Err(Error::AxiomViolation { axiom: "T2", .. })));
    let not_closed = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 0]];
    assert!(matches!(GroupTable::new(not_closed, None), Err(Error::BadGroup(_))));
    let z3 = GroupTable::cyclic(3);
    // x -> x + 1 is a permutation of order 3 and not a homomorphism
    assert!(matches!(Involution::new(&z3, vec![1, 2, 0]), Err(Error::NotInvolution(_))));
    let z4 = GroupTable::cyclic(4);
    // swaps 1 and 2 only: an involution of the set, not of the group
    assert!(matches!(Involution::new(&z4, vec![0, 2, 1, 3]), Err(Error::NotInvolution(_))));
}
