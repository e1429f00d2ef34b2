mod common;

use common::*;
use fsclass::constructors::{group_algebra, twisted_antipode, twisted_indicator, Involution};
use fsclass::corpus;
use fsclass::indicator::{fs_indicator_formula, Analysis};
use fsclass::matrix::r;

#[test]
fn oracle_character_tables_are_orthonormal() {
    for name in GROUPS {
        let g = corpus::group(name).unwrap();
        let table = character_table(&g);
        let n = g.order() as f64;
        let sum_sq: f64 = table.iter().map(|ch| ch.values[g.identity()].re.powi(2)).sum();
        assert!((sum_sq - n).abs() < 1e-8, "{name}: sum of squared degrees {sum_sq}");
        for a in &table {
            for b in &table {
                let ip: fsclass::C64 =
                    a.values.iter().zip(&b.values).map(|(x, y)| x * y.conj()).sum::<fsclass::C64>() / r(n);
                let expect = if std::ptr::eq(a, b) { 1.0 } else { 0.0 };
                assert!((ip - r(expect)).norm() < 1e-8, "{name}: <chi, psi> = {ip}");
            }
        }
    }
}

#[test]
fn formula_matches_classical_oracle() {
    let t = tol();
    for name in GROUPS {
        let g = corpus::group(name).unwrap();
        let table = character_table(&g);
        let ga = group_algebra(&g, &t).unwrap();
        let an = Analysis::new(&ga.algebra, &ga.antipode, 0, &t).unwrap();
        assert_eq!(an.components.len(), table.len(), "{name}");
        for comp in &an.components {
            let ch = comp.irrep.character();
            let (k, dist) = match_character(&table, &ch.values);
            assert!(dist < 1e-8, "{name}: character not in oracle table");
            let nu = fs_indicator_formula(&comp.irrep, &an.antipode, &an.dual.g, &an.idempotent, &t).unwrap();
            assert!((nu - table[k].nu).abs() < 1e-8, "{name}: formula {nu} vs oracle {}", table[k].nu);
        }
    }
}

#[test]
fn trivial_twist_is_untwisted() {
    let t = tol();
    for name in ["z4", "s3", "q8"] {
        let g = corpus::group(name).unwrap();
        let table = character_table(&g);
        let (alg, s) = twisted_antipode(&g, &Involution::identity(&g), &t).unwrap();
        let an = Analysis::new(&alg, &s, 0, &t).unwrap();
        for comp in &an.components {
            let (k, _) = match_character(&table, &comp.irrep.character().values);
            let nu = twisted_indicator(&g, &Involution::identity(&g), &comp.irrep, &t).unwrap();
            assert!((nu - table[k].nu).abs() < 1e-8);
        }
    }
}
