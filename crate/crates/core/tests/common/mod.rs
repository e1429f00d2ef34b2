//! Corpus assembly and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use fsclass::algebra::{AntiAlgebraMap, FDStarAlgebra};
use fsclass::constructors::{drinfeld_double, groupoid_weak_hopf, GroupTable, Involution};
use fsclass::corpus;
use fsclass::instance::Instance;
use fsclass::matrix::{c, SeededRng};
use fsclass::{CMatrix, CVector, Tolerance, C64};
use nalgebra::{DMatrix, Schur, SVD};

pub fn tol() -> Tolerance {
    Tolerance::default()
}

pub struct Case {
    pub name: String,
    pub instance: Instance,
    pub algebra: Arc<FDStarAlgebra>,
    pub antipode: AntiAlgebraMap,
    pub group: Option<GroupTable>,
}

impl Case {
    pub fn new(name: &str, instance: Instance) -> Self {
        let (algebra, antipode) = instance.algebra(&tol()).unwrap();
        let group = match &instance {
            Instance::Group { group, .. } => Some(group.clone()),
            _ => None,
        };
        Case { name: name.to_string(), instance, algebra, antipode, group }
    }
}

pub const GROUPS: &[&str] = &["z1", "z2", "z3", "z4", "z5", "z6", "z7", "z8", "s3", "s4", "d4", "q8"];

pub fn group_case(name: &str) -> Case {
    Case::new(name, Instance::group(corpus::group(name).unwrap(), &tol()).unwrap())
}

pub fn groupoid_case(name: &str) -> Case {
    let w = groupoid_weak_hopf(&corpus::groupoid(name).unwrap(), &tol()).unwrap();
    Case::new(name, Instance::weak_hopf(w, &tol()).unwrap())
}

pub fn double_case(group: &str) -> Case {
    let w = drinfeld_double(&corpus::group(group).unwrap(), &tol()).unwrap();
    Case::new(&format!("D({group})"), Instance::weak_hopf(w, &tol()).unwrap())
}

pub fn scheme_case(name: &str) -> Case {
    Case::new(name, Instance::scheme(corpus::scheme(name).unwrap(), &tol()).unwrap())
}

pub fn algebra_case(name: &str) -> Case {
    let (algebra, antipode) = corpus::algebra(name).unwrap().build(&tol()).unwrap();
    Case::new(name, Instance::Algebra { algebra, antipode })
}

/// Groups, pair groupoids, doubles, schemes and the two hand-built M2 structures.
pub fn master_corpus() -> Vec<Case> {
    let mut out: Vec<Case> = GROUPS.iter().map(|g| group_case(g)).collect();
    for g in ["pair1", "pair2", "pair3", "pair4"] {
        out.push(groupoid_case(g));
    }
    out.push(double_case("z2"));
    out.push(double_case("s3"));
    out.push(scheme_case("c5"));
    out.push(scheme_case("petersen"));
    out.push(algebra_case("m2_twisted"));
    out.push(algebra_case("m2_quaternionic"));
    out
}

/// An irreducible character of a finite group on its elements, with the
/// classical indicator `(1/|G|) sum_h chi(h^2)`.
#[derive(Debug, Clone)]
pub struct OracleCharacter {
    pub values: Vec<C64>,
    pub nu: f64,
}

fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut cls: Vec<usize> = (0..n).map(|h| g.mul(g.mul(h, x), g.inv(h))).collect();
        cls.sort_unstable();
        cls.dedup();
        for &y in &cls {
            seen[y] = true;
        }
        classes.push(cls);
    }
    classes
}

/// Character table from simultaneous eigenvectors of the class-sum
/// multiplication matrices; no representation is ever built.
pub fn character_table(g: &GroupTable) -> Vec<OracleCharacter> {
    let n = g.order();
    let classes = conjugacy_classes(g);
    let r = classes.len();
    let mut class_of = vec![0; n];
    for (k, cls) in classes.iter().enumerate() {
        for &x in cls {
            class_of[x] = k;
        }
    }
    // a[i][j][k] = #{(x, y) in K_i x K_j : xy = rep(K_k)}
    let mut a = vec![DMatrix::<f64>::zeros(r, r); r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let z = classes[k][0];
                let count = classes[i].iter().filter(|&&x| class_of[g.mul(g.inv(x), z)] == j).count();
                a[i][(j, k)] = count as f64;
            }
        }
    }
    let mut rng = SeededRng::new(17);
    let mut m = DMatrix::<f64>::zeros(r, r);
    for ai in &a {
        m += ai * rng.gaussian();
    }
    let lambdas = Schur::new(m.clone()).complex_eigenvalues();
    let mc = m.map(|x| c(x, 0.0));
    let e_class = class_of[g.identity()];
    let mut out = Vec::new();
    for lambda in lambdas.iter() {
        let shifted = &mc - CMatrix::identity(r, r) * *lambda;
        let svd = SVD::new(shifted, false, true);
        let idx = svd.singular_values.imin();
        let w: CVector = svd.v_t.unwrap().row(idx).adjoint();
        let w = &w / w[e_class];
        let norm: f64 = (0..r).map(|k| w[k].norm_sqr() / classes[k].len() as f64).sum();
        let deg = (n as f64 / norm).sqrt();
        let values: Vec<C64> = (0..n).map(|x| w[class_of[x]] * deg / classes[class_of[x]].len() as f64).collect();
        let nu = (0..n).map(|h| values[g.mul(h, h)]).sum::<C64>().re / n as f64;
        out.push(OracleCharacter { values, nu });
    }
    out
}

/// `(1/|G|) sum_h chi(tau(h) h)`.
pub fn twisted_oracle(g: &GroupTable, tau: &Involution, chi: &OracleCharacter) -> f64 {
    let n = g.order();
    (0..n).map(|h| chi.values[g.mul(tau.apply(h), h)]).sum::<C64>().re / n as f64
}

/// Index of the oracle character closest to the given values.
pub fn match_character(table: &[OracleCharacter], values: &[C64]) -> (usize, f64) {
    table
        .iter()
        .enumerate()
        .map(|(i, ch)| (i, ch.values.iter().zip(values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap()
}

pub fn sorted_round(values: impl IntoIterator<Item = f64>) -> Vec<i64> {
    let mut v: Vec<i64> = values.into_iter().map(|x| x.round() as i64).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Builds one case of [`master_corpus`] by name.
pub fn case(name: &str) -> Case {
    match name {
        n if GROUPS.contains(&n) => group_case(n),
        n if n.starts_with("pair") => groupoid_case(n),
        "D(z2)" => double_case("z2"),
        "D(s3)" => double_case("s3"),
        "c5" | "petersen" => scheme_case(name),
        n => algebra_case(n),
    }
}

pub const MASTER: &[&str] = &[
    "z1",
    "z2",
    "z3",
    "z4",
    "z5",
    "z6",
    "z7",
    "z8",
    "s3",
    "s4",
    "d4",
    "q8",
    "pair1",
    "pair2",
    "pair3",
    "pair4",
    "D(z2)",
    "D(s3)",
    "c5",
    "petersen",
    "m2_twisted",
    "m2_quaternionic",
];
