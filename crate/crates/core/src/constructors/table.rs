//! Table algebras (including Bose-Mesner algebras of association schemes).

use std::sync::Arc;

use crate::algebra::{AntiAlgebraMap, Element, FDStarAlgebra, SeparabilityIdempotent};
use crate::constructors::group::{perm_matrix, GroupTable};
use crate::error::{Error, Result};
use crate::matrix::{r, Tolerance, ONE, ZERO};
use crate::rep::Representation;

/// Distinguished basis `b_i` with `b_i b_j = sum_k p[i][j][k] b_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct TableAlgebraData {
    n: usize,
    /// `p[(i * n + j) * n + k]`.
    p: Vec<f64>,
    star: Vec<usize>,
    zero: usize,
}

fn violation(axiom: &'static str, detail: String) -> Error {
    Error::AxiomViolation { axiom, detail }
}

impl TableAlgebraData {
    /// Validates (T0) `b_zero = 1`, (T1) real constants with `b_i -> b_{i*}`
    /// an anti-automorphism, and (T2) positivity of `p[i][i*][0]`.
    pub fn new(p: Vec<Vec<Vec<f64>>>, star: Vec<usize>, zero: usize) -> Result<Self> {
        let n = p.len();
        if n == 0 || star.len() != n || zero >= n {
            return Err(violation("T0", "empty basis or inconsistent sizes".into()));
        }
        let mut flat = Vec::with_capacity(n * n * n);
        for (i, pi) in p.iter().enumerate() {
            if pi.len() != n || pi.iter().any(|row| row.len() != n) {
                return Err(violation("T1", format!("p[{i}] is not {n}x{n}")));
            }
            for row in pi {
                for &v in row {
                    if !v.is_finite() {
                        return Err(violation("T1", format!("non-finite constant in p[{i}]")));
                    }
                    flat.push(v);
                }
            }
        }
        let data = TableAlgebraData { n, p: flat, star, zero };
        data.validate()?;
        Ok(data)
    }

    /// Derives `i*` as the unique `j` with `p[i][j][zero] != 0`.
    pub fn from_intersection_numbers(p: Vec<Vec<Vec<f64>>>, zero: usize) -> Result<Self> {
        let n = p.len();
        let mut star = Vec::with_capacity(n);
        for i in 0..n {
            let hits: Vec<usize> =
                (0..n).filter(|&j| p[i].get(j).and_then(|row| row.get(zero)).is_some_and(|&v| v != 0.0)).collect();
            match hits.as_slice() {
                [j] => star.push(*j),
                _ => {
                    return Err(violation("T2", format!("b_{i} has {} partners j with p[{i}][j][0] != 0", hits.len())))
                }
            }
        }
        TableAlgebraData::new(p, star, zero)
    }

    /// Intersection numbers of an association scheme given by 0/1 relation
    /// matrices; relation 0 must be the diagonal.
    pub fn from_relation_matrices(matrices: &[Vec<Vec<u8>>]) -> Result<Self> {
        let d = matrices.len();
        let v = matrices.first().map(|m| m.len()).unwrap_or(0);
        if d == 0 || v == 0 {
            return Err(violation("T0", "no relations".into()));
        }
        for (i, m) in matrices.iter().enumerate() {
            if m.len() != v || m.iter().any(|row| row.len() != v || row.iter().any(|&x| x > 1)) {
                return Err(violation("T0", format!("relation {i} is not a {v}x{v} 0/1 matrix")));
            }
        }
        for x in 0..v {
            for y in 0..v {
                let count = matrices.iter().filter(|m| m[x][y] == 1).count();
                if count != 1 {
                    return Err(violation("T0", format!("relations do not partition the pair ({x}, {y})")));
                }
                if (matrices[0][x][y] == 1) != (x == y) {
                    return Err(violation("T0", "relation 0 is not the diagonal".into()));
                }
            }
        }
        let mut star = vec![usize::MAX; d];
        for i in 0..d {
            for j in 0..d {
                if (0..v).all(|x| (0..v).all(|y| matrices[i][x][y] == matrices[j][y][x])) {
                    star[i] = j;
                }
            }
            if star[i] == usize::MAX {
                return Err(violation("T1", format!("transpose of relation {i} is not a relation")));
            }
        }
        let mut p = vec![vec![vec![0.0; d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod: Vec<Vec<usize>> = (0..v)
                    .map(|x| {
                        (0..v).map(|y| (0..v).map(|z| (matrices[i][x][z] * matrices[j][z][y]) as usize).sum()).collect()
                    })
                    .collect();
                for k in 0..d {
                    let mut value = None;
                    for x in 0..v {
                        for y in 0..v {
                            if matrices[k][x][y] == 1 {
                                match value {
                                    None => value = Some(prod[x][y]),
                                    Some(c) if c != prod[x][y] => {
                                        return Err(violation(
                                            "T1",
                                            format!("A_{i} A_{j} is not constant on relation {k}"),
                                        ))
                                    }
                                    _ => {}
                                }
                            }
                        }
                    }
                    p[i][j][k] = value.unwrap_or(0) as f64;
                }
            }
        }
        TableAlgebraData::new(p, star, 0)
    }

    /// `p[a][b][c] = [ab = c]`.
    pub fn from_group(g: &GroupTable) -> Self {
        let n = g.order();
        let mut p = vec![vec![vec![0.0; n]; n]; n];
        for a in 0..n {
            for b in 0..n {
                p[a][b][g.mul(a, b)] = 1.0;
            }
        }
        TableAlgebraData::new(p, g.inverse_perm().to_vec(), g.identity()).expect("group tables are table algebras")
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        let z = self.zero;
        for i in 0..n {
            for k in 0..n {
                let d = if i == k { 1.0 } else { 0.0 };
                if self.p(z, i, k) != d || self.p(i, z, k) != d {
                    return Err(violation("T0", format!("b_{z} does not act as the identity on b_{i}")));
                }
            }
        }
        for i in 0..n {
            let s = self.star[i];
            if s >= n || self.star[s] != i {
                return Err(violation("T1", format!("i -> i* is not an involution at {i}")));
            }
        }
        if self.star[z] != z {
            return Err(violation("T1", "the identity index is not self-adjoint".into()));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.p(self.star[j], self.star[i], self.star[k]);
                    if (a - self.p(i, j, k)).abs() > 1e-9 * (1.0 + a.abs()) {
                        return Err(violation("T1", format!("(b_{i} b_{j})* != b_{j}* b_{i}* at coefficient {k}")));
                    }
                }
            }
        }
        for i in 0..n {
            let s = self.star[i];
            let a = self.p(i, s, z);
            let b = self.p(s, i, z);
            if !(a > 0.0) || (a - b).abs() > 1e-9 * a.abs().max(1.0) {
                return Err(violation("T2", format!("p[{i}][{s}][{z}] = {a}, p[{s}][{i}][{z}] = {b}")));
            }
            for j in 0..n {
                if j != s && self.p(i, j, z) != 0.0 {
                    return Err(violation("T2", format!("p[{i}][{j}][{z}] != 0 with {j} != {i}*")));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> f64 {
        self.p[(i * self.n + j) * self.n + k]
    }

    pub fn star(&self) -> &[usize] {
        &self.star
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// `p[i][i*][zero]`.
    pub fn weight(&self, i: usize) -> f64 {
        self.p(i, self.star[i], self.zero)
    }

    /// Checks that `tau` is an involutive automorphism of the table commuting
    /// with the star.
    pub fn check_involution(&self, tau: &[usize]) -> Result<()> {
        let n = self.n;
        let bad = |msg: String| Error::NotInvolution(msg);
        if tau.len() != n || tau.iter().any(|&t| t >= n) {
            return Err(bad("permutation has the wrong size".into()));
        }
        for i in 0..n {
            if tau[tau[i]] != i || tau[self.star[i]] != self.star[tau[i]] {
                return Err(bad(format!("tau is not an involution commuting with * at {i}")));
            }
            for j in 0..n {
                for k in 0..n {
                    if self.p(tau[i], tau[j], tau[k]) != self.p(i, j, k) {
                        return Err(bad(format!("tau does not preserve p at ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct TableAlgebra {
    pub algebra: Arc<FDStarAlgebra>,
    /// `S(b_i) = b_{i*}`.
    pub antipode: AntiAlgebraMap,
    /// `E = sum_i (1/p[i][i*][0]) b_{i*} (x) b_i v^{-1}`.
    pub idempotent: SeparabilityIdempotent,
    /// `v = sum_i (1/p[i][i*][0]) b_{i*} b_i`.
    pub v: Element,
}

pub fn table_algebra(t: &TableAlgebraData, tol: &Tolerance) -> Result<TableAlgebra> {
    let n = t.dim();
    let mut st = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let v = t.p(i, j, k);
                if v != 0.0 {
                    st.push((i, j, k, r(v)));
                }
            }
        }
    }
    let mut unit = Element::zeros(n);
    unit[t.zero()] = ONE;
    let star = perm_matrix(t.star());
    let algebra = Arc::new(FDStarAlgebra::build(n, &st, unit, star.clone(), tol)?);
    let antipode = AntiAlgebraMap::new(&algebra, star, tol)?;
    let mut v = algebra.zero();
    for i in 0..n {
        v += algebra.product(&algebra.basis(t.star()[i]), &algebra.basis(i)) * r(1.0 / t.weight(i));
    }
    if !algebra.is_central(&v, tol) || !algebra.is_positive(&v, tol) {
        return Err(Error::InternalInconsistency("v is not central and positive".into()));
    }
    let vinv = algebra.inverse(&v, tol)?;
    let pairs = (0..n)
        .map(|i| {
            let x = algebra.basis(t.star()[i]) * r(1.0 / t.weight(i));
            let y = algebra.product(&algebra.basis(i), &vinv);
            (x, y)
        })
        .collect();
    let idempotent = SeparabilityIdempotent { pairs };
    let dev = idempotent.deviation(&algebra);
    if dev > tol.eps_eig.sqrt() {
        return Err(Error::InternalInconsistency(format!("table idempotent deviates by {dev:.3e}")));
    }
    Ok(TableAlgebra { algebra, antipode, idempotent, v })
}

/// `sum_i (1/p[i][i*][0]) chi(b_{tau(i)} b_i)`.
pub fn table_raw_sum(t: &TableAlgebraData, tbl: &TableAlgebra, v: &Representation, tau: Option<&[usize]>) -> f64 {
    let alg = &tbl.algebra;
    let ch = v.character();
    let mut sum = ZERO;
    for i in 0..t.dim() {
        let ti = tau.map(|p| p[i]).unwrap_or(i);
        sum += ch.at(&alg.product(&alg.basis(ti), &alg.basis(i))) * r(1.0 / t.weight(i));
    }
    sum.re
}

/// `(chi(1)/chi(v)) sum_i (1/p[i][i*][0]) chi(b_{tau(i)} b_i)`.
pub fn table_indicator(
    t: &TableAlgebraData,
    tbl: &TableAlgebra,
    v: &Representation,
    tau: Option<&[usize]>,
    tol: &Tolerance,
) -> Result<f64> {
    if let Some(p) = tau {
        t.check_involution(p)?;
    }
    let ch = v.character();
    let chi_v = ch.at(&tbl.v);
    if chi_v.norm() <= tol.eps_rank {
        return Err(Error::InternalInconsistency("chi(v) vanishes".into()));
    }
    let ratio = ch.at(tbl.algebra.unit()) / chi_v;
    let val = ratio * r(table_raw_sum(t, tbl, v, tau));
    if val.im.abs() >= tol.eps_round {
        return Err(Error::ComplexResult { imag: val.im });
    }
    Ok(val.re)
}

/// `tau o S` as an anti-algebra map on the table algebra.
pub fn twisted_table_antipode(tbl: &TableAlgebra, tau: &[usize], tol: &Tolerance) -> Result<AntiAlgebraMap> {
    tbl.antipode.then(&tbl.algebra, &perm_matrix(tau), tol)
}
