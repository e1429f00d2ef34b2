//! Weak Hopf *-algebras: validation of the consumed axioms, counital maps,
//! Haar integrals, the weak Hopf indicator and the dual Hopf algebra.

use std::sync::Arc;

use crate::algebra::{AntiAlgebraMap, Element, FDStarAlgebra, SeparabilityIdempotent};
use crate::error::{Error, Result};
use crate::matrix::{self, nullspace, CMatrix, CVector, Tolerance, C64, ZERO};
use crate::rep::Representation;

/// `Delta(e_i) = sum (j, k, c) c e_j (x) e_k`.
pub type SparseCoproduct = Vec<Vec<(usize, usize, C64)>>;

/// Checked: coassociativity, multiplicativity of `Delta`, the counit laws,
/// `Delta(a^*) = Delta(a)^*`, and `eps(abc) = eps(a b_1) eps(b_2 c)`.
#[derive(Debug, Clone)]
pub struct WeakHopfData {
    algebra: Arc<FDStarAlgebra>,
    delta: SparseCoproduct,
    counit: CVector,
    antipode: AntiAlgebraMap,
}

fn accumulate(acc: &mut [C64], n: usize, i: usize, j: usize, v: C64) {
    acc[i * n + j] += v;
}

impl WeakHopfData {
    pub fn new(
        algebra: Arc<FDStarAlgebra>,
        delta: SparseCoproduct,
        counit: CVector,
        antipode: AntiAlgebraMap,
        tol: &Tolerance,
    ) -> Result<Self> {
        let n = algebra.dim();
        if delta.len() != n || counit.len() != n || antipode.matrix().shape() != (n, n) {
            return Err(Error::BadWeakHopf("coproduct, counit or antipode has the wrong size".into()));
        }
        for (i, terms) in delta.iter().enumerate() {
            if terms.iter().any(|&(j, k, _)| j >= n || k >= n) {
                return Err(Error::BadWeakHopf(format!("coproduct of e_{i} has an index out of range")));
            }
        }
        let w = WeakHopfData { algebra, delta, counit, antipode };
        w.check(tol)?;
        Ok(w)
    }

    fn check(&self, tol: &Tolerance) -> Result<()> {
        let n = self.dim();
        let alg = &self.algebra;
        let bound = tol.eps_eig;
        // counit laws
        for i in 0..n {
            let mut left = CVector::zeros(n);
            let mut right = CVector::zeros(n);
            for &(j, k, v) in &self.delta[i] {
                left[k] += v * self.counit[j];
                right[j] += v * self.counit[k];
            }
            let e = alg.basis(i);
            if (left - &e).norm() > bound || (right - &e).norm() > bound {
                return Err(Error::BadWeakHopf(format!("counit law fails on e_{i}")));
            }
        }
        // coassociativity
        let mut lhs = vec![ZERO; n * n * n];
        let mut rhs = vec![ZERO; n * n * n];
        for i in 0..n {
            lhs.iter_mut().chain(rhs.iter_mut()).for_each(|z| *z = ZERO);
            for &(j, k, v) in &self.delta[i] {
                for &(a, b, u) in &self.delta[j] {
                    lhs[(a * n + b) * n + k] += v * u;
                }
                for &(a, b, u) in &self.delta[k] {
                    rhs[(j * n + a) * n + b] += v * u;
                }
            }
            let dev = lhs.iter().zip(&rhs).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
            if dev > bound {
                return Err(Error::BadWeakHopf(format!("coassociativity fails on e_{i} (deviation {dev:.3e})")));
            }
        }
        // multiplicativity
        let mut acc = vec![ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                acc.iter_mut().for_each(|z| *z = ZERO);
                for &(k, c) in alg.basis_product(i, j) {
                    for &(a, b, v) in &self.delta[k] {
                        accumulate(&mut acc, n, a, b, c * v);
                    }
                }
                for &(a, b, u) in &self.delta[i] {
                    for &(cc, d, v) in &self.delta[j] {
                        for &(p, x) in alg.basis_product(a, cc) {
                            for &(q, y) in alg.basis_product(b, d) {
                                accumulate(&mut acc, n, p, q, -(u * v * x * y));
                            }
                        }
                    }
                }
                let dev = acc.iter().fold(0.0f64, |m, z| m.max(z.norm()));
                if dev > bound {
                    return Err(Error::BadWeakHopf(format!(
                        "Delta(e_{i} e_{j}) != Delta(e_{i}) Delta(e_{j}) (deviation {dev:.3e})"
                    )));
                }
            }
        }
        // star compatibility
        let sigma = alg.star_matrix();
        for i in 0..n {
            let lhs = self.coproduct(&alg.star_basis(i));
            let rhs = sigma * self.coproduct_basis(i).conjugate() * sigma.transpose();
            let dev = (lhs - rhs).norm();
            if dev > bound {
                return Err(Error::BadWeakHopf(format!("Delta(e_{i}^*) != Delta(e_{i})^* (deviation {dev:.3e})")));
            }
        }
        // eps(abc) = eps(a b_1) eps(b_2 c)
        let eps2 = CMatrix::from_fn(n, n, |a, b| self.counit_of(&alg.product(&alg.basis(a), &alg.basis(b))));
        for b in 0..n {
            let mut lhs = CMatrix::zeros(n, n);
            for a in 0..n {
                for &(k, v) in alg.basis_product(a, b) {
                    for cidx in 0..n {
                        lhs[(a, cidx)] += v * eps2[(k, cidx)];
                    }
                }
            }
            let mut rhs = CMatrix::zeros(n, n);
            for &(j, k, v) in &self.delta[b] {
                for a in 0..n {
                    let x = eps2[(a, j)];
                    if x == ZERO {
                        continue;
                    }
                    for cidx in 0..n {
                        rhs[(a, cidx)] += v * x * eps2[(k, cidx)];
                    }
                }
            }
            let dev = (lhs - rhs).norm();
            if dev > bound {
                return Err(Error::BadWeakHopf(format!(
                    "eps(a e_{b} c) != eps(a b_1) eps(b_2 c) (deviation {dev:.3e})"
                )));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<FDStarAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn counit(&self) -> &CVector {
        &self.counit
    }

    pub fn antipode(&self) -> &AntiAlgebraMap {
        &self.antipode
    }

    pub fn sparse_coproduct(&self) -> &SparseCoproduct {
        &self.delta
    }

    pub fn counit_of(&self, a: &Element) -> C64 {
        a.iter().zip(self.counit.iter()).map(|(x, y)| x * y).sum()
    }

    /// Coefficient matrix `T` with `Delta(e_i) = sum T[j][k] e_j (x) e_k`.
    pub fn coproduct_basis(&self, i: usize) -> CMatrix {
        let n = self.dim();
        let mut t = CMatrix::zeros(n, n);
        for &(j, k, v) in &self.delta[i] {
            t[(j, k)] += v;
        }
        t
    }

    pub fn coproduct(&self, a: &Element) -> CMatrix {
        let n = self.dim();
        let mut t = CMatrix::zeros(n, n);
        for (i, &ai) in a.iter().enumerate() {
            if ai == ZERO {
                continue;
            }
            for &(j, k, v) in &self.delta[i] {
                t[(j, k)] += ai * v;
            }
        }
        t
    }

    /// `sum T[j][k] e_j e_k`.
    pub fn multiply_tensor(&self, t: &CMatrix) -> Element {
        let alg = &self.algebra;
        let mut out = alg.zero();
        for j in 0..t.nrows() {
            for k in 0..t.ncols() {
                let v = t[(j, k)];
                if v != ZERO {
                    for &(m, c) in alg.basis_product(j, k) {
                        out[m] += v * c;
                    }
                }
            }
        }
        out
    }

    /// Deviation of `Delta(1)` from `1 (x) 1`.
    pub fn hopf_deviation(&self) -> f64 {
        let u = self.algebra.unit();
        (self.coproduct(u) - u * u.transpose()).norm()
    }

    pub fn is_hopf(&self, tol: &Tolerance) -> bool {
        self.hopf_deviation() <= tol.eps_eig
    }

    /// `eps_L(a) = eps(1_1 a) 1_2`.
    pub fn eps_l(&self, a: &Element) -> Element {
        let alg = &self.algebra;
        let t = self.coproduct(alg.unit());
        let mut out = alg.zero();
        for j in 0..self.dim() {
            let e = self.counit_of(&alg.product(&alg.basis(j), a));
            if e != ZERO {
                out += t.row(j).transpose() * e;
            }
        }
        out
    }

    /// `eps_R(a) = 1_1 eps(a 1_2)`.
    pub fn eps_r(&self, a: &Element) -> Element {
        let alg = &self.algebra;
        let t = self.coproduct(alg.unit());
        let mut out = alg.zero();
        for k in 0..self.dim() {
            let e = self.counit_of(&alg.product(a, &alg.basis(k)));
            if e != ZERO {
                out += t.column(k) * e;
            }
        }
        out
    }
}

/// Unique `Lambda` with `eps_L(Lambda) = 1 = eps_R(Lambda)`,
/// `a Lambda = eps_L(a) Lambda` and `Lambda a = Lambda eps_R(a)`.
pub fn haar_integral(w: &WeakHopfData, tol: &Tolerance) -> Result<Element> {
    let alg = w.algebra();
    let n = alg.dim();
    let el: Vec<Element> = (0..n).map(|i| w.eps_l(&alg.basis(i))).collect();
    let er: Vec<Element> = (0..n).map(|i| w.eps_r(&alg.basis(i))).collect();
    let rows = 2 * n + 2 * n * n;
    let mut m = CMatrix::zeros(rows, n);
    let mut b = CVector::zeros(rows);
    for i in 0..n {
        for k in 0..n {
            m[(k, i)] = el[i][k];
            m[(n + k, i)] = er[i][k];
        }
    }
    b.rows_mut(0, n).copy_from(alg.unit());
    b.rows_mut(n, n).copy_from(alg.unit());
    for i in 0..n {
        let lhs = &alg.left_matrices()[i] - alg.left_mult(&el[i]);
        m.view_mut((2 * n + i * n, 0), (n, n)).copy_from(&lhs);
        let rhs = alg.right_mult(&alg.basis(i)) - alg.right_mult(&er[i]);
        m.view_mut((2 * n + n * n + i * n, 0), (n, n)).copy_from(&rhs);
    }
    let free = nullspace(&m, tol).ncols();
    let (x, res) = matrix::solve_least_squares(&m, &b, tol);
    if res > tol.eps_eig.sqrt() * b.norm().max(1.0) {
        return Err(Error::NoHaar { residual: res });
    }
    if free > 0 {
        return Err(Error::NonUniqueHaar { dim: free + 1 });
    }
    Ok(x)
}

/// `E = S(Lambda_1) (x) Lambda_2`.
pub fn hopf_separability_idempotent(w: &WeakHopfData, lambda: &Element) -> SeparabilityIdempotent {
    let t = w.antipode().matrix() * w.coproduct(lambda);
    SeparabilityIdempotent::from_tensor(&t)
}

/// `tau(Lambda_1) Lambda_2` for a linear `tau` given by its matrix.
pub fn twisted_product_element(w: &WeakHopfData, lambda: &Element, tau: &CMatrix) -> Element {
    w.multiply_tensor(&(tau * w.coproduct(lambda)))
}

/// `(chi(g)/chi(1)) chi(Lambda_1 Lambda_2)`.
pub fn weak_hopf_indicator(
    w: &WeakHopfData,
    lambda: &Element,
    g: &Element,
    v: &Representation,
    tol: &Tolerance,
) -> Result<f64> {
    let n = w.dim();
    twisted_weak_hopf_indicator(w, lambda, g, &CMatrix::identity(n, n), v, tol)
}

/// `(chi(g)/chi(1)) chi(tau(Lambda_1) Lambda_2)`.
pub fn twisted_weak_hopf_indicator(
    w: &WeakHopfData,
    lambda: &Element,
    g: &Element,
    tau: &CMatrix,
    v: &Representation,
    tol: &Tolerance,
) -> Result<f64> {
    let ch = v.character();
    let z = twisted_product_element(w, lambda, tau);
    let val = ch.at(g) / ch.at(w.algebra().unit()) * ch.at(&z);
    if val.im.abs() >= tol.eps_round {
        return Err(Error::ComplexResult { imag: val.im });
    }
    Ok(val.re)
}

/// The dual Hopf *-algebra on the dual basis `f_k`:
/// `f_a f_b = sum_k Delta_k[a][b] f_k`, `Delta f_k = sum c[i][j][k] f_i (x) f_j`,
/// unit `eps`, counit `1_A`, antipode `S^T`, star `(conj(sigma) S)^T`.
pub fn dual_hopf(w: &WeakHopfData, tol: &Tolerance) -> Result<WeakHopfData> {
    let dev = w.hopf_deviation();
    if dev > tol.eps_eig {
        return Err(Error::NotHopf { deviation: dev });
    }
    let alg = w.algebra();
    let n = alg.dim();
    let mut st = Vec::new();
    for (k, terms) in w.sparse_coproduct().iter().enumerate() {
        for &(a, b, v) in terms {
            st.push((a, b, k, v));
        }
    }
    let s = w.antipode().matrix();
    let star = (alg.star_matrix().conjugate() * s).transpose();
    let dual = Arc::new(FDStarAlgebra::build(n, &st, w.counit().clone(), star, tol)?);
    let mut delta: SparseCoproduct = vec![Vec::new(); n];
    for (i, j, k, v) in alg.structure_triples() {
        delta[k].push((i, j, v));
    }
    let antipode = AntiAlgebraMap::new(&dual, s.transpose(), tol)?;
    WeakHopfData::new(dual, delta, alg.unit().clone(), antipode, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::group::{group_hopf, GroupTable};
    use crate::matrix::{r, ONE};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn haar_of_z2() {
        let w = group_hopf(&GroupTable::cyclic(2), &tol()).unwrap();
        let l = haar_integral(&w, &tol()).unwrap();
        assert!((l - Element::from_vec(vec![r(0.5), r(0.5)])).norm() < 1e-10);
        assert!(w.is_hopf(&tol()));
    }

    #[test]
    fn haar_of_trivial() {
        let w = group_hopf(&GroupTable::cyclic(1), &tol()).unwrap();
        let l = haar_integral(&w, &tol()).unwrap();
        assert!((l[0] - ONE).norm() < 1e-10);
    }

    #[test]
    fn dual_of_group_is_functions() {
        let w = group_hopf(&GroupTable::cyclic(3), &tol()).unwrap();
        let d = dual_hopf(&w, &tol()).unwrap();
        // f_a f_b = delta_ab f_a
        for a in 0..3 {
            for b in 0..3 {
                let p = d.algebra().product(&d.algebra().basis(a), &d.algebra().basis(b));
                let expect = if a == b { d.algebra().basis(a) } else { d.algebra().zero() };
                assert!((p - expect).norm() < 1e-12);
            }
        }
        let l = haar_integral(&d, &tol()).unwrap();
        // the integral of Fun(G) is the delta function at the identity
        assert!((l - d.algebra().basis(0)).norm() < 1e-10);
    }

    #[test]
    fn bad_coproduct_rejected() {
        let w = group_hopf(&GroupTable::cyclic(2), &tol()).unwrap();
        let delta = vec![vec![(0, 0, ONE)], vec![(1, 0, ONE)]];
        let res = WeakHopfData::new(w.algebra().clone(), delta, w.counit().clone(), w.antipode().clone(), &tol());
        assert!(matches!(res, Err(Error::BadWeakHopf(_))));
    }
}
