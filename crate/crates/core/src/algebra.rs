//! Finite-dimensional *-algebras given by structure constants, together with
//! anti-algebra maps, real forms, dual structures and separability idempotents.

use crate::error::{Error, Result};
use crate::matrix::{
    self, c, hermitian_eigen, inv_sqrt_pd, is_hermitian, real_nullspace, CMatrix, CVector, RMatrix, SeededRng,
    Tolerance, C64, ONE, ZERO,
};

/// Elements are coordinate vectors over the algebra basis.
pub type Element = CVector;

/// Largest dimension for which dense structure tensors are materialized.
pub const MAX_DIM: usize = 128;

/// `e_i e_j = sum_k c[i][j][k] e_k`, with an antilinear involution
/// `e_i^* = sum_k sigma[k][i] e_k`.
#[derive(Debug, Clone)]
pub struct FDStarAlgebra {
    dim: usize,
    /// Sparse `e_i e_j`, indexed by `i * dim + j`.
    products: Vec<Vec<(usize, C64)>>,
    /// `(L_i)[k][j] = c[i][j][k]`.
    left: Vec<CMatrix>,
    unit: Element,
    star: CMatrix,
    /// `tau(e_k) = tr L_k`.
    traces: Vec<C64>,
    gram: CMatrix,
    cstar: bool,
}

/// Result of [`check_cstar`].
#[derive(Debug, Clone)]
pub struct CStarCheck {
    pub gram: CMatrix,
    pub is_cstar: bool,
}

fn scale_of(values: impl Iterator<Item = C64>) -> f64 {
    values.fold(1.0f64, |m, z| m.max(z.norm()))
}

impl FDStarAlgebra {
    /// Validates associativity, the unit and the star axioms. The first
    /// failing basis index (pair, triple) is reported.
    pub fn build(
        dim: usize,
        structure: &[(usize, usize, usize, C64)],
        unit: Element,
        star: CMatrix,
        tol: &Tolerance,
    ) -> Result<Self> {
        tol.validate()?;
        if dim > MAX_DIM {
            return Err(Error::TooLarge { dim, cap: MAX_DIM });
        }
        if dim == 0 {
            return Err(Error::DimensionMismatch("algebra dimension must be positive".into()));
        }
        if unit.len() != dim || star.shape() != (dim, dim) {
            return Err(Error::DimensionMismatch(format!(
                "unit has length {}, star is {}x{}, expected dimension {dim}",
                unit.len(),
                star.nrows(),
                star.ncols()
            )));
        }
        let mut dense = vec![ZERO; dim * dim * dim];
        for &(i, j, k, v) in structure {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!("structure index ({i}, {j}, {k}) out of range")));
            }
            dense[(i * dim + j) * dim + k] += v;
        }
        if !dense.iter().all(|z| z.re.is_finite() && z.im.is_finite()) || !matrix::is_finite(&star) {
            return Err(Error::DimensionMismatch("non-finite structure data".into()));
        }
        let products: Vec<Vec<(usize, C64)>> = (0..dim * dim)
            .map(|ij| (0..dim).filter_map(|k| Some((k, dense[ij * dim + k])).filter(|p| p.1 != ZERO)).collect())
            .collect();
        let left = (0..dim).map(|i| CMatrix::from_fn(dim, dim, |k, j| dense[(i * dim + j) * dim + k])).collect();
        let traces = (0..dim).map(|k| (0..dim).map(|j| dense[(k * dim + j) * dim + j]).sum()).collect();
        let mut alg =
            FDStarAlgebra { dim, products, left, unit, star, traces, gram: CMatrix::zeros(0, 0), cstar: false };
        let scale = scale_of(dense.iter().cloned());
        alg.check_unit(tol, scale)?;
        alg.check_associative(tol, scale)?;
        alg.check_star(tol, scale)?;
        let gram = CMatrix::from_fn(dim, dim, |i, j| {
            let p = alg.product(&alg.star_basis(i), &alg.basis(j));
            alg.trace(&p)
        });
        alg.cstar = gram_is_positive_definite(&gram, tol);
        alg.gram = gram;
        Ok(alg)
    }

    fn check_unit(&self, tol: &Tolerance, scale: f64) -> Result<()> {
        for i in 0..self.dim {
            let e = self.basis(i);
            let l = self.product(&self.unit, &e);
            let r = self.product(&e, &self.unit);
            let deviation = (&l - &e).norm().max((&r - &e).norm());
            if deviation > tol.eps_rank * scale * scale_of(self.unit.iter().cloned()) {
                return Err(Error::BadUnit { i, deviation });
            }
        }
        Ok(())
    }

    fn check_associative(&self, tol: &Tolerance, scale: f64) -> Result<()> {
        let n = self.dim;
        let bound = tol.eps_rank * scale * scale;
        let mut lhs = vec![ZERO; n];
        let mut rhs = vec![ZERO; n];
        for i in 0..n {
            for j in 0..n {
                let ij = &self.products[i * n + j];
                for k in 0..n {
                    lhs.iter_mut().for_each(|z| *z = ZERO);
                    rhs.iter_mut().for_each(|z| *z = ZERO);
                    for &(m, a) in ij {
                        for &(t, b) in &self.products[m * n + k] {
                            lhs[t] += a * b;
                        }
                    }
                    for &(m, a) in &self.products[j * n + k] {
                        for &(t, b) in &self.products[i * n + m] {
                            rhs[t] += a * b;
                        }
                    }
                    let deviation = lhs.iter().zip(&rhs).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt();
                    if deviation > bound {
                        return Err(Error::NotAssociative { i, j, k, deviation });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_star(&self, tol: &Tolerance, scale: f64) -> Result<()> {
        let n = self.dim;
        let sigma_scale = scale_of(self.star.iter().cloned());
        let invol = &self.star * self.star.conjugate();
        for i in 0..n {
            let deviation = (invol.column(i) - CMatrix::identity(n, n).column(i)).norm();
            if deviation > tol.eps_rank * sigma_scale * sigma_scale {
                return Err(Error::BadStar {
                    i,
                    j: i,
                    reason: format!("e_{i}** != e_{i} (deviation {deviation:.3e})"),
                });
            }
        }
        let stars: Vec<Element> = (0..n).map(|i| self.star_basis(i)).collect();
        let bound = tol.eps_rank * scale * sigma_scale * sigma_scale;
        for i in 0..n {
            for j in 0..n {
                let lhs = self.star_of(&self.product(&self.basis(i), &self.basis(j)));
                let rhs = self.product(&stars[j], &stars[i]);
                let deviation = (&lhs - &rhs).norm();
                if deviation > bound {
                    return Err(Error::BadStar {
                        i,
                        j,
                        reason: format!("(e_{i} e_{j})* != e_{j}* e_{i}* (deviation {deviation:.3e})"),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    /// The matrix `sigma`; `a^* = sigma conj(a)`.
    pub fn star_matrix(&self) -> &CMatrix {
        &self.star
    }

    pub fn basis(&self, i: usize) -> Element {
        let mut e = Element::zeros(self.dim);
        e[i] = ONE;
        e
    }

    pub fn zero(&self) -> Element {
        Element::zeros(self.dim)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> C64 {
        self.left[i][(k, j)]
    }

    /// Nonzero `(i, j, k, c[i][j][k])` in lexicographic order.
    pub fn structure_triples(&self) -> Vec<(usize, usize, usize, C64)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for &(k, v) in &self.products[i * n + j] {
                    out.push((i, j, k, v));
                }
            }
        }
        out
    }

    /// Sparse `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, C64)] {
        &self.products[i * self.dim + j]
    }

    pub fn product(&self, a: &Element, b: &Element) -> Element {
        let n = self.dim;
        let mut out = Element::zeros(n);
        for (i, &ai) in a.iter().enumerate() {
            if ai == ZERO {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == ZERO {
                    continue;
                }
                let w = ai * bj;
                for &(k, v) in &self.products[i * n + j] {
                    out[k] += w * v;
                }
            }
        }
        out
    }

    pub fn star_basis(&self, i: usize) -> Element {
        self.star.column(i).into_owned()
    }

    pub fn star_of(&self, a: &Element) -> Element {
        &self.star * a.conjugate()
    }

    /// `L_i`, with `(L_i)[k][j] = c[i][j][k]`.
    pub fn left_matrices(&self) -> &[CMatrix] {
        &self.left
    }

    pub fn left_mult(&self, a: &Element) -> CMatrix {
        let mut out = CMatrix::zeros(self.dim, self.dim);
        for (i, &ai) in a.iter().enumerate() {
            if ai != ZERO {
                out += &self.left[i] * ai;
            }
        }
        out
    }

    /// `R_b` with `R_b x = x b`.
    pub fn right_mult(&self, b: &Element) -> CMatrix {
        let n = self.dim;
        let mut out = CMatrix::zeros(n, n);
        for i in 0..n {
            for (j, &bj) in b.iter().enumerate() {
                if bj == ZERO {
                    continue;
                }
                for &(k, v) in &self.products[i * n + j] {
                    out[(k, i)] += bj * v;
                }
            }
        }
        out
    }

    /// Regular trace `tau(a) = tr L_a`.
    pub fn trace(&self, a: &Element) -> C64 {
        a.iter().zip(&self.traces).map(|(x, t)| x * t).sum()
    }

    /// `G[i][j] = tau(e_i^* e_j)`.
    pub fn gram(&self) -> &CMatrix {
        &self.gram
    }

    pub fn is_cstar(&self) -> bool {
        self.cstar
    }

    pub fn inverse(&self, a: &Element, tol: &Tolerance) -> Result<Element> {
        let l = self.left_mult(a);
        let inv = matrix::inverse(&l, tol).map_err(|_| Error::NotInvertible)?;
        Ok(inv * &self.unit)
    }

    /// Positivity through the regular representation: `G L_a` must be
    /// Hermitian positive semidefinite.
    pub fn is_positive(&self, a: &Element, tol: &Tolerance) -> bool {
        let m = &self.gram * self.left_mult(a);
        if !is_hermitian(&m, tol.eps_eig) {
            return false;
        }
        let eig = hermitian_eigen(&m);
        let max = eig.values.iter().fold(0.0f64, |x, v| x.max(v.abs()));
        eig.values.iter().all(|&v| v >= -tol.eps_eig * max.max(1.0))
    }

    pub fn is_positive_invertible(&self, a: &Element, tol: &Tolerance) -> bool {
        self.is_positive(a, tol) && self.inverse(a, tol).is_ok()
    }

    pub fn is_central(&self, a: &Element, tol: &Tolerance) -> bool {
        let scale = a.norm().max(1.0);
        (0..self.dim).all(|i| {
            let e = self.basis(i);
            (self.product(a, &e) - self.product(&e, a)).norm() <= tol.eps_eig * scale
        })
    }

    /// Applies a linear map given by its matrix on the basis.
    pub fn apply(map: &CMatrix, a: &Element) -> Element {
        map * a
    }
}

fn gram_is_positive_definite(g: &CMatrix, tol: &Tolerance) -> bool {
    if !is_hermitian(g, tol.eps_rank) {
        return false;
    }
    let eig = hermitian_eigen(g);
    let max = eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    max > 0.0 && eig.values[0] > tol.eps_rank.sqrt() * max
}

/// Gram form of the regular trace and whether it is positive definite.
pub fn check_cstar(a: &FDStarAlgebra) -> CStarCheck {
    CStarCheck { gram: a.gram.clone(), is_cstar: a.cstar }
}

/// Linear `S: A -> A` with `S(ab) = S(b) S(a)` and `S(S(a)^*)^* = a`.
#[derive(Debug, Clone, PartialEq)]
pub struct AntiAlgebraMap {
    matrix: CMatrix,
}

impl AntiAlgebraMap {
    pub fn new(alg: &FDStarAlgebra, matrix: CMatrix, tol: &Tolerance) -> Result<Self> {
        let n = alg.dim();
        if matrix.shape() != (n, n) {
            return Err(Error::NotAntiMap(format!(
                "matrix is {}x{}, expected {n}x{n}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let scale = scale_of(matrix.iter().cloned());
        let images: Vec<Element> = (0..n).map(|i| matrix.column(i).into_owned()).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = &matrix * alg.product(&alg.basis(i), &alg.basis(j));
                let rhs = alg.product(&images[j], &images[i]);
                let deviation = (&lhs - &rhs).norm();
                if deviation > tol.eps_eig * scale * scale {
                    return Err(Error::NotAntiMap(format!(
                        "S(e_{i} e_{j}) != S(e_{j}) S(e_{i}) (deviation {deviation:.3e})"
                    )));
                }
            }
        }
        let conj_op = alg.star_matrix() * matrix.conjugate();
        let twice = &conj_op * conj_op.conjugate();
        let deviation = (&twice - CMatrix::identity(n, n)).norm();
        if deviation > tol.eps_eig * scale * scale {
            return Err(Error::NotAntiMap(format!("S(S(a)*)* != a (deviation {deviation:.3e})")));
        }
        Ok(AntiAlgebraMap { matrix })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn apply(&self, a: &Element) -> Element {
        &self.matrix * a
    }

    pub fn squared(&self) -> CMatrix {
        &self.matrix * &self.matrix
    }

    /// `S` followed by a linear map (e.g. an involutive automorphism).
    pub fn then(&self, alg: &FDStarAlgebra, map: &CMatrix, tol: &Tolerance) -> Result<Self> {
        AntiAlgebraMap::new(alg, map * &self.matrix, tol)
    }
}

/// Real form `A_0 = { a : S(a)^* = a }`.
#[derive(Debug, Clone)]
pub struct RealForm {
    /// `a-bar = conj_matrix * conj(a)`.
    conj_matrix: CMatrix,
    /// An R-basis of `A_0`.
    basis: Vec<Element>,
}

impl RealForm {
    pub fn conj_matrix(&self) -> &CMatrix {
        &self.conj_matrix
    }

    pub fn conjugate(&self, a: &Element) -> Element {
        &self.conj_matrix * a.conjugate()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn contains(&self, a: &Element, tol: &Tolerance) -> bool {
        (self.conjugate(a) - a).norm() <= tol.eps_eig * a.norm().max(1.0)
    }

    /// Real dimension of `A_0`.
    pub fn real_dim(&self) -> usize {
        self.basis.len()
    }
}

/// Conjugation `a -> S(a)^*` and an R-basis of its fixed points.
pub fn real_form_from_s(alg: &FDStarAlgebra, s: &AntiAlgebraMap, tol: &Tolerance) -> Result<RealForm> {
    let s = AntiAlgebraMap::new(alg, s.matrix.clone(), tol)?;
    let m = alg.star_matrix() * s.matrix.conjugate();
    let basis = fixed_real_basis(&m, tol);
    if basis.len() != alg.dim() {
        return Err(Error::NotAntiMap(format!(
            "real form has real dimension {} but the algebra has dimension {}",
            basis.len(),
            alg.dim()
        )));
    }
    Ok(RealForm { conj_matrix: m, basis })
}

/// R-basis of `{ x : m conj(x) = x }`.
pub fn fixed_real_basis(m: &CMatrix, tol: &Tolerance) -> Vec<CVector> {
    let n = m.nrows();
    let mut sys = RMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let z = m[(i, j)];
            // x = p + i q; m conj(x) - x = (Re m p + Im m q - p) + i (Im m p - Re m q - q)
            sys[(i, j)] = z.re;
            sys[(i, n + j)] = z.im;
            sys[(n + i, j)] = z.im;
            sys[(n + i, n + j)] = -z.re;
        }
        sys[(i, i)] -= 1.0;
        sys[(n + i, n + i)] -= 1.0;
    }
    let ns = real_nullspace(&sys, tol);
    (0..ns.ncols()).map(|k| CVector::from_fn(n, |i, _| c(ns[(i, k)], ns[(n + i, k)]))).collect()
}

/// The pair `(S, g)`: `g` invertible, `S(g) = g^{-1}`, `S^2(a) = g a g^{-1}`.
#[derive(Debug, Clone)]
pub struct DualStructureData {
    pub s: AntiAlgebraMap,
    pub g: Element,
}

impl DualStructureData {
    pub fn new(alg: &FDStarAlgebra, s: AntiAlgebraMap, g: Element, tol: &Tolerance) -> Result<Self> {
        let n = alg.dim();
        if g.len() != n {
            return Err(Error::BadDualStructure(format!("g has length {}, expected {n}", g.len())));
        }
        let ginv = alg.inverse(&g, tol).map_err(|_| Error::BadDualStructure("g is not invertible".into()))?;
        let scale = g.norm().max(ginv.norm()).max(1.0);
        let dev = (s.apply(&g) - &ginv).norm();
        if dev > tol.eps_eig * scale {
            return Err(Error::BadDualStructure(format!("S(g) != g^-1 (deviation {dev:.3e})")));
        }
        let s2 = s.squared();
        for i in 0..n {
            let e = alg.basis(i);
            let lhs = alg.product(&g, &e);
            let rhs = alg.product(&(&s2 * &e), &g);
            let dev = (&lhs - &rhs).norm();
            if dev > tol.eps_eig * scale * scale_of(s2.iter().cloned()) {
                return Err(Error::BadDualStructure(format!("g e_{i} != S^2(e_{i}) g (deviation {dev:.3e})")));
            }
        }
        Ok(DualStructureData { s, g })
    }
}

/// `E = sum_m x_m (x) y_m` with `sum x_m y_m = 1` and `(a x) (x) y = x (x) (y a)`.
#[derive(Debug, Clone)]
pub struct SeparabilityIdempotent {
    pub pairs: Vec<(Element, Element)>,
}

impl SeparabilityIdempotent {
    /// `T = sum_m x_m y_m^T`, the coefficient matrix of `E` in `A (x) A`.
    pub fn tensor(&self) -> CMatrix {
        let n = self.pairs.first().map(|p| p.0.len()).unwrap_or(0);
        let mut t = CMatrix::zeros(n, n);
        for (x, y) in &self.pairs {
            t += x * y.transpose();
        }
        t
    }

    /// Rebuilds pairs from a coefficient matrix, one pair per nonzero column.
    pub fn from_tensor(t: &CMatrix) -> Self {
        let n = t.nrows();
        let pairs = (0..t.ncols())
            .filter(|&k| t.column(k).iter().any(|z| *z != ZERO))
            .map(|k| {
                let mut y = Element::zeros(n);
                y[k] = ONE;
                (t.column(k).into_owned(), y)
            })
            .collect();
        SeparabilityIdempotent { pairs }
    }

    /// Largest violation of the two defining identities.
    pub fn deviation(&self, alg: &FDStarAlgebra) -> f64 {
        let n = alg.dim();
        let mut sum = alg.zero();
        for (x, y) in &self.pairs {
            sum += alg.product(x, y);
        }
        let mut dev = (sum - alg.unit()).norm();
        let t = self.tensor();
        for i in 0..n {
            let e = alg.basis(i);
            let lhs = &alg.left_matrices()[i] * &t;
            let rhs = &t * alg.right_mult(&e).transpose();
            dev = dev.max((lhs - rhs).norm());
        }
        dev
    }
}

/// `E = sum_i f_i (x) f_i^* v^{-1}` over the orthonormal basis `f = G^{-1/2}`.
pub fn separability_idempotent(alg: &FDStarAlgebra, tol: &Tolerance) -> Result<SeparabilityIdempotent> {
    if !alg.is_cstar() {
        return Err(Error::NotCStar);
    }
    let w = inv_sqrt_pd(alg.gram(), tol)?;
    separability_idempotent_with_basis(alg, &w, tol)
}

/// Same construction after rotating the orthonormal basis by a random unitary.
pub fn separability_idempotent_rotated(
    alg: &FDStarAlgebra,
    rng: &mut SeededRng,
    tol: &Tolerance,
) -> Result<SeparabilityIdempotent> {
    if !alg.is_cstar() {
        return Err(Error::NotCStar);
    }
    let w = inv_sqrt_pd(alg.gram(), tol)? * rng.unitary(alg.dim());
    separability_idempotent_with_basis(alg, &w, tol)
}

/// Columns of `w` must be orthonormal for `<a|b> = tau(a^* b)`.
pub fn separability_idempotent_with_basis(
    alg: &FDStarAlgebra,
    w: &CMatrix,
    tol: &Tolerance,
) -> Result<SeparabilityIdempotent> {
    let n = alg.dim();
    let ortho = (w.adjoint() * alg.gram() * w - CMatrix::identity(n, n)).norm();
    if ortho > tol.eps_eig * (n as f64) {
        return Err(Error::InternalInconsistency(format!("basis is not orthonormal (deviation {ortho:.3e})")));
    }
    let f: Vec<Element> = (0..n).map(|i| w.column(i).into_owned()).collect();
    let fstar: Vec<Element> = f.iter().map(|x| alg.star_of(x)).collect();
    let mut v = alg.zero();
    for (x, xs) in f.iter().zip(&fstar) {
        v += alg.product(x, xs);
    }
    let vinv = alg.inverse(&v, tol)?;
    let pairs = f.into_iter().zip(fstar).map(|(x, xs)| (x, alg.product(&xs, &vinv))).collect();
    Ok(SeparabilityIdempotent { pairs })
}

/// `v = sum_i f_i f_i^*` for the orthonormal basis used by [`separability_idempotent`].
pub fn casimir_element(alg: &FDStarAlgebra, tol: &Tolerance) -> Result<Element> {
    if !alg.is_cstar() {
        return Err(Error::NotCStar);
    }
    let w = inv_sqrt_pd(alg.gram(), tol)?;
    let mut v = alg.zero();
    for i in 0..alg.dim() {
        let x = w.column(i).into_owned();
        v += alg.product(&x, &alg.star_of(&x));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::r;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn complex_numbers() -> FDStarAlgebra {
        FDStarAlgebra::build(1, &[(0, 0, 0, ONE)], Element::from_element(1, ONE), CMatrix::identity(1, 1), &tol())
            .unwrap()
    }

    /// `e_ij -> 2i + j`, star `e_ij -> e_ji`.
    fn m2() -> FDStarAlgebra {
        let mut st = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    st.push((2 * i + j, 2 * j + l, 2 * i + l, ONE));
                }
            }
        }
        let unit = Element::from_vec(vec![ONE, ZERO, ZERO, ONE]);
        let mut star = CMatrix::zeros(4, 4);
        for i in 0..2 {
            for j in 0..2 {
                star[(2 * j + i, 2 * i + j)] = ONE;
            }
        }
        FDStarAlgebra::build(4, &st, unit, star, &tol()).unwrap()
    }

    fn z2() -> FDStarAlgebra {
        let st = vec![(0, 0, 0, ONE), (0, 1, 1, ONE), (1, 0, 1, ONE), (1, 1, 0, ONE)];
        FDStarAlgebra::build(2, &st, Element::from_vec(vec![ONE, ZERO]), CMatrix::identity(2, 2), &tol()).unwrap()
    }

    fn transpose_map(alg: &FDStarAlgebra, u: &CMatrix, uinv: &CMatrix) -> CMatrix {
        // S(a) = u a^T uinv in the e_ij basis
        let mut out = CMatrix::zeros(4, 4);
        for col in 0..4 {
            let (i, j) = (col / 2, col % 2);
            let mut a = CMatrix::zeros(2, 2);
            a[(j, i)] = ONE;
            let img = u * a * uinv;
            for p in 0..2 {
                for q in 0..2 {
                    out[(2 * p + q, col)] = img[(p, q)];
                }
            }
        }
        let _ = alg;
        out
    }

    #[test]
    fn builds_c_and_m2() {
        let a = complex_numbers();
        assert!(a.is_cstar());
        assert!((a.gram() - CMatrix::identity(1, 1)).norm() < 1e-14);
        let m = m2();
        assert!(m.is_cstar());
        assert!((m.gram() - CMatrix::identity(4, 4) * r(2.0)).norm() < 1e-12);
    }

    #[test]
    fn bad_unit_detected() {
        let res = FDStarAlgebra::build(
            1,
            &[(0, 0, 0, r(2.0))],
            Element::from_element(1, ONE),
            CMatrix::identity(1, 1),
            &tol(),
        );
        assert!(matches!(res, Err(Error::BadUnit { i: 0, .. })));
    }

    #[test]
    fn non_associative_detected() {
        // unit e0; e1 e1 = e1 + e2, e1 e2 = e2, e2 e1 = e1, e2 e2 = e2
        let st = vec![
            (0, 0, 0, ONE),
            (0, 1, 1, ONE),
            (1, 0, 1, ONE),
            (0, 2, 2, ONE),
            (2, 0, 2, ONE),
            (1, 1, 1, ONE),
            (1, 1, 2, ONE),
            (1, 2, 2, ONE),
            (2, 1, 1, ONE),
            (2, 2, 2, ONE),
        ];
        let res =
            FDStarAlgebra::build(3, &st, Element::from_vec(vec![ONE, ZERO, ZERO]), CMatrix::identity(3, 3), &tol());
        assert!(matches!(res, Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn bad_star_detected() {
        // M2 with the identity as "star" violates (ab)* = b* a*
        let m = m2();
        let res = FDStarAlgebra::build(4, &m.structure_triples(), m.unit().clone(), CMatrix::identity(4, 4), &tol());
        assert!(matches!(res, Err(Error::BadStar { .. })));
    }

    #[test]
    fn dual_numbers_not_cstar() {
        let st = vec![(0, 0, 0, ONE), (0, 1, 1, ONE), (1, 0, 1, ONE)];
        let a =
            FDStarAlgebra::build(2, &st, Element::from_vec(vec![ONE, ZERO]), CMatrix::identity(2, 2), &tol()).unwrap();
        let chk = check_cstar(&a);
        assert!(!chk.is_cstar);
        assert!(matches!(separability_idempotent(&a, &tol()), Err(Error::NotCStar)));
    }

    #[test]
    fn too_large_rejected() {
        let res = FDStarAlgebra::build(
            MAX_DIM + 1,
            &[],
            Element::zeros(MAX_DIM + 1),
            CMatrix::identity(MAX_DIM + 1, MAX_DIM + 1),
            &tol(),
        );
        assert!(matches!(res, Err(Error::TooLarge { .. })));
    }

    #[test]
    fn group_real_form_is_real_span() {
        let a = z2();
        let s = AntiAlgebraMap::new(&a, CMatrix::identity(2, 2), &tol()).unwrap();
        let rf = real_form_from_s(&a, &s, &tol()).unwrap();
        assert_eq!(rf.real_dim(), 2);
        for b in rf.basis() {
            assert!(b.iter().all(|z| z.im.abs() < 1e-12));
        }
    }

    #[test]
    fn quaternion_real_form_of_m2() {
        let a = m2();
        let v = CMatrix::from_row_slice(2, 2, &[ZERO, ONE, -ONE, ZERO]);
        let vinv = v.clone().try_inverse().unwrap();
        let s = AntiAlgebraMap::new(&a, transpose_map(&a, &v, &vinv), &tol()).unwrap();
        let rf = real_form_from_s(&a, &s, &tol()).unwrap();
        assert_eq!(rf.real_dim(), 4);
        // [[alpha, beta], [-conj beta, conj alpha]]
        for b in rf.basis() {
            assert!((b[0] - b[3].conj()).norm() < 1e-10);
            assert!((b[1] + b[2].conj()).norm() < 1e-10);
        }
    }

    #[test]
    fn twisted_real_form_of_m2() {
        let a = m2();
        let u = CMatrix::from_row_slice(2, 2, &[ZERO, r(0.5), r(2.0), ZERO]);
        let s = AntiAlgebraMap::new(&a, transpose_map(&a, &u, &u), &tol()).unwrap();
        let rf = real_form_from_s(&a, &s, &tol()).unwrap();
        assert_eq!(rf.real_dim(), 4);
        // [[alpha, 4 conj gamma], [gamma, conj alpha]]
        for b in rf.basis() {
            assert!((b[0] - b[3].conj()).norm() < 1e-10);
            assert!((b[1] - b[2].conj() * r(4.0)).norm() < 1e-10);
        }
        let singular = Element::from_vec(vec![ONE, r(2.0), r(0.5), ONE]);
        assert!(rf.contains(&singular, &tol()));
    }

    #[test]
    fn non_anti_map_rejected() {
        let a = m2();
        // the identity is an algebra map, not an anti-algebra map, on M2
        assert!(matches!(AntiAlgebraMap::new(&a, CMatrix::identity(4, 4), &tol()), Err(Error::NotAntiMap(_))));
    }

    #[test]
    fn idempotent_of_c() {
        let a = complex_numbers();
        let e = separability_idempotent(&a, &tol()).unwrap();
        assert!((e.tensor() - CMatrix::identity(1, 1)).norm() < 1e-12);
    }

    #[test]
    fn idempotent_of_m2_and_z2() {
        let m = m2();
        let e = separability_idempotent(&m, &tol()).unwrap();
        assert!(e.deviation(&m) < 1e-8);
        let z = z2();
        let e = separability_idempotent(&z, &tol()).unwrap();
        assert!(e.deviation(&z) < 1e-8);
        // 1/2 (e (x) e + g (x) g)
        let expect = CMatrix::identity(2, 2) * r(0.5);
        assert!((e.tensor() - expect).norm() < 1e-10);
        let rotated = separability_idempotent_rotated(&m, &mut SeededRng::new(5), &tol()).unwrap();
        assert!(rotated.deviation(&m) < 1e-8);
    }

    #[test]
    fn casimir_is_central_positive() {
        let m = m2();
        let v = casimir_element(&m, &tol()).unwrap();
        assert!(m.is_central(&v, &tol()));
        assert!(m.is_positive_invertible(&v, &tol()));
    }

    #[test]
    fn dual_structure_validation() {
        let a = m2();
        let u = CMatrix::from_row_slice(2, 2, &[ZERO, r(0.5), r(2.0), ZERO]);
        let s = AntiAlgebraMap::new(&a, transpose_map(&a, &u, &u), &tol()).unwrap();
        let g = Element::from_vec(vec![r(0.25), ZERO, ZERO, r(4.0)]);
        assert!(DualStructureData::new(&a, s.clone(), g, &tol()).is_ok());
        assert!(DualStructureData::new(&a, s, a.unit().clone(), &tol()).is_err());
    }
}
