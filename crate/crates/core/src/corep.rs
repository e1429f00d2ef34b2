//! Finite-dimensional *-coalgebras and their corepresentations, routed
//! through the dual algebra: duality, coseparability idempotents, `gamma`,
//! and the coalgebra and compact-quantum-group indicators.

use std::sync::Arc;

use crate::algebra::{fixed_real_basis, real_form_from_s, AntiAlgebraMap, Element, FDStarAlgebra};
use crate::constructors::weak_hopf::{dual_hopf, haar_integral, SparseCoproduct, WeakHopfData};
use crate::error::{Error, Result};
use crate::indicator::{Analysis, IrrepReport};
use crate::matrix::{self, c, hermitian_eigen, real_nullspace, CMatrix, CVector, RMatrix, Tolerance, C64, ONE, ZERO};
use crate::rep::{decompose, regular_representation, Component, Representation};

/// `Delta(c_i) = sum (j, k, v) v c_j (x) c_k`, antilinear star
/// `c^* = star conj(c)`.
#[derive(Debug, Clone)]
pub struct FDStarCoalgebra {
    dim: usize,
    delta: SparseCoproduct,
    counit: CVector,
    star: CMatrix,
}

impl FDStarCoalgebra {
    /// Checks coassociativity, the counit laws, `c^{**} = c` and
    /// `Delta(c^*) = (c_2)^* (x) (c_1)^*`.
    pub fn new(dim: usize, delta: SparseCoproduct, counit: CVector, star: CMatrix, tol: &Tolerance) -> Result<Self> {
        if dim == 0 || delta.len() != dim || counit.len() != dim || star.shape() != (dim, dim) {
            return Err(Error::BadCoalgebra("inconsistent sizes".into()));
        }
        if delta.iter().flatten().any(|&(j, k, _)| j >= dim || k >= dim) {
            return Err(Error::BadCoalgebra("coproduct index out of range".into()));
        }
        let co = FDStarCoalgebra { dim, delta, counit, star };
        co.check(tol)?;
        Ok(co)
    }

    fn check(&self, tol: &Tolerance) -> Result<()> {
        let n = self.dim;
        let bound = tol.eps_eig;
        let basis = |i: usize| {
            let mut e = CVector::zeros(n);
            e[i] = ONE;
            e
        };
        for i in 0..n {
            let mut left = CVector::zeros(n);
            let mut right = CVector::zeros(n);
            for &(j, k, v) in &self.delta[i] {
                left[k] += v * self.counit[j];
                right[j] += v * self.counit[k];
            }
            if (left - basis(i)).norm() > bound || (right - basis(i)).norm() > bound {
                return Err(Error::BadCoalgebra(format!("counit law fails on c_{i}")));
            }
            let a = self.double_coproduct_basis(i);
            let mut b = vec![ZERO; n * n * n];
            for &(j, k, v) in &self.delta[i] {
                for &(p, q, u) in &self.delta[k] {
                    b[(j * n + p) * n + q] += v * u;
                }
            }
            let dev = a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
            if dev > bound {
                return Err(Error::BadCoalgebra(format!("coassociativity fails on c_{i} (deviation {dev:.3e})")));
            }
        }
        let invol = (&self.star * self.star.conjugate() - CMatrix::identity(n, n)).norm();
        if invol > bound {
            return Err(Error::BadCoalgebra(format!("star is not involutive (deviation {invol:.3e})")));
        }
        for i in 0..n {
            let lhs = self.coproduct(&self.star.column(i).into_owned());
            let rhs = &self.star * self.coproduct(&basis(i)).conjugate().transpose() * self.star.transpose();
            let dev = (lhs - rhs).norm();
            if dev > bound {
                return Err(Error::BadCoalgebra(format!(
                    "Delta(c_{i}^*) != (c_2)^* (x) (c_1)^* (deviation {dev:.3e})"
                )));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &CVector {
        &self.counit
    }

    pub fn star_matrix(&self) -> &CMatrix {
        &self.star
    }

    pub fn sparse_coproduct(&self) -> &SparseCoproduct {
        &self.delta
    }

    pub fn star_of(&self, x: &CVector) -> CVector {
        &self.star * x.conjugate()
    }

    pub fn counit_of(&self, x: &CVector) -> C64 {
        x.iter().zip(self.counit.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn coproduct(&self, x: &CVector) -> CMatrix {
        let n = self.dim;
        let mut t = CMatrix::zeros(n, n);
        for (i, &xi) in x.iter().enumerate() {
            if xi != ZERO {
                for &(j, k, v) in &self.delta[i] {
                    t[(j, k)] += xi * v;
                }
            }
        }
        t
    }

    fn double_coproduct_basis(&self, i: usize) -> Vec<C64> {
        let mut e = CVector::zeros(self.dim);
        e[i] = ONE;
        self.double_coproduct(&e)
    }

    /// `(Delta (x) id) Delta(x)` as a dense tensor indexed `(j * n + k) * n + l`.
    pub fn double_coproduct(&self, x: &CVector) -> Vec<C64> {
        let n = self.dim;
        let mut out = vec![ZERO; n * n * n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == ZERO {
                continue;
            }
            for &(j, l, v) in &self.delta[i] {
                for &(a, b, u) in &self.delta[j] {
                    out[(a * n + b) * n + l] += xi * v * u;
                }
            }
        }
        out
    }
}

/// Dual *-coalgebra on the dual basis: `Delta(c_k) = sum c[i][j][k] c_i (x) c_j`,
/// `eps = 1_A`, star `sigma^dagger`.
pub fn dualize(alg: &FDStarAlgebra, tol: &Tolerance) -> Result<FDStarCoalgebra> {
    let n = alg.dim();
    let mut delta: SparseCoproduct = vec![Vec::new(); n];
    for (i, j, k, v) in alg.structure_triples() {
        delta[k].push((i, j, v));
    }
    FDStarCoalgebra::new(n, delta, alg.unit().clone(), alg.star_matrix().adjoint(), tol)
}

/// Dual *-algebra: `e_i e_j = sum_k Delta_k[i][j] e_k`, unit `eps`, star `sigma^dagger`.
pub fn dualize_co(co: &FDStarCoalgebra, tol: &Tolerance) -> Result<FDStarAlgebra> {
    let mut st = Vec::new();
    for (k, terms) in co.sparse_coproduct().iter().enumerate() {
        for &(i, j, v) in terms {
            st.push((i, j, k, v));
        }
    }
    FDStarAlgebra::build(co.dim(), &st, co.counit().clone(), co.star_matrix().adjoint(), tol)
}

/// Matrix `(c_ij)` of coalgebra elements, row-major.
#[derive(Debug, Clone)]
pub struct Corepresentation {
    dim: usize,
    entries: Vec<CVector>,
    gram: Option<CMatrix>,
}

impl Corepresentation {
    /// Checks `Delta(c_ij) = sum_k c_ik (x) c_kj` and `eps(c_ij) = delta_ij`.
    pub fn new(
        co: &FDStarCoalgebra,
        dim: usize,
        entries: Vec<CVector>,
        gram: Option<CMatrix>,
        tol: &Tolerance,
    ) -> Result<Self> {
        if entries.len() != dim * dim || entries.iter().any(|e| e.len() != co.dim()) {
            return Err(Error::BadCorep("entry count or length mismatch".into()));
        }
        let v = Corepresentation { dim, entries, gram };
        for i in 0..dim {
            for j in 0..dim {
                let lhs = co.coproduct(v.entry(i, j));
                let mut rhs = CMatrix::zeros(co.dim(), co.dim());
                for k in 0..dim {
                    rhs += v.entry(i, k) * v.entry(k, j).transpose();
                }
                let dev = (lhs - rhs).norm();
                if dev > tol.eps_eig * (1.0 + v.entry(i, j).norm()) {
                    return Err(Error::BadCorep(format!("Delta(c_{i}{j}) mismatch (deviation {dev:.3e})")));
                }
                let e = co.counit_of(v.entry(i, j)) - if i == j { ONE } else { ZERO };
                if e.norm() > tol.eps_eig {
                    return Err(Error::BadCorep(format!("eps(c_{i}{j}) != delta")));
                }
            }
        }
        Ok(v)
    }

    /// `c_ij = sum_m rho(e_m)_ij c_m` on the dual basis.
    pub fn from_representation(v: &Representation) -> Self {
        let d = v.dim();
        let n = v.algebra().dim();
        let entries = (0..d * d).map(|ij| CVector::from_fn(n, |m, _| v.matrices()[m][(ij / d, ij % d)])).collect();
        Corepresentation { dim: d, entries, gram: v.gram().cloned() }
    }

    /// Inverse of [`Corepresentation::from_representation`] over the dual algebra.
    pub fn to_representation(&self, alg: &Arc<FDStarAlgebra>) -> Representation {
        let d = self.dim;
        let rho = (0..alg.dim()).map(|m| CMatrix::from_fn(d, d, |i, j| self.entry(i, j)[m])).collect();
        Representation::new_unchecked(alg.clone(), rho, self.gram.clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &CVector {
        &self.entries[i * self.dim + j]
    }

    pub fn gram(&self) -> Option<&CMatrix> {
        self.gram.as_ref()
    }

    /// `t_V = sum_i c_ii`.
    pub fn character(&self) -> CVector {
        let mut t = self.entries[0].clone() * ZERO;
        for i in 0..self.dim {
            t += self.entry(i, i);
        }
        t
    }

    /// Entries of `p^{-1} (c_ij) p`.
    pub fn change_basis(&self, p: &CMatrix, tol: &Tolerance) -> Result<Self> {
        let d = self.dim;
        let pinv = matrix::inverse(p, tol)?;
        let n = self.entries[0].len();
        let mut entries = vec![CVector::zeros(n); d * d];
        for i in 0..d {
            for j in 0..d {
                let e = &mut entries[i * d + j];
                for k in 0..d {
                    for l in 0..d {
                        let w = pinv[(i, k)] * p[(l, j)];
                        if w != ZERO {
                            *e += self.entry(k, l) * w;
                        }
                    }
                }
            }
        }
        let gram = self.gram.as_ref().map(|h| p.adjoint() * h * p);
        Ok(Corepresentation { dim: d, entries, gram })
    }
}

/// Bilinear form `E(c_i, c_j) = form[i][j]`.
#[derive(Debug, Clone)]
pub struct CoseparabilityIdempotent {
    pub form: CMatrix,
}

impl CoseparabilityIdempotent {
    pub fn eval(&self, x: &CVector, y: &CVector) -> C64 {
        (x.transpose() * &self.form * y)[0]
    }

    /// Largest violation of `E(c_1, c_2) = eps(c)`, the centrality identity
    /// and `E(c^*, d^*) = conj(E(d, c))`.
    pub fn deviation(&self, co: &FDStarCoalgebra) -> f64 {
        let n = co.dim();
        let e = &self.form;
        let mut dev = 0.0f64;
        let tensors: Vec<CMatrix> = (0..n)
            .map(|i| {
                let mut b = CVector::zeros(n);
                b[i] = ONE;
                co.coproduct(&b)
            })
            .collect();
        for i in 0..n {
            let val: C64 = tensors[i].component_mul(e).sum();
            dev = dev.max((val - co.counit()[i]).norm());
            let lhs = &tensors[i] * e;
            let row = e.row(i).transpose();
            for l in 0..n {
                let rhs = tensors[l].transpose() * &row;
                dev = dev.max((lhs.column(l) - rhs).norm());
            }
        }
        let s = co.star_matrix();
        dev = dev.max((s.transpose() * e * s - e.adjoint()).norm());
        dev
    }

    /// `c -> E(c^*, c)` is positive definite.
    pub fn is_positive(&self, co: &FDStarCoalgebra, tol: &Tolerance) -> bool {
        let q = co.star_matrix().transpose() * &self.form;
        if !matrix::is_hermitian(&q, tol.eps_eig) {
            return false;
        }
        let eig = hermitian_eigen(&q);
        let max = eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        eig.values[0] > tol.eps_rank * max
    }
}

/// Matrix-coalgebra blocks of a compact *-coalgebra.
#[derive(Debug, Clone)]
pub struct CompactDecomposition {
    pub dual_algebra: Arc<FDStarAlgebra>,
    pub components: Vec<Component>,
    /// One irreducible corepresentation per block; its entries are the block's
    /// matrix-coalgebra basis `e_ij`.
    pub coreps: Vec<Corepresentation>,
    /// `E(e_ij^a, e_kl^b) = delta_ab delta_il delta_jk / n_a`.
    pub idempotent: CoseparabilityIdempotent,
}

pub fn compact_decompose(co: &FDStarCoalgebra, seed: u64, tol: &Tolerance) -> Result<CompactDecomposition> {
    let alg = Arc::new(dualize_co(co, tol)?);
    if !alg.is_cstar() {
        return Err(Error::NotCompact);
    }
    let components = decompose(&regular_representation(&alg), seed, tol)?;
    compact_from_components(co, alg, components, tol)
}

fn compact_from_components(
    co: &FDStarCoalgebra,
    alg: Arc<FDStarAlgebra>,
    components: Vec<Component>,
    tol: &Tolerance,
) -> Result<CompactDecomposition> {
    let n = co.dim();
    let coreps: Vec<Corepresentation> =
        components.iter().map(|c| Corepresentation::from_representation(&c.irrep)).collect();
    let mut p = CMatrix::zeros(n, n);
    let mut eb = CMatrix::zeros(n, n);
    let mut col = 0;
    for v in &coreps {
        let d = v.dim();
        if col + d * d > n {
            return Err(Error::InternalInconsistency("blocks exceed the coalgebra dimension".into()));
        }
        for i in 0..d {
            for j in 0..d {
                p.set_column(col + i * d + j, v.entry(i, j));
                eb[(col + i * d + j, col + j * d + i)] = c(1.0 / d as f64, 0.0);
            }
        }
        col += d * d;
    }
    if col != n {
        return Err(Error::InternalInconsistency(format!("blocks span dimension {col}, expected {n}")));
    }
    let pinv = matrix::inverse(&p, tol)?;
    let form = pinv.transpose() * eb * &pinv;
    let idempotent = CoseparabilityIdempotent { form };
    let dev = idempotent.deviation(co);
    if dev > tol.eps_eig.sqrt() {
        return Err(Error::InternalInconsistency(format!("coseparability idempotent deviates by {dev:.3e}")));
    }
    Ok(CompactDecomposition { dual_algebra: alg, components, coreps, idempotent })
}

/// Checks that `varsigma` is an anti-coalgebra map with `eps o varsigma = eps`
/// and `varsigma(varsigma(c^*)^*) = c`.
pub fn check_varsigma(co: &FDStarCoalgebra, varsigma: &CMatrix, tol: &Tolerance) -> Result<()> {
    let n = co.dim();
    if varsigma.shape() != (n, n) {
        return Err(Error::BadVarsigma("wrong shape".into()));
    }
    let scale = varsigma.norm().max(1.0);
    for i in 0..n {
        let mut b = CVector::zeros(n);
        b[i] = ONE;
        let lhs = co.coproduct(&(varsigma * &b));
        let rhs = varsigma * co.coproduct(&b).transpose() * varsigma.transpose();
        let dev = (lhs - rhs).norm();
        if dev > tol.eps_eig * scale * scale {
            return Err(Error::BadVarsigma(format!("not anti-comultiplicative on c_{i} (deviation {dev:.3e})")));
        }
    }
    let dev = (varsigma.transpose() * co.counit() - co.counit()).norm();
    if dev > tol.eps_eig * scale {
        return Err(Error::BadVarsigma(format!("eps o varsigma != eps (deviation {dev:.3e})")));
    }
    let phi = varsigma * co.star_matrix();
    let dev = (&phi * phi.conjugate() - CMatrix::identity(n, n)).norm();
    if dev > tol.eps_eig * scale * scale {
        return Err(Error::BadVarsigma(format!("varsigma(varsigma(c*)*) != c (deviation {dev:.3e})")));
    }
    Ok(())
}

/// `gamma` and its convolution inverse as functionals on the basis.
#[derive(Debug, Clone)]
pub struct Gamma {
    pub gamma: CVector,
    pub inverse: CVector,
}

/// Everything derived from a compact *-coalgebra with an anti-coalgebra map.
#[derive(Debug, Clone)]
pub struct CoalgebraAnalysis {
    pub coalgebra: FDStarCoalgebra,
    pub varsigma: CMatrix,
    /// Indicator analysis of the dual algebra with `S = varsigma^T`.
    pub dual: Analysis,
    pub decomposition: CompactDecomposition,
    pub gamma: Gamma,
}

impl CoalgebraAnalysis {
    pub fn new(co: &FDStarCoalgebra, varsigma: &CMatrix, seed: u64, tol: &Tolerance) -> Result<Self> {
        check_varsigma(co, varsigma, tol)?;
        let alg = Arc::new(dualize_co(co, tol)?);
        if !alg.is_cstar() {
            return Err(Error::NotCompact);
        }
        let s = AntiAlgebraMap::new(&alg, varsigma.transpose(), tol).map_err(|e| Error::BadVarsigma(e.to_string()))?;
        let dual = Analysis::new(&alg, &s, seed, tol)?;
        let decomposition = compact_from_components(co, alg.clone(), dual.components.clone(), tol)?;
        let g = dual.canonical.g.clone();
        let ginv = alg.inverse(&g, tol)?;
        let gamma = Gamma { gamma: g, inverse: ginv };
        let out = CoalgebraAnalysis { coalgebra: co.clone(), varsigma: varsigma.clone(), dual, decomposition, gamma };
        out.verify_gamma(tol)?;
        Ok(out)
    }

    /// `gamma o varsigma = gamma^{-1}` and
    /// `varsigma^2(c) = gamma(c_1) c_2 gamma^{-1}(c_3)`.
    fn verify_gamma(&self, tol: &Tolerance) -> Result<()> {
        let n = self.coalgebra.dim();
        let g = &self.gamma;
        let scale = g.gamma.norm().max(g.inverse.norm()).max(1.0);
        let dev = (self.varsigma.transpose() * &g.gamma - &g.inverse).norm();
        if dev > tol.eps_eig * scale {
            return Err(Error::InternalInconsistency(format!("gamma o varsigma != gamma^-1 (deviation {dev:.3e})")));
        }
        let s2 = &self.varsigma * &self.varsigma;
        for i in 0..n {
            let mut b = CVector::zeros(n);
            b[i] = ONE;
            let d2 = self.coalgebra.double_coproduct(&b);
            let mut rhs = CVector::zeros(n);
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let v = d2[(j * n + k) * n + l];
                        if v != ZERO {
                            rhs[k] += v * g.gamma[j] * g.inverse[l];
                        }
                    }
                }
            }
            let dev = (s2.column(i) - rhs).norm();
            if dev > tol.eps_eig * scale * scale {
                return Err(Error::InternalInconsistency(format!(
                    "varsigma^2 is not conjugation by gamma on c_{i} (deviation {dev:.3e})"
                )));
            }
        }
        Ok(())
    }

    pub fn coreps(&self) -> &[Corepresentation] {
        &self.decomposition.coreps
    }

    /// Coalgebra-side indicator of the i-th irreducible corepresentation.
    pub fn corep_indicator(&self, i: usize, tol: &Tolerance) -> Result<f64> {
        corep_indicator(
            &self.coalgebra,
            &self.decomposition.coreps[i],
            &self.varsigma,
            &self.gamma,
            &self.decomposition.idempotent,
            tol,
        )
    }

    /// Algebra-side report of the dual module of the i-th corepresentation.
    pub fn algebra_report(&self, i: usize, tol: &Tolerance) -> Result<IrrepReport> {
        self.dual.irrep_report(i, tol)
    }
}

/// `gamma(t_2) E(varsigma(t_1), t_3)` with `t = t_V`.
pub fn corep_indicator(
    co: &FDStarCoalgebra,
    v: &Corepresentation,
    varsigma: &CMatrix,
    gamma: &Gamma,
    e: &CoseparabilityIdempotent,
    tol: &Tolerance,
) -> Result<f64> {
    let n = co.dim();
    let t = v.character();
    let d2 = co.double_coproduct(&t);
    let m = varsigma.transpose() * &e.form;
    let mut sum = ZERO;
    for j in 0..n {
        for k in 0..n {
            let gk = gamma.gamma[k];
            if gk == ZERO {
                continue;
            }
            for l in 0..n {
                let x = d2[(j * n + k) * n + l];
                if x != ZERO {
                    sum += x * gk * m[(j, l)];
                }
            }
        }
    }
    if sum.im.abs() >= tol.eps_round {
        return Err(Error::ComplexResult { imag: sum.im });
    }
    Ok(sum.re)
}

/// R-basis of `C_0 = { c : varsigma(c^*) = c }`.
pub fn coalgebra_real_form(co: &FDStarCoalgebra, varsigma: &CMatrix, tol: &Tolerance) -> Vec<CVector> {
    fixed_real_basis(&(varsigma * co.star_matrix()), tol)
}

/// R-basis of `{ x : Im <x, c> = 0 for all c in span_R(basis) }` under the
/// bilinear pairing of dual bases.
pub fn real_annihilator(basis: &[CVector], n: usize, tol: &Tolerance) -> Vec<CVector> {
    let mut sys = RMatrix::zeros(basis.len().max(1), 2 * n);
    for (r, b) in basis.iter().enumerate() {
        for i in 0..n {
            // Im((p + iq)^T (u + iv)) = p.v + q.u
            sys[(r, i)] = b[i].im;
            sys[(r, n + i)] = b[i].re;
        }
    }
    let ns = real_nullspace(&sys, tol);
    (0..ns.ncols()).map(|k| CVector::from_fn(n, |i, _| c(ns[(i, k)], ns[(n + i, k)]))).collect()
}

/// Rank of a family of complex vectors viewed in `R^{2n}`.
pub fn real_span_rank(vectors: &[CVector], tol: &Tolerance) -> usize {
    let n = vectors.first().map(|v| v.len()).unwrap_or(0);
    let m = RMatrix::from_fn(vectors.len(), 2 * n, |r, i| if i < n { vectors[r][i].re } else { vectors[r][i - n].im });
    matrix::real_rank(&m.transpose(), tol)
}

/// A finite-dimensional Hopf *-algebra viewed as a compact quantum group.
#[derive(Debug, Clone)]
pub struct CqgAnalysis {
    pub hopf: WeakHopfData,
    pub coalgebra: CoalgebraAnalysis,
    /// Haar functional `h(e_k)`.
    pub haar: CVector,
}

impl CqgAnalysis {
    /// Uses the dagger coalgebra `a^dagger = S(a)^*`, `varsigma = S`, and the
    /// Haar integral of the dual Hopf algebra as the Haar functional.
    pub fn new(h: &WeakHopfData, seed: u64, tol: &Tolerance) -> Result<Self> {
        let dev = h.hopf_deviation();
        if dev > tol.eps_eig {
            return Err(Error::NotHopf { deviation: dev });
        }
        let alg = h.algebra();
        let s = h.antipode().matrix();
        let dagger = alg.star_matrix() * s.conjugate();
        let co = FDStarCoalgebra::new(alg.dim(), h.sparse_coproduct().clone(), h.counit().clone(), dagger, tol)?;
        let coalgebra = CoalgebraAnalysis::new(&co, s, seed, tol)?;
        let dual = dual_hopf(h, tol)?;
        let haar = haar_integral(&dual, tol)?;
        Ok(CqgAnalysis { hopf: h.clone(), coalgebra, haar })
    }

    pub fn haar_of(&self, x: &Element) -> C64 {
        x.iter().zip(self.haar.iter()).map(|(a, b)| a * b).sum()
    }

    /// `h(t_1 t_2)` for the i-th irreducible corepresentation.
    pub fn haar_square(&self, i: usize) -> C64 {
        let t = self.coalgebra.coreps()[i].character();
        self.haar_of(&self.hopf.multiply_tensor(&self.hopf.coproduct(&t)))
    }

    /// `(gamma(t)/eps(t)) h(t_1 t_2)`.
    pub fn cqg_indicator(&self, i: usize, tol: &Tolerance) -> Result<f64> {
        let t = self.coalgebra.coreps()[i].character();
        let gamma_t: C64 = t.iter().zip(self.coalgebra.gamma.gamma.iter()).map(|(a, b)| a * b).sum();
        let eps_t = self.hopf.counit_of(&t);
        let val = gamma_t / eps_t * self.haar_square(i);
        if val.im.abs() >= tol.eps_round {
            return Err(Error::ComplexResult { imag: val.im });
        }
        Ok(val.re)
    }
}

/// Real form of the dual algebra induced by `varsigma`, as in
/// [`real_form_from_s`] with `S = varsigma^T`.
pub fn dual_real_form(alg: &FDStarAlgebra, varsigma: &CMatrix, tol: &Tolerance) -> Result<crate::algebra::RealForm> {
    let s = AntiAlgebraMap::new(alg, varsigma.transpose(), tol).map_err(|e| Error::BadVarsigma(e.to_string()))?;
    real_form_from_s(alg, &s, tol)
}
