//! Dense complex linear algebra: Hermitian spectra, functional calculus,
//! polar decomposition, nullspaces and seeded random matrices.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;
pub type RMatrix = DMatrix<f64>;
pub type RVector = DVector<f64>;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);

#[inline]
pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub fn r(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Numerical thresholds. All three lie strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Relative singular-value cutoff for rank and nullspace decisions.
    pub eps_rank: f64,
    /// Eigenvalue clustering and psd clamping band.
    pub eps_eig: f64,
    /// Rounding band for indicator values.
    pub eps_round: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps_rank: 1e-9, eps_eig: 1e-8, eps_round: 1e-6 }
    }
}

impl Tolerance {
    pub fn new(eps_rank: f64, eps_eig: f64, eps_round: f64) -> Result<Self> {
        let t = Tolerance { eps_rank, eps_eig, eps_round };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("eps_rank", self.eps_rank), ("eps_eig", self.eps_eig), ("eps_round", self.eps_round)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::BadTolerance(format!("{name} = {v} not in (0, 1)")));
            }
        }
        Ok(())
    }
}

pub fn is_finite(m: &CMatrix) -> bool {
    m.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Frobenius norm of `a - a^†`.
pub fn hermitian_deviation(a: &CMatrix) -> f64 {
    (a - a.adjoint()).norm()
}

pub fn is_hermitian(a: &CMatrix, eps: f64) -> bool {
    a.is_square() && hermitian_deviation(a) <= eps * a.norm().max(1.0)
}

pub fn hermitian_part(a: &CMatrix) -> CMatrix {
    (a + a.adjoint()) * r(0.5)
}

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors as columns, in the order of `values`.
    pub vectors: CMatrix,
}

/// Diagonalizes the Hermitian part of `a`.
pub fn hermitian_eigen(a: &CMatrix) -> HermitianEigen {
    let n = a.nrows();
    if n == 0 {
        return HermitianEigen { values: vec![], vectors: CMatrix::zeros(0, 0) };
    }
    let eig = SymmetricEigen::new(hermitian_part(a));
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = CMatrix::from_fn(n, n, |row, col| eig.eigenvectors[(row, order[col])]);
    HermitianEigen { values, vectors }
}

/// Groups an ascending spectrum into runs of numerically equal eigenvalues.
/// Neighbours are merged when `|l_i - l_j| <= eps (1 + |l_i|)`.
pub fn cluster_eigenvalues(values: &[f64], eps: f64) -> Vec<std::ops::Range<usize>> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || (values[i] - values[i - 1]).abs() > eps * (1.0 + values[i - 1].abs()) {
            if i > start {
                out.push(start..i);
            }
            start = i;
        }
    }
    out
}

/// `U f(Λ) U^†` for Hermitian positive semidefinite `a = U Λ U^†`.
///
/// Eigenvalues in `[-eps_eig, 0)` are clamped to zero before `f` is applied.
pub fn matrix_function(a: &CMatrix, f: impl Fn(f64) -> f64, tol: &Tolerance) -> Result<CMatrix> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", a.nrows(), a.ncols())));
    }
    if !is_hermitian(a, tol.eps_rank) {
        return Err(Error::NotHermitian { deviation: hermitian_deviation(a) });
    }
    let eig = hermitian_eigen(a);
    let scale = eig.values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut fvals = Vec::with_capacity(eig.values.len());
    for &l in &eig.values {
        if l < -tol.eps_eig * scale {
            return Err(Error::NegativeSpectrum { eigenvalue: l });
        }
        let l = l.max(0.0);
        let v = f(l);
        if !v.is_finite() {
            return Err(Error::UndefinedSpectrum { eigenvalue: l });
        }
        fvals.push(v);
    }
    Ok(spectral_sum(&eig.vectors, &fvals))
}

/// `U diag(d) U^†`.
pub fn spectral_sum(u: &CMatrix, d: &[f64]) -> CMatrix {
    let mut scaled = u.clone();
    for (j, &v) in d.iter().enumerate() {
        scaled.column_mut(j).scale_mut(v);
    }
    scaled * u.adjoint()
}

pub fn sqrt_psd(a: &CMatrix, tol: &Tolerance) -> Result<CMatrix> {
    matrix_function(a, f64::sqrt, tol)
}

/// `a^{-1/2}` for Hermitian positive definite `a`.
pub fn inv_sqrt_pd(a: &CMatrix, tol: &Tolerance) -> Result<CMatrix> {
    let eig = hermitian_eigen(a);
    let max = eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let min = eig.values.first().copied().unwrap_or(1.0);
    if min <= tol.eps_rank * max {
        return Err(Error::SingularInput { sigma_min: min, sigma_max: max });
    }
    matrix_function(a, |t| 1.0 / t.sqrt(), tol)
}

/// Unitary factor `f |f|^{-1}` of the polar decomposition.
pub fn polar_unitary(f: &CMatrix, tol: &Tolerance) -> Result<CMatrix> {
    if !f.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", f.nrows(), f.ncols())));
    }
    if f.nrows() == 0 {
        return Ok(f.clone());
    }
    let eig = hermitian_eigen(&(f.adjoint() * f));
    let sig: Vec<f64> = eig.values.iter().map(|v| v.max(0.0).sqrt()).collect();
    let smax = sig.iter().cloned().fold(0.0, f64::max);
    let smin = sig.iter().cloned().fold(f64::INFINITY, f64::min);
    if smax == 0.0 || smin <= tol.eps_rank * smax {
        return Err(Error::SingularInput { sigma_min: smin, sigma_max: smax });
    }
    let inv: Vec<f64> = sig.iter().map(|s| 1.0 / s).collect();
    Ok(f * spectral_sum(&eig.vectors, &inv))
}

/// Inverse through LU, rejecting numerically singular input.
pub fn inverse(a: &CMatrix, tol: &Tolerance) -> Result<CMatrix> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!("{}x{} is not square", a.nrows(), a.ncols())));
    }
    let sv = a.clone().singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    let smin = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if a.nrows() > 0 && (smax == 0.0 || smin <= tol.eps_rank * smax) {
        return Err(Error::SingularInput { sigma_min: smin, sigma_max: smax });
    }
    a.clone().try_inverse().ok_or(Error::SingularInput { sigma_min: smin, sigma_max: smax })
}

/// Orthonormal basis (as columns) of `{x : m x = 0}`.
///
/// Singular values at or below `eps_rank * max(sigma_max, 1)` count as zero,
/// so a matrix that vanishes up to rounding has full nullspace. Inputs are
/// expected to be scaled to order one.
pub fn nullspace(m: &CMatrix, tol: &Tolerance) -> CMatrix {
    let cols = m.ncols();
    if cols == 0 {
        return CMatrix::zeros(0, 0);
    }
    if m.nrows() == 0 {
        return CMatrix::identity(cols, cols);
    }
    let square = reduce_rows(m);
    let svd = square.svd(false, true);
    let v_t = svd.v_t.expect("v_t requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let keep: Vec<usize> = (0..cols).filter(|&k| svd.singular_values[k] <= tol.eps_rank * smax.max(1.0)).collect();
    CMatrix::from_fn(cols, keep.len(), |i, j| v_t[(keep[j], i)].conj())
}

/// A `cols x cols` matrix with the same row space as `m`.
fn reduce_rows(m: &CMatrix) -> CMatrix {
    let (rows, cols) = m.shape();
    if rows > 2 * cols {
        m.clone().qr().r()
    } else if rows < cols {
        let mut out = CMatrix::zeros(cols, cols);
        out.view_mut((0, 0), (rows, cols)).copy_from(m);
        out
    } else if rows > cols {
        m.clone().qr().r()
    } else {
        m.clone()
    }
}

/// Real counterpart of [`nullspace`].
pub fn real_nullspace(m: &RMatrix, tol: &Tolerance) -> RMatrix {
    let (rows, cols) = m.shape();
    if cols == 0 {
        return RMatrix::zeros(0, 0);
    }
    if rows == 0 {
        return RMatrix::identity(cols, cols);
    }
    let square = if rows > cols {
        m.clone().qr().r()
    } else if rows < cols {
        let mut out = RMatrix::zeros(cols, cols);
        out.view_mut((0, 0), (rows, cols)).copy_from(m);
        out
    } else {
        m.clone()
    };
    let svd = square.svd(false, true);
    let v_t = svd.v_t.expect("v_t requested");
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let keep: Vec<usize> = (0..cols).filter(|&k| svd.singular_values[k] <= tol.eps_rank * smax.max(1.0)).collect();
    RMatrix::from_fn(cols, keep.len(), |i, j| v_t[(keep[j], i)])
}

/// Numerical rank of a real matrix.
pub fn real_rank(m: &RMatrix, tol: &Tolerance) -> usize {
    m.ncols() - real_nullspace(m, tol).ncols()
}

/// Least-squares solution of `m x = b` with its residual norm.
pub fn solve_least_squares(m: &CMatrix, b: &CVector, tol: &Tolerance) -> (CVector, f64) {
    let svd = m.clone().svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let x = svd.solve(b, tol.eps_rank * smax.max(f64::MIN_POSITIVE)).unwrap_or_else(|_| CVector::zeros(m.ncols()));
    let res = (m * &x - b).norm();
    (x, res)
}

/// The `2r x 2c` real matrix of `m` acting on `(Re x, Im x)`.
pub fn realify(m: &CMatrix) -> RMatrix {
    let (rows, cols) = m.shape();
    let mut out = RMatrix::zeros(2 * rows, 2 * cols);
    for i in 0..rows {
        for j in 0..cols {
            let z = m[(i, j)];
            out[(i, j)] = z.re;
            out[(i, cols + j)] = -z.im;
            out[(rows + i, j)] = z.im;
            out[(rows + i, cols + j)] = z.re;
        }
    }
    out
}

/// Column-major vectorization.
pub fn vec_of(m: &CMatrix) -> CVector {
    CVector::from_column_slice(m.as_slice())
}

/// Inverse of [`vec_of`].
pub fn unvec(v: &[C64], rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_column_slice(rows, cols, v)
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |a, z| a.max(z.norm()))
}

pub fn max_abs_im(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |a, z| a.max(z.im.abs()))
}

/// Kronecker product.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Deterministic source of Gaussian matrices. Every consumer receives it by
/// `&mut`, so there is no shared or global state.
#[derive(Debug, Clone)]
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Independent child stream, stable for a given `(parent state, tag)`.
    pub fn fork(&mut self, tag: u64) -> Self {
        let base: u64 = self.0.random();
        SeededRng::new(base ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }

    pub fn gaussian(&mut self) -> f64 {
        self.0.sample(StandardNormal)
    }

    pub fn complex_gaussian(&mut self) -> C64 {
        c(self.gaussian(), self.gaussian())
    }

    pub fn real_vector(&mut self, n: usize) -> RVector {
        RVector::from_fn(n, |_, _| self.gaussian())
    }

    pub fn complex_vector(&mut self, n: usize) -> CVector {
        CVector::from_fn(n, |_, _| self.complex_gaussian())
    }

    pub fn complex_matrix(&mut self, rows: usize, cols: usize) -> CMatrix {
        CMatrix::from_fn(rows, cols, |_, _| self.complex_gaussian())
    }

    pub fn hermitian(&mut self, n: usize) -> CMatrix {
        hermitian_part(&self.complex_matrix(n, n))
    }

    /// Haar-ish random unitary: Q factor of a Gaussian matrix.
    pub fn unitary(&mut self, n: usize) -> CMatrix {
        self.complex_matrix(n, n).qr().q()
    }
}
