//! Canonical element `g`, Frobenius-Schur indicators by the idempotent formula
//! and by the trace of the involution on `Hom(V, D(V))`, the J-signature with
//! its witnesses, and the real endomorphism dimension.

use std::sync::Arc;

use log::info;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{
    fixed_real_basis, real_form_from_s, separability_idempotent, AntiAlgebraMap, DualStructureData, Element,
    FDStarAlgebra, RealForm, SeparabilityIdempotent,
};
use crate::error::{Error, Result};
use crate::matrix::{
    self, c, hermitian_eigen, is_hermitian, real_nullspace, realify, CMatrix, CVector, RMatrix, Tolerance, C64,
};
use crate::rep::{decompose, dual_representation, intertwiners, regular_representation, Component, Representation};

/// The positive `g` implementing `S^2`, with its blocks on the irreducibles.
#[derive(Debug, Clone)]
pub struct CanonicalElement {
    pub g: Element,
    /// `g_i` on the i-th irreducible, `tr g_i = tr g_i^{-1}`.
    pub per_irrep: Vec<CMatrix>,
}

/// Solves `g~ rho(a) = rho(S^2 a) g~` on each irreducible, fixes the phase and
/// trace balance, and reassembles `g` as an algebra element.
pub fn canonical_g(
    alg: &Arc<FDStarAlgebra>,
    s: &AntiAlgebraMap,
    irreps: &[Representation],
    tol: &Tolerance,
) -> Result<CanonicalElement> {
    if !alg.is_cstar() {
        return Err(Error::NotCStar);
    }
    let s2 = s.squared();
    let mut per_irrep = Vec::with_capacity(irreps.len());
    for (idx, v) in irreps.iter().enumerate() {
        let d = v.dim();
        let twisted = v.pullback(&s2);
        let maps = intertwiners(v, &twisted, tol);
        let t = maps.into_iter().next().ok_or(Error::NoTwistedMap { irrep: idx })?;
        let tr = t.trace();
        if tr.norm() <= tol.eps_rank * t.norm() * d as f64 {
            return Err(Error::NotPositive { irrep: idx });
        }
        let t = t * (tr.conj() / tr.norm());
        let h = v.gram().cloned().unwrap_or_else(|| CMatrix::identity(d, d));
        let ht = &h * &t;
        if !is_hermitian(&ht, tol.eps_eig.sqrt()) {
            return Err(Error::NotPositive { irrep: idx });
        }
        let eig = hermitian_eigen(&ht);
        let max = eig.values.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if eig.values[0] <= tol.eps_rank * max {
            log::warn!("twisted map on irreducible #{idx} has a mixed-sign spectrum after phase fixing");
            return Err(Error::NotPositive { irrep: idx });
        }
        let tinv = matrix::inverse(&t, tol)?;
        let scale = (tinv.trace().re / t.trace().re).sqrt();
        per_irrep.push(t * c(scale, 0.0));
    }
    let g = reassemble(alg, irreps, &per_irrep, tol)?;
    let dual = DualStructureData::new(alg, s.clone(), g.clone(), tol)
        .map_err(|e| Error::InternalInconsistency(format!("reassembled g is not a dual structure: {e}")))?;
    if !alg.is_positive_invertible(&dual.g, tol) {
        return Err(Error::InternalInconsistency("reassembled g is not positive".into()));
    }
    Ok(CanonicalElement { g, per_irrep })
}

/// The unique `g` with `rho_c(g) = blocks[c]` for every irreducible class.
fn reassemble(alg: &FDStarAlgebra, irreps: &[Representation], blocks: &[CMatrix], tol: &Tolerance) -> Result<Element> {
    let n = alg.dim();
    let rows: usize = irreps.iter().map(|v| v.dim() * v.dim()).sum();
    let mut m = CMatrix::zeros(rows, n);
    let mut rhs = CVector::zeros(rows);
    let mut off = 0;
    for (v, b) in irreps.iter().zip(blocks) {
        let dd = v.dim() * v.dim();
        for k in 0..n {
            m.view_mut((off, k), (dd, 1)).copy_from_slice(v.matrices()[k].as_slice());
        }
        rhs.rows_mut(off, dd).copy_from_slice(b.as_slice());
        off += dd;
    }
    let (g, res) = matrix::solve_least_squares(&m, &rhs, tol);
    if res > tol.eps_eig.sqrt() * rhs.norm().max(1.0) {
        return Err(Error::InternalInconsistency(format!("blocks do not come from one element (residual {res:.3e})")));
    }
    Ok(g)
}

/// `sum_m chi_V(S(x_m) g y_m)`.
pub fn fs_indicator_formula(
    v: &Representation,
    s: &AntiAlgebraMap,
    g: &Element,
    e: &SeparabilityIdempotent,
    tol: &Tolerance,
) -> Result<f64> {
    let alg = v.algebra();
    let mut z = alg.zero();
    for (x, y) in &e.pairs {
        z += alg.product(&alg.product(&s.apply(x), g), y);
    }
    let nu = v.character().at(&z);
    if nu.im.abs() >= tol.eps_round {
        return Err(Error::ComplexResult { imag: nu.im });
    }
    Ok(nu.re)
}

/// Trace of `F -> F^T rho(g)` on `Hom(V, D(V))`.
pub fn fs_indicator_trace(v: &Representation, dual: &DualStructureData, tol: &Tolerance) -> Result<f64> {
    let dv = dual_representation(v, dual, tol)?;
    let rg = v.rho_of(&dual.g);
    let basis = intertwiners(v, &dv, tol);
    let tr: C64 = basis.iter().map(|f| (f.adjoint() * (f.transpose() * &rg)).trace()).sum();
    Ok(tr.re)
}

/// Evidence for the J-signature.
#[derive(Debug, Clone)]
pub enum SignatureWitness {
    /// Columns span a real structure: `B^{-1} rho(a) B` is real on `A_0`.
    RealBasis(CMatrix),
    /// `J conj(J) = -I` and `J conj(rho(a)) = rho(a-bar) J`.
    QuaternionMap(CMatrix),
    None,
}

impl SignatureWitness {
    pub fn kind(&self) -> &'static str {
        match self {
            SignatureWitness::RealBasis(_) => "RealBasis",
            SignatureWitness::QuaternionMap(_) => "QuaternionMap",
            SignatureWitness::None => "None",
        }
    }

    pub fn matrix(&self) -> Option<&CMatrix> {
        match self {
            SignatureWitness::RealBasis(m) | SignatureWitness::QuaternionMap(m) => Some(m),
            SignatureWitness::None => None,
        }
    }

    /// Residual of the witness identities; 0 for `None`.
    pub fn residual(&self, v: &Representation, real: &RealForm, tol: &Tolerance) -> Result<f64> {
        match self {
            SignatureWitness::RealBasis(b) => {
                let w = v.change_basis(b, tol)?;
                Ok(real.basis().iter().map(|a| matrix::max_abs_im(&w.rho_of(a))).fold(0.0, f64::max))
            }
            SignatureWitness::QuaternionMap(j) => {
                let d = v.dim();
                let mut dev = (j * j.conjugate() + CMatrix::identity(d, d)).norm();
                for i in 0..v.algebra().dim() {
                    let e = v.algebra().basis(i);
                    let abar = real.conjugate(&e);
                    dev = dev.max((j * v.rho_of(&e).conjugate() - v.rho_of(&abar) * j).norm());
                }
                Ok(dev)
            }
            SignatureWitness::None => Ok(0.0),
        }
    }
}

impl Serialize for SignatureWitness {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("SignatureWitness", 2)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("matrix", &self.matrix().map(matrix_rows))?;
        st.end()
    }
}

/// Row-major `[re, im]` pairs.
pub fn matrix_rows(m: &CMatrix) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect()).collect()
}

/// J-signature of an irreducible with respect to a real form, with witness.
pub fn classify_sigma(v: &Representation, real: &RealForm, tol: &Tolerance) -> Result<(i8, SignatureWitness)> {
    let alg = v.algebra();
    let d = v.dim();
    let conj_rho: Vec<CMatrix> = v.matrices().iter().map(|m| m.conjugate()).collect();
    let bar_rho: Vec<CMatrix> = (0..alg.dim()).map(|i| v.rho_of(&real.conj_matrix().column(i).into_owned())).collect();
    let source = Representation::new_unchecked(alg.clone(), conj_rho, None);
    let target = Representation::new_unchecked(alg.clone(), bar_rho, None);
    let f = match intertwiners(&source, &target, tol).into_iter().next() {
        Some(f) => f * c((d as f64).sqrt(), 0.0),
        None => return Ok((0, SignatureWitness::None)),
    };
    let ff = &f * f.conjugate();
    let alpha = ff.trace() / c(d as f64, 0.0);
    let deviation = (&ff - CMatrix::identity(d, d) * alpha).norm();
    if deviation >= tol.eps_round || alpha.im.abs() >= tol.eps_round || alpha.norm() <= tol.eps_rank {
        return Err(Error::InconsistentAlpha { deviation: deviation.max(alpha.im.abs()) });
    }
    let j = f * c(alpha.re.abs().powf(-0.5), 0.0);
    if alpha.re > 0.0 {
        let fixed = fixed_real_basis(&j, tol);
        if fixed.len() != d {
            return Err(Error::InternalInconsistency(format!(
                "fixed space of j has real dimension {}, expected {d}",
                fixed.len()
            )));
        }
        let b = CMatrix::from_fn(d, d, |i, k| fixed[k][i]);
        Ok((1, SignatureWitness::RealBasis(b)))
    } else {
        Ok((-1, SignatureWitness::QuaternionMap(j)))
    }
}

/// Real dimension of the commutant of `V` restricted to `A_0`.
pub fn endo_real_dimension(v: &Representation, real: &RealForm, tol: &Tolerance) -> Result<usize> {
    let mats: Vec<RMatrix> = real.basis().iter().map(|a| realify(&v.rho_of(a))).collect();
    let m = 2 * v.dim();
    let block = m * m;
    let mut sys = RMatrix::zeros(mats.len() * block, block);
    for (i, a) in mats.iter().enumerate() {
        let mut blk = sys.view_mut((i * block, 0), (block, block));
        for q in 0..m {
            for p in 0..m {
                let apq = a[(p, q)];
                if apq != 0.0 {
                    for s in 0..m {
                        blk[(q * m + s, p * m + s)] += apq;
                    }
                }
            }
            for s in 0..m {
                for t in 0..m {
                    let ast = a[(s, t)];
                    if ast != 0.0 {
                        blk[(q * m + s, q * m + t)] -= ast;
                    }
                }
            }
        }
    }
    let dim = real_nullspace(&sys, tol).ncols();
    if dim != 2 && dim != 4 {
        return Err(Error::UnexpectedDimension { dim });
    }
    Ok(dim)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Real,
    Complex,
    Quaternionic,
}

impl Label {
    pub fn from_sigma(sigma: i8) -> Label {
        match sigma {
            1 => Label::Real,
            -1 => Label::Quaternionic,
            _ => Label::Complex,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Label::Real => "real",
            Label::Complex => "complex",
            Label::Quaternionic => "quaternionic",
        }
    }
}

/// One irreducible's row of the report.
#[derive(Debug, Clone, Serialize)]
pub struct IrrepReport {
    pub index: usize,
    pub dim: usize,
    pub multiplicity: usize,
    pub fingerprint: Vec<i64>,
    pub character: Vec<[f64; 2]>,
    pub nu_formula: f64,
    pub nu_trace: f64,
    pub sigma: i8,
    pub label: Label,
    pub witness: SignatureWitness,
    pub endo_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndicatorReport {
    pub algebra_dim: usize,
    pub seed: u64,
    /// Coordinates of the canonical element as `[re, im]`.
    pub g: Vec<[f64; 2]>,
    pub irreps: Vec<IrrepReport>,
}

pub fn round_indicator(x: f64) -> i64 {
    x.round() as i64
}

/// Everything derived once from `(A, S)`: decomposition, canonical `g`,
/// real form and separability idempotent.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub algebra: Arc<FDStarAlgebra>,
    pub antipode: AntiAlgebraMap,
    pub real_form: RealForm,
    pub components: Vec<Component>,
    pub canonical: CanonicalElement,
    pub dual: DualStructureData,
    pub idempotent: SeparabilityIdempotent,
    pub seed: u64,
}

impl Analysis {
    pub fn new(alg: &Arc<FDStarAlgebra>, s: &AntiAlgebraMap, seed: u64, tol: &Tolerance) -> Result<Self> {
        if !alg.is_cstar() {
            return Err(Error::NotCStar);
        }
        let real_form = real_form_from_s(alg, s, tol)?;
        let components = decompose(&regular_representation(alg), seed, tol)?;
        let irreps: Vec<Representation> = components.iter().map(|c| c.irrep.clone()).collect();
        let canonical = canonical_g(alg, s, &irreps, tol)?;
        let dual = DualStructureData::new(alg, s.clone(), canonical.g.clone(), tol)?;
        let idempotent = separability_idempotent(alg, tol)?;
        Ok(Analysis {
            algebra: alg.clone(),
            antipode: s.clone(),
            real_form,
            components,
            canonical,
            dual,
            idempotent,
            seed,
        })
    }

    pub fn irreps(&self) -> Vec<Representation> {
        self.components.iter().map(|c| c.irrep.clone()).collect()
    }

    /// Both indicators, the signature and the endomorphism dimension for one
    /// irreducible; fails with `AgreementFailure` if they disagree.
    pub fn irrep_report(&self, index: usize, tol: &Tolerance) -> Result<IrrepReport> {
        let comp = &self.components[index];
        let v = &comp.irrep;
        let nu_formula = fs_indicator_formula(v, &self.antipode, &self.dual.g, &self.idempotent, tol)?;
        let nu_trace = fs_indicator_trace(v, &self.dual, tol)?;
        let (sigma, witness) = classify_sigma(v, &self.real_form, tol)?;
        let endo_dim = endo_real_dimension(v, &self.real_form, tol)?;
        let agree = (nu_formula - nu_formula.round()).abs() < tol.eps_round
            && (nu_trace - nu_trace.round()).abs() < tol.eps_round
            && round_indicator(nu_formula) == sigma as i64
            && round_indicator(nu_trace) == sigma as i64;
        if !agree {
            return Err(Error::AgreementFailure { irrep: index, nu_formula, nu_trace, sigma });
        }
        if (endo_dim == 2) != (sigma == 0) {
            return Err(Error::InternalInconsistency(format!(
                "irreducible #{index}: endo_dim {endo_dim} with sigma {sigma}"
            )));
        }
        let ch = v.character();
        info!("irreducible #{index}: dim {} mult {} nu {:.6} sigma {sigma:+}", v.dim(), comp.multiplicity, nu_formula);
        Ok(IrrepReport {
            index,
            dim: v.dim(),
            multiplicity: comp.multiplicity,
            fingerprint: ch.fingerprint(),
            character: ch.values.iter().map(|z| [z.re, z.im]).collect(),
            nu_formula,
            nu_trace,
            sigma,
            label: Label::from_sigma(sigma),
            witness,
            endo_dim,
        })
    }

    pub fn report(&self, tol: &Tolerance) -> Result<IndicatorReport> {
        let irreps = (0..self.components.len())
            .into_par_iter()
            .map(|i| self.irrep_report(i, tol))
            .collect::<Result<Vec<_>>>()?;
        Ok(IndicatorReport {
            algebra_dim: self.algebra.dim(),
            seed: self.seed,
            g: self.canonical.g.iter().map(|z| [z.re, z.im]).collect(),
            irreps,
        })
    }
}

/// Decomposes the regular representation and reports every irreducible.
pub fn full_report(
    alg: &Arc<FDStarAlgebra>,
    s: &AntiAlgebraMap,
    seed: u64,
    tol: &Tolerance,
) -> Result<IndicatorReport> {
    Analysis::new(alg, s, seed, tol)?.report(tol)
}

/// `beta(v, w) = <j v | w>` for the antilinear `j(v) = J conj(v)` on a
/// unitary irreducible.
pub fn bilinear_form(j: &CMatrix, v: &CVector, w: &CVector) -> C64 {
    let jv = j * v.conjugate();
    jv.dotc(w)
}
