//! Representations: validation, characters, commutants, decomposition into
//! irreducibles, dual and conjugate representations.

use std::sync::Arc;

use log::debug;

use crate::algebra::{separability_idempotent, DualStructureData, Element, FDStarAlgebra, RealForm};
use crate::error::{Error, Result};
use crate::matrix::{
    self, cluster_eigenvalues, hermitian_eigen, hermitian_part, inv_sqrt_pd, is_hermitian, nullspace, r, sqrt_psd,
    unvec, CMatrix, SeededRng, Tolerance, C64, ZERO,
};

/// Largest block for which the commutant is obtained from the Sylvester system.
pub const SYLVESTER_CUTOFF: usize = 12;
/// Fresh random commutant elements tried before a split is declared degenerate.
pub const SPLIT_ATTEMPTS: usize = 8;

/// `rho[i]` is the matrix of the basis element `e_i`.
#[derive(Debug, Clone)]
pub struct Representation {
    algebra: Arc<FDStarAlgebra>,
    rho: Vec<CMatrix>,
    /// `<x|y> = x^dagger H y`, with `H rho(a) = rho(a^*)^dagger H`.
    gram: Option<CMatrix>,
}

impl Representation {
    pub fn new(algebra: Arc<FDStarAlgebra>, rho: Vec<CMatrix>, gram: Option<CMatrix>, tol: &Tolerance) -> Result<Self> {
        let rep = Representation { algebra, rho, gram };
        rep.check_homomorphism(tol)?;
        if rep.gram.is_some() {
            rep.check_star(tol)?;
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(algebra: Arc<FDStarAlgebra>, rho: Vec<CMatrix>, gram: Option<CMatrix>) -> Self {
        Representation { algebra, rho, gram }
    }

    fn check_homomorphism(&self, tol: &Tolerance) -> Result<()> {
        let alg = &self.algebra;
        let n = alg.dim();
        if self.rho.len() != n {
            return Err(Error::NotRepresentation(format!(
                "{} matrices for an algebra of dimension {n}",
                self.rho.len()
            )));
        }
        let d = self.dim();
        if self.rho.iter().any(|m| m.shape() != (d, d)) {
            return Err(Error::NotRepresentation("matrices are not all square of the same size".into()));
        }
        if self.rho.iter().any(|m| !matrix::is_finite(m)) {
            return Err(Error::NotRepresentation("non-finite entries".into()));
        }
        let scale = self.rho.iter().fold(1.0f64, |m, x| m.max(x.norm()));
        let id_dev = (self.rho_of(alg.unit()) - CMatrix::identity(d, d)).norm();
        if id_dev > tol.eps_eig * scale {
            return Err(Error::NotRepresentation(format!("rho(1) != I (deviation {id_dev:.3e})")));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = &self.rho[i] * &self.rho[j];
                let mut rhs = CMatrix::zeros(d, d);
                for &(k, v) in alg.basis_product(i, j) {
                    rhs += &self.rho[k] * v;
                }
                let dev = (lhs - rhs).norm();
                if dev > tol.eps_eig * scale * scale {
                    return Err(Error::NotRepresentation(format!(
                        "rho(e_{i}) rho(e_{j}) != rho(e_{i} e_{j}) (deviation {dev:.3e})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks that the gram is positive definite and satisfies the *-identity.
    pub fn check_star(&self, tol: &Tolerance) -> Result<()> {
        let h = self.gram.as_ref().ok_or_else(|| Error::NotStarRep("no gram form".into()))?;
        let d = self.dim();
        if h.shape() != (d, d) || !is_hermitian(h, tol.eps_rank.sqrt()) {
            return Err(Error::NotStarRep("gram is not a Hermitian matrix of the right size".into()));
        }
        let eig = hermitian_eigen(h);
        let max = eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if d > 0 && eig.values[0] <= tol.eps_rank * max {
            return Err(Error::NotStarRep("gram is not positive definite".into()));
        }
        let scale = self.rho.iter().fold(1.0f64, |m, x| m.max(x.norm())) * h.norm().max(1.0);
        for i in 0..self.algebra.dim() {
            let lhs = h * &self.rho[i];
            let rhs = self.rho_of(&self.algebra.star_basis(i)).adjoint() * h;
            let dev = (lhs - rhs).norm();
            if dev > tol.eps_eig * scale {
                return Err(Error::NotStarRep(format!("H rho(e_{i}) != rho(e_{i}^*)^dagger H (deviation {dev:.3e})")));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<FDStarAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.rho.first().map(|m| m.nrows()).unwrap_or(0)
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.rho
    }

    pub fn gram(&self) -> Option<&CMatrix> {
        self.gram.as_ref()
    }

    pub fn with_gram(mut self, gram: Option<CMatrix>) -> Self {
        self.gram = gram;
        self
    }

    pub fn rho_of(&self, a: &Element) -> CMatrix {
        let d = self.dim();
        let mut out = CMatrix::zeros(d, d);
        for (i, &ai) in a.iter().enumerate() {
            if ai != ZERO {
                out += &self.rho[i] * ai;
            }
        }
        out
    }

    pub fn character(&self) -> Character {
        Character { values: self.rho.iter().map(|m| m.trace()).collect() }
    }

    /// `a -> rho(phi(a))` for a linear `phi` given by its matrix on the basis.
    pub fn pullback(&self, phi: &CMatrix) -> Representation {
        let rho = (0..self.algebra.dim()).map(|i| self.rho_of(&phi.column(i).into_owned())).collect();
        Representation::new_unchecked(self.algebra.clone(), rho, None)
    }

    /// `a -> p^{-1} rho(a) p`, with the gram transported accordingly.
    pub fn change_basis(&self, p: &CMatrix, tol: &Tolerance) -> Result<Representation> {
        let pinv = matrix::inverse(p, tol)?;
        let rho = self.rho.iter().map(|m| &pinv * m * p).collect();
        let gram = self.gram.as_ref().map(|h| p.adjoint() * h * p);
        Ok(Representation::new_unchecked(self.algebra.clone(), rho, gram))
    }
}

/// `chi_i = tr rho(e_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub values: Vec<C64>,
}

impl Character {
    pub fn at(&self, a: &Element) -> C64 {
        a.iter().zip(&self.values).map(|(x, v)| x * v).sum()
    }

    /// Values rounded to `1e-6`, real and imaginary parts interleaved.
    pub fn fingerprint(&self) -> Vec<i64> {
        fingerprint(&self.values)
    }

    pub fn distance(&self, other: &Character) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

pub fn fingerprint(values: &[C64]) -> Vec<i64> {
    let q = |x: f64| {
        let v = (x * 1e6).round() as i64;
        if v == 0 {
            0
        } else {
            v
        }
    };
    values.iter().flat_map(|z| [q(z.re), q(z.im)]).collect()
}

/// An irreducible constituent and how often it occurs.
#[derive(Debug, Clone)]
pub struct Component {
    pub irrep: Representation,
    pub multiplicity: usize,
}

/// Left regular representation; the gram is the trace form when positive definite.
pub fn regular_representation(alg: &Arc<FDStarAlgebra>) -> Representation {
    let gram = alg.is_cstar().then(|| alg.gram().clone());
    Representation::new_unchecked(alg.clone(), alg.left_matrices().to_vec(), gram)
}

/// Orthonormal (Frobenius) basis of `{ T : T rho_V(e_i) = rho_W(e_i) T }`.
pub fn intertwiners(v: &Representation, w: &Representation, tol: &Tolerance) -> Vec<CMatrix> {
    intertwiners_raw(v.matrices(), w.matrices(), tol)
}

fn intertwiners_raw(rv: &[CMatrix], rw: &[CMatrix], tol: &Tolerance) -> Vec<CMatrix> {
    let dv = rv.first().map(|m| m.nrows()).unwrap_or(0);
    let dw = rw.first().map(|m| m.nrows()).unwrap_or(0);
    if dv == 0 || dw == 0 {
        return vec![];
    }
    let block = dv * dw;
    // vec(T A) = (A^T (x) I) vec T, vec(B T) = (I (x) B) vec T
    let mut sys = CMatrix::zeros(rv.len() * block, block);
    for (i, (a, b)) in rv.iter().zip(rw).enumerate() {
        let mut blk = sys.view_mut((i * block, 0), (block, block));
        for q in 0..dv {
            for p in 0..dv {
                let apq = a[(p, q)];
                if apq != ZERO {
                    for s in 0..dw {
                        blk[(q * dw + s, p * dw + s)] += apq;
                    }
                }
            }
            for s in 0..dw {
                for t in 0..dw {
                    let bst = b[(s, t)];
                    if bst != ZERO {
                        blk[(q * dw + s, q * dw + t)] -= bst;
                    }
                }
            }
        }
    }
    let ns = nullspace(&sys, tol);
    (0..ns.ncols()).map(|k| unvec(ns.column(k).as_slice(), dw, dv)).collect()
}

/// Intertwiners of `V` with itself.
pub fn commutant(v: &Representation, tol: &Tolerance) -> Vec<CMatrix> {
    intertwiners(v, v, tol)
}

/// Decomposes a *-representation into irreducibles with multiplicities.
///
/// Returned irreducibles act unitarily (gram = identity) and are sorted by
/// dimension, then character fingerprint.
pub fn decompose(v: &Representation, seed: u64, tol: &Tolerance) -> Result<Vec<Component>> {
    let h = v.gram().ok_or_else(|| Error::NotStarRep("decomposition needs a gram form".into()))?;
    v.check_star(tol)?;
    let d = v.dim();
    let alg = v.algebra().clone();
    let hs = sqrt_psd(h, tol)?;
    let hsi = inv_sqrt_pd(h, tol)?;
    let rho: Vec<CMatrix> = v.matrices().iter().map(|m| &hs * m * &hsi).collect();
    let pairs = if alg.is_cstar() && d > SYLVESTER_CUTOFF {
        let e = separability_idempotent(&alg, tol)?;
        let rep = Representation::new_unchecked(alg.clone(), rho.clone(), None);
        Some(e.pairs.iter().map(|(x, y)| (rep.rho_of(x), rep.rho_of(y))).collect::<Vec<_>>())
    } else {
        None
    };
    let mut rng = SeededRng::new(seed);
    let mut leaves = Vec::new();
    let ctx = SplitContext { rho: &rho, pairs: pairs.as_deref(), tol };
    ctx.split(CMatrix::identity(d, d), &mut rng, &mut leaves)?;

    let mut classes: Vec<(Representation, Character, usize)> = Vec::new();
    for q in leaves {
        let block: Vec<CMatrix> = rho.iter().map(|m| q.adjoint() * m * &q).collect();
        let k = q.ncols();
        let irrep = Representation::new_unchecked(alg.clone(), block, Some(CMatrix::identity(k, k)));
        let ch = irrep.character();
        let mut placed = false;
        for (rep, rch, mult) in classes.iter_mut() {
            if rep.dim() != k || rch.distance(&ch) > tol.eps_round {
                continue;
            }
            match intertwiners(&irrep, rep, tol).len() {
                0 => {}
                1 => {
                    *mult += 1;
                    placed = true;
                    break;
                }
                m => {
                    return Err(Error::InternalInconsistency(format!(
                        "intertwiner space between irreducibles has dimension {m}"
                    )))
                }
            }
        }
        if !placed {
            classes.push((irrep, ch, 1));
        }
    }
    let mut out: Vec<(Vec<i64>, Component)> = classes
        .into_iter()
        .map(|(irrep, ch, multiplicity)| (ch.fingerprint(), Component { irrep, multiplicity }))
        .collect();
    out.sort_by(|a, b| a.1.irrep.dim().cmp(&b.1.irrep.dim()).then_with(|| a.0.cmp(&b.0)));
    let total: usize = out.iter().map(|(_, c)| c.irrep.dim() * c.multiplicity).sum();
    if total != d {
        return Err(Error::InternalInconsistency(format!("constituents add up to {total}, expected {d}")));
    }
    Ok(out.into_iter().map(|(_, c)| c).collect())
}

struct SplitContext<'a> {
    rho: &'a [CMatrix],
    pairs: Option<&'a [(CMatrix, CMatrix)]>,
    tol: &'a Tolerance,
}

enum Commutant {
    Basis(Vec<CMatrix>),
    Projector { dim: usize },
}

impl SplitContext<'_> {
    fn commutant(&self, q: &CMatrix, block: &[CMatrix]) -> Result<Commutant> {
        let k = q.ncols();
        match self.pairs {
            Some(pairs) if k > SYLVESTER_CUTOFF => {
                let mut dim = ZERO;
                for (x, y) in pairs {
                    let tx = (q.adjoint() * x * q).trace();
                    let ty = (q.adjoint() * y * q).trace();
                    dim += tx * ty;
                }
                let rounded = dim.re.round();
                if (dim.re - rounded).abs() > 1e-6 * dim.norm().max(1.0) || dim.im.abs() > 1e-6 || rounded < 1.0 {
                    return Err(Error::InternalInconsistency(format!("commutant dimension {dim} is not an integer")));
                }
                Ok(Commutant::Projector { dim: rounded as usize })
            }
            _ => Ok(Commutant::Basis(intertwiners_raw(block, block, self.tol))),
        }
    }

    fn random_element(&self, q: &CMatrix, com: &Commutant, rng: &mut SeededRng) -> CMatrix {
        let k = q.ncols();
        let x = match com {
            Commutant::Basis(basis) => {
                let mut x = CMatrix::zeros(k, k);
                for b in basis {
                    x += b * rng.complex_gaussian();
                }
                x
            }
            Commutant::Projector { .. } => {
                let y = q * rng.hermitian(k) * q.adjoint();
                let mut p = CMatrix::zeros(q.nrows(), q.nrows());
                for (a, b) in self.pairs.expect("projector route needs pairs") {
                    p += a * &y * b;
                }
                q.adjoint() * p * q
            }
        };
        let x = hermitian_part(&x);
        let n = x.norm();
        if n > 0.0 {
            x * r(1.0 / n)
        } else {
            x
        }
    }

    fn split(&self, q: CMatrix, rng: &mut SeededRng, leaves: &mut Vec<CMatrix>) -> Result<()> {
        let block: Vec<CMatrix> = self.rho.iter().map(|m| q.adjoint() * m * &q).collect();
        let com = self.commutant(&q, &block)?;
        let dim = match &com {
            Commutant::Basis(b) => b.len(),
            Commutant::Projector { dim } => *dim,
        };
        if dim == 1 {
            leaves.push(q);
            return Ok(());
        }
        if dim == 0 {
            return Err(Error::InternalInconsistency("empty commutant".into()));
        }
        for attempt in 0..SPLIT_ATTEMPTS {
            let x = self.random_element(&q, &com, rng);
            let eig = hermitian_eigen(&x);
            let groups = cluster_eigenvalues(&eig.values, self.tol.eps_eig);
            if groups.len() < 2 {
                debug!("degenerate split of a {}-dim block (attempt {})", q.ncols(), attempt + 1);
                continue;
            }
            for g in groups {
                let u = eig.vectors.columns(g.start, g.len()).into_owned();
                self.split(&q * u, rng, leaves)?;
            }
            return Ok(());
        }
        Err(Error::DegenerateSplit { attempts: SPLIT_ATTEMPTS })
    }
}

/// `D(V)`: `rho_D(a) = rho_V(S(a))^T` on the dual basis, with gram
/// `(rho(g) H^{-1})^T` so that `<phi_x|phi_y> = <y|g x>`.
pub fn dual_representation(v: &Representation, dual: &DualStructureData, tol: &Tolerance) -> Result<Representation> {
    let alg = v.algebra();
    let h = v.gram().ok_or_else(|| Error::NotStarRep("dual representation needs a gram form".into()))?;
    if !alg.is_positive_invertible(&dual.g, tol) {
        return Err(Error::BadDualStructure("g is not positive and invertible".into()));
    }
    let rho = (0..alg.dim()).map(|i| v.rho_of(&dual.s.apply(&alg.basis(i))).transpose()).collect();
    let hinv = matrix::inverse(h, tol)?;
    let k = (v.rho_of(&dual.g) * hinv).transpose();
    let k = hermitian_part(&k);
    Representation::new(alg.clone(), rho, Some(k), tol)
        .map_err(|e| Error::BadDualStructure(format!("dual representation is invalid: {e}")))
}

/// `J(V)`: `rho_J(a) = conj(rho_V(a-bar))`, with gram `conj(H rho(g))`.
pub fn conjugate_representation(
    v: &Representation,
    real: &RealForm,
    g: &Element,
    tol: &Tolerance,
) -> Result<Representation> {
    let alg = v.algebra();
    let m = real.conj_matrix();
    let rho = (0..alg.dim()).map(|i| v.rho_of(&m.column(i).into_owned()).conjugate()).collect();
    let gram = match v.gram() {
        Some(h) => Some(hermitian_part(&(h * v.rho_of(g)).conjugate())),
        None => None,
    };
    let rep = Representation::new_unchecked(alg.clone(), rho, gram);
    if rep.gram().is_some() {
        rep.check_star(tol)?;
    }
    Ok(rep)
}

/// Matrix of the Riesz map `J(V) -> D(V)`, `x-bar -> <x|.>`, in the bases used
/// by [`conjugate_representation`] and [`dual_representation`].
pub fn riesz_map(v: &Representation) -> CMatrix {
    let d = v.dim();
    v.gram().cloned().unwrap_or_else(|| CMatrix::identity(d, d)).transpose()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{real_form_from_s, AntiAlgebraMap};
    use crate::matrix::{c, ONE};

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    /// Cyclic group algebra with `S` and star both inverting.
    fn cyclic(n: usize) -> (Arc<FDStarAlgebra>, AntiAlgebraMap) {
        let mut st = Vec::new();
        for i in 0..n {
            for j in 0..n {
                st.push((i, j, (i + j) % n, ONE));
            }
        }
        let inv = CMatrix::from_fn(n, n, |k, i| if k == (n - i) % n { ONE } else { ZERO });
        let mut unit = Element::zeros(n);
        unit[0] = ONE;
        let alg = Arc::new(FDStarAlgebra::build(n, &st, unit, inv.clone(), &tol()).unwrap());
        let s = AntiAlgebraMap::new(&alg, inv, &tol()).unwrap();
        (alg, s)
    }

    fn m2() -> Arc<FDStarAlgebra> {
        let mut st = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for l in 0..2 {
                    st.push((2 * i + j, 2 * j + l, 2 * i + l, ONE));
                }
            }
        }
        let unit = Element::from_vec(vec![ONE, ZERO, ZERO, ONE]);
        let star = CMatrix::from_fn(4, 4, |k, i| if k == 2 * (i % 2) + i / 2 { ONE } else { ZERO });
        Arc::new(FDStarAlgebra::build(4, &st, unit, star, &tol()).unwrap())
    }

    fn s3() -> Arc<FDStarAlgebra> {
        // elements as permutations of {0,1,2}
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let mul = |a: [usize; 3], b: [usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
        let mut st = Vec::new();
        let mut star = CMatrix::zeros(6, 6);
        for (i, &a) in perms.iter().enumerate() {
            for (j, &b) in perms.iter().enumerate() {
                st.push((i, j, idx(mul(a, b)), ONE));
                if mul(a, b) == [0, 1, 2] {
                    star[(j, i)] = ONE;
                }
            }
        }
        let mut unit = Element::zeros(6);
        unit[0] = ONE;
        Arc::new(FDStarAlgebra::build(6, &st, unit, star, &tol()).unwrap())
    }

    #[test]
    fn regular_rep_examples() {
        let (z2, _) = cyclic(2);
        let reg = regular_representation(&z2);
        assert_eq!(reg.dim(), 2);
        let swap = CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]);
        assert_eq!(reg.matrices()[1], swap);
        let m = m2();
        let ch = regular_representation(&m).character();
        let expect = [2.0, 0.0, 0.0, 2.0];
        for (v, e) in ch.values.iter().zip(expect) {
            assert!((v - c(e, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn validation_rejects_non_homomorphism() {
        let (z3, _) = cyclic(3);
        let bad = vec![CMatrix::identity(1, 1), CMatrix::identity(1, 1) * c(2.0, 0.0), CMatrix::identity(1, 1)];
        assert!(matches!(Representation::new(z3, bad, None, &tol()), Err(Error::NotRepresentation(_))));
    }

    #[test]
    fn decompose_z3() {
        let (z3, _) = cyclic(3);
        let comps = decompose(&regular_representation(&z3), 0, &tol()).unwrap();
        assert_eq!(comps.len(), 3);
        let omega = c(-0.5, 3f64.sqrt() / 2.0);
        let mut gens: Vec<C64> = comps.iter().map(|c| c.irrep.character().values[1]).collect();
        gens.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((gens[0] - omega.conj()).norm() < 1e-10);
        assert!((gens[1] - ONE).norm() < 1e-10);
        assert!((gens[2] - omega).norm() < 1e-10);
        assert!(comps.iter().all(|c| c.multiplicity == 1));
    }

    #[test]
    fn decompose_m2_and_s3() {
        let comps = decompose(&regular_representation(&m2()), 1, &tol()).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!((comps[0].irrep.dim(), comps[0].multiplicity), (2, 2));
        let comps = decompose(&regular_representation(&s3()), 2, &tol()).unwrap();
        let shape: Vec<(usize, usize)> = comps.iter().map(|c| (c.irrep.dim(), c.multiplicity)).collect();
        assert_eq!(shape, vec![(1, 1), (1, 1), (2, 2)]);
        for comp in &comps {
            assert_eq!(commutant(&comp.irrep, &tol()).len(), 1);
        }
    }

    #[test]
    fn decompose_requires_gram() {
        let (z2, _) = cyclic(2);
        let v = regular_representation(&z2).with_gram(None);
        assert!(matches!(decompose(&v, 0, &tol()), Err(Error::NotStarRep(_))));
    }

    #[test]
    fn intertwiner_examples() {
        let (z2, _) = cyclic(2);
        let reg = regular_representation(&z2);
        assert_eq!(intertwiners(&reg, &reg, &tol()).len(), 2);
        let (z3, _) = cyclic(3);
        let comps = decompose(&regular_representation(&z3), 0, &tol()).unwrap();
        assert_eq!(intertwiners(&comps[0].irrep, &comps[1].irrep, &tol()).len(), 0);
        assert_eq!(intertwiners(&comps[2].irrep, &comps[2].irrep, &tol()).len(), 1);
    }

    #[test]
    fn dual_of_z3_character_is_conjugate() {
        let (z3, s) = cyclic(3);
        let d = DualStructureData::new(&z3, s, z3.unit().clone(), &tol()).unwrap();
        for comp in decompose(&regular_representation(&z3), 0, &tol()).unwrap() {
            let dv = dual_representation(&comp.irrep, &d, &tol()).unwrap();
            let a = comp.irrep.character().values;
            let b = dv.character().values;
            for (x, y) in a.iter().zip(&b) {
                assert!((x.conj() - y).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn conjugate_and_riesz_map() {
        let (z5, s) = cyclic(5);
        let rf = real_form_from_s(&z5, &s, &tol()).unwrap();
        let d = DualStructureData::new(&z5, s, z5.unit().clone(), &tol()).unwrap();
        for comp in decompose(&regular_representation(&z5), 3, &tol()).unwrap() {
            let v = &comp.irrep;
            let j = conjugate_representation(v, &rf, &d.g, &tol()).unwrap();
            let dv = dual_representation(v, &d, &tol()).unwrap();
            // chi_J(a) = conj(chi_V(a-bar))
            for i in 0..5 {
                let abar = rf.conjugate(&z5.basis(i));
                assert!((j.character().values[i] - v.character().at(&abar).conj()).norm() < 1e-8);
            }
            let t = riesz_map(v);
            for i in 0..5 {
                let dev = &t * &j.matrices()[i] - &dv.matrices()[i] * &t;
                assert!(dev.norm() < 1e-8);
            }
            // unitary for the two grams
            let dev = t.adjoint() * dv.gram().unwrap() * &t - j.gram().unwrap();
            assert!(dev.norm() < 1e-8);
        }
    }

    #[test]
    fn fingerprint_canonicalizes_negative_zero() {
        assert_eq!(fingerprint(&[c(-1e-12, 0.0)]), vec![0, 0]);
    }
}
