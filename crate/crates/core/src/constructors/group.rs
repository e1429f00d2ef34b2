//! Finite groups, their involutive automorphisms and group algebras.

use std::sync::Arc;

use crate::algebra::{AntiAlgebraMap, Element, FDStarAlgebra, SeparabilityIdempotent};
use crate::constructors::weak_hopf::{
    haar_integral, hopf_separability_idempotent, twisted_weak_hopf_indicator, WeakHopfData,
};
use crate::error::{Error, Result};
use crate::matrix::{CMatrix, Tolerance, ONE, ZERO};
use crate::rep::Representation;

/// Multiplication table of a finite group. `table[a][b]` is the index of `ab`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Checks closure, associativity, identity and inverses exhaustively.
    /// A supplied inverse map must agree with the table.
    pub fn new(table: Vec<Vec<usize>>, inverse: Option<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::BadGroup("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::BadGroup(format!("row {a} has length {}, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::BadGroup(format!("entry {x} in row {a} out of range")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::BadGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::BadGroup("no identity element".into()))?;
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::BadGroup(format!("element {a} has no inverse")))?;
        }
        if let Some(given) = inverse {
            if given != inv {
                return Err(Error::BadGroup("supplied inverse map disagrees with the table".into()));
            }
        }
        Ok(GroupTable { table, identity, inverse: inv })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(table, None).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn inverse_perm(&self) -> &[usize] {
        &self.inverse
    }

    /// Permutation matrix of `g -> g^{-1}` on the group basis.
    pub fn inversion_matrix(&self) -> CMatrix {
        perm_matrix(&self.inverse)
    }
}

/// `M e_i = e_{perm[i]}`.
pub fn perm_matrix(perm: &[usize]) -> CMatrix {
    let n = perm.len();
    CMatrix::from_fn(n, n, |k, i| if perm[i] == k { ONE } else { ZERO })
}

/// Automorphism `tau` of a group with `tau^2 = id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    perm: Vec<usize>,
}

impl Involution {
    pub fn new(g: &GroupTable, perm: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if perm.len() != n {
            return Err(Error::NotInvolution(format!("permutation has length {}, group order {n}", perm.len())));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::NotInvolution("not a permutation".into()));
            }
            seen[p] = true;
        }
        for a in 0..n {
            if perm[perm[a]] != a {
                return Err(Error::NotInvolution(format!("tau(tau({a})) != {a}")));
            }
            for b in 0..n {
                if perm[g.mul(a, b)] != g.mul(perm[a], perm[b]) {
                    return Err(Error::NotInvolution(format!("tau is not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(Involution { perm })
    }

    pub fn identity(g: &GroupTable) -> Self {
        Involution { perm: (0..g.order()).collect() }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, a: usize) -> usize {
        self.perm[a]
    }

    pub fn matrix(&self) -> CMatrix {
        perm_matrix(&self.perm)
    }
}

/// `C[G]` with its inversion antipode and the Haar-derived idempotent.
#[derive(Debug, Clone)]
pub struct GroupAlgebra {
    pub algebra: Arc<FDStarAlgebra>,
    pub antipode: AntiAlgebraMap,
    /// `(1/|G|) sum_g g^{-1} (x) g`.
    pub haar_idempotent: SeparabilityIdempotent,
}

pub fn group_star_algebra(g: &GroupTable, tol: &Tolerance) -> Result<Arc<FDStarAlgebra>> {
    let n = g.order();
    let mut st = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            st.push((a, b, g.mul(a, b), ONE));
        }
    }
    let mut unit = Element::zeros(n);
    unit[g.identity()] = ONE;
    Ok(Arc::new(FDStarAlgebra::build(n, &st, unit, g.inversion_matrix(), tol)?))
}

pub fn group_algebra(g: &GroupTable, tol: &Tolerance) -> Result<GroupAlgebra> {
    let hopf = group_hopf(g, tol)?;
    let lambda = haar_integral(&hopf, tol)?;
    let haar_idempotent = hopf_separability_idempotent(&hopf, &lambda);
    Ok(GroupAlgebra { algebra: hopf.algebra().clone(), antipode: hopf.antipode().clone(), haar_idempotent })
}

/// `C[G]` as a Hopf *-algebra with `Delta g = g (x) g`.
pub fn group_hopf(g: &GroupTable, tol: &Tolerance) -> Result<WeakHopfData> {
    let algebra = group_star_algebra(g, tol)?;
    let n = g.order();
    let delta = (0..n).map(|a| vec![(a, a, ONE)]).collect();
    let counit = Element::from_element(n, ONE);
    let antipode = AntiAlgebraMap::new(&algebra, g.inversion_matrix(), tol)?;
    WeakHopfData::new(algebra, delta, counit, antipode, tol)
}

/// `tau o S`, the antipode twisted by an involutive automorphism.
pub fn twisted_antipode(
    g: &GroupTable,
    tau: &Involution,
    tol: &Tolerance,
) -> Result<(Arc<FDStarAlgebra>, AntiAlgebraMap)> {
    let algebra = group_star_algebra(g, tol)?;
    let s = AntiAlgebraMap::new(&algebra, tau.matrix() * g.inversion_matrix(), tol)?;
    Ok((algebra, s))
}

/// `(chi(g)/chi(1)) chi(tau(Lambda_1) Lambda_2)` for the group Hopf algebra,
/// where `g = 1`.
pub fn twisted_indicator(g: &GroupTable, tau: &Involution, v: &Representation, tol: &Tolerance) -> Result<f64> {
    let hopf = group_hopf(g, tol)?;
    let lambda = haar_integral(&hopf, tol)?;
    twisted_weak_hopf_indicator(&hopf, &lambda, hopf.algebra().unit(), &tau.matrix(), v, tol)
}
