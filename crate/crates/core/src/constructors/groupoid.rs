//! Groupoid algebras as weak Hopf *-algebras, and Drinfeld doubles of groups.

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{AntiAlgebraMap, Element, FDStarAlgebra};
use crate::constructors::group::{perm_matrix, GroupTable};
use crate::constructors::weak_hopf::{SparseCoproduct, WeakHopfData};
use crate::error::{Error, Result};
use crate::matrix::{CVector, Tolerance, ONE, ZERO};

/// Arrows `a: src(a) -> tgt(a)`; `a o b` is defined iff `src(a) = tgt(b)`.
#[derive(Debug, Clone)]
pub struct GroupoidData {
    objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    identities: Vec<usize>,
    inverse: Vec<usize>,
}

impl GroupoidData {
    pub fn new(objects: usize, arrows: Vec<(usize, usize)>, compose: Vec<(usize, usize, usize)>) -> Result<Self> {
        let m = arrows.len();
        if objects == 0 || m == 0 {
            return Err(Error::BadGroupoid("no objects or no arrows".into()));
        }
        let (src, tgt): (Vec<usize>, Vec<usize>) = arrows.into_iter().unzip();
        if src.iter().chain(&tgt).any(|&x| x >= objects) {
            return Err(Error::BadGroupoid("arrow endpoint out of range".into()));
        }
        let mut table = HashMap::new();
        for (a, b, ab) in compose {
            if a >= m || b >= m || ab >= m {
                return Err(Error::BadGroupoid(format!("composition ({a}, {b}) -> {ab} out of range")));
            }
            if src[a] != tgt[b] {
                return Err(Error::BadGroupoid(format!("composite {a} o {b} given but src({a}) != tgt({b})")));
            }
            if src[ab] != src[b] || tgt[ab] != tgt[a] {
                return Err(Error::BadGroupoid(format!("composite {a} o {b} has the wrong endpoints")));
            }
            if table.insert((a, b), ab).is_some_and(|old| old != ab) {
                return Err(Error::BadGroupoid(format!("composite {a} o {b} given twice")));
            }
        }
        for a in 0..m {
            for b in 0..m {
                if src[a] == tgt[b] && !table.contains_key(&(a, b)) {
                    return Err(Error::BadGroupoid(format!("composite {a} o {b} missing")));
                }
            }
        }
        let c = |a: usize, b: usize| table[&(a, b)];
        for a in 0..m {
            for b in (0..m).filter(|&b| src[a] == tgt[b]) {
                for d in (0..m).filter(|&d| src[b] == tgt[d]) {
                    if c(c(a, b), d) != c(a, c(b, d)) {
                        return Err(Error::BadGroupoid(format!("associativity fails at ({a}, {b}, {d})")));
                    }
                }
            }
        }
        let mut identities = Vec::with_capacity(objects);
        for x in 0..objects {
            let id = (0..m)
                .find(|&e| {
                    src[e] == x
                        && tgt[e] == x
                        && (0..m).all(|f| (tgt[f] != x || c(e, f) == f) && (src[f] != x || c(f, e) == f))
                })
                .ok_or_else(|| Error::BadGroupoid(format!("object {x} has no identity arrow")))?;
            identities.push(id);
        }
        let mut inverse = vec![0; m];
        for a in 0..m {
            inverse[a] = (0..m)
                .find(|&b| {
                    src[b] == tgt[a]
                        && tgt[b] == src[a]
                        && c(a, b) == identities[tgt[a]]
                        && c(b, a) == identities[src[a]]
                })
                .ok_or_else(|| Error::BadGroupoid(format!("arrow {a} has no inverse")))?;
        }
        Ok(GroupoidData { objects, src, tgt, compose: table, identities, inverse })
    }

    /// One object per element pair `(k, l)`, arrow index `k * n + l` going `l -> k`.
    pub fn pair(n: usize) -> Self {
        let arrows = (0..n * n).map(|a| (a % n, a / n)).collect();
        let mut compose = Vec::new();
        for k in 0..n {
            for l in 0..n {
                for p in 0..n {
                    compose.push((k * n + l, l * n + p, k * n + p));
                }
            }
        }
        GroupoidData::new(n, arrows, compose).expect("pair groupoid is valid")
    }

    pub fn objects(&self) -> usize {
        self.objects
    }

    pub fn arrows(&self) -> usize {
        self.src.len()
    }

    pub fn source(&self, a: usize) -> usize {
        self.src[a]
    }

    pub fn target(&self, a: usize) -> usize {
        self.tgt[a]
    }

    pub fn compose(&self, a: usize, b: usize) -> Option<usize> {
        self.compose.get(&(a, b)).copied()
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }
}

/// Groupoid algebra with `Delta a = a (x) a`, `eps = 1`, `S a = a^{-1} = a^*`.
pub fn groupoid_weak_hopf(gd: &GroupoidData, tol: &Tolerance) -> Result<WeakHopfData> {
    let m = gd.arrows();
    let mut st = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if let Some(ab) = gd.compose(a, b) {
                st.push((a, b, ab, ONE));
            }
        }
    }
    let mut unit = Element::zeros(m);
    for &e in gd.identities() {
        unit[e] = ONE;
    }
    let inv = perm_matrix(gd.inverse());
    let algebra = Arc::new(FDStarAlgebra::build(m, &st, unit, inv.clone(), tol)?);
    let antipode = AntiAlgebraMap::new(&algebra, inv, tol)?;
    let delta: SparseCoproduct = (0..m).map(|a| vec![(a, a, ONE)]).collect();
    WeakHopfData::new(algebra, delta, CVector::from_element(m, ONE), antipode, tol)
}

/// `D(G)` on the basis `delta_g (x) h`, indexed `g * |G| + h`.
pub fn drinfeld_double(g: &GroupTable, tol: &Tolerance) -> Result<WeakHopfData> {
    let n = g.order();
    let idx = |a: usize, h: usize| a * n + h;
    let conj = |h: usize, x: usize| g.mul(g.mul(h, x), g.inv(h));
    let mut st = Vec::new();
    for a in 0..n {
        for h in 0..n {
            for b in 0..n {
                for k in 0..n {
                    if a == conj(h, b) {
                        st.push((idx(a, h), idx(b, k), idx(a, g.mul(h, k)), ONE));
                    }
                }
            }
        }
    }
    let dim = n * n;
    let mut unit = Element::zeros(dim);
    for a in 0..n {
        unit[idx(a, g.identity())] = ONE;
    }
    let mut star_perm = vec![0; dim];
    let mut s_perm = vec![0; dim];
    for a in 0..n {
        for h in 0..n {
            let hi = g.inv(h);
            star_perm[idx(a, h)] = idx(conj(hi, a), hi);
            s_perm[idx(a, h)] = idx(conj(hi, g.inv(a)), hi);
        }
    }
    let algebra = Arc::new(FDStarAlgebra::build(dim, &st, unit, perm_matrix(&star_perm), tol)?);
    let antipode = AntiAlgebraMap::new(&algebra, perm_matrix(&s_perm), tol)?;
    let mut delta: SparseCoproduct = vec![Vec::new(); dim];
    for a in 0..n {
        for h in 0..n {
            for x in 0..n {
                let y = g.mul(g.inv(x), a);
                delta[idx(a, h)].push((idx(x, h), idx(y, h), ONE));
            }
        }
    }
    let counit = CVector::from_fn(dim, |i, _| if i / n == g.identity() { ONE } else { ZERO });
    WeakHopfData::new(algebra, delta, counit, antipode, tol)
}
