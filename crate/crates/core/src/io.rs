//! JSON input formats. Field names are fixed and unknown fields are rejected.

use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{AntiAlgebraMap, Element, FDStarAlgebra};
use crate::constructors::weak_hopf::SparseCoproduct;
use crate::constructors::{GroupTable, GroupoidData, Involution, TableAlgebraData};
use crate::corep::FDStarCoalgebra;
use crate::error::{Error, Result};
use crate::matrix::{c, CMatrix, CVector, Tolerance, C64, ZERO};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Triple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

/// Entry `M[k][i]`: the image of basis vector `i` has coefficient `re + i im` on `k`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub i: usize,
    pub k: usize,
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

/// "algebra.v1"; `antipode` defaults to the linear map with the star's matrix.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub unit: Vec<[f64; 2]>,
    pub structure: Vec<Triple>,
    pub star: Vec<MapEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<MapEntry>>,
}

/// "coalgebra.v1": `delta` entry `(i, j, k)` is the coefficient of
/// `c_j (x) c_k` in `Delta(c_i)`; `varsigma` defaults like `antipode`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraFile {
    pub dim: usize,
    pub counit: Vec<[f64; 2]>,
    pub delta: Vec<Triple>,
    pub star: Vec<MapEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub varsigma: Option<Vec<MapEntry>>,
}

/// "group.v1".
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub inverse: Option<Vec<usize>>,
}

/// "scheme.v1": exactly one of `matrices` (0/1 relation matrices) and `p`
/// (intersection numbers `p[i][j][k]`, class 0 the identity).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SchemeFile {
    pub classes: usize,
    #[serde(default)]
    pub matrices: Option<Vec<Vec<Vec<u8>>>>,
    #[serde(default)]
    pub p: Option<Vec<Vec<Vec<f64>>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ComposeEntry {
    pub a: usize,
    pub b: usize,
    pub ab: usize,
}

/// "groupoid.v1".
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GroupoidFile {
    pub objects: usize,
    pub arrows: Vec<ArrowEntry>,
    pub compose: Vec<ComposeEntry>,
}

/// "involution.v1".
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct InvolutionFile {
    pub perm: Vec<usize>,
}

pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    parse(&std::fs::read_to_string(path)?)
}

fn vector(dim: usize, entries: &[[f64; 2]], what: &str) -> Result<CVector> {
    if entries.len() != dim {
        return Err(Error::Schema(format!("{what} has {} entries, expected {dim}", entries.len())));
    }
    Ok(CVector::from_iterator(dim, entries.iter().map(|&[re, im]| c(re, im))))
}

fn map_matrix(dim: usize, entries: &[MapEntry], what: &str) -> Result<CMatrix> {
    let mut m = CMatrix::zeros(dim, dim);
    for e in entries {
        if e.i >= dim || e.k >= dim {
            return Err(Error::Schema(format!("{what} entry ({}, {}) out of range", e.i, e.k)));
        }
        m[(e.k, e.i)] += c(e.re, e.im);
    }
    Ok(m)
}

fn triples(dim: usize, entries: &[Triple], what: &str) -> Result<Vec<(usize, usize, usize, C64)>> {
    entries
        .iter()
        .map(|t| {
            if t.i >= dim || t.j >= dim || t.k >= dim {
                Err(Error::Schema(format!("{what} entry ({}, {}, {}) out of range", t.i, t.j, t.k)))
            } else {
                Ok((t.i, t.j, t.k, c(t.re, t.im)))
            }
        })
        .collect()
}

fn map_entries(m: &CMatrix) -> Vec<MapEntry> {
    let mut out = Vec::new();
    for i in 0..m.ncols() {
        for k in 0..m.nrows() {
            let z = m[(k, i)];
            if z != ZERO {
                out.push(MapEntry { i, k, re: z.re, im: z.im });
            }
        }
    }
    out
}

fn pairs(v: &CVector) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

impl AlgebraFile {
    pub fn build(&self, tol: &Tolerance) -> Result<(Arc<FDStarAlgebra>, AntiAlgebraMap)> {
        let n = self.dim;
        let unit: Element = vector(n, &self.unit, "unit")?;
        let st = triples(n, &self.structure, "structure")?;
        let star = map_matrix(n, &self.star, "star")?;
        let s = match &self.antipode {
            Some(e) => map_matrix(n, e, "antipode")?,
            None => star.clone(),
        };
        let alg = Arc::new(FDStarAlgebra::build(n, &st, unit, star, tol)?);
        let s = AntiAlgebraMap::new(&alg, s, tol)?;
        Ok((alg, s))
    }

    pub fn from_algebra(alg: &FDStarAlgebra, s: Option<&AntiAlgebraMap>) -> Self {
        AlgebraFile {
            dim: alg.dim(),
            unit: pairs(alg.unit()),
            structure: alg
                .structure_triples()
                .into_iter()
                .map(|(i, j, k, z)| Triple { i, j, k, re: z.re, im: z.im })
                .collect(),
            star: map_entries(alg.star_matrix()),
            antipode: s.map(|s| map_entries(s.matrix())),
        }
    }
}

impl CoalgebraFile {
    pub fn build(&self, tol: &Tolerance) -> Result<(FDStarCoalgebra, CMatrix)> {
        let n = self.dim;
        let counit = vector(n, &self.counit, "counit")?;
        let mut delta: SparseCoproduct = vec![Vec::new(); n];
        for (i, j, k, z) in triples(n, &self.delta, "delta")? {
            delta[i].push((j, k, z));
        }
        let star = map_matrix(n, &self.star, "star")?;
        let varsigma = match &self.varsigma {
            Some(e) => map_matrix(n, e, "varsigma")?,
            None => star.clone(),
        };
        Ok((FDStarCoalgebra::new(n, delta, counit, star, tol)?, varsigma))
    }

    pub fn from_coalgebra(co: &FDStarCoalgebra, varsigma: Option<&CMatrix>) -> Self {
        let mut delta = Vec::new();
        for (i, terms) in co.sparse_coproduct().iter().enumerate() {
            for &(j, k, z) in terms {
                delta.push(Triple { i, j, k, re: z.re, im: z.im });
            }
        }
        CoalgebraFile {
            dim: co.dim(),
            counit: pairs(co.counit()),
            delta,
            star: map_entries(co.star_matrix()),
            varsigma: varsigma.map(map_entries),
        }
    }
}

impl GroupFile {
    pub fn build(&self) -> Result<GroupTable> {
        if self.table.len() != self.order {
            return Err(Error::Schema(format!("table has {} rows, order is {}", self.table.len(), self.order)));
        }
        GroupTable::new(self.table.clone(), self.inverse.clone())
    }
}

impl SchemeFile {
    pub fn build(&self) -> Result<TableAlgebraData> {
        let data = match (&self.matrices, &self.p) {
            (Some(m), None) => {
                if m.len() != self.classes {
                    return Err(Error::Schema(format!("{} matrices for {} classes", m.len(), self.classes)));
                }
                TableAlgebraData::from_relation_matrices(m)?
            }
            (None, Some(p)) => {
                if p.len() != self.classes {
                    return Err(Error::Schema(format!("p has {} slices for {} classes", p.len(), self.classes)));
                }
                TableAlgebraData::from_intersection_numbers(p.clone(), 0)?
            }
            _ => return Err(Error::Schema("exactly one of `matrices` and `p` is required".into())),
        };
        Ok(data)
    }
}

impl GroupoidFile {
    pub fn build(&self) -> Result<GroupoidData> {
        GroupoidData::new(
            self.objects,
            self.arrows.iter().map(|a| (a.src, a.tgt)).collect(),
            self.compose.iter().map(|e| (e.a, e.b, e.ab)).collect(),
        )
    }
}

impl InvolutionFile {
    pub fn build(&self, g: &GroupTable) -> Result<Involution> {
        Involution::new(g, self.perm.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_field_rejected() {
        let res: Result<InvolutionFile> = parse(r#"{"perm":[0],"extra":1}"#);
        assert!(matches!(res, Err(Error::Json(_))));
    }

    #[test]
    fn algebra_round_trip() {
        let text = r#"{"dim":1,"unit":[[1,0]],"structure":[{"i":0,"j":0,"k":0,"re":1}],"star":[{"i":0,"k":0,"re":1}]}"#;
        let f: AlgebraFile = parse(text).unwrap();
        let (alg, s) = f.build(&Tolerance::default()).unwrap();
        let back = AlgebraFile::from_algebra(&alg, Some(&s));
        assert_eq!(back.structure, f.structure);
        assert_eq!(back.star, f.star);
    }

    #[test]
    fn scheme_needs_exactly_one_source() {
        let f: SchemeFile = parse(r#"{"classes":1}"#).unwrap();
        assert!(matches!(f.build(), Err(Error::Schema(_))));
    }

    #[test]
    fn out_of_range_index() {
        let text = r#"{"dim":1,"unit":[[1,0]],"structure":[{"i":0,"j":3,"k":0,"re":1}],"star":[]}"#;
        let f: AlgebraFile = parse(text).unwrap();
        assert!(matches!(f.build(&Tolerance::default()), Err(Error::Schema(_))));
    }
}
