//! Uniform access to every input kind: the underlying (A, S), the family's
//! own indicator formula, and the list of checked axioms.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AntiAlgebraMap, Element, FDStarAlgebra};
use crate::constructors::{
    drinfeld_double, group_algebra, group_hopf, groupoid_weak_hopf, haar_integral, hopf_separability_idempotent,
    table_algebra, table_indicator, twisted_product_element, weak_hopf_indicator, GroupTable, TableAlgebra,
    TableAlgebraData, WeakHopfData,
};
use crate::corep::{dualize, dualize_co, CoalgebraAnalysis, FDStarCoalgebra};
use crate::error::{Error, Result};
use crate::indicator::Analysis;
use crate::io::{parse, AlgebraFile, CoalgebraFile, GroupFile, GroupoidFile, SchemeFile};
use crate::matrix::{CMatrix, Tolerance};
use crate::rep::Representation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Group,
    Scheme,
    Groupoid,
    Double,
    Coalgebra,
}

#[derive(Debug, Clone)]
pub enum Instance {
    Algebra { algebra: Arc<FDStarAlgebra>, antipode: AntiAlgebraMap },
    Group { group: GroupTable, hopf: WeakHopfData, haar: Element },
    Scheme { data: TableAlgebraData, table: TableAlgebra },
    WeakHopf { hopf: WeakHopfData, haar: Element },
    Coalgebra { coalgebra: FDStarCoalgebra, varsigma: CMatrix },
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, holds: bool, detail: impl Into<String>) -> Self {
        Check { name, holds, detail: detail.into() }
    }
}

impl Instance {
    pub fn parse(kind: Kind, text: &str, tol: &Tolerance) -> Result<Self> {
        match kind {
            Kind::Algebra => {
                let (algebra, antipode) = parse::<AlgebraFile>(text)?.build(tol)?;
                Ok(Instance::Algebra { algebra, antipode })
            }
            Kind::Group => Instance::group(parse::<GroupFile>(text)?.build()?, tol),
            Kind::Double => Instance::weak_hopf(drinfeld_double(&parse::<GroupFile>(text)?.build()?, tol)?, tol),
            Kind::Scheme => Instance::scheme(parse::<SchemeFile>(text)?.build()?, tol),
            Kind::Groupoid => {
                Instance::weak_hopf(groupoid_weak_hopf(&parse::<GroupoidFile>(text)?.build()?, tol)?, tol)
            }
            Kind::Coalgebra => {
                let (coalgebra, varsigma) = parse::<CoalgebraFile>(text)?.build(tol)?;
                Ok(Instance::Coalgebra { coalgebra, varsigma })
            }
        }
    }

    pub fn group(group: GroupTable, tol: &Tolerance) -> Result<Self> {
        let hopf = group_hopf(&group, tol)?;
        let haar = haar_integral(&hopf, tol)?;
        Ok(Instance::Group { group, hopf, haar })
    }

    pub fn scheme(data: TableAlgebraData, tol: &Tolerance) -> Result<Self> {
        let table = table_algebra(&data, tol)?;
        Ok(Instance::Scheme { data, table })
    }

    pub fn weak_hopf(hopf: WeakHopfData, tol: &Tolerance) -> Result<Self> {
        let haar = haar_integral(&hopf, tol)?;
        Ok(Instance::WeakHopf { hopf, haar })
    }

    /// The *-algebra and anti-algebra map the generic engine runs on; for a
    /// coalgebra this is the dual algebra with `S = varsigma^T`.
    pub fn algebra(&self, tol: &Tolerance) -> Result<(Arc<FDStarAlgebra>, AntiAlgebraMap)> {
        match self {
            Instance::Algebra { algebra, antipode } => Ok((algebra.clone(), antipode.clone())),
            Instance::Group { hopf, .. } | Instance::WeakHopf { hopf, .. } => {
                Ok((hopf.algebra().clone(), hopf.antipode().clone()))
            }
            Instance::Scheme { table, .. } => Ok((table.algebra.clone(), table.antipode.clone())),
            Instance::Coalgebra { coalgebra, varsigma } => {
                let alg = Arc::new(dualize_co(coalgebra, tol)?);
                let s = AntiAlgebraMap::new(&alg, varsigma.transpose(), tol)
                    .map_err(|e| Error::BadVarsigma(e.to_string()))?;
                Ok((alg, s))
            }
        }
    }

    /// The coalgebra side: the input itself, or the dual of the algebra with
    /// `varsigma = S^T`.
    pub fn coalgebra(&self, tol: &Tolerance) -> Result<(FDStarCoalgebra, CMatrix)> {
        match self {
            Instance::Coalgebra { coalgebra, varsigma } => Ok((coalgebra.clone(), varsigma.clone())),
            _ => {
                let (alg, s) = self.algebra(tol)?;
                Ok((dualize(&alg, tol)?, s.matrix().transpose()))
            }
        }
    }

    pub fn hopf(&self) -> Option<&WeakHopfData> {
        match self {
            Instance::Group { hopf, .. } | Instance::WeakHopf { hopf, .. } => Some(hopf),
            _ => None,
        }
    }

    /// The family's own indicator formula, when the kind has one:
    /// `(chi(g)/chi(1)) chi(Lambda_1 Lambda_2)` for (weak) Hopf kinds and the
    /// table-algebra sum for schemes.
    pub fn family_indicator(&self, v: &Representation, g: &Element, tol: &Tolerance) -> Option<Result<f64>> {
        match self {
            Instance::Group { hopf, haar, .. } | Instance::WeakHopf { hopf, haar } => {
                Some(weak_hopf_indicator(hopf, haar, g, v, tol))
            }
            Instance::Scheme { data, table } => Some(table_indicator(data, table, v, None, tol)),
            _ => None,
        }
    }

    /// Evaluates every invariant the kind promises. Structural axioms were
    /// already enforced during parsing; they are listed as holding.
    pub fn verify(&self, seed: u64, tol: &Tolerance) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        match self {
            Instance::Algebra { .. } => {
                out.push(Check::new("associativity", true, "structure constants"));
                out.push(Check::new("unit", true, ""));
                out.push(Check::new("star", true, "antilinear, involutive, anti-multiplicative"));
                out.push(Check::new("antipode", true, "anti-algebra map"));
            }
            Instance::Group { group, hopf, haar } => {
                out.push(Check::new("group axioms", true, format!("order {}", group.order())));
                out.push(Check::new("hopf", hopf.is_hopf(tol), format!("deviation {:.3e}", hopf.hopf_deviation())));
                out.push(Check::new("haar integral", true, "unique"));
                let e = hopf_separability_idempotent(hopf, haar);
                let dev = e.deviation(hopf.algebra());
                out.push(Check::new("haar idempotent", dev < tol.eps_eig, format!("deviation {dev:.3e}")));
                let ga = group_algebra(group, tol)?;
                let dev = ga.haar_idempotent.deviation(&ga.algebra);
                out.push(Check::new("group idempotent", dev < tol.eps_eig, format!("deviation {dev:.3e}")));
            }
            Instance::Scheme { table, .. } => {
                out.push(Check::new("table axioms", true, "T0 T1 T2"));
                let dev = table.idempotent.deviation(&table.algebra);
                out.push(Check::new("table idempotent", dev < tol.eps_eig, format!("deviation {dev:.3e}")));
                let ok = table.algebra.is_central(&table.v, tol) && table.algebra.is_positive(&table.v, tol);
                out.push(Check::new("v central positive", ok, ""));
            }
            Instance::WeakHopf { hopf, haar } => {
                let kind = if hopf.is_hopf(tol) { "Hopf" } else { "properly weak" };
                out.push(Check::new(
                    "weak hopf axioms",
                    true,
                    format!("coassociativity, multiplicativity, counit; {kind}"),
                ));
                out.push(Check::new("haar integral", true, "unique"));
                let n = hopf.dim();
                let z = twisted_product_element(hopf, haar, &CMatrix::identity(n, n));
                out.push(Check::new("Lambda_1 Lambda_2 central", hopf.algebra().is_central(&z, tol), ""));
            }
            Instance::Coalgebra { .. } => {
                out.push(Check::new("coalgebra axioms", true, "coassociativity, counit, star"));
            }
        }
        let (alg, s) = self.algebra(tol)?;
        out.push(Check::new("C*", alg.is_cstar(), "trace-form gram positive definite"));
        if !alg.is_cstar() {
            return Ok(out);
        }
        match self {
            Instance::Coalgebra { coalgebra, varsigma } => {
                let an = CoalgebraAnalysis::new(coalgebra, varsigma, seed, tol)?;
                let pos = an.decomposition.idempotent.is_positive(coalgebra, tol);
                out.push(Check::new("compact", pos, format!("{} matrix blocks", an.coreps().len())));
                out.push(Check::new("gamma", true, "gamma o varsigma = gamma^-1, varsigma^2 = Ad gamma"));
            }
            _ => {
                let an = Analysis::new(&alg, &s, seed, tol)?;
                out.push(Check::new(
                    "canonical g",
                    true,
                    format!("S(g) = g^-1, S^2 = Ad g, g > 0 over {} irreducibles", an.components.len()),
                ));
                if let Some(h) = self.hopf() {
                    if h.is_hopf(tol) {
                        let dev = (&an.canonical.g - alg.unit()).norm();
                        let s2 = (s.squared() - CMatrix::identity(alg.dim(), alg.dim())).norm();
                        out.push(Check::new(
                            "S^2 = id and g = 1",
                            dev < tol.eps_eig && s2 < tol.eps_eig,
                            format!("|g - 1| = {dev:.3e}"),
                        ));
                    }
                }
            }
        }
        Ok(out)
    }
}
