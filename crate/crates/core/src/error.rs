use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building, decomposing or classifying.
#[derive(Debug, Error)]
pub enum Error {
    #[error("singular input: smallest singular value {sigma_min:.3e} (largest {sigma_max:.3e})")]
    SingularInput { sigma_min: f64, sigma_max: f64 },
    #[error("matrix is not Hermitian (deviation {deviation:.3e})")]
    NotHermitian { deviation: f64 },
    #[error("negative eigenvalue {eigenvalue:.3e} outside the clamping band")]
    NegativeSpectrum { eigenvalue: f64 },
    #[error("function undefined at eigenvalue {eigenvalue:.3e}")]
    UndefinedSpectrum { eigenvalue: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid tolerance: {0}")]
    BadTolerance(String),

    #[error("algebra dimension {dim} exceeds the dense cap of {cap}")]
    TooLarge { dim: usize, cap: usize },
    #[error("not associative at basis triple ({i}, {j}, {k}) (deviation {deviation:.3e})")]
    NotAssociative { i: usize, j: usize, k: usize, deviation: f64 },
    #[error("unit axiom fails at basis element {i} (deviation {deviation:.3e})")]
    BadUnit { i: usize, deviation: f64 },
    #[error("star axiom fails at basis pair ({i}, {j}): {reason}")]
    BadStar { i: usize, j: usize, reason: String },
    #[error("not an anti-algebra map satisfying S(S(a)*)* = a: {0}")]
    NotAntiMap(String),
    #[error("algebra is not a C*-algebra (Gram form of the regular trace is not positive definite)")]
    NotCStar,
    #[error("element is not invertible")]
    NotInvertible,
    #[error("not a *-representation: {0}")]
    NotStarRep(String),
    #[error("not a representation: {0}")]
    NotRepresentation(String),
    #[error("invalid dual structure: {0}")]
    BadDualStructure(String),

    #[error("random commutant elements failed to split a reducible representation after {attempts} attempts")]
    DegenerateSplit { attempts: usize },
    #[error("internal consistency failure: {0}")]
    InternalInconsistency(String),
    #[error("no S^2-twisted intertwiner for irreducible #{irrep}")]
    NoTwistedMap { irrep: usize },
    #[error("twisted intertwiner for irreducible #{irrep} is not positive after phase fixing")]
    NotPositive { irrep: usize },
    #[error("indicator has imaginary part {imag:.3e}")]
    ComplexResult { imag: f64 },
    #[error("F conj(F) is not a real scalar (deviation {deviation:.3e})")]
    InconsistentAlpha { deviation: f64 },
    #[error("real endomorphism algebra has unexpected dimension {dim}")]
    UnexpectedDimension { dim: usize },
    #[error("indicator/signature disagreement on irreducible #{irrep}: nu_formula={nu_formula}, nu_trace={nu_trace}, sigma={sigma}")]
    AgreementFailure { irrep: usize, nu_formula: f64, nu_trace: f64, sigma: i8 },

    #[error("invalid group: {0}")]
    BadGroup(String),
    #[error("not an involutive automorphism: {0}")]
    NotInvolution(String),
    #[error("table algebra axiom {axiom} violated: {detail}")]
    AxiomViolation { axiom: &'static str, detail: String },
    #[error("invalid groupoid: {0}")]
    BadGroupoid(String),
    #[error("invalid weak Hopf data: {0}")]
    BadWeakHopf(String),
    #[error("no Haar integral (residual {residual:.3e})")]
    NoHaar { residual: f64 },
    #[error("Haar integral is not unique (solution space dimension {dim})")]
    NonUniqueHaar { dim: usize },

    #[error("invalid *-coalgebra: {0}")]
    BadCoalgebra(String),
    #[error("coalgebra is not compact (dual algebra is not C*)")]
    NotCompact,
    #[error("invalid anti-coalgebra map: {0}")]
    BadVarsigma(String),
    #[error("not a Hopf algebra: Delta(1) != 1 (x) 1 (deviation {deviation:.3e})")]
    NotHopf { deviation: f64 },
    #[error("invalid corepresentation: {0}")]
    BadCorep(String),

    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::SingularInput { .. } => "SingularInput",
            Error::NotHermitian { .. } => "NotHermitian",
            Error::NegativeSpectrum { .. } => "NegativeSpectrum",
            Error::UndefinedSpectrum { .. } => "UndefinedSpectrum",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::BadTolerance(_) => "BadTolerance",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotAssociative { .. } => "NotAssociative",
            Error::BadUnit { .. } => "BadUnit",
            Error::BadStar { .. } => "BadStar",
            Error::NotAntiMap(_) => "NotAntiMap",
            Error::NotCStar => "NotCStar",
            Error::NotInvertible => "NotInvertible",
            Error::NotStarRep(_) => "NotStarRep",
            Error::NotRepresentation(_) => "NotRepresentation",
            Error::BadDualStructure(_) => "BadDualStructure",
            Error::DegenerateSplit { .. } => "DegenerateSplit",
            Error::InternalInconsistency(_) => "InternalInconsistency",
            Error::NoTwistedMap { .. } => "NoTwistedMap",
            Error::NotPositive { .. } => "NotPositive",
            Error::ComplexResult { .. } => "ComplexResult",
            Error::InconsistentAlpha { .. } => "InconsistentAlpha",
            Error::UnexpectedDimension { .. } => "UnexpectedDimension",
            Error::AgreementFailure { .. } => "AgreementFailure",
            Error::BadGroup(_) => "BadGroup",
            Error::NotInvolution(_) => "NotInvolution",
            Error::AxiomViolation { .. } => "AxiomViolation",
            Error::BadGroupoid(_) => "BadGroupoid",
            Error::BadWeakHopf(_) => "BadWeakHopf",
            Error::NoHaar { .. } => "NoHaar",
            Error::NonUniqueHaar { .. } => "NonUniqueHaar",
            Error::BadCoalgebra(_) => "BadCoalgebra",
            Error::NotCompact => "NotCompact",
            Error::BadVarsigma(_) => "BadVarsigma",
            Error::NotHopf { .. } => "NotHopf",
            Error::BadCorep(_) => "BadCorep",
            Error::Schema(_) => "Schema",
            Error::Json(_) => "Json",
            Error::Io(_) => "Io",
        }
    }
}
