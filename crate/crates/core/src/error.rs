use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("curve not reduced")]
    CurveNotReduced,
    #[error("unsupported point field: coordinates need a tower of extensions")]
    UnsupportedPointField,
    #[error("unsupported singularity field: branch recursion needs a tower of extensions")]
    UnsupportedSingularityField,
    #[error("extension tower unsupported")]
    ExtensionTowerUnsupported,
    #[error("non-isolated singularity")]
    NonIsolatedSingularity,
    #[error("critical locus not finite")]
    CriticalLocusNotFinite,
    #[error("inconsistent singularity data: {0}")]
    InconsistentSingularityData(String),
    #[error("component not absolutely irreducible: {0}")]
    ComponentNotAbsolutelyIrreducible(String),
    #[error("invalid curve specification: {0}")]
    InvalidCurveSpec(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("degree cap exceeded: degree {degree} > {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },
    #[error("not a curve presentation: {0}")]
    NotACurvePresentation(String),
    #[error("not a numerical semigroup of a branch")]
    NotANumericalSemigroup,
    #[error("generic sampling inconsistent: {0}")]
    GenericSamplingInconsistent(String),
    #[error("degenerate family: {0}")]
    DegenerateFamily(String),
    #[error("ring not declared at line {line}")]
    RingNotDeclared { line: usize },
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("zero factor at line {line}")]
    ZeroFactor { line: usize },
}

impl Error {
    /// Stable machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::CurveNotReduced => "curve-not-reduced",
            Error::UnsupportedPointField => "unsupported-point-field",
            Error::UnsupportedSingularityField => "unsupported-singularity-field",
            Error::ExtensionTowerUnsupported => "extension-tower-unsupported",
            Error::NonIsolatedSingularity => "non-isolated-singularity",
            Error::CriticalLocusNotFinite => "critical-locus-not-finite",
            Error::InconsistentSingularityData(_) => "inconsistent-singularity-data",
            Error::ComponentNotAbsolutelyIrreducible(_) => "component-not-absolutely-irreducible",
            Error::InvalidCurveSpec(_) => "invalid-curve-spec",
            Error::BudgetExceeded(_) => "budget-exceeded",
            Error::DegreeCapExceeded { .. } => "degree-cap-exceeded",
            Error::NotACurvePresentation(_) => "not-a-curve-presentation",
            Error::NotANumericalSemigroup => "not-a-numerical-semigroup",
            Error::GenericSamplingInconsistent(_) => "generic-sampling-inconsistent",
            Error::DegenerateFamily(_) => "degenerate-family",
            Error::RingNotDeclared { .. } => "ring-not-declared",
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable { .. } => "unknown-variable",
            Error::ZeroFactor { .. } => "zero-factor",
        }
    }

    /// True for errors caused by malformed input files rather than by the computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::RingNotDeclared { .. }
                | Error::Syntax { .. }
                | Error::UnknownVariable { .. }
                | Error::ZeroFactor { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
