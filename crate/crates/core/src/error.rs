use thiserror::Error;

/// How a failure should be reported to callers and scripts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed or inconsistent input data.
    InvalidInput,
    /// The mathematical hypotheses of an operation do not hold, or the
    /// instance is outside the supported range.
    Unsupported,
    /// A proved statement failed to verify; this is an implementation defect.
    TheoremCheck,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an odd prime below 2^31")]
    BadModulus(u64),
    #[error("field elements have different moduli ({0} vs {1})")]
    FieldMismatch(u64, u64),
    #[error("not split: found {found} of {degree} roots")]
    NotSplit { found: usize, degree: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ambient mismatch: {0}")]
    AmbientMismatch(String),
    #[error("dimension {dim} exceeds the limit {limit}")]
    TooLarge { dim: usize, limit: usize },

    #[error("not associative at basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("bad unit: fails at basis element {0}")]
    BadUnit(usize),
    #[error("bad structure constants: {0}")]
    BadStructureConstants(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("cocycle is not normalized at element {0}")]
    CocycleNotNormalized(usize),
    #[error("cocycle identity fails at ({0}, {1}, {2})")]
    CocycleIdentity(usize, usize, usize),
    #[error("not an automorphism: action matrix of group element {0}")]
    NotAutomorphism(usize),
    #[error("not an action: fails at group elements ({0}, {1})")]
    NotAnAction(usize, usize),
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("not a representation at basis pair ({0}, {1})")]
    NotRepresentation(usize, usize),
    #[error("subspace is not a submodule")]
    NotSubmodule,
    #[error("module is over a different algebra")]
    AlgebraMismatch,

    #[error("center not separable (minimal polynomial is not squarefree)")]
    CenterNotSeparable,
    #[error("field not splitting: {0}")]
    FieldNotSplitting(String),
    #[error("splitting failed after {0} attempts")]
    SplittingFailed(usize),
    #[error("not certified semisimple: {0}")]
    NotCertified(String),
    #[error("no semisimplicity certificate for this algebra")]
    NoCertificate,
    #[error("V is not absolutely simple")]
    NotAbsSimple,
    #[error("isomorphism witness not found after {0} attempts")]
    WitnessNotFound(usize),
    #[error("too many blocks: {0} (limit 12)")]
    TooManyBlocks(usize),
    #[error("closure failure: {0}")]
    ClosureFailure(String),
    #[error("containment violation: {0}")]
    Containment(String),
    #[error("hypotheses violated: {0}")]
    HypothesesViolated(String),
    #[error("theorem check failed: {0}")]
    TheoremCheckFailed(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            TheoremCheckFailed(_) => ErrorClass::TheoremCheck,
            NotSplit { .. }
            | TooLarge { .. }
            | CenterNotSeparable
            | FieldNotSplitting(_)
            | SplittingFailed(_)
            | NotCertified(_)
            | NoCertificate
            | NotAbsSimple
            | WitnessNotFound(_)
            | TooManyBlocks(_)
            | ClosureFailure(_)
            | Containment(_)
            | HypothesesViolated(_) => ErrorClass::Unsupported,
            _ => ErrorClass::InvalidInput,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
