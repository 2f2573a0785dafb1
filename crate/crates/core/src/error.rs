use thiserror::Error;

/// Every failure the engine can report.
///
/// The variants split into two families: malformed input (bad words, unknown
/// labels, parameters outside a theorem's hypotheses) and algebraic red flags
/// (an element that should live in a subgroup does not, a matrix has an
/// unexpected shape). Callers such as the CLI map both to "invalid input".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: u32, rank: u32 },

    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: String, right: String },

    #[error("coefficient mismatch: {left} vs {right}")]
    CoefficientMismatch { left: String, right: String },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("generator x{index} is outside the domain of the unitriangular representation of size {size}")]
    OutsideRepresentation { index: u32, size: usize },

    #[error("term {term} does not lie in the subgroup generated by w and x{n}")]
    NotInSubgroup { term: String, n: u32 },

    #[error("operation requires {0}")]
    Unsupported(String),

    #[error("unknown label {0:?}")]
    UnknownLabel(String),

    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),

    #[error("pairing between {0:?} and {1:?} is undefined")]
    UndefinedPairing(String, String),

    #[error("barbell cuff {0:?} must be a sphere")]
    CuffNotSphere(String),

    #[error("barbell cuffs {0:?} and {1:?} intersect; the lifted action formula needs disjoint cuffs")]
    CuffsIntersect(String, String),

    #[error("matrix shape: {0}")]
    Shape(String),

    #[error("zero element where a nonzero one is required")]
    ZeroElement,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("unknown name {0:?}")]
    UnknownName(String),

    #[error("scenario: {0}")]
    Scenario(String),
}

pub type Result<T> = std::result::Result<T, Error>;
