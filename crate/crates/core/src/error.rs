use thiserror::Error;

/// Everything that can go wrong in the core library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("non-increasing tuple {0}")]
    NonIncreasing(String),

    #[error("simplex {0} is not in the complex")]
    UnknownSimplex(String),

    #[error("degree {degree} out of range (top dimension {top_dim})")]
    DegreeOutOfRange { degree: usize, top_dim: usize },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("cochains live on different complexes")]
    ComplexMismatch,

    #[error("coefficient ring mismatch: {0}")]
    RingMismatch(String),

    #[error("unsupported bidegree ({0}, {1}) for {2}")]
    UnsupportedBidegree(usize, usize, &'static str),

    #[error("not a cocycle: {0}")]
    NotCocycle(&'static str),

    #[error("not a D-cocycle")]
    NotDCocycle,

    #[error("not a closed pseudo-manifold: {0}")]
    NotPseudoManifold(String),

    #[error("non-orientable")]
    NonOrientable,

    #[error("invalid fundamental cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("class is not in SH^2")]
    NotInSh2,

    #[error("[a]^2 = 0; use the order-2 criterion")]
    SquareVanishes,

    #[error("{what} dimension {dim} exceeds the cap {cap} (raise GX_MAX_DIM to override)")]
    TooLarge { what: &'static str, dim: usize, cap: usize },

    #[error("arf term required when a != 0")]
    ArfTermRequired,

    #[error("invalid quadratic form: {0}")]
    InvalidForm(String),

    #[error("rational overflow: denominator exceeds 64 bits")]
    Overflow,

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
