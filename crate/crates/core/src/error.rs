use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{n} variables exceed the supported maximum of {max}")]
    TooManyVariables { n: usize, max: usize },

    #[error("an arrangement needs at least one minimal prime")]
    NoPrimes,

    #[error("prime #{index} is empty; a minimal prime contains at least one variable")]
    EmptyPrime { index: usize },

    #[error("prime #{index} uses every variable; the maximal ideal is not a minimal prime")]
    FullPrime { index: usize },

    #[error("prime #{index} duplicates prime #{first}")]
    DuplicatePrime { index: usize, first: usize },

    #[error("prime #{outer} contains prime #{inner}; minimal primes form an antichain")]
    ContainedPrime { outer: usize, inner: usize },

    #[error("unknown variable name {name:?}")]
    UnknownVariable { name: String },

    #[error("variable {name:?} is listed twice")]
    DuplicateVariable { name: String },

    #[error("arrangement is not equidimensional: prime #{index} has {found} variables, expected {expected}")]
    NotEquidimensional {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("pairwise-dimension matrix is not symmetric at ({i},{j})")]
    AsymmetricMatrix { i: usize, j: usize },

    #[error("matrix entry ({i},{j}) = {value} is out of range (expected {expected})")]
    MatrixEntryOutOfRange {
        i: usize,
        j: usize,
        value: i64,
        expected: String,
    },

    #[error("matrix row {row} has {found} entries, expected {expected}")]
    RaggedMatrix {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("{op} requires dimension at least {min}, got {d}")]
    DimensionTooSmall {
        op: &'static str,
        d: usize,
        min: usize,
    },

    #[error("{op} requires dimension exactly {expected}, got {d}")]
    DimensionMismatch {
        op: &'static str,
        d: usize,
        expected: usize,
    },

    #[error("threshold t = {t} out of range 1..={max}")]
    ThresholdOutOfRange { t: usize, max: usize },

    #[error("dimension bound {value} out of range 0..={max}")]
    BoundOutOfRange { value: usize, max: usize },

    #[error("{s} minimal primes exceed the brute-force cap of {cap}")]
    CapExceeded { s: usize, cap: usize },

    #[error("iteration count {k} out of range 1..={max}")]
    IterationOutOfRange { k: usize, max: usize },

    #[error("cohomological-dimension bound needs the ambient dimension (--ambient)")]
    MissingAmbient,

    #[error("invalid JSON: {message}")]
    Json { message: String },

    #[error("invalid input at {path}: {message}")]
    Schema { path: String, message: String },
}

impl Error {
    pub(crate) fn schema(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            message: message.into(),
        }
    }
}
