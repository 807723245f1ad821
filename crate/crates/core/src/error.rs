use thiserror::Error;

/// Errors surfaced by the workbench operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not stabilized: sample at m = {m} deviates from the interpolant (expected {expected}, got {got})")]
    NotStabilized {
        m: i64,
        expected: String,
        got: String,
    },

    #[error("not enough samples: need at least {needed} consecutive points, got {got}")]
    NotEnoughSamples { needed: usize, got: usize },

    #[error("samples are not consecutive at index {index}")]
    NonConsecutiveSamples { index: usize },

    #[error("disconnected: the component configuration is not connected")]
    Disconnected,

    #[error("wrong genus: expected 2, computed {found}")]
    WrongGenus { found: i64 },

    #[error("degenerate: parametrization has fewer than 2 nonzero coordinates")]
    Degenerate,

    #[error("hilbert mismatch at m = {m}: standard-monomial count {found} != P(m) = {expected}")]
    HilbertMismatch { m: i64, expected: i64, found: i64 },

    #[error("cannot eliminate: no relation involves symbol {0}")]
    CannotEliminate(String),

    #[error("not quasi-homogeneous: {0}")]
    NotQuasiHomogeneous(String),

    #[error("degenerate: alpha_1 = alpha_2")]
    DegenerateLincomb,

    #[error("identity failed: {0}")]
    IdentityFailed(String),

    #[error("missing numbers: vital intersection data lacks entry {0}")]
    MissingNumbers(String),

    #[error("unsupported model: {0}")]
    UnsupportedModel(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown operation: {0}")]
    UnknownOperation(String),

    #[error("unresolved name: {0}")]
    UnresolvedName(String),

    #[error("invalid rational: {0}")]
    InvalidRational(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
