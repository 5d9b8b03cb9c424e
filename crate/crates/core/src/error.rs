use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mismatched variable lists: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("negative degree {0}")]
    NegativeDegree(i64),

    #[error("partition {partition} does not fit in the box [{n}, {m}]")]
    OutsideBox { partition: String, n: usize, m: usize },

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("expected {expected} spectral points for {what}, got {got}")]
    PointCount { what: &'static str, expected: usize, got: usize },

    #[error("repeated spectral point {0} where distinct points are required")]
    RepeatedPoint(String),

    #[error("zero spectral parameter is not allowed here")]
    ZeroParameter,

    #[error("singular determinant: {0}")]
    Singular(&'static str),

    #[error("M + N - 1 = {0} is odd; the half-integer column exponent is undefined")]
    Parity(usize),

    #[error("{name} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange { name: &'static str, value: i64, min: i64, max: i64 },

    #[error("Miwa support n_max = {n_max} is smaller than |λ| = {weight}")]
    InsufficientSupport { n_max: usize, weight: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("particle-number grading mismatch: {0}")]
    Grading(String),

    #[error("Newton iteration did not converge after {iterations} steps (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("singular Jacobian in Newton step")]
    SingularJacobian,

    #[error("quantum numbers must be pairwise distinct modulo {0}")]
    QuantumNumbers(usize),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("{name} = {value} exceeds the size cap {cap} (set QTAU_MAX_SIZE to override)")]
    SizeCap { name: &'static str, value: usize, cap: usize },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
