use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    // field arithmetic
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order {order} outside supported range 1..={bound}")]
    BoundExceeded { order: u32, bound: u32 },

    // linear algebra
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("operator order exceeds bound {bound}")]
    OrderExceedsBound { bound: usize },

    // hopf-core
    #[error("malformed structure tensor: {0}")]
    MalformedTensor(String),
    #[error("no antipode exists: {0}")]
    NoAntipode(String),
    #[error("presentation has no antipode")]
    MissingAntipode,
    #[error("eigenvalue not in Q(zeta_{order}): {detail}; raise cyclotomic_order")]
    EigenvalueNotInField { order: u32, detail: String },

    // integrals
    #[error("{side} integral space has dimension {dim}, expected 1")]
    IntegralSpaceNotOneDim { side: &'static str, dim: usize },
    #[error("integral pairing lambda(Lambda) vanishes")]
    DegeneratePairing,
    #[error("not proportional to the integral: {0}")]
    NotProportional(String),
    #[error("integral pair is not normalized")]
    NotNormalized,

    // invariant lab
    #[error("alpha(g) is not a power of omega")]
    NotARootPower,
    #[error("S^2 and right multiplication by g do not commute")]
    NonCommuting,
    #[error("eigenspaces span {found} of {expected} dimensions; raise cyclotomic_order to a multiple of {suggested}")]
    NonSplitting { found: usize, expected: usize, suggested: u32 },
    #[error("index is 1; the eigenspace decomposition is degenerate")]
    IndexOne,
    #[error("index {n} is even; odd index required")]
    IndexEven { n: usize },
    #[error("omega must be a primitive root of unity of order {n}: {detail}")]
    BadOmega { n: usize, detail: String },
    #[error("off-pattern block ({a}, {b}) in Delta(Lambda)")]
    OffPatternBlock { a: String, b: String },
    #[error("S^(2n) has eigenvalues other than +1 and -1")]
    SpectrumNotPlusMinusOne,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("subspace is not invariant under the operator")]
    NotInvariant,

    // zoo
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),

    // input
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for failures that go away when the cyclotomic order is raised.
    pub fn needs_field_extension(&self) -> bool {
        matches!(self, Error::EigenvalueNotInField { .. } | Error::NonSplitting { .. })
    }
}
