use thiserror::Error;

/// Errors raised by graph construction and graph transforms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph order must be at least 1")]
    Empty,
    #[error("order {0} exceeds the {max}-vertex cap", max = crate::graph::MAX_VERTICES)]
    TooLarge(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) is not present")]
    MissingEdge(usize, usize),
    #[error("rewire set is empty")]
    EmptyRewireSet,
    #[error("vertex {0} violates the rewire precondition Y ⊆ N(u) \\ (N(v) ∪ {{v}})")]
    BadRewireVertex(usize),
    #[error("not a permutation of 0..{0}")]
    BadPermutation(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("order {n} exceeds the cap of {cap} for this operation")]
    CapExceeded { n: usize, cap: usize },
}

/// Errors raised while decoding graph6 text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 line")]
    EmptyLine,
    #[error("invalid graph6 byte {byte:#04x} at position {pos}")]
    BadByte { byte: u8, pos: usize },
    #[error("graph6 orders above 62 are not supported")]
    LongHeader,
    #[error("graph6 bit field truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 line has {0} trailing bytes")]
    Trailing(usize),
    #[error("nonzero padding bits")]
    Padding,
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<FormatError> },
    #[error("{0}")]
    Parse(String),
}

/// Errors from the eigensolver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal mass {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("alpha {0} outside [0, 1)")]
    BadAlpha(f64),
    #[error("cannot parse alpha value {0:?}")]
    AlphaParse(String),
}

/// Top-level error for enumeration, quotient and verification drivers.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid partition: {0}")]
    Partition(String),
    #[error("family undefined for these parameters: {0}")]
    Family(String),
    #[error("matrix dimension {0} exceeds the cap of 8")]
    Dimension(usize),
    #[error("{0}")]
    Cap(String),
    #[error("empty class: {0}")]
    EmptyClass(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
