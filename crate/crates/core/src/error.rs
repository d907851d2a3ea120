use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    InvalidVertex { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("adjacency is not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
    #[error("operation needs a nonempty graph")]
    EmptyGraph,
    #[error("not a permutation of the vertex set")]
    BadPermutation,
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("unrealizable family instance: {0}")]
    Unrealizable(String),
    #[error("cannot parse family spec `{0}`: {1}")]
    Parse(String, String),
    #[error("no closed form for {0}")]
    NoClosedForm(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("vertex {0} cannot be dominated: its closed neighbourhood is excluded")]
    Infeasible(usize),
    #[error("vertex {0} is both required and excluded")]
    Conflict(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("eigensolver failed to converge")]
    NoConvergence,
    #[error("vector length {got} does not match order {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("eigen-residual {0:e} too large")]
    NotAnEigenvector(f64),
    #[error("graph does not have the required shape: {0}")]
    Shape(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("order {n} outside supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no witness found: {0}")]
    NoWitness(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("parameters out of range: {0}")]
    Bounds(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
