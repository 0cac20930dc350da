use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("vertex {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("bad family parameters: {0}")]
    BadFamilyParams(String),
    #[error("vertices do not form a clique")]
    NotAClique,
    #[error("clique does not match any known class: {0}")]
    Unclassifiable(String),
    #[error("counterexample found: {0}")]
    CounterexampleFound(String),
    #[error("matching is not near-perfect")]
    NotNearPerfect,
    #[error("graph contains a triangle")]
    TrianglePresent,
    #[error("vertex {0} is not uniquely unmatched")]
    NotUniquelyUnmatched(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("cycle length {0} is below 3")]
    BadCycleLength(usize),
    #[error("certificate check failed: {0}")]
    CertificateMismatch(String),
    #[error("order {0} is not a power of two")]
    NotPowerOfTwoOrder(usize),
    #[error("no double broom has {edges} Bell edges at order {n}")]
    NoBroomSolution { edges: usize, n: usize },
    #[error("common-neighbour graph is not a tree: {0}")]
    NotATreeResult(String),
    #[error("not the Bell 3-coloring graph of a tree: {0}")]
    NotABellTreeGraph(String),
    #[error("not a line graph: {0}")]
    NotALineGraph(String),
    #[error("not a Bell n-coloring multigraph: {0}")]
    NotABellMultigraph(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
