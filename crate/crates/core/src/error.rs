use thiserror::Error;

/// Errors raised by graph construction, algebra, and the depth oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex label {label} outside 1..={r}")]
    BadLabel { label: usize, r: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("vertex {0} cannot reach the cycle")]
    Disconnected(usize),

    #[error("{what} = {got} exceeds the configured cap {cap}")]
    TooLarge { what: &'static str, got: usize, cap: usize },

    #[error("graph is not a tree")]
    NotTree,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not connected and bipartite")]
    NotConnectedBipartite,
    #[error("graph is not a connected bipartite unicyclic graph")]
    NotUnicyclicBipartite,
    #[error("graph is not a connected nonbipartite unicyclic graph")]
    NotUnicyclicNonbipartite,
    #[error("graph is not connected and nonbipartite")]
    NotConnectedNonbipartite,
    #[error("level {n} is below the starting level {k}")]
    LevelBelowK { n: usize, k: usize },
    #[error("no state with R_n and B_n covering every vertex")]
    NoFullState,
    #[error("witness check failed: {0}")]
    WitnessCheckFailed(String),

    #[error("facet vertex {0} lies outside the universe")]
    FacetOutsideUniverse(usize),
    #[error("join of complexes with overlapping universes")]
    OverlappingUniverses,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("exponent overflow")]
    Overflow,
    #[error("degree vector has a negative entry at coordinate {0}")]
    NegativeDegree(usize),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("formula and oracle disagree: {0}")]
    Mismatch(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
