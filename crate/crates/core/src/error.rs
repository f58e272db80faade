use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("{m} edges requested but a graph on {n} vertices has at most {max}")]
    TooManyEdges { n: usize, m: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("vertex {vertex} is not a non-neighbor of the set")]
    NotANonNeighbor { vertex: usize },
    #[error("initial cardinality must be at least 1")]
    ZeroCardinality,
    #[error("initial cardinality {k} exceeds vertex count {n}")]
    CardinalityTooLarge { k: usize, n: usize },
    #[error("no independent set of cardinality {k} exists")]
    NoSeedSets { k: usize },
    #[error("brute-force search refuses graphs with more than {max} vertices (got {n})")]
    TooLargeForBruteForce { n: usize, max: usize },
    #[error("invalid experiment configuration: {0}")]
    Config(String),
}
