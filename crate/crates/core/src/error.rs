use thiserror::Error;

/// Errors reported by graph construction, parsing and the exact solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("total domination is undefined: vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("dominated coloring is undefined on a single vertex")]
    SingleVertex,
    #[error("order {n} exceeds the 64-vertex limit of the exact solvers")]
    TooLarge { n: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("part sizes must be positive (got {p}, {q})")]
    ZeroPart { p: usize, q: usize },
    #[error("invalid construction parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("requested {requested} classes but the dominator chromatic number is {actual}")]
    NotOptimal { requested: usize, actual: usize },
    #[error("not a D(k) graph (gamma={gamma}, chi={chi}, chi_d={chi_d})")]
    NotDk {
        gamma: usize,
        chi: usize,
        chi_d: usize,
    },
    #[error("at least 3 color classes are required, got {0}")]
    TooFewClasses(usize),
    #[error("blueprint rejected: {0}")]
    InvalidBlueprint(String),
    #[error("enumeration is built in only up to order 7 (got {0}); feed larger orders as a graph6 stream")]
    OrderTooLarge(usize),
    #[error("deadline exceeded")]
    DeadlineExceeded,
    #[error("checkpoint does not match this scan: {0}")]
    CheckpointMismatch(String),
    #[error("line {line}: {reason}")]
    Source { line: usize, reason: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
