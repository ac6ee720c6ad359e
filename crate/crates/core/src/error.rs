use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge index {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("root vertex {0} is among the removed vertices")]
    RootRemoved(usize),
    #[error("pair ({0}, {0}) has equal endpoints")]
    DegeneratePair(usize),

    #[error("coloring must declare at least one color")]
    NoColors,
    #[error("color {color} at position {index} is outside 1..={k}")]
    ColorOutOfRange { index: usize, color: u32, k: u32 },
    #[error("coloring covers {got} elements but the graph has {expected}")]
    ColoringLength { expected: usize, got: usize },
    #[error("partial coloring assigns color {color} to edge {edge}; only 0 and 1 are allowed")]
    PartialColor { edge: usize, color: u32 },

    #[error("instance has {n} vertices, above the limit of {limit} for exhaustive checks")]
    TooLarge { n: usize, limit: usize },
    #[error("search budget of {budget} checks exhausted; value lies in [{lower}, {upper}]")]
    BudgetExceeded { budget: u64, lower: usize, upper: usize },
    #[error("graph must have at least two vertices")]
    TrivialGraph,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("clause {clause} mentions variable {var} twice with opposite signs")]
    TautologicalClause { clause: usize, var: usize },
    #[error("clause {clause} repeats variable {var}")]
    RepeatedVariable { clause: usize, var: usize },
    #[error("clause {clause} has {arity} literals; exactly 3 are required")]
    ClauseArity { clause: usize, arity: usize },
    #[error(
        "variable {var} never occurs {polarity}; add a clause containing that literal \
         (for example a padding clause over fresh variables) before reducing"
    )]
    MissingPolarity { var: usize, polarity: &'static str },

    #[error("reduction precondition violated: {0}")]
    Reduction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
