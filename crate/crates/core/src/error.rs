use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid edge {{{0}, {1}}}: {2}")]
    InvalidEdge(usize, usize, &'static str),

    #[error("input too large: {what} is {got}, limit {limit}")]
    TooLarge {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("malformed structure: {0}")]
    Malformed(String),

    #[error("exploration budget of {budget} vertex sets exhausted")]
    BudgetExceeded { budget: usize },

    #[error("cannot decide {0} from the available enclosure precision")]
    Undecidable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
