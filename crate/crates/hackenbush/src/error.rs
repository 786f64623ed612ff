use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("line {line}: duplicate edge id {id}")]
    DuplicateEdgeId { line: usize, id: u32 },

    #[error("line {line}: unknown color letter '{letter}' (expected B, R or G)")]
    UnknownColor { line: usize, letter: String },

    #[error("no ground vertex declared")]
    NoGround,

    #[error("position has {count} edges, the solver supports at most {max}")]
    TooManyEdges { count: usize, max: usize },

    #[error("unknown edge id {id}")]
    UnknownEdge { id: u32 },

    #[error("edge id {id} is not present in the root position")]
    EdgeNotInRoot { id: u32 },

    #[error("position contains green edges; this operation requires a Red-Blue position")]
    GreenEdgePresent,
}

pub type Result<T> = std::result::Result<T, Error>;
