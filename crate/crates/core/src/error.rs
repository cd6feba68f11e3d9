use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("loop at node {0}: graphs are loopless")]
    Loop(usize),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("instance too large: {what} is {actual}, cap is {cap}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("independence oracle is not a matroid: {0}")]
    NotAMatroid(String),

    #[error("not the engine's turn")]
    NotEngineTurn,

    #[error("not {0}'s turn")]
    NotYourTurn(&'static str),

    #[error("edge {0} is already tagged")]
    AlreadyTagged(usize),

    #[error("no untagged edge left")]
    NoUntaggedEdge,

    #[error("the game is over")]
    GameOver,

    #[error("edge {0} does not exist")]
    UnknownEdge(usize),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
