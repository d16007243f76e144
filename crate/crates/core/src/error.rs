use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order {order} exceeds the cap of {cap}")]
    OrderOverflow { order: usize, cap: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("spec parse error at column {column}: {message}")]
    SpecParse { column: usize, message: String },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("unknown construction: {0}")]
    UnknownRecipe(String),

    #[error("unknown lemma: {0}")]
    UnknownLemma(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
