use thiserror::Error;

/// Errors raised by graph construction, parsing and the brute-force guards.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("bipartite minor undefined: |S| + od(S) = {s} + {od} < 2")]
    MinorUndefined { s: usize, od: usize },

    #[error("invalid edge probability {numerator}/{denominator}")]
    InvalidProbability { numerator: u64, denominator: u64 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// `Ok` when `actual <= limit`.
    pub fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::SizeGuard {
                what,
                actual,
                limit,
            })
        } else {
            Ok(())
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
