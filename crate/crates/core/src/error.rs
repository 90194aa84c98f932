use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a} is not invertible modulo {c}")]
    NotInvertible { a: u64, c: u64 },

    #[error("search bound {bound} is below the certified bound {required} for totient value {m}")]
    BoundTooSmall { m: u64, bound: u64, required: u64 },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("the empty scale has no generator structure")]
    EmptyScale,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("scale of size {size} in Z_{c} is trivial; need 2 <= size <= c - 2")]
    TrivialScale { size: usize, c: u32 },

    #[error("sweep over C({c}, {d}) = {count} subsets exceeds the limit {limit}")]
    SweepTooLarge { c: u32, d: u32, count: u128, limit: u128 },
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
