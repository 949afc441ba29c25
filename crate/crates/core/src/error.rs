use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid index tuple {values:?} for n = {n}: {reason}")]
    InvalidTuple {
        values: Vec<usize>,
        n: usize,
        reason: &'static str,
    },
    #[error("shape mismatch: expected (r, n) = {expected:?}, found {found:?}")]
    ShapeMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(
        "evaluation matrix stayed rank deficient ({rank} < {columns}) after {attempts} samplings"
    )]
    RankDeficient {
        rank: usize,
        columns: usize,
        attempts: usize,
    },
    #[error("straightened result has support outside the target basis")]
    BasisMismatch,
    #[error("interpolated expansion failed verification on held-out points")]
    VerificationFailed,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
