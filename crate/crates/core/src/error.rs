use thiserror::Error;

/// Errors produced by bumpkit operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("cell ({row}, {col}) lies outside the shape")]
    CellOutsideShape { row: usize, col: usize },

    #[error("{what}: n = {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("entry {0} is already present in the tableau")]
    DuplicateEntry(usize),

    #[error("tableau shapes differ: {0} vs {1}")]
    ShapeMismatch(String, String),

    #[error("not a standard tableau: {0}")]
    NotStandard(String),

    #[error("not a weak ballot sequence: {0}")]
    NotABallotSequence(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Returns `CapExceeded` when `n > cap`.
pub(crate) fn check_cap(what: &'static str, n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { what, n, cap })
    } else {
        Ok(())
    }
}
