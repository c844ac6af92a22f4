use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps [`Error::is_input`] errors to exit code 2 and everything else
/// to exit code 3.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid rank {rank} for type {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("cannot parse '{token}': {reason}")]
    Parse { token: String, reason: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not Hermitian (entry ({row},{col}) deviates by {deviation:e})")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("matrix is numerically singular (eigenvalue ratio {ratio:e})")]
    Singular { ratio: f64 },

    #[error("spectrum is not balanced: sum = {sum}, sum of inverses = {inverse_sum}")]
    Unbalanced { sum: f64, inverse_sum: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by malformed or out-of-range input.
    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::InvalidRank { .. }
                | Error::Parse { .. }
                | Error::DimensionMismatch { .. }
                | Error::NotHermitian { .. }
                | Error::Unbalanced { .. }
                | Error::Singular { .. }
        )
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse { token: token.into(), reason: reason.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
