use thiserror::Error;

/// Errors raised by parameter validation and by numerical routines that
/// detect they are being used outside their domain.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The requested routine does not apply to this kernel (missing or
    /// unsuitable localisability metadata).
    #[error("not applicable: {0}")]
    Inapplicable(String),

    /// γ = 0 in the Fourier criterion: the tangent is the logarithmic mix.
    #[error("gamma = 0: the local form is the log-fractional mix, not LFSM")]
    LogarithmicCase,

    #[error("integral does not converge: {0}")]
    NonIntegrable(String),

    #[error("{what} needs {requested} elements, limit is {limit}")]
    TooLarge {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, value: f64, reason: &'static str) -> Error {
    Error::InvalidParameter {
        name,
        value,
        reason,
    }
}
