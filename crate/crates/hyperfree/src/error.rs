use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the mathematical domain of a function.
    #[error("domain error in {func}: {message}")]
    Domain { func: &'static str, message: String },

    /// A quadrature did not reach the requested tolerance within budget.
    #[error("quadrature did not converge: value {value:e}, error estimate {error_estimate:e} > tolerance {tolerance:e}")]
    QuadratureNonConvergent {
        value: f64,
        error_estimate: f64,
        tolerance: f64,
    },

    /// Forward Laplace transform diverges (w at or below the abscissa).
    #[error("Laplace transform diverges at w = {w}: integrand keeps growing")]
    LaplaceDivergent { w: f64 },

    /// The supplied evaluator does not satisfy the canonical-representation
    /// constraint (its w = 1 numerator does not vanish).
    #[error("not a representation-(1) transform: |numerator at w = 1| = {residual:e}")]
    NotRepresentation { residual: f64 },

    /// Laplace inversion backends of successive orders disagree too much.
    #[error("inversion backend unstable: orders {order_lo} and {order_hi} disagree by {disagreement:e}")]
    BackendUnstable {
        order_lo: usize,
        order_hi: usize,
        disagreement: f64,
    },

    /// Invalid inversion configuration.
    #[error("invalid inversion config: {0}")]
    InvalidConfig(String),

    /// Unknown identity-check id.
    #[error("unknown identity check: {0}")]
    UnknownCheck(String),
}

impl Error {
    pub fn domain(func: &'static str, message: impl Into<String>) -> Self {
        Error::Domain {
            func,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
