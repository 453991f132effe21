use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter is outside its admissible domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested state has vanishing norm.
    #[error("degenerate state: {0}")]
    DegenerateState(String),

    /// The operation is not defined for this state family.
    #[error("unsupported family: {0}")]
    UnsupportedFamily(&'static str),

    /// Range widening did not converge; the last two estimates are carried
    /// so callers can judge how far off the result is.
    #[error(
        "integral did not converge after {doublings} range doublings \
         (last estimate {last:e}, previous {previous:e})"
    )]
    Convergence {
        doublings: u32,
        last: f64,
        previous: f64,
    },

    /// An [`IntegrationConfig`](crate::quadrature::IntegrationConfig) violates
    /// its own invariants.
    #[error("invalid integration config: {0}")]
    Config(String),

    /// The sampled reference curve is not monotone in B; a finer alpha grid
    /// is needed.
    #[error("reference curve not monotone in B near alpha = {alpha}; refine the grid")]
    CurveConstruction { alpha: f64 },

    /// A purity-corrected quantity was requested from a report without purity.
    #[error("report carries no purity field")]
    MissingPurity,
}

pub type Result<T> = std::result::Result<T, Error>;
