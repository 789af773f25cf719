use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {what} (got {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),

    #[error("zero j({n},{k}) did not converge (residual {residual:e})")]
    ZeroNotConverged { n: u32, k: u32, residual: f64 },

    #[error("quadrature did not converge (last change {change:e})")]
    QuadratureNotConverged { change: f64 },

    #[error(
        "finite-difference eigenvalue {index} for order {n} failed the refinement check (relative change {change:e})"
    )]
    MeshNotResolved { n: u32, index: usize, change: f64 },

    #[error("first-order correction for n = {n} (mod 4 = 0) is not determined")]
    Undetermined { n: u32, k: u32 },

    #[error("internal consistency failure: {0}")]
    Inconsistent(&'static str),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64) -> Self {
        Error::Domain { what, value }
    }
}
