use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature ran out of subdivisions before meeting its
    /// tolerance. The best estimate and its error bound are kept.
    #[error("quadrature did not converge: estimate {estimate:e}, error bound {error_bound:e}")]
    Convergence { estimate: f64, error_bound: f64 },

    /// An iterative search (root bracketing, maximization) failed.
    #[error("search failed: {0}")]
    Search(String),

    /// The requested point is where the limits beta -> 1 and
    /// theta -> pi/2 do not commute.
    #[error("ambiguous double limit at beta = 1, theta = pi/2 for {0}")]
    AmbiguousLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn check_beta(beta: f64) -> Result<()> {
    if (0.0..=1.0).contains(&beta) {
        Ok(())
    } else {
        Err(domain(format!("beta = {beta} outside [0, 1]")))
    }
}

pub(crate) fn check_theta(theta: f64) -> Result<()> {
    if (0.0..=std::f64::consts::PI).contains(&theta) {
        Ok(())
    } else {
        Err(domain(format!("theta = {theta} outside [0, pi]")))
    }
}
