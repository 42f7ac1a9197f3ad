use thiserror::Error;

/// Errors reported by domain construction, evaluation and search routines.
///
/// The CLI maps `Convergence` to exit code 3 and every other variant to exit
/// code 2 (precondition violated); usage errors are handled by the argument
/// parser itself.
#[derive(Debug, Error)]
pub enum Error {
    /// A structural parameter is invalid (non-positive radius, degenerate
    /// polyline segment, empty scale list, zero direction, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A queried point does not belong to the admissible region J, or a chart
    /// parameter falls outside the chart's range.
    #[error("outside admissible region: {0}")]
    OutsideDomain(String),

    /// The influence kind cannot be evaluated on this domain
    /// (e.g. a projected influence on a planar domain).
    #[error("influence/domain mismatch: {0}")]
    DomainMismatch(String),

    /// A geometric construction does not exist for this configuration, e.g.
    /// a tangent circle that would have to cross another boundary component.
    #[error("configuration not constructible: {0}")]
    ConfigurationInvalid(String),

    /// An iterative routine failed to converge within its iteration budget.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Reading a configuration file or writing results failed.
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
