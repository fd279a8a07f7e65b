use thiserror::Error;

/// Errors produced by ideal-level computations.
///
/// Resource limits are reported distinctly from mathematical results so that a
/// batch caller can tell "the computation did not finish" apart from any
/// verdict.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("ideal is trivial (contains 1)")]
    TrivialIdeal,

    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    #[error("variable set {{{0}}} is not independent modulo the ideal")]
    NotIndependent(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl EngineError {
    /// Prefixes a pipeline step name onto a resource-limit report.
    pub(crate) fn at_step(self, step: &str) -> EngineError {
        match self {
            EngineError::ResourceLimit(detail) => {
                EngineError::ResourceLimit(format!("{step}: {detail}"))
            }
            other => other,
        }
    }
}
