use thiserror::Error;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("algebra of size {size} exceeds the enumeration bound {bound}")]
    ResourceLimit { size: usize, bound: usize },

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("ideal and morphism belong to different algebras")]
    AlgebraMismatch,

    /// Two independent routes to the same predicate disagreed. This is an
    /// implementation bug surfacing, never an expected runtime condition.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Core(#[from] mv_core::CoreError),

    #[error(transparent)]
    Gamma(#[from] mv_gamma::GammaError),
}
