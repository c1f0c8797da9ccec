use thiserror::Error;

#[derive(Debug, Error)]
pub enum NullError {
    #[error("function algebra of size {size} exceeds the bound {bound}")]
    ResourceLimit { size: u128, bound: u128 },

    #[error("carrier is not separating: {0}")]
    NotSeparating(String),

    #[error("internal failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Ideal(#[from] mv_ideals::IdealError),

    #[error(transparent)]
    Core(#[from] mv_core::CoreError),

    #[error(transparent)]
    Term(#[from] mv_terms::TermError),
}
