use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpectraError {
    /// A structural guarantee failed (for example, a maximal-ideal
    /// quotient that is not a chain). Implementation bug, never expected.
    #[error("internal spectra failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Ideal(#[from] mv_ideals::IdealError),

    #[error(transparent)]
    Core(#[from] mv_core::CoreError),

    #[error(transparent)]
    Gamma(#[from] mv_gamma::GammaError),
}
