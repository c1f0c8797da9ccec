use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("malformed algebra: {0}")]
    MalformedAlgebra(String),

    #[error("element {element} out of range for algebra of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("map is not a morphism: {0}")]
    NotMorphism(String),
}
