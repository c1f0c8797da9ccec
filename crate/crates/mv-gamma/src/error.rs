use thiserror::Error;

#[derive(Debug, Error)]
pub enum GammaError {
    #[error("invalid unit parameter k = {0}, must be >= 1")]
    InvalidUnit(i64),

    #[error("({p}, {q}) is not in the unit interval of the lex algebra with k = {k}")]
    InvalidElement { k: i64, p: i64, q: i64 },

    #[error("integer overflow in lex arithmetic")]
    Overflow,
}
