use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TermError {
    /// Lexical or grammatical error; `col` is the 1-based column.
    #[error("syntax error at column {col}: {message}")]
    Syntax { col: usize, message: String },

    #[error("unknown identifier `{name}` at column {col}")]
    UnknownIdent { col: usize, name: String },

    #[error("no binding for variable `{var}`")]
    MissingBinding { var: String },

    #[error("valuation binds `{var}` to {value}, outside [0, 1]")]
    InvalidValuation { var: String, value: String },

    #[error("term uses more than one variable: {}", vars.join(", "))]
    Multivariable { vars: Vec<String> },

    #[error("not a rational in [0, 1]: {0}")]
    InvalidRational(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("grid of {cells} points exceeds the cap of {cap}")]
    GridTooLarge { cells: u128, cap: u128 },

    #[error("malformed piecewise-linear data: {0}")]
    MalformedPl(String),
}
