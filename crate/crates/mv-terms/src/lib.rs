//! The Łukasiewicz term language over `{0, 1, ¬, ⊕, ⊙, ⊖, ∨, ∧, d}` and
//! the free one-variable algebra realised as exact piecewise-linear
//! functions on `[0, 1]`.
//!
//! All arithmetic is exact arbitrary-precision rational; no floating point
//! appears anywhere in a decision path (zero-set membership is
//! discontinuous in the inputs, so approximation is not an option). The
//! one-variable calculus is exact: term functions are piecewise linear with
//! integer slopes and rational breakpoints, all pointwise operations are
//! closed on that class, and equality of term functions is structural
//! equality of canonical breakpoint lists. Multivariate terms are only
//! evaluated pointwise, on grids: sampling, never a proof.

mod error;
mod grid;
mod parse;
mod pl;
pub mod rational;
mod term;

pub use error::TermError;
pub use grid::{grid_eval_n, GridTable};
pub use parse::parse_term;
pub use pl::{archimedean_pl, pl_diff_witness, term_eq1, to_pl1, ClosedSet1, Pl1, PlOp};
pub use rational::Q;
pub use term::{eval, Term, Valuation};
