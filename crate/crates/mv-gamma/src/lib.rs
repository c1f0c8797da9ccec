//! The MV-algebras `Γ(ℤ ×lex ℤ, (k, 0))`: the unit interval of the
//! lexicographic product of two copies of the integers, truncated at the
//! unit `(k, 0)`. At `k = 1` this is Chang's algebra, the canonical
//! non-semisimple chain whose radical is exactly its set of
//! infinitesimals `{(0, q) : q ≥ 0}`.
//!
//! These carriers are the only source of nonzero infinitesimals in the
//! whole workspace: every finite MV-algebra is semisimple, and so is the
//! free algebra realised as piecewise-linear functions. All classification
//! here has closed form; the closed forms are cross-checked against
//! bounded brute force over `|q| ≤ 64` windows in the test suite.

mod algebra;
mod error;

pub use algebra::{GammaIdeal, LexGammaAlgebra, LexGammaElement};
pub use error::GammaError;
