//! Characters (morphisms into `[0, 1]`), the hat map `a ↦ â`, and the
//! Zariski / coZariski base sets `W_a = {χ : χ(a) > 0}` and
//! `W^c_a = {χ : χ(a) = 0}`, for finite algebras and the lex Γ carriers.
//!
//! Characters are not searched for in `[0, 1]^A`: each one is built from a
//! maximal ideal by taking the quotient (a simple finite chain) and
//! embedding it into `[0, 1]` by rank, which is exact and unique. The
//! construction is re-validated on every call: the value vector must be a
//! morphism and its kernel must be the maximal ideal it came from.

mod character;
mod error;
mod gamma;
mod props;
mod spectrum;

pub use character::Character;
pub use error::SpectraError;
pub use gamma::GammaSpectrum;
pub use props::{check_cozariski_open, check_quasiarch_hat, check_spectrum_compactness, PropReport};
pub use spectrum::SpectrumFin;
