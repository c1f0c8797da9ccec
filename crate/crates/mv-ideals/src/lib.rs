//! Ideal machinery over the three carriers: finite table algebras
//! (bitset ideals, exhaustive enumeration), the lex Γ-algebras (a symbolic
//! three-ideal catalogue with closed-form classification), and the free
//! one-variable algebra (principal ideals of PL functions).
//!
//! Wherever a predicate admits two independent routes, both are computed
//! and compared, and a disagreement surfaces as an explicit inconsistency
//! error instead of a silent wrong answer: radicality via the
//! intersection-of-maximals operator versus the infinitesimal-set operator,
//! quasihyperradicality directly versus hyperradicality of the infradical,
//! and principal-ideal membership via the zero-set criterion versus a
//! verified witness search.

mod error;
mod fin;
mod flags;
mod gamma;
mod principal1;

pub use error::IdealError;
pub use fin::{enumerate_ideals, IdealFin, PreimageLawReport, DEFAULT_ENUMERATION_BOUND};
pub use flags::{algebra_class, IdealClassFlags, IdealWitnesses};
pub use gamma::{
    classify_gamma_ideal, gamma_flags_window_check, gamma_infradical,
    gamma_preimage_rad_projection, gamma_rad,
};
pub use principal1::{class_archimedean_in_quotient, Membership, PrincipalIdeal1};
