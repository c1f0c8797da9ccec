//! The V–J Galois connection and the Nullstellensatz, on two exact
//! carriers: finite discrete point sets carrying subalgebras of
//! `chain(v)^X`, and `X = [0, 1]` carrying the free one-variable algebra
//! as piecewise-linear functions.
//!
//! `V(I)` is the common zero locus of an ideal, `J(S)` the ideal of
//! functions vanishing on a closed set. On finite carriers everything is
//! enumerated exhaustively. On `[0, 1]` ideals are principal, zero loci
//! are finite unions of closed rational intervals, and `J(S)` has an
//! explicitly constructed generator vanishing exactly on `S`; the flagship
//! checks run over a fixed corpus of term functions shipped as a fixture.

mod corpus;
mod error;
mod fnalg;
mod galois;
mod nullsatz;
mod restrict;
mod vj;

pub use corpus::{default_corpus, parse_corpus, CorpusEntry, DEFAULT_CORPUS_TEXT};
pub use error::NullError;
pub use fnalg::FiniteFunctionAlgebra;
pub use galois::{galois_suite_f1, galois_suite_finite, GaloisReport};
pub use nullsatz::{
    nullstellensatz_f1, nullstellensatz_finite, prenull_subalgebra, rad_eq_jv_f1,
    rad_eq_jv_finite, NullReport,
};
pub use restrict::{restriction_iso_finite, separating_check_finite, separation_witness_f1};
pub use vj::generator_for_closed_set;
