//! Finite MV-algebras given by operation tables.
//!
//! The carrier of a [`FiniteMvAlgebra`] is the index range `0..size`; the
//! tables define truncated addition `⊕` and negation `¬`, from which the
//! other Łukasiewicz connectives (`⊙`, `⊖`, `∨`, `∧`, the distance `d` and
//! the n-fold sum `nx`) are derived. The crate also classifies elements as
//! infinitesimal / archimedean / quasiarchimedean, with all `∀n`/`∃n`
//! quantifiers decided at `n ≤ size` (the n-fold sums are nondecreasing and
//! take at most `size` distinct values, so they stabilize by then).

mod algebra;
mod classify;
mod error;
mod flags;
mod morphism;

pub use algebra::{AxiomFailure, AxiomKind, FiniteMvAlgebra};
pub use classify::{classify_element, is_archimedean, is_infinitesimal, is_quasiarchimedean, ElementClass};
pub use error::CoreError;
pub use flags::AlgebraClassFlags;
pub use morphism::{product_projections, Morphism};
