use std::sync::Arc;

use serde::Serialize;

use mv_core::{AlgebraClassFlags, FiniteMvAlgebra};

use crate::error::IdealError;
use crate::fin::IdealFin;

/// The six ideal classes of the class-correspondence table, with
/// counterwitnesses where a flag is false and the carrier is small enough
/// to name one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealClassFlags {
    pub prime: bool,
    pub maximal: bool,
    pub quasimaximal: bool,
    pub radical: bool,
    pub hyperradical: bool,
    pub quasihyperradical: bool,
    pub witnesses: IdealWitnesses,
}

/// Human-readable witnesses, rendered by the owning carrier.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct IdealWitnesses {
    /// Pair `(x, y)` with neither `x⊖y` nor `y⊖x` in the ideal.
    pub prime_fail: Option<String>,
    /// Element breaking the first-order maximality characterisation.
    pub maximal_fail: Option<String>,
    /// Element breaking the quasimaximality biconditional.
    pub quasimaximal_fail: Option<String>,
    /// Element `x` with `(n+1)x ⊖ nx ∉ I` for every `n` in range.
    pub hyperradical_fail: Option<String>,
    /// Element of `Rad(I) \ I` when the ideal is not radical.
    pub radical_gap: Option<String>,
}

impl IdealClassFlags {
    /// The implication lattice between the six classes, used as a
    /// consistency gate by the verification suite:
    /// hyperradical ⟺ quasihyperradical ∧ radical;
    /// hyperradical ⟹ radical; maximal ⟹ hyperradical;
    /// quasimaximal ⟹ quasihyperradical; prime ∧ hyperradical ⟹ maximal;
    /// prime ⟹ quasihyperradical; prime ∧ radical ⟹ maximal.
    pub fn implication_lattice_violations(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.hyperradical != (self.quasihyperradical && self.radical) {
            out.push("hyperradical iff quasihyperradical and radical");
        }
        if self.hyperradical && !self.radical {
            out.push("hyperradical ideals are radical");
        }
        if self.maximal && !self.hyperradical {
            out.push("maximal ideals are hyperradical");
        }
        if self.quasimaximal && !self.quasihyperradical {
            out.push("quasimaximal ideals are quasihyperradical");
        }
        if self.prime && self.hyperradical && !self.maximal {
            out.push("prime hyperradical ideals are maximal");
        }
        if self.prime && !self.quasihyperradical {
            out.push("prime ideals are quasihyperradical");
        }
        if self.prime && self.radical && !self.maximal {
            out.push("prime radical ideals are maximal");
        }
        out
    }
}

/// Algebra-level classification read off the zero ideal through the
/// class-correspondence table. The chain flag is additionally cross-checked
/// against the direct total-order test; the two routes must agree.
pub fn algebra_class(a: &Arc<FiniteMvAlgebra>) -> Result<AlgebraClassFlags, IdealError> {
    let zero = IdealFin::zero(a);
    let flags = zero.classify()?;
    let totally_ordered = a
        .elements()
        .all(|x| a.elements().all(|y| a.leq(x, y) || a.leq(y, x)));
    if totally_ordered != flags.prime {
        return Err(IdealError::Inconsistency(format!(
            "total-order test ({totally_ordered}) disagrees with primality of the zero ideal ({})",
            flags.prime
        )));
    }
    Ok(AlgebraClassFlags {
        simple: flags.maximal,
        quasisimple: flags.quasimaximal,
        semisimple: flags.radical,
        chain: flags.prime,
        hyperarchimedean: flags.hyperradical,
        quasihyperarchimedean: flags.quasihyperradical,
    })
}
