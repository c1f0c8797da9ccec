use serde::Serialize;

/// Algebra-level class flags, read off the classification of the zero
/// ideal: simple ⟷ maximal, quasisimple ⟷ quasimaximal, semisimple ⟷
/// radical, chain ⟷ prime, hyperarchimedean ⟷ hyperradical,
/// quasihyperarchimedean ⟷ quasihyperradical.
///
/// "quasisimple" has no established definition in the literature; here it
/// means "the zero ideal is quasimaximal", by analogy with simple/maximal.
/// Reports carry a note to that effect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgebraClassFlags {
    pub simple: bool,
    pub quasisimple: bool,
    pub semisimple: bool,
    pub chain: bool,
    pub hyperarchimedean: bool,
    pub quasihyperarchimedean: bool,
}

impl AlgebraClassFlags {
    /// The note attached to every report that mentions `quasisimple`.
    pub const QUASISIMPLE_NOTE: &'static str =
        "quasisimple is interpreted as: the zero ideal is quasimaximal";
}
