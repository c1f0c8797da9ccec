//! Closed-form ideal theory of the lex Γ-algebras. The ideal lattice is
//! `Zero ⊂ Rad ⊂ Full`, so every operator is a small case analysis; each
//! case records the argument that justifies it, and the bounded
//! brute-force cross-checks live in the tests.

use mv_gamma::{GammaIdeal, LexGammaAlgebra, LexGammaElement};

use crate::error::IdealError;
use crate::flags::{IdealClassFlags, IdealWitnesses};

/// `Rad(I)`: the intersection of the maximal ideals containing `I`.
/// `Rad` is the unique maximal ideal (any ideal with an element of
/// positive first coordinate reaches the unit), so `Zero ↦ Rad`,
/// `Rad ↦ Rad`, and `Full ↦ Full` by the improper-ideal convention.
pub fn gamma_rad(tag: GammaIdeal) -> GammaIdeal {
    match tag {
        GammaIdeal::Zero | GammaIdeal::Rad => GammaIdeal::Rad,
        GammaIdeal::Full => GammaIdeal::Full,
    }
}

/// `√I`, the set of `I`-infinitesimals.
///
/// - `√Zero = Rad`: the infinitesimals are exactly `{(0, q) : q ≥ 0}`.
/// - `√Rad = Rad`: for `x` with `p ≥ 1` the sums `nx` reach the unit and
///   `nx ⊖ ¬x = x ∉ Rad`; for `p = 0` every `nx ⊖ ¬x` is `0`.
/// - `√Full = Full`.
///
/// The agreement with [`gamma_rad`] on every tag is the non-degenerate
/// instance of the radical-equals-infradical theorem.
pub fn gamma_infradical(tag: GammaIdeal) -> GammaIdeal {
    match tag {
        GammaIdeal::Zero | GammaIdeal::Rad => GammaIdeal::Rad,
        GammaIdeal::Full => GammaIdeal::Full,
    }
}

/// Preimage of an ideal of the quotient chain `Ł_k` under the projection
/// `(p, q) ↦ p`. The chain is simple, so the target ideal is either the
/// zero ideal (preimage `Rad`) or everything (preimage `Full`).
pub fn gamma_preimage_rad_projection(target_is_zero_ideal: bool) -> GammaIdeal {
    if target_is_zero_ideal {
        GammaIdeal::Rad
    } else {
        GammaIdeal::Full
    }
}

/// Closed-form classification of the three ideals, with the standard
/// witness `c = (0, 1)` wherever a flag fails.
///
/// - `Zero`: prime (the algebra is a chain), not maximal and not
///   quasimaximal (`¬(nc) = (k, −n)` lies in neither `Zero` nor `Rad`),
///   not radical (`Rad(Zero) = Rad ∋ c`), not hyperradical
///   (`(n+1)c ⊖ nc = c ∉ Zero` for every `n`), but quasihyperradical
///   (every such difference is infinitesimal).
/// - `Rad`: everything holds; the quotient is the simple chain `Ł_k`.
/// - `Full`: improper, hence neither prime nor (quasi)maximal; radical and
///   hyperradical by the degenerate-quotient conventions.
pub fn classify_gamma_ideal(g: &LexGammaAlgebra, tag: GammaIdeal) -> IdealClassFlags {
    let c = LexGammaElement::new(0, 1);
    let witness = |s: &str| Some(s.to_string());
    let _ = g;
    match tag {
        GammaIdeal::Zero => IdealClassFlags {
            prime: true,
            maximal: false,
            quasimaximal: false,
            radical: false,
            hyperradical: false,
            quasihyperradical: true,
            witnesses: IdealWitnesses {
                prime_fail: None,
                maximal_fail: witness(&c.to_string()),
                quasimaximal_fail: witness(&c.to_string()),
                hyperradical_fail: witness(&c.to_string()),
                radical_gap: witness(&c.to_string()),
            },
        },
        GammaIdeal::Rad => IdealClassFlags {
            prime: true,
            maximal: true,
            quasimaximal: true,
            radical: true,
            hyperradical: true,
            quasihyperradical: true,
            witnesses: IdealWitnesses::default(),
        },
        GammaIdeal::Full => IdealClassFlags {
            prime: false,
            maximal: false,
            quasimaximal: false,
            radical: true,
            hyperradical: true,
            quasihyperradical: true,
            witnesses: IdealWitnesses {
                prime_fail: witness("improper"),
                maximal_fail: witness("improper"),
                quasimaximal_fail: witness("improper"),
                hyperradical_fail: None,
                radical_gap: None,
            },
        },
    }
}

/// Windowed brute-force check of a closed-form flag assignment, used by
/// the verification suite: refutations are exact, universal claims are
/// sampled over `|q| ≤ q_bound` with the `n`-quantifier bounded by
/// `n_max`. Returns the list of disagreement descriptions (empty when
/// consistent).
pub fn gamma_flags_window_check(
    g: &LexGammaAlgebra,
    tag: GammaIdeal,
    q_bound: i64,
    n_max: u32,
) -> Result<Vec<String>, IdealError> {
    let flags = classify_gamma_ideal(g, tag);
    let sqrt = gamma_infradical(tag);
    let win = g.window_elements(q_bound);
    let mut bad = Vec::new();

    // prime on the window (plus the properness convention)
    let mut prime_win = tag.is_proper();
    'prime: for &x in &win {
        for &y in &win {
            if !tag.contains(g.ominus(x, y)?) && !tag.contains(g.ominus(y, x)?) {
                prime_win = false;
                break 'prime;
            }
        }
    }
    if prime_win != flags.prime {
        bad.push(format!("prime({tag}) window check = {prime_win}, closed form = {}", flags.prime));
    }

    // the maximality characterisation, both directions, n ≤ n_max
    let mut maximal_win = true;
    for &x in &win {
        let mut exists = false;
        for n in 1..=n_max {
            if tag.contains(g.neg(g.nmul(n, x)?)?) {
                exists = true;
                break;
            }
        }
        if (!tag.contains(x)) != exists {
            maximal_win = false;
            break;
        }
    }
    if maximal_win != flags.maximal {
        bad.push(format!(
            "maximal({tag}) window check = {maximal_win}, closed form = {}",
            flags.maximal
        ));
    }

    // quasimaximality against √I
    let mut quasimaximal_win = true;
    for &x in &win {
        let mut exists = false;
        for n in 1..=n_max {
            if sqrt.contains(g.neg(g.nmul(n, x)?)?) {
                exists = true;
                break;
            }
        }
        if (!tag.contains(x)) != exists {
            quasimaximal_win = false;
            break;
        }
    }
    if quasimaximal_win != flags.quasimaximal {
        bad.push(format!(
            "quasimaximal({tag}) window check = {quasimaximal_win}, closed form = {}",
            flags.quasimaximal
        ));
    }

    // hyperradical / quasihyperradical difference chains
    let mut hyper_win = true;
    let mut quasihyper_win = true;
    for &x in &win {
        let mut in_i = false;
        let mut in_sqrt = false;
        for n in 0..=n_max {
            let diff = g.ominus(g.nmul(n + 1, x)?, g.nmul(n, x)?)?;
            in_i |= tag.contains(diff);
            in_sqrt |= sqrt.contains(diff);
        }
        hyper_win &= in_i;
        quasihyper_win &= in_sqrt;
    }
    if hyper_win != flags.hyperradical {
        bad.push(format!(
            "hyperradical({tag}) window check = {hyper_win}, closed form = {}",
            flags.hyperradical
        ));
    }
    if quasihyper_win != flags.quasihyperradical {
        bad.push(format!(
            "quasihyperradical({tag}) window check = {quasihyper_win}, closed form = {}",
            flags.quasihyperradical
        ));
    }

    // radical: Rad(I) and √I agree and fix exactly Rad and Full
    let rad = gamma_rad(tag);
    if (rad == tag) != flags.radical {
        bad.push(format!("radical({tag}) = {}, but Rad({tag}) = {rad}", flags.radical));
    }
    if gamma_infradical(tag) != rad {
        bad.push(format!("Rad({tag}) and the infradical disagree"));
    }

    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rad_and_infradical_agree_on_all_tags() {
        for tag in [GammaIdeal::Zero, GammaIdeal::Rad, GammaIdeal::Full] {
            assert_eq!(gamma_rad(tag), gamma_infradical(tag));
        }
        assert_eq!(gamma_rad(GammaIdeal::Zero), GammaIdeal::Rad);
    }

    #[test]
    fn closed_forms_survive_the_window_check() {
        for k in 1..=3 {
            let g = LexGammaAlgebra::new(k).unwrap();
            for tag in g.ideals() {
                let bad = gamma_flags_window_check(&g, tag, 64, 64).unwrap();
                assert!(bad.is_empty(), "k = {k}, tag = {tag}: {bad:?}");
            }
        }
    }

    #[test]
    fn chang_zero_ideal_is_the_standard_non_reversal_witness() {
        let g = LexGammaAlgebra::new(1).unwrap();
        let flags = classify_gamma_ideal(&g, GammaIdeal::Zero);
        assert!(flags.prime && !flags.maximal, "prime but not maximal");
        assert!(flags.quasihyperradical && !flags.hyperradical);
        assert!(!flags.radical && !flags.quasimaximal);
        assert!(flags.implication_lattice_violations().is_empty());
    }

    #[test]
    fn all_gamma_flags_respect_the_implication_lattice() {
        for k in 1..=3 {
            let g = LexGammaAlgebra::new(k).unwrap();
            for tag in g.ideals() {
                let flags = classify_gamma_ideal(&g, tag);
                assert!(
                    flags.implication_lattice_violations().is_empty(),
                    "k = {k}, {tag}"
                );
            }
        }
    }

    #[test]
    fn preimage_laws_under_the_rad_projection() {
        // φ: Γ → Ł_k the quotient projection; target ideals {0} and full
        for target_zero in [true, false] {
            let pre = gamma_preimage_rad_projection(target_zero);
            // Rad law: φ⁻¹Rad(I) = Rad(φ⁻¹I); the chain is simple so
            // Rad({0}) = {0} and Rad(full) = full
            let lhs = gamma_preimage_rad_projection(target_zero);
            let rhs = gamma_rad(pre);
            assert_eq!(lhs, rhs);
            // infradical law: φ⁻¹√I = √(φ⁻¹I)
            assert_eq!(lhs, gamma_infradical(pre));
        }
    }
}
