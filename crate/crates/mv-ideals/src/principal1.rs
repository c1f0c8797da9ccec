//! Principal ideals of the free one-variable algebra, with membership
//! semantics `g ∈ ⟨f⟩ ⟺ ∃k ≥ 1, g ≤ kf` pointwise.
//!
//! Membership is decided by two independent routes that must agree:
//!
//! - the zero-set criterion `g ∈ ⟨f⟩ ⟺ V(f) ⊆ V(g)`. This is a derived
//!   lemma for one-variable PL functions, not a quoted fact: away from a
//!   neighbourhood of `V(f)` the sums `kf` truncate to `1`, and near a
//!   zero of `f` the integer slopes bound `g` by a multiple of `f`. It is
//!   only trusted because the witness search validates it on every call.
//! - a bounded search for a verified witness `k ≤ n_max` with `g ≤ kf`,
//!   exact on each candidate.
//!
//! A witness found with the criterion refuting, or a stationary sum that
//! never covers `g` with the criterion affirming, is an inconsistency
//! error (an implementation bug, never expected); an exhausted bound with
//! the criterion affirming yields the honest `UnknownUpTo` verdict.

use serde::Serialize;

use mv_terms::{ClosedSet1, Pl1};

use crate::error::IdealError;

/// Outcome of a principal-ideal membership query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Membership {
    /// Member, with a verified witness `g ≤ kf`.
    Yes { witness: u32 },
    /// Not a member (the zero-set criterion refutes, and no witness
    /// exists below the bound).
    No,
    /// The criterion affirms but no witness was found within the bound.
    UnknownUpTo(u32),
}

impl Membership {
    pub fn holds(&self) -> bool {
        matches!(self, Membership::Yes { .. })
    }
}

/// The ideal `⟨f⟩` of the one-variable function algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalIdeal1 {
    generator: Pl1,
}

impl PrincipalIdeal1 {
    pub fn new(generator: Pl1) -> Self {
        Self { generator }
    }

    pub fn generator(&self) -> &Pl1 {
        &self.generator
    }

    /// `V(⟨f⟩) = f⁻¹(0)`.
    pub fn zero_locus(&self) -> ClosedSet1 {
        self.generator.zero_set()
    }

    /// `⟨f⟩` is proper iff `f` has a zero: on a compact carrier, a
    /// zero-free `f` has `kf = 1` for large `k`.
    pub fn is_proper(&self) -> bool {
        !self.zero_locus().is_empty()
    }

    /// Dual-route membership; see the module docs.
    pub fn member(&self, g: &Pl1, n_max: u32) -> Result<Membership, IdealError> {
        let criterion = self.zero_locus().is_subset(&g.zero_set());
        let mut kf = Pl1::zero();
        let mut stationary = false;
        let mut witness = None;
        for k in 1..=n_max {
            let next = kf.oplus(&self.generator);
            stationary = next == kf && k > 1;
            kf = next;
            if g.leq(&kf) {
                witness = Some(k);
                break;
            }
            if stationary {
                break;
            }
        }
        match (criterion, witness) {
            (true, Some(k)) => Ok(Membership::Yes { witness: k }),
            (false, None) => Ok(Membership::No),
            (true, None) if stationary => Err(IdealError::Inconsistency(
                "zero-set criterion affirms membership but the sums went stationary below g".into(),
            )),
            (true, None) => Ok(Membership::UnknownUpTo(n_max)),
            (false, Some(k)) => Err(IdealError::Inconsistency(format!(
                "witness k = {k} found but the zero-set criterion refutes membership"
            ))),
        }
    }
}

/// Whether the class of `g` is archimedean in the quotient of the
/// one-variable function algebra by `⟨f⟩`.
///
/// Exact route: the quotient is the algebra of restrictions to `V(f)`
/// (principal ideals are vanishing ideals of their zero loci), and an
/// element of a function algebra on a compact carrier is archimedean iff
/// its zero set is relatively open. On each nondegenerate component of
/// `V(f)` that means: the zero set of `g` covers it or misses it entirely;
/// isolated points impose nothing.
///
/// Bounded route: search `n ≤ n_max` with `(n+1)g ⊖ ng ∈ ⟨f⟩`. A found
/// witness with the exact route refuting is an inconsistency error.
pub fn class_archimedean_in_quotient(
    f: &Pl1,
    g: &Pl1,
    n_max: u32,
) -> Result<(bool, Option<u32>), IdealError> {
    let vf = f.zero_set();
    let zg = g.zero_set();
    let exact = vf.components().iter().all(|(a, b)| {
        if a == b {
            return true;
        }
        let comp = ClosedSet1::interval(a.clone(), b.clone());
        let inter = comp.intersect(&zg);
        inter.is_empty() || inter == comp
    });

    let ideal = PrincipalIdeal1::new(f.clone());
    let mut bounded_witness = None;
    for n in 0..=n_max {
        let diff = g.nmul(n + 1).ominus(&g.nmul(n));
        if ideal.member(&diff, n_max)?.holds() {
            bounded_witness = Some(n);
            break;
        }
    }
    if bounded_witness.is_some() && !exact {
        return Err(IdealError::Inconsistency(format!(
            "stationary witness n = {} found but the relative zero set is not open",
            bounded_witness.unwrap()
        )));
    }
    Ok((exact, bounded_witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mv_terms::rational::q;
    use mv_terms::{parse_term, to_pl1};

    fn pl(s: &str) -> Pl1 {
        to_pl1(&parse_term(s).unwrap()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let x = PrincipalIdeal1::new(pl("x"));
        // max(0, 2x − 1) ≤ x on [0, 1]
        assert_eq!(x.member(&pl("x . x"), 64).unwrap(), Membership::Yes { witness: 1 });

        let xx = PrincipalIdeal1::new(pl("x . x"));
        // x(1/4) > 0 while x·x vanishes on [0, 1/2]
        assert_eq!(xx.member(&pl("x"), 64).unwrap(), Membership::No);

        assert!(xx.member(&pl("x . x"), 64).unwrap().holds());
    }

    #[test]
    fn witness_is_minimal_in_simple_cases() {
        let x = PrincipalIdeal1::new(pl("x"));
        match x.member(&pl("x + x + x"), 64).unwrap() {
            Membership::Yes { witness } => assert_eq!(witness, 3),
            other => panic!("expected membership, got {other:?}"),
        }
    }

    #[test]
    fn zero_free_generator_is_improper() {
        let i = PrincipalIdeal1::new(pl("x \\/ !x"));
        assert!(!i.is_proper());
        // everything is a member, including the constant 1
        assert!(i.member(&Pl1::one(), 64).unwrap().holds());
    }

    #[test]
    fn zero_generator_gives_the_zero_ideal() {
        let i = PrincipalIdeal1::new(Pl1::zero());
        assert!(i.member(&Pl1::zero(), 8).unwrap().holds());
        assert_eq!(i.member(&pl("x"), 8).unwrap(), Membership::No);
    }

    #[test]
    fn criterion_agrees_with_witness_search_on_sample_pairs() {
        let corpus = ["0", "1", "x", "!x", "x . x", "x + x", "x \\/ !x", "d(x, !x)", "!x . !x"];
        for f in corpus {
            let ideal = PrincipalIdeal1::new(pl(f));
            for g in corpus {
                // any Yes carries a verified witness; any disagreement
                // would surface as an inconsistency error here
                let verdict = ideal.member(&pl(g), 64).unwrap();
                if let Membership::Yes { witness } = verdict {
                    assert!(pl(g).leq(&pl(f).nmul(witness)));
                }
            }
        }
    }

    #[test]
    fn quotient_archimedean_classes() {
        // modulo ⟨x⟩ the carrier is the point {0}: every class archimedean
        let (exact, bounded) = class_archimedean_in_quotient(&pl("x"), &pl("x . x"), 16).unwrap();
        assert!(exact);
        assert!(bounded.is_some());

        // modulo ⟨x . x⟩ the carrier is [0, 1/2]; the class of x has
        // relative zero set {0}, not open in [0, 1/2]
        let (exact, bounded) = class_archimedean_in_quotient(&pl("x . x"), &pl("x"), 16).unwrap();
        assert!(!exact);
        assert!(bounded.is_none());

        // the zero class is archimedean in any quotient
        let (exact, _) = class_archimedean_in_quotient(&pl("x . x"), &Pl1::zero(), 4).unwrap();
        assert!(exact);
    }

    #[test]
    fn unknown_verdict_when_the_bound_is_too_small() {
        let x = PrincipalIdeal1::new(pl("x"));
        // needs k = 3, so a bound of 2 must answer UnknownUpTo(2)
        assert_eq!(
            x.member(&pl("x + x + x"), 2).unwrap(),
            Membership::UnknownUpTo(2)
        );
    }

    #[test]
    fn interval_zero_sets_behave() {
        let i = PrincipalIdeal1::new(pl("x . x"));
        assert_eq!(i.zero_locus(), ClosedSet1::interval(q(0, 1), q(1, 2)));
        // !x . !x vanishes on [1/2, 1]: not a member of ⟨x . x⟩
        assert_eq!(i.member(&pl("!x . !x"), 64).unwrap(), Membership::No);
    }
}
