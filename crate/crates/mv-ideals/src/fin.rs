use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use mv_core::{FiniteMvAlgebra, Morphism};

use crate::error::IdealError;
use crate::flags::{IdealClassFlags, IdealWitnesses};

/// Default carrier-size bound for exhaustive ideal enumeration. The bitset
/// representation caps carriers at 128 elements outright.
pub const DEFAULT_ENUMERATION_BOUND: usize = 64;

const HARD_CAP: usize = 128;

/// An ideal of a finite MV-algebra: a subset containing `0`, downward
/// closed, and closed under `⊕`, stored as a bitset over the carrier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFin {
    algebra: Arc<FiniteMvAlgebra>,
    bits: u128,
}

impl IdealFin {
    /// Validates all three closure conditions.
    pub fn new(algebra: Arc<FiniteMvAlgebra>, bits: u128) -> Result<Self, IdealError> {
        let m = algebra.size();
        if m > HARD_CAP {
            return Err(IdealError::ResourceLimit { size: m, bound: HARD_CAP });
        }
        if bits >> m != 0 {
            return Err(IdealError::NotAnIdeal("member bit outside the carrier".into()));
        }
        if bits & 1 << algebra.zero() == 0 {
            return Err(IdealError::NotAnIdeal("must contain 0".into()));
        }
        for x in algebra.elements() {
            if bits & 1 << x == 0 {
                continue;
            }
            for y in algebra.elements() {
                if bits & 1 << y != 0 && bits & 1 << algebra.op(x, y) == 0 {
                    return Err(IdealError::NotAnIdeal(format!("not closed under + at ({x}, {y})")));
                }
                if algebra.leq(y, x) && bits & 1 << y == 0 {
                    return Err(IdealError::NotAnIdeal(format!(
                        "not downward closed: {y} <= {x}"
                    )));
                }
            }
        }
        Ok(Self { algebra, bits })
    }

    pub fn zero(algebra: &Arc<FiniteMvAlgebra>) -> Self {
        Self { algebra: Arc::clone(algebra), bits: 1 << algebra.zero() }
    }

    pub fn full(algebra: &Arc<FiniteMvAlgebra>) -> Self {
        let m = algebra.size();
        let bits = if m == 128 { u128::MAX } else { (1u128 << m) - 1 };
        Self { algebra: Arc::clone(algebra), bits }
    }

    /// The least ideal containing `gens`: the fixed point of alternating
    /// downward closure and `⊕`-closure.
    pub fn generate(algebra: &Arc<FiniteMvAlgebra>, gens: &[usize]) -> Result<Self, IdealError> {
        let m = algebra.size();
        if m > HARD_CAP {
            return Err(IdealError::ResourceLimit { size: m, bound: HARD_CAP });
        }
        for &g in gens {
            algebra.check_element(g)?;
        }
        let mut bits: u128 = 1 << algebra.zero();
        for &g in gens {
            bits |= 1 << g;
        }
        loop {
            let before = bits;
            for x in algebra.elements() {
                if bits & 1 << x == 0 {
                    continue;
                }
                for y in algebra.elements() {
                    if bits & 1 << y != 0 {
                        bits |= 1 << algebra.op(x, y);
                    }
                    if algebra.leq(y, x) {
                        bits |= 1 << y;
                    }
                }
            }
            if bits == before {
                return Ok(Self { algebra: Arc::clone(algebra), bits });
            }
        }
    }

    pub fn algebra(&self) -> &Arc<FiniteMvAlgebra> {
        &self.algebra
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.bits & 1 << x != 0
    }

    pub fn card(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_proper(&self) -> bool {
        self.bits != Self::full(&self.algebra).bits
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.bits == 1 << self.algebra.zero()
    }

    pub fn members(&self) -> Vec<usize> {
        self.algebra.elements().filter(|&x| self.contains(x)).collect()
    }

    pub fn is_subset(&self, other: &IdealFin) -> bool {
        self.bits & !other.bits == 0
    }

    /// Intersection of ideals is an ideal; no re-closure needed.
    pub fn intersect(&self, other: &IdealFin) -> Result<IdealFin, IdealError> {
        if self.algebra != other.algebra {
            return Err(IdealError::AlgebraMismatch);
        }
        Ok(Self { algebra: Arc::clone(&self.algebra), bits: self.bits & other.bits })
    }

    /// Join in the ideal lattice: the ideal generated by the union.
    pub fn join(&self, other: &IdealFin) -> Result<IdealFin, IdealError> {
        if self.algebra != other.algebra {
            return Err(IdealError::AlgebraMismatch);
        }
        let gens: Vec<usize> = self
            .algebra
            .elements()
            .filter(|&x| (self.bits | other.bits) & 1 << x != 0)
            .collect();
        Self::generate(&self.algebra, &gens)
    }

    /// Prime: proper, and `x⊖y ∈ I` or `y⊖x ∈ I` for every pair.
    pub fn is_prime(&self) -> bool {
        self.prime_counterexample().is_none() && self.is_proper()
    }

    fn prime_counterexample(&self) -> Option<(usize, usize)> {
        let a = &self.algebra;
        for x in a.elements() {
            for y in a.elements() {
                if !self.contains(a.ominus(x, y)) && !self.contains(a.ominus(y, x)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// The first-order maximality characterisation, both directions as
    /// written: `I` maximal ⟺ for every `x`, `x ∉ I ⟺ ∃n ≥ 1, ¬(nx) ∈ I`.
    pub fn is_maximal(&self) -> bool {
        self.maximal_counterexample().is_none()
    }

    fn maximal_counterexample(&self) -> Option<usize> {
        let a = &self.algebra;
        for x in a.elements() {
            let exists = self.exists_neg_multiple_in(x, |i, y| i.contains(y));
            if (!self.contains(x)) != exists {
                return Some(x);
            }
        }
        None
    }

    /// `∃n ∈ 1..=size` with `¬(nx)` satisfying `pred`. The sum `nx` is
    /// nondecreasing and stabilizes by `n = size`, so the bound decides
    /// the unbounded existential.
    fn exists_neg_multiple_in(
        &self,
        x: usize,
        pred: impl Fn(&IdealFin, usize) -> bool,
    ) -> bool {
        let a = &self.algebra;
        let mut acc = a.zero();
        for _ in 1..=a.size() {
            acc = a.op(acc, x);
            if pred(self, a.neg(acc)) {
                return true;
            }
        }
        false
    }

    /// The order-theoretic maximality definition: proper with no strictly
    /// larger proper ideal. Used as the independent cross-check for
    /// [`is_maximal`]; `all_ideals` must be the complete ideal list.
    ///
    /// [`is_maximal`]: IdealFin::is_maximal
    pub fn is_maximal_by_order(&self, all_ideals: &[IdealFin]) -> bool {
        self.is_proper()
            && !all_ideals.iter().any(|j| {
                j.is_proper() && self.is_subset(j) && j.bits != self.bits
            })
    }

    /// The infradical `√I`: all `I`-infinitesimals
    /// `{x : nx ⊖ ¬x ∈ I for all n ≥ 0}`, with the quantifier decided at
    /// `n ≤ size`. The result always contains `I` and is an ideal; both
    /// facts are asserted.
    pub fn infradical(&self) -> IdealFin {
        let a = &self.algebra;
        let mut bits: u128 = 0;
        'next: for x in a.elements() {
            let mut acc = a.zero();
            for _ in 0..=a.size() {
                if !self.contains(a.ominus(acc, a.neg(x))) {
                    continue 'next;
                }
                let next = a.op(acc, x);
                if next == acc {
                    break;
                }
                acc = next;
            }
            bits |= 1 << x;
        }
        assert_eq!(self.bits & !bits, 0, "an ideal must sit inside its infradical");
        IdealFin::new(Arc::clone(a), bits).expect("the set of I-infinitesimals is an ideal")
    }

    /// The radical `Rad(I)`: intersection of all maximal ideals containing
    /// `I`. For an improper ideal this returns the whole algebra (there is
    /// nothing to intersect).
    pub fn rad(&self) -> Result<IdealFin, IdealError> {
        if !self.is_proper() {
            return Ok(Self::full(&self.algebra));
        }
        let mut bits = Self::full(&self.algebra).bits;
        let mut found = false;
        for m in enumerate_ideals(&self.algebra, HARD_CAP)? {
            if self.is_subset(&m) && m.is_maximal() {
                bits &= m.bits;
                found = true;
            }
        }
        if !found {
            // unreachable on a finite algebra: every proper ideal extends
            // to a maximal one by finiteness
            return Ok(Self::full(&self.algebra));
        }
        Ok(Self { algebra: Arc::clone(&self.algebra), bits })
    }

    /// Radicality, decided by both operators: `I = Rad(I)` and `I = √I`
    /// must agree; a mismatch is an internal inconsistency.
    pub fn is_radical(&self) -> Result<bool, IdealError> {
        let via_rad = self.rad()?.bits == self.bits;
        let via_infrad = self.infradical().bits == self.bits;
        if via_rad != via_infrad {
            return Err(IdealError::Inconsistency(format!(
                "radical via Rad = {via_rad} but via the infradical = {via_infrad}"
            )));
        }
        Ok(via_rad)
    }

    /// Quasimaximal: for every `x`, `x ∉ I ⟺ ∃n ≥ 1, ¬(nx) ∈ √I`.
    /// Both directions are tested literally against the infradical.
    pub fn is_quasimaximal(&self) -> bool {
        self.quasimaximal_counterexample().is_none()
    }

    fn quasimaximal_counterexample(&self) -> Option<usize> {
        let sqrt = self.infradical();
        let a = &self.algebra;
        for x in a.elements() {
            let exists = self.exists_neg_multiple_in(x, |_, y| sqrt.contains(y));
            if (!self.contains(x)) != exists {
                return Some(x);
            }
        }
        None
    }

    /// Hyperradical: for every `x` some `n` has `(n+1)x ⊖ nx ∈ I`
    /// (the quotient is then hyperarchimedean). On a finite algebra the
    /// sum sequence stabilizes, so every ideal is hyperradical; the
    /// predicate is still computed honestly.
    pub fn is_hyperradical(&self) -> bool {
        self.hyperradical_counterexample().is_none()
    }

    fn hyperradical_counterexample(&self) -> Option<usize> {
        self.hyperradical_counterexample_in(|i, d| i.contains(d))
    }

    fn hyperradical_counterexample_in(
        &self,
        member: impl Fn(&IdealFin, usize) -> bool,
    ) -> Option<usize> {
        let a = &self.algebra;
        'next: for x in a.elements() {
            let mut acc = a.zero();
            for _ in 0..=a.size() {
                let next = a.op(acc, x);
                if member(self, a.ominus(next, acc)) {
                    continue 'next;
                }
                acc = next;
            }
            return Some(x);
        }
        None
    }

    /// Quasihyperradical: for every `x` some `n` has `(n+1)x ⊖ nx ∈ √I`.
    /// Computed directly and compared with "√I is hyperradical"; the two
    /// are equivalent and a mismatch is an internal inconsistency.
    pub fn is_quasihyperradical(&self) -> Result<bool, IdealError> {
        let sqrt = self.infradical();
        let direct = self
            .hyperradical_counterexample_in(|_, d| sqrt.contains(d))
            .is_none();
        let via_sqrt = sqrt.is_hyperradical();
        if direct != via_sqrt {
            return Err(IdealError::Inconsistency(format!(
                "quasihyperradical directly = {direct} but the infradical is hyperradical = {via_sqrt}"
            )));
        }
        Ok(direct)
    }

    /// The quotient by the congruence `x ~ y ⟺ d(x, y) ∈ I`, with the
    /// projection morphism. Class indices are ordered by least member.
    pub fn quotient(&self) -> Result<(Arc<FiniteMvAlgebra>, Morphism), IdealError> {
        let a = &self.algebra;
        let m = a.size();
        let mut class_of = vec![usize::MAX; m];
        let mut reps: Vec<usize> = Vec::new();
        for x in 0..m {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            for y in x..m {
                if class_of[y] == usize::MAX && self.contains(a.dist(x, y)) {
                    class_of[y] = c;
                }
            }
            reps.push(x);
        }
        let k = reps.len();
        let mut oplus = vec![vec![0usize; k]; k];
        for (i, &ri) in reps.iter().enumerate() {
            for (j, &rj) in reps.iter().enumerate() {
                oplus[i][j] = class_of[a.op(ri, rj)];
            }
        }
        let neg = reps.iter().map(|&r| class_of[a.neg(r)]).collect();
        let q = Arc::new(FiniteMvAlgebra::from_tables(k, oplus, neg, class_of[a.zero()])?);
        let proj = Morphism::new(Arc::clone(a), Arc::clone(&q), class_of)?;
        Ok((q, proj))
    }

    /// Preimage of an ideal of the morphism's target. The preimage of an
    /// ideal under a morphism is always an ideal.
    pub fn preimage(phi: &Morphism, target_ideal: &IdealFin) -> Result<IdealFin, IdealError> {
        if *target_ideal.algebra() != *phi.target() {
            return Err(IdealError::AlgebraMismatch);
        }
        let src = phi.source();
        let mut bits: u128 = 0;
        for x in src.elements() {
            if target_ideal.contains(phi.apply(x)) {
                bits |= 1 << x;
            }
        }
        IdealFin::new(Arc::clone(src), bits)
    }

    /// All six class predicates, with counterwitnesses where available.
    pub fn classify(&self) -> Result<IdealClassFlags, IdealError> {
        let prime_ce = self.prime_counterexample();
        let maximal_ce = self.maximal_counterexample();
        let quasimaximal_ce = self.quasimaximal_counterexample();
        let hyper_ce = self.hyperradical_counterexample();
        let radical = self.is_radical()?;
        let rad = self.rad()?;
        let radical_gap = if radical {
            None
        } else {
            self.algebra
                .elements()
                .find(|&x| rad.contains(x) && !self.contains(x))
                .map(|x| x.to_string())
        };
        Ok(IdealClassFlags {
            prime: prime_ce.is_none() && self.is_proper(),
            maximal: maximal_ce.is_none(),
            quasimaximal: quasimaximal_ce.is_none(),
            radical,
            hyperradical: hyper_ce.is_none(),
            quasihyperradical: self.is_quasihyperradical()?,
            witnesses: IdealWitnesses {
                prime_fail: prime_ce.map(|(x, y)| format!("({x}, {y})")),
                maximal_fail: maximal_ce.map(|x| x.to_string()),
                quasimaximal_fail: quasimaximal_ce.map(|x| x.to_string()),
                hyperradical_fail: hyper_ce.map(|x| x.to_string()),
                radical_gap,
            },
        })
    }
}

/// Verification record for the radical/infradical preimage laws of a
/// morphism `φ` and a target ideal `I`: `φ⁻¹Rad(I) = Rad(φ⁻¹I)` requires
/// `φ` surjective and is skipped otherwise; `φ⁻¹√I = √(φ⁻¹I)` holds for
/// any morphism.
#[derive(Debug, Clone, Serialize)]
pub struct PreimageLawReport {
    pub surjective: bool,
    pub rad_law: Option<bool>,
    pub infrad_law: bool,
}

impl PreimageLawReport {
    pub fn check(phi: &Morphism, target_ideal: &IdealFin) -> Result<Self, IdealError> {
        let pre = IdealFin::preimage(phi, target_ideal)?;
        let surjective = phi.is_surjective();
        let rad_law = if surjective {
            let lhs = IdealFin::preimage(phi, &target_ideal.rad()?)?;
            let rhs = pre.rad()?;
            Some(lhs.bits == rhs.bits)
        } else {
            None
        };
        let lhs = IdealFin::preimage(phi, &target_ideal.infradical())?;
        let rhs = pre.infradical();
        Ok(Self { surjective, rad_law, infrad_law: lhs.bits == rhs.bits })
    }

    pub fn all_hold(&self) -> bool {
        self.rad_law.unwrap_or(true) && self.infrad_law
    }
}

/// All ideals of the algebra, as the join-closure of the principal
/// ideals, sorted by cardinality then bitset. Errors when the carrier
/// exceeds `bound`.
pub fn enumerate_ideals(
    algebra: &Arc<FiniteMvAlgebra>,
    bound: usize,
) -> Result<Vec<IdealFin>, IdealError> {
    let m = algebra.size();
    if m > bound.min(HARD_CAP) {
        return Err(IdealError::ResourceLimit { size: m, bound: bound.min(HARD_CAP) });
    }
    let mut seen: BTreeSet<u128> = BTreeSet::new();
    seen.insert(IdealFin::zero(algebra).bits);
    let principals: Vec<IdealFin> = algebra
        .elements()
        .map(|x| IdealFin::generate(algebra, &[x]))
        .collect::<Result<_, _>>()?;
    for p in &principals {
        seen.insert(p.bits);
    }
    let mut work: Vec<u128> = seen.iter().copied().collect();
    while let Some(bits) = work.pop() {
        let cur = IdealFin { algebra: Arc::clone(algebra), bits };
        for p in &principals {
            let joined = cur.join(p)?;
            if seen.insert(joined.bits) {
                work.push(joined.bits);
            }
        }
    }
    let mut out: Vec<IdealFin> = seen
        .into_iter()
        .map(|bits| IdealFin { algebra: Arc::clone(algebra), bits })
        .collect();
    out.sort_by_key(|i| (i.card(), i.bits));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> Arc<FiniteMvAlgebra> {
        Arc::new(FiniteMvAlgebra::chain(n).unwrap())
    }

    fn product(a: usize, b: usize) -> Arc<FiniteMvAlgebra> {
        Arc::new(FiniteMvAlgebra::product(
            &FiniteMvAlgebra::chain(a).unwrap(),
            &FiniteMvAlgebra::chain(b).unwrap(),
        ))
    }

    /// Brute-force oracle: scan every subset of a small carrier for the
    /// ideal conditions. Independent of the join-closure implementation.
    fn brute_force_ideals(a: &Arc<FiniteMvAlgebra>) -> Vec<u128> {
        let m = a.size();
        assert!(m <= 12, "oracle is exponential");
        let mut out = Vec::new();
        'subsets: for bits in 0..(1u128 << m) {
            if bits & 1 << a.zero() == 0 {
                continue;
            }
            for x in 0..m {
                if bits & 1 << x == 0 {
                    continue;
                }
                for y in 0..m {
                    if bits & 1 << y != 0 && bits & 1 << a.op(x, y) == 0 {
                        continue 'subsets;
                    }
                    if a.leq(y, x) && bits & 1 << y == 0 {
                        continue 'subsets;
                    }
                }
            }
            out.push(bits);
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force_oracle() {
        for a in [chain(1), chain(4), product(1, 2), product(2, 2)] {
            let fast: Vec<u128> = enumerate_ideals(&a, 64)
                .unwrap()
                .iter()
                .map(|i| i.bits())
                .collect();
            let mut slow = brute_force_ideals(&a);
            slow.sort_by_key(|b| (b.count_ones(), *b));
            assert_eq!(fast, slow);
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ideals(&chain(5), 64).unwrap().len(), 2);
        assert_eq!(enumerate_ideals(&product(1, 2), 64).unwrap().len(), 4);
        assert_eq!(enumerate_ideals(&chain(1), 64).unwrap().len(), 2);
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let a = product(5, 5);
        assert!(matches!(
            enumerate_ideals(&a, 16),
            Err(IdealError::ResourceLimit { size: 36, bound: 16 })
        ));
    }

    #[test]
    fn generate_examples() {
        let a = chain(4);
        assert!(!IdealFin::generate(&a, &[1]).unwrap().is_proper());
        assert!(IdealFin::generate(&a, &[]).unwrap().is_zero_ideal());

        let p = product(1, 2);
        let i = IdealFin::generate(&p, &[FiniteMvAlgebra::pair_index(0, 1, 3)]).unwrap();
        // {0} × chain(2): exactly the pairs with first coordinate 0
        assert_eq!(i.members(), vec![0, 1, 2]);
    }

    #[test]
    fn primality() {
        assert!(IdealFin::zero(&chain(4)).is_prime());
        let p = product(1, 2);
        let zero = IdealFin::zero(&p);
        assert!(!zero.is_prime());
        let (x, y) = zero.prime_counterexample().unwrap();
        assert!(!zero.contains(p.ominus(x, y)) && !zero.contains(p.ominus(y, x)));
        assert!(!IdealFin::full(&p).is_prime());
    }

    #[test]
    fn maximality_two_routes_agree() {
        for a in [chain(6), product(1, 2), product(2, 3)] {
            let all = enumerate_ideals(&a, 64).unwrap();
            for i in &all {
                assert_eq!(
                    i.is_maximal(),
                    i.is_maximal_by_order(&all),
                    "maximality routes disagree on {:?} of {:?}",
                    i.members(),
                    a
                );
            }
        }
    }

    #[test]
    fn maximality_examples() {
        let p = product(1, 2);
        let i = IdealFin::generate(&p, &[FiniteMvAlgebra::pair_index(0, 2, 3)]).unwrap();
        assert!(i.is_maximal()); // quotient is the two-element algebra
        assert!(IdealFin::zero(&chain(6)).is_maximal());
    }

    #[test]
    fn rad_and_infradical() {
        let p = product(1, 2);
        let zero = IdealFin::zero(&p);
        assert!(zero.rad().unwrap().is_zero_ideal()); // two maximal ideals meet in {0}
        assert!(zero.infradical().is_zero_ideal()); // no nonzero infinitesimals
        for i in enumerate_ideals(&p, 64).unwrap() {
            if i.is_maximal() {
                assert_eq!(i.rad().unwrap().bits(), i.bits());
            }
            // every ideal of a finite algebra is radical
            assert!(i.is_radical().unwrap());
        }
        assert!(!IdealFin::full(&p).rad().unwrap().is_proper());
    }

    #[test]
    fn finite_ideals_are_hyperradical_and_quasihyperradical() {
        for a in [chain(4), product(2, 2)] {
            for i in enumerate_ideals(&a, 64).unwrap() {
                assert!(i.is_hyperradical());
                assert!(i.is_quasihyperradical().unwrap());
                if i.is_maximal() {
                    assert!(i.is_quasimaximal());
                }
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let a = chain(4);
        let (q, _) = IdealFin::zero(&a).quotient().unwrap();
        assert_eq!(q.size(), 5);
        assert!(q.check_axioms().is_empty());

        let p = product(1, 2);
        let i = IdealFin::generate(&p, &[FiniteMvAlgebra::pair_index(0, 2, 3)]).unwrap();
        let (q, proj) = i.quotient().unwrap();
        assert_eq!(q.size(), 2);
        assert!(q.check_axioms().is_empty());
        assert!(proj.is_surjective());
        // the kernel of the projection is the ideal itself
        for x in p.elements() {
            assert_eq!(proj.apply(x) == q.zero(), i.contains(x));
        }
    }

    #[test]
    fn preimage_laws_for_projections() {
        let a = chain(1);
        let b = chain(2);
        let p = Arc::new(FiniteMvAlgebra::product(&a, &b));
        let (_, second) = mv_core::product_projections(&a, &b, &p).unwrap();
        let zero_b = IdealFin::zero(&b);
        let pre = IdealFin::preimage(&second, &zero_b).unwrap();
        // chain(1) × {0}
        assert_eq!(pre.members(), vec![0, 3]);
        let report = PreimageLawReport::check(&second, &zero_b).unwrap();
        assert!(report.surjective && report.all_hold());

        // identity morphism: both laws trivially hold on all ideals
        let id = Morphism::identity(&p);
        for i in enumerate_ideals(&p, 64).unwrap() {
            assert!(PreimageLawReport::check(&id, &i).unwrap().all_hold());
        }
    }

    #[test]
    fn product_zero_ideal_is_radical_but_not_prime() {
        let p = product(1, 2);
        let flags = IdealFin::zero(&p).classify().unwrap();
        assert!(flags.radical && !flags.prime);
        assert!(flags.witnesses.prime_fail.is_some());
        assert!(flags.implication_lattice_violations().is_empty());
    }

    #[test]
    fn algebra_class_of_bank_samples() {
        let flags = crate::flags::algebra_class(&chain(6)).unwrap();
        assert!(flags.simple && flags.semisimple && flags.chain);
        assert!(flags.hyperarchimedean && flags.quasihyperarchimedean);

        let flags = crate::flags::algebra_class(&product(1, 2)).unwrap();
        assert!(flags.semisimple && !flags.chain && !flags.simple);
        assert!(flags.hyperarchimedean);
    }

    #[test]
    fn ideal_validation_rejects_non_ideals() {
        let a = chain(4);
        // {0, 1} is downward closed but 1/4 + 1/4 = 1/2 escapes
        assert!(matches!(
            IdealFin::new(Arc::clone(&a), 0b00011),
            Err(IdealError::NotAnIdeal(_))
        ));
        // missing zero
        assert!(IdealFin::new(Arc::clone(&a), 0b00010).is_err());
        // not downward closed
        assert!(IdealFin::new(Arc::clone(&a), 0b00101).is_err());
    }
}
