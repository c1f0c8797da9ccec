use serde::Serialize;

use crate::algebra::FiniteMvAlgebra;

/// Classification of a single element.
///
/// Conventions: `0` counts as infinitesimal (mirroring nilpotents in ring
/// theory), every archimedean element is quasiarchimedean, and the only
/// archimedean infinitesimal is `0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ElementClass {
    pub infinitesimal: bool,
    pub archimedean: bool,
    pub quasiarchimedean: bool,
    /// Least `n` with `(n+1)x ⊖ nx = 0` (archimedean case) or with
    /// `(n+1)x ⊖ nx` infinitesimal (quasiarchimedean case).
    pub stabilization_index: Option<usize>,
}

/// `x` is infinitesimal iff `nx ⊙ x = 0` for every `n ≥ 0`.
///
/// On a finite algebra the nondecreasing sequence `nx` stabilizes by
/// `n = size`, so checking `n ≤ size` decides the universal quantifier.
pub fn is_infinitesimal(a: &FiniteMvAlgebra, x: usize) -> bool {
    let mut acc = a.zero();
    for _ in 0..=a.size() {
        if a.odot(acc, x) != a.zero() {
            return false;
        }
        let next = a.op(acc, x);
        if next == acc {
            return true;
        }
        acc = next;
    }
    true
}

/// Least `n ≤ size` with `(n+1)x ⊖ nx = 0`, i.e. the point where the
/// sequence `(x ≤ 2x ≤ …)` becomes stationary; `None` means `x` is not
/// archimedean (impossible when the tables satisfy the MV axioms).
pub fn is_archimedean(a: &FiniteMvAlgebra, x: usize) -> Option<usize> {
    let mut cur = a.zero();
    for n in 0..=a.size() {
        let next = a.op(cur, x);
        if a.ominus(next, cur) == a.zero() {
            return Some(n);
        }
        cur = next;
    }
    None
}

/// Least `n ≤ size` with `(n+1)x ⊖ nx` infinitesimal.
pub fn is_quasiarchimedean(a: &FiniteMvAlgebra, x: usize) -> Option<usize> {
    let mut cur = a.zero();
    for n in 0..=a.size() {
        let next = a.op(cur, x);
        if is_infinitesimal(a, a.ominus(next, cur)) {
            return Some(n);
        }
        cur = next;
    }
    None
}

pub fn classify_element(a: &FiniteMvAlgebra, x: usize) -> ElementClass {
    let arch = is_archimedean(a, x);
    let quasi = is_quasiarchimedean(a, x);
    ElementClass {
        infinitesimal: is_infinitesimal(a, x),
        archimedean: arch.is_some(),
        quasiarchimedean: quasi.is_some(),
        stabilization_index: arch.or(quasi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Same predicates with an oversized quantifier bound; the `n ≤ size`
    /// bound must agree with it.
    fn is_infinitesimal_bound(a: &FiniteMvAlgebra, x: usize, bound: usize) -> bool {
        (0..=bound).all(|n| a.odot(a.nmul(n, x), x) == a.zero())
    }

    fn arch_witness_bound(a: &FiniteMvAlgebra, x: usize, bound: usize) -> Option<usize> {
        (0..=bound).find(|&n| a.ominus(a.nmul(n + 1, x), a.nmul(n, x)) == a.zero())
    }

    #[test]
    fn quantifier_bound_agrees_with_larger_bounds() {
        let algebras = [
            FiniteMvAlgebra::chain(6).unwrap(),
            FiniteMvAlgebra::product(
                &FiniteMvAlgebra::chain(2).unwrap(),
                &FiniteMvAlgebra::chain(4).unwrap(),
            ),
        ];
        for a in &algebras {
            for x in a.elements() {
                let bound = 3 * a.size() + 7;
                assert_eq!(is_infinitesimal(a, x), is_infinitesimal_bound(a, x, bound));
                assert_eq!(is_archimedean(a, x), arch_witness_bound(a, x, bound));
            }
        }
    }

    #[test]
    fn zero_is_infinitesimal_and_archimedean() {
        let a = FiniteMvAlgebra::chain(4).unwrap();
        assert!(is_infinitesimal(&a, 0));
        assert_eq!(is_archimedean(&a, 0), Some(0));
    }

    #[test]
    fn chain_quarter_is_not_infinitesimal() {
        let a = FiniteMvAlgebra::chain(4).unwrap();
        // 4·(1/4) ⊙ (1/4) = 1/4 ≠ 0
        assert_eq!(a.odot(a.nmul(4, 1), 1), 1);
        assert!(!is_infinitesimal(&a, 1));
    }

    #[test]
    fn product_component_is_not_infinitesimal() {
        let c1 = FiniteMvAlgebra::chain(1).unwrap();
        let c3 = FiniteMvAlgebra::chain(3).unwrap();
        let p = FiniteMvAlgebra::product(&c1, &c3);
        let x = FiniteMvAlgebra::pair_index(0, 1, 4); // (0, 1/3)
        assert!(!is_infinitesimal(&p, x));
    }

    #[test]
    fn archimedean_witness_on_chain() {
        let a = FiniteMvAlgebra::chain(5).unwrap();
        // 1/5 reaches 1 at n = 5, where the sequence first goes stationary
        assert_eq!(is_archimedean(&a, 1), Some(5));
    }

    #[test]
    fn quasiarchimedean_examples() {
        let a = FiniteMvAlgebra::chain(6).unwrap();
        assert!(is_quasiarchimedean(&a, 3).is_some());

        let c1 = FiniteMvAlgebra::chain(1).unwrap();
        let p = FiniteMvAlgebra::product(&c1, &c1);
        let x = FiniteMvAlgebra::pair_index(1, 0, 2); // (1, 0)
        assert_eq!(is_quasiarchimedean(&p, x), Some(1));
    }

    #[test]
    fn no_finite_algebra_has_a_nonzero_infinitesimal() {
        let algebras = [
            FiniteMvAlgebra::chain(8).unwrap(),
            FiniteMvAlgebra::product(
                &FiniteMvAlgebra::chain(3).unwrap(),
                &FiniteMvAlgebra::chain(5).unwrap(),
            ),
        ];
        for a in &algebras {
            for x in a.elements() {
                if x != a.zero() {
                    assert!(!is_infinitesimal(a, x));
                }
            }
        }
    }

    #[test]
    fn class_invariants_hold() {
        let a = FiniteMvAlgebra::product(
            &FiniteMvAlgebra::chain(2).unwrap(),
            &FiniteMvAlgebra::chain(3).unwrap(),
        );
        for x in a.elements() {
            let c = classify_element(&a, x);
            assert!(!c.archimedean || c.quasiarchimedean);
            if c.infinitesimal && c.archimedean {
                assert_eq!(x, a.zero());
            }
        }
    }
}
