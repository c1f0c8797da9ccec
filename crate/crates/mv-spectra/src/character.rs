use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use mv_core::FiniteMvAlgebra;
use mv_ideals::IdealFin;

use crate::error::SpectraError;

type Q = BigRational;

/// A morphism `A → [0, 1]`, stored as its exact rational value vector.
/// The kernel `{a : χ(a) = 0}` is a maximal ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    algebra: Arc<FiniteMvAlgebra>,
    values: Vec<Q>,
    kernel: u128,
}

impl Character {
    /// Builds the character of a maximal ideal: the quotient is a simple
    /// finite chain, which embeds into `[0, 1]` uniquely by rank. Both the
    /// morphism property and the kernel are verified before returning.
    pub fn from_maximal_ideal(m: &IdealFin) -> Result<Character, SpectraError> {
        let a = m.algebra();
        let (q, proj) = m.quotient()?;
        let k = q.size();
        if k < 2 {
            return Err(SpectraError::Internal("maximal ideal with trivial quotient".into()));
        }
        // rank of each class in the quotient's (total) order
        let mut rank = vec![0usize; k];
        for x in q.elements() {
            for y in q.elements() {
                if x != y && !q.leq(x, y) && !q.leq(y, x) {
                    return Err(SpectraError::Internal(
                        "maximal-ideal quotient is not a chain".into(),
                    ));
                }
                if y != x && q.leq(y, x) {
                    rank[x] += 1;
                }
            }
        }
        let t = k - 1;
        let values: Vec<Q> = a
            .elements()
            .map(|x| Q::new(rank[proj.apply(x)].into(), t.into()))
            .collect();
        let ch = Character { algebra: Arc::clone(a), values, kernel: 0 };
        let ch = Character { kernel: ch.compute_kernel(), ..ch };
        ch.validate()?;
        if ch.kernel != m.bits() {
            return Err(SpectraError::Internal(
                "character kernel differs from the maximal ideal it was built from".into(),
            ));
        }
        Ok(ch)
    }

    fn compute_kernel(&self) -> u128 {
        let mut bits = 0u128;
        for x in self.algebra.elements() {
            if self.values[x].is_zero() {
                bits |= 1 << x;
            }
        }
        bits
    }

    fn validate(&self) -> Result<(), SpectraError> {
        let a = &self.algebra;
        if !self.values[a.zero()].is_zero() {
            return Err(SpectraError::Internal("character does not kill 0".into()));
        }
        for x in a.elements() {
            let nx = Q::one() - &self.values[x];
            if self.values[a.neg(x)] != nx {
                return Err(SpectraError::Internal(format!(
                    "character breaks negation at {x}"
                )));
            }
            for y in a.elements() {
                let s = &self.values[x] + &self.values[y];
                let s = if s > Q::one() { Q::one() } else { s };
                if self.values[a.op(x, y)] != s {
                    return Err(SpectraError::Internal(format!(
                        "character breaks truncated addition at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<FiniteMvAlgebra> {
        &self.algebra
    }

    pub fn value(&self, x: usize) -> &Q {
        &self.values[x]
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn kernel_bits(&self) -> u128 {
        self.kernel
    }
}
