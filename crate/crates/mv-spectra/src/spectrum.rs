use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use mv_core::{FiniteMvAlgebra, Morphism};
use mv_ideals::{enumerate_ideals, IdealFin};

use crate::character::Character;
use crate::error::SpectraError;

type Q = BigRational;

/// The full character space of a finite algebra, one character per
/// maximal ideal, ordered by kernel bitset. Base sets are bitsets over
/// the character list.
#[derive(Debug, Clone)]
pub struct SpectrumFin {
    algebra: Arc<FiniteMvAlgebra>,
    characters: Vec<Character>,
}

impl SpectrumFin {
    pub fn new(algebra: &Arc<FiniteMvAlgebra>) -> Result<SpectrumFin, SpectraError> {
        let mut characters = Vec::new();
        for i in enumerate_ideals(algebra, 128)? {
            if i.is_maximal() {
                characters.push(Character::from_maximal_ideal(&i)?);
            }
        }
        characters.sort_by_key(|c| c.kernel_bits());
        if characters.len() > 64 {
            return Err(SpectraError::Internal("more than 64 characters".into()));
        }
        Ok(SpectrumFin { algebra: Arc::clone(algebra), characters })
    }

    pub fn algebra(&self) -> &Arc<FiniteMvAlgebra> {
        &self.algebra
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn all_mask(&self) -> u64 {
        if self.characters.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.characters.len()) - 1
        }
    }

    /// `W_a = {χ : χ(a) > 0}`.
    pub fn w_set(&self, a: usize) -> u64 {
        let mut bits = 0u64;
        for (i, ch) in self.characters.iter().enumerate() {
            if !ch.value(a).is_zero() {
                bits |= 1 << i;
            }
        }
        bits
    }

    /// `W^c_a = {χ : χ(a) = 0}`, the complement of `W_a`.
    pub fn wc_set(&self, a: usize) -> u64 {
        !self.w_set(a) & self.all_mask()
    }

    /// Membership in the topology generated by the base `{W_b}`: the sets
    /// `W_b` are closed under intersection (`W_{b∧c} = W_b ∩ W_c`), so a
    /// set is open iff it is the union of the base sets it contains.
    pub fn is_zariski_open(&self, set: u64) -> bool {
        let mut cover = 0u64;
        for b in self.algebra.elements() {
            let w = self.w_set(b);
            if w & !set == 0 {
                cover |= w;
            }
        }
        cover == set
    }

    /// `â = (χ₁(a), …, χᵣ(a))`.
    pub fn hat(&self, a: usize) -> Vec<Q> {
        self.characters.iter().map(|c| c.value(a).clone()).collect()
    }

    /// Kernel of the hat morphism: `{a : â = 0}`; equals the infradical
    /// of the zero ideal (the suite verifies the equality).
    pub fn hat_kernel_bits(&self) -> u128 {
        let mut bits = 0u128;
        for a in self.algebra.elements() {
            if self.hat(a).iter().all(|v| v.is_zero()) {
                bits |= 1 << a;
            }
        }
        bits
    }

    /// The image algebra `Â` (a finite subalgebra of a product of chains)
    /// together with the hat morphism onto it.
    pub fn hat_image(&self) -> Result<(Arc<FiniteMvAlgebra>, Morphism), SpectraError> {
        let mut index: BTreeMap<Vec<Q>, usize> = BTreeMap::new();
        let mut vectors: Vec<Vec<Q>> = Vec::new();
        for a in self.algebra.elements() {
            let v = self.hat(a);
            if !index.contains_key(&v) {
                index.insert(v.clone(), vectors.len());
                vectors.push(v);
            }
        }
        let k = vectors.len();
        let lookup = |v: &Vec<Q>| -> Result<usize, SpectraError> {
            index
                .get(v)
                .copied()
                .ok_or_else(|| SpectraError::Internal("hat image not closed under the operations".into()))
        };
        let mut oplus = vec![vec![0usize; k]; k];
        for i in 0..k {
            for j in 0..k {
                let sum: Vec<Q> = vectors[i]
                    .iter()
                    .zip(&vectors[j])
                    .map(|(x, y)| {
                        let s = x + y;
                        if s > Q::one() {
                            Q::one()
                        } else {
                            s
                        }
                    })
                    .collect();
                oplus[i][j] = lookup(&sum)?;
            }
        }
        let mut neg = Vec::with_capacity(k);
        for v in &vectors {
            let nv: Vec<Q> = v.iter().map(|x| Q::one() - x).collect();
            neg.push(lookup(&nv)?);
        }
        let zero_vec: Vec<Q> = vec![Q::zero(); self.characters.len()];
        let zero = lookup(&zero_vec)?;
        let image = Arc::new(FiniteMvAlgebra::from_tables(k, oplus, neg, zero)?);
        let map: Vec<usize> = self
            .algebra
            .elements()
            .map(|a| index[&self.hat(a)])
            .collect();
        let hat = Morphism::new(Arc::clone(&self.algebra), Arc::clone(&image), map)?;
        Ok((image, hat))
    }

    /// Kernels of the characters, for the bijection check against the
    /// maximal ideals.
    pub fn kernels(&self) -> Result<Vec<IdealFin>, SpectraError> {
        self.characters
            .iter()
            .map(|c| Ok(IdealFin::new(Arc::clone(&self.algebra), c.kernel_bits())?))
            .collect()
    }
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

    #[test]
    fn chain_has_one_character_the_inclusion() {
        for n in [1usize, 4, 6] {
            let a = chain(n);
            let s = SpectrumFin::new(&a).unwrap();
            assert_eq!(s.len(), 1);
            for i in 0..=n {
                assert_eq!(*s.characters()[0].value(i), Q::new(i.into(), n.into()));
            }
        }
    }

    #[test]
    fn product_has_the_projection_characters() {
        let p = product(1, 2);
        let s = SpectrumFin::new(&p).unwrap();
        assert_eq!(s.len(), 2);
        // values of (1, 1/2) under the two characters: {1, 1/2}
        let x = FiniteMvAlgebra::pair_index(1, 1, 3);
        let mut vals: Vec<Q> = s.hat(x);
        vals.sort();
        assert_eq!(vals, vec![Q::new(1.into(), 2.into()), Q::one()]);
    }

    #[test]
    fn kernels_are_exactly_the_maximal_ideals() {
        for a in [chain(4), product(1, 2), product(2, 3)] {
            let s = SpectrumFin::new(&a).unwrap();
            let kernel_bits: Vec<u128> =
                s.kernels().unwrap().iter().map(|i| i.bits()).collect();
            let mut maximal_bits: Vec<u128> = enumerate_ideals(&a, 64)
                .unwrap()
                .into_iter()
                .filter(|i| i.is_maximal())
                .map(|i| i.bits())
                .collect();
            maximal_bits.sort();
            assert_eq!(kernel_bits, maximal_bits);
        }
    }

    #[test]
    fn base_sets_partition_per_element() {
        let p = product(2, 2);
        let s = SpectrumFin::new(&p).unwrap();
        for a in p.elements() {
            assert_eq!(s.w_set(a) & s.wc_set(a), 0);
            assert_eq!(s.w_set(a) | s.wc_set(a), s.all_mask());
        }
        assert_eq!(s.w_set(p.zero()), 0);
        // W_{a⊕b} ⊇ W_a ∪ W_b
        for a in p.elements() {
            for b in p.elements() {
                let union = s.w_set(a) | s.w_set(b);
                assert_eq!(s.w_set(p.op(a, b)) & union, union);
            }
        }
    }

    #[test]
    fn finite_cozariski_sets_are_open() {
        // every finite algebra is quasihyperarchimedean, so every W^c_a
        // must be Zariski-open
        for a in [chain(3), product(1, 2)] {
            let s = SpectrumFin::new(&a).unwrap();
            for x in a.elements() {
                assert!(s.is_zariski_open(s.wc_set(x)));
            }
        }
    }

    #[test]
    fn not_everything_is_zariski_open() {
        let p = product(1, 1); // two characters
        let s = SpectrumFin::new(&p).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.is_zariski_open(0));
        assert!(s.is_zariski_open(s.all_mask()));
        // singletons are open here (the algebra is hyperarchimedean):
        // W_{(1,0)} = {first projection character}
        for bit in [0b01u64, 0b10u64] {
            assert!(s.is_zariski_open(bit));
        }
    }

    #[test]
    fn hat_image_of_a_semisimple_algebra_is_isomorphic() {
        let p = product(1, 2);
        let s = SpectrumFin::new(&p).unwrap();
        let (img, hat) = s.hat_image().unwrap();
        assert_eq!(img.size(), p.size()); // semisimple: hat is injective
        assert!(hat.is_surjective());
        assert_eq!(s.hat_kernel_bits(), 1 << p.zero());
        assert!(img.check_axioms().is_empty());
    }

    #[test]
    fn hat_of_zero_is_the_zero_vector() {
        let a = chain(4);
        let s = SpectrumFin::new(&a).unwrap();
        assert!(s.hat(a.zero()).iter().all(|v| v.is_zero()));
    }
}
