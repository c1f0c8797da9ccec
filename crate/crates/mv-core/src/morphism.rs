use std::sync::Arc;

use crate::algebra::FiniteMvAlgebra;
use crate::error::CoreError;

/// A morphism between finite MV-algebras: a total element map preserving
/// `⊕`, `¬` and `0` (hence all derived operations).
#[derive(Debug, Clone)]
pub struct Morphism {
    source: Arc<FiniteMvAlgebra>,
    target: Arc<FiniteMvAlgebra>,
    map: Vec<usize>,
}

impl Morphism {
    /// Validates preservation of the operations on the whole carrier.
    pub fn new(
        source: Arc<FiniteMvAlgebra>,
        target: Arc<FiniteMvAlgebra>,
        map: Vec<usize>,
    ) -> Result<Self, CoreError> {
        if map.len() != source.size() {
            return Err(CoreError::NotMorphism(format!(
                "map covers {} elements, source has {}",
                map.len(),
                source.size()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.size()) {
            return Err(CoreError::NotMorphism(format!("image {v} out of target range")));
        }
        if map[source.zero()] != target.zero() {
            return Err(CoreError::NotMorphism("zero is not preserved".into()));
        }
        for x in source.elements() {
            if map[source.neg(x)] != target.neg(map[x]) {
                return Err(CoreError::NotMorphism(format!("negation not preserved at {x}")));
            }
            for y in source.elements() {
                if map[source.op(x, y)] != target.op(map[x], map[y]) {
                    return Err(CoreError::NotMorphism(format!("oplus not preserved at ({x}, {y})")));
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(a: &Arc<FiniteMvAlgebra>) -> Self {
        Self {
            source: Arc::clone(a),
            target: Arc::clone(a),
            map: a.elements().collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn source(&self) -> &Arc<FiniteMvAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteMvAlgebra> {
        &self.target
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &v in &self.map {
            hit[v] = true;
        }
        hit.into_iter().all(|h| h)
    }
}

/// The two projections of a componentwise product built by
/// [`FiniteMvAlgebra::product`].
pub fn product_projections(
    a: &Arc<FiniteMvAlgebra>,
    b: &Arc<FiniteMvAlgebra>,
    prod: &Arc<FiniteMvAlgebra>,
) -> Result<(Morphism, Morphism), CoreError> {
    let first = prod
        .elements()
        .map(|i| FiniteMvAlgebra::index_pair(i, b.size()).0)
        .collect();
    let second = prod
        .elements()
        .map(|i| FiniteMvAlgebra::index_pair(i, b.size()).1)
        .collect();
    Ok((
        Morphism::new(Arc::clone(prod), Arc::clone(a), first)?,
        Morphism::new(Arc::clone(prod), Arc::clone(b), second)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projections_are_surjective_morphisms() {
        let a = Arc::new(FiniteMvAlgebra::chain(1).unwrap());
        let b = Arc::new(FiniteMvAlgebra::chain(2).unwrap());
        let p = Arc::new(FiniteMvAlgebra::product(&a, &b));
        let (pa, pb) = product_projections(&a, &b, &p).unwrap();
        assert!(pa.is_surjective());
        assert!(pb.is_surjective());
    }

    #[test]
    fn non_morphism_is_rejected() {
        let a = Arc::new(FiniteMvAlgebra::chain(2).unwrap());
        let b = Arc::new(FiniteMvAlgebra::chain(1).unwrap());
        // collapsing 1/2 to 1 does not preserve negation
        let err = Morphism::new(Arc::clone(&a), Arc::clone(&b), vec![0, 1, 1]).unwrap_err();
        assert!(matches!(err, CoreError::NotMorphism(_)));
    }
}
