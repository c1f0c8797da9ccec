//! Separation and the restriction isomorphism `A / J(S) ≅ A|_S`.

use num_traits::Zero;

use mv_terms::rational::Q;
use mv_terms::Pl1;

use crate::error::NullError;
use crate::fnalg::FiniteFunctionAlgebra;
use crate::vj::vanish_exactly_on;

/// For every pair of distinct points there must be an `f` with
/// `f(x) = 0 < f(y)`. Returns the verdict and, on failure, the pair.
pub fn separating_check_finite(alg: &FiniteFunctionAlgebra) -> (bool, Option<String>) {
    for x in 0..alg.points() {
        for y in 0..alg.points() {
            if x == y {
                continue;
            }
            let found = (0..alg.size())
                .any(|i| alg.func(i)[x] == 0 && alg.func(i)[y] > 0);
            if !found {
                return (false, Some(format!("points {x} and {y} are not separated")));
            }
        }
    }
    (true, None)
}

/// A term function separating two rational points: it vanishes exactly at
/// `p`, so it is zero at `p` and positive at `q ≠ p`. Both values are
/// verified exactly before returning.
pub fn separation_witness_f1(p: &Q, q: &Q) -> Result<Pl1, NullError> {
    if p == q {
        return Err(NullError::Internal("cannot separate a point from itself".into()));
    }
    let f = vanish_exactly_on(p, p)?;
    if !f.eval(p)?.is_zero() || f.eval(q)?.is_zero() {
        return Err(NullError::Internal("separation witness failed its own check".into()));
    }
    Ok(f)
}

/// Checks `A / J(S) ≅ A|_S` for a nonempty point set: the map
/// `[f] ↦ f|_S` must be a well-defined bijection preserving the
/// operations. Everything is finite, so the check is exhaustive.
pub fn restriction_iso_finite(
    alg: &FiniteFunctionAlgebra,
    set: u32,
) -> Result<bool, NullError> {
    let j = alg.j_of(set);
    let (quot, proj) = j.quotient()?;
    let restricted = alg.restriction(set)?;
    if quot.size() != restricted.size() {
        return Ok(false);
    }
    let kept: Vec<usize> = (0..alg.points()).filter(|&p| set & 1 << p != 0).collect();
    // class of f ↦ restriction of f; well-definedness means the map from
    // class indices to restricted indices is single-valued
    let mut map = vec![usize::MAX; quot.size()];
    for i in 0..alg.size() {
        let class = proj.apply(i);
        let r: Vec<u32> = kept.iter().map(|&p| alg.func(i)[p]).collect();
        let target = restricted
            .find(&r)
            .ok_or_else(|| NullError::Internal("restriction missing from A|_S".into()))?;
        if map[class] == usize::MAX {
            map[class] = target;
        } else if map[class] != target {
            return Ok(false); // two functions congruent mod J(S) with different restrictions
        }
    }
    // bijectivity: injective on equal-sized carriers
    let mut seen = vec![false; restricted.size()];
    for &t in &map {
        if t == usize::MAX || seen[t] {
            return Ok(false);
        }
        seen[t] = true;
    }
    // operation preservation
    let rv = restricted.view();
    for x in quot.elements() {
        if map[quot.neg(x)] != rv.neg(map[x]) {
            return Ok(false);
        }
        for y in quot.elements() {
            if map[quot.op(x, y)] != rv.op(map[x], map[y]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
