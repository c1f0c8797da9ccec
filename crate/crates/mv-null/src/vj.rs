//! The `J` direction on `[0, 1]`: for a closed set `S` (finite union of
//! closed rational intervals) an explicit generator of `J(S)` vanishing
//! exactly on `S`, built from integer-sloped ramps so the generator is a
//! genuine term function. Membership of `g` in `J(S)` is just
//! `S ⊆ V(g)`; the generator makes `J(S)` principal.

use num_traits::{One, Zero};

use mv_terms::rational::Q;
use mv_terms::{ClosedSet1, Pl1};

use crate::error::NullError;

/// Ramp vanishing on `[0, a]` and positive after it:
/// `x ↦ min(1, max(0, s·x − r))` for `a = r/s` in lowest terms.
fn ramp_up_from(a: &Q) -> Result<Pl1, NullError> {
    if a.is_one() {
        return Ok(Pl1::zero());
    }
    let r = a.numer().clone();
    let s = a.denom().clone();
    let one = num_bigint::BigInt::from(1);
    let mut pts = vec![(Q::zero(), Q::zero())];
    if !a.is_zero() {
        pts.push((a.clone(), Q::zero()));
    }
    let hit = Q::new(&r + &one, s.clone()); // where s·x − r reaches 1
    if hit < Q::one() {
        pts.push((hit, Q::one()));
        pts.push((Q::one(), Q::one()));
    } else {
        pts.push((Q::one(), Q::from_integer(&s - &r)));
    }
    Ok(Pl1::from_breakpoints(pts)?)
}

/// Ramp vanishing on `[a, 1]` and positive before it:
/// `x ↦ min(1, max(0, r − s·x))` for `a = r/s` in lowest terms.
fn ramp_down_to(a: &Q) -> Result<Pl1, NullError> {
    if a.is_zero() {
        return Ok(Pl1::zero());
    }
    let r = a.numer().clone();
    let s = a.denom().clone();
    let one = num_bigint::BigInt::from(1);
    let mut pts = vec![];
    let leave = Q::new(&r - &one, s.clone()); // where r − s·x falls below 1
    if leave > Q::zero() {
        pts.push((Q::zero(), Q::one()));
        pts.push((leave, Q::one()));
    } else {
        pts.push((Q::zero(), Q::from_integer(r.clone())));
    }
    pts.push((a.clone(), Q::zero()));
    if !a.is_one() {
        pts.push((Q::one(), Q::zero()));
    }
    Ok(Pl1::from_breakpoints(pts)?)
}

/// A term function vanishing exactly on `[a, b]` (a point when `a = b`):
/// the truncated sum of the two ramps.
pub fn vanish_exactly_on(a: &Q, b: &Q) -> Result<Pl1, NullError> {
    if a > b {
        return Err(NullError::Internal("empty interval".into()));
    }
    let up = ramp_up_from(b)?;
    let down = ramp_down_to(a)?;
    Ok(up.oplus(&down))
}

/// A generator of `J(S)`: zero set exactly `S`. The empty set yields the
/// constant `1` (whose ideal is everything), the whole line the constant
/// `0`; otherwise the meet over the components, whose zero set is the
/// union of theirs.
pub fn generator_for_closed_set(s: &ClosedSet1) -> Result<Pl1, NullError> {
    if s.is_empty() {
        return Ok(Pl1::one());
    }
    let mut gen: Option<Pl1> = None;
    for (a, b) in s.components() {
        let piece = vanish_exactly_on(a, b)?;
        gen = Some(match gen {
            None => piece,
            Some(g) => g.meet(&piece),
        });
    }
    let gen = gen.unwrap();
    debug_assert_eq!(gen.zero_set(), *s);
    Ok(gen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mv_terms::rational::q;
    use mv_terms::{parse_term, to_pl1};

    #[test]
    fn ramps_vanish_exactly_where_stated() {
        for (num, den) in [(0i64, 1i64), (1, 3), (1, 2), (2, 3), (5, 7), (1, 1)] {
            let a = q(num, den);
            let up = ramp_up_from(&a).unwrap();
            assert_eq!(up.zero_set(), ClosedSet1::interval(q(0, 1), a.clone()));
            let down = ramp_down_to(&a).unwrap();
            assert_eq!(down.zero_set(), ClosedSet1::interval(a.clone(), q(1, 1)));
        }
    }

    #[test]
    fn ramp_up_from_half_is_the_square() {
        // the ramp from 1/2 coincides with the term function x . x
        let up = ramp_up_from(&q(1, 2)).unwrap();
        let sq = to_pl1(&parse_term("x . x").unwrap()).unwrap();
        assert_eq!(up, sq);
    }

    #[test]
    fn generators_realise_arbitrary_closed_sets() {
        let sets = [
            ClosedSet1::empty(),
            ClosedSet1::whole(),
            ClosedSet1::point(q(1, 3)),
            ClosedSet1::interval(q(1, 4), q(2, 3)),
            ClosedSet1::point(q(0, 1))
                .union(&ClosedSet1::interval(q(1, 4), q(3, 4))),
            ClosedSet1::point(q(1, 7))
                .union(&ClosedSet1::point(q(1, 2)))
                .union(&ClosedSet1::interval(q(5, 6), q(1, 1))),
        ];
        for s in sets {
            let g = generator_for_closed_set(&s).unwrap();
            assert_eq!(g.zero_set(), s, "generator zero set mismatch");
        }
    }
}
