//! Exact rational arithmetic helpers and the pointwise MV operations
//! on `[0, 1]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::TermError;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn in_unit_interval(x: &Q) -> bool {
    !x.is_negative() && *x <= Q::one()
}

use num_traits::Signed;

/// `min(1, a + b)`.
pub fn mv_oplus(a: &Q, b: &Q) -> Q {
    let s = a + b;
    if s > Q::one() {
        Q::one()
    } else {
        s
    }
}

/// `1 − a`.
pub fn mv_neg(a: &Q) -> Q {
    Q::one() - a
}

/// `max(0, a + b − 1)`.
pub fn mv_odot(a: &Q, b: &Q) -> Q {
    let s = a + b - Q::one();
    if s.is_negative() {
        Q::zero()
    } else {
        s
    }
}

/// `max(0, a − b)`.
pub fn mv_ominus(a: &Q, b: &Q) -> Q {
    let d = a - b;
    if d.is_negative() {
        Q::zero()
    } else {
        d
    }
}

pub fn mv_join(a: &Q, b: &Q) -> Q {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn mv_meet(a: &Q, b: &Q) -> Q {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// `d(a, b) = (a ⊖ b) ⊕ (b ⊖ a) = |a − b|` on `[0, 1]`.
pub fn mv_dist(a: &Q, b: &Q) -> Q {
    (a - b).abs()
}

/// Parses `"p"`, `"p/q"` into an exact rational.
pub fn parse_q(s: &str) -> Result<Q, TermError> {
    let bad = || TermError::InvalidRational(s.to_string());
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().map_err(|_| bad())?;
        Ok(Q::from_integer(n))
    }
}

/// Renders `p/q` reduced, or just `p` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
