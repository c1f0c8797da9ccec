//! Exact piecewise-linear functions `[0, 1] → [0, 1]` with rational
//! breakpoints and integer slopes, closed under all MV operations. These
//! realise the free one-variable algebra: equality of term functions is
//! structural equality of canonical breakpoint lists.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::TermError;
use crate::rational::{self, Q};
use crate::term::Term;

/// A canonical breakpoint representation: `pts` is strictly increasing in
/// the abscissa, starts at `x = 0`, ends at `x = 1`, every value lies in
/// `[0, 1]`, every linear piece has integer slope, and no interior
/// breakpoint is collinear with its neighbours. Equality of functions is
/// therefore derived equality of the lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pl1 {
    pts: Vec<(Q, Q)>,
}

impl fmt::Debug for Pl1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pl1[")?;
        for (i, (x, y)) in self.pts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({},{})", rational::fmt_q(x), rational::fmt_q(y))?;
        }
        write!(f, "]")
    }
}

/// One of the binary pointwise MV operations on PL functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlOp {
    Oplus,
    Odot,
    Ominus,
    Join,
    Meet,
    Dist,
}

impl Pl1 {
    /// Validates the invariants and drops collinear interior breakpoints.
    pub fn from_breakpoints(pts: Vec<(Q, Q)>) -> Result<Pl1, TermError> {
        if pts.len() < 2 {
            return Err(TermError::MalformedPl("need at least the two endpoints".into()));
        }
        if !pts[0].0.is_zero() {
            return Err(TermError::MalformedPl("first breakpoint must be at x = 0".into()));
        }
        if !pts[pts.len() - 1].0.is_one() {
            return Err(TermError::MalformedPl("last breakpoint must be at x = 1".into()));
        }
        for w in pts.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(TermError::MalformedPl("abscissae must be strictly increasing".into()));
            }
            let slope = (&w[1].1 - &w[0].1) / (&w[1].0 - &w[0].0);
            if !slope.is_integer() {
                return Err(TermError::MalformedPl(format!(
                    "piece from x = {} has non-integer slope {}",
                    rational::fmt_q(&w[0].0),
                    rational::fmt_q(&slope)
                )));
            }
        }
        for (x, y) in &pts {
            if !rational::in_unit_interval(y) {
                return Err(TermError::MalformedPl(format!(
                    "value {} at x = {} outside [0, 1]",
                    rational::fmt_q(y),
                    rational::fmt_q(x)
                )));
            }
        }
        Ok(Self::canonical(pts))
    }

    /// Assumes sorted, strictly increasing, endpoint-complete input;
    /// removes collinear interior points.
    fn canonical(pts: Vec<(Q, Q)>) -> Pl1 {
        debug_assert!(pts.len() >= 2);
        let mut out: Vec<(Q, Q)> = Vec::with_capacity(pts.len());
        for pt in pts {
            while out.len() >= 2 {
                let a = &out[out.len() - 2];
                let b = &out[out.len() - 1];
                // collinear ⟺ (yb−ya)(xc−xb) = (yc−yb)(xb−xa)
                let lhs = (&b.1 - &a.1) * (&pt.0 - &b.0);
                let rhs = (&pt.1 - &b.1) * (&b.0 - &a.0);
                if lhs == rhs {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(pt);
        }
        Pl1 { pts: out }
    }

    pub fn constant(y: Q) -> Result<Pl1, TermError> {
        if !rational::in_unit_interval(&y) {
            return Err(TermError::MalformedPl(format!(
                "constant {} outside [0, 1]",
                rational::fmt_q(&y)
            )));
        }
        Ok(Pl1 { pts: vec![(Q::zero(), y.clone()), (Q::one(), y)] })
    }

    pub fn zero() -> Pl1 {
        Self::constant(Q::zero()).unwrap()
    }

    pub fn one() -> Pl1 {
        Self::constant(Q::one()).unwrap()
    }

    /// The identity function `x ↦ x`.
    pub fn identity() -> Pl1 {
        Pl1 { pts: vec![(Q::zero(), Q::zero()), (Q::one(), Q::one())] }
    }

    pub fn breakpoints(&self) -> &[(Q, Q)] {
        &self.pts
    }

    pub fn is_zero(&self) -> bool {
        self.pts.iter().all(|(_, y)| y.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.pts.iter().all(|(_, y)| y.is_one())
    }

    /// Exact evaluation; errors outside `[0, 1]`.
    pub fn eval(&self, x: &Q) -> Result<Q, TermError> {
        if !rational::in_unit_interval(x) {
            return Err(TermError::InvalidRational(rational::fmt_q(x)));
        }
        // index of the last breakpoint with abscissa <= x
        let i = self.pts.partition_point(|(bx, _)| bx <= x);
        if i == self.pts.len() {
            return Ok(self.pts[i - 1].1.clone());
        }
        if i == 0 {
            return Ok(self.pts[0].1.clone());
        }
        let (xa, ya) = &self.pts[i - 1];
        if xa == x {
            return Ok(ya.clone());
        }
        let (xb, yb) = &self.pts[i];
        Ok(ya + (yb - ya) * (x - xa) / (xb - xa))
    }

    /// Pointwise `1 − f`.
    pub fn neg(&self) -> Pl1 {
        Pl1 {
            pts: self
                .pts
                .iter()
                .map(|(x, y)| (x.clone(), Q::one() - y))
                .collect(),
        }
    }

    /// Pointwise binary MV operation. The result's breakpoints are the
    /// refinement of both inputs' breakpoints plus the crossings where the
    /// relevant linear combination changes regime: `f + g = 1` for `⊕`/`⊙`
    /// and `f = g` for `⊖`/`∨`/`∧`/`d`.
    pub fn combine(&self, other: &Pl1, op: PlOp) -> Pl1 {
        let mut xs: Vec<Q> = Vec::with_capacity(self.pts.len() + other.pts.len());
        {
            let mut i = 0;
            let mut j = 0;
            while i < self.pts.len() || j < other.pts.len() {
                let a = self.pts.get(i).map(|p| &p.0);
                let b = other.pts.get(j).map(|p| &p.0);
                match (a, b) {
                    (Some(a), Some(b)) if a == b => {
                        xs.push(a.clone());
                        i += 1;
                        j += 1;
                    }
                    (Some(a), Some(b)) if a < b => {
                        xs.push(a.clone());
                        i += 1;
                    }
                    (Some(_), Some(b)) => {
                        xs.push(b.clone());
                        j += 1;
                    }
                    (Some(a), None) => {
                        xs.push(a.clone());
                        i += 1;
                    }
                    (None, Some(b)) => {
                        xs.push(b.clone());
                        j += 1;
                    }
                    (None, None) => unreachable!(),
                }
            }
        }

        // h is the linear functional whose sign change marks the kink
        let h = |fa: &Q, ga: &Q| -> Q {
            match op {
                PlOp::Oplus | PlOp::Odot => fa + ga - Q::one(),
                PlOp::Ominus | PlOp::Join | PlOp::Meet | PlOp::Dist => fa - ga,
            }
        };

        let mut grid: Vec<Q> = Vec::with_capacity(xs.len() * 2);
        for w in xs.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            grid.push(a.clone());
            let ha = h(&self.eval(a).unwrap(), &other.eval(a).unwrap());
            let hb = h(&self.eval(b).unwrap(), &other.eval(b).unwrap());
            if ha.is_positive() && hb.is_negative() || ha.is_negative() && hb.is_positive() {
                let cross = a + (b - a) * &ha / (&ha - &hb);
                debug_assert!(*a < cross && cross < *b);
                grid.push(cross);
            }
        }
        grid.push(xs.last().unwrap().clone());

        let apply = |fa: &Q, ga: &Q| -> Q {
            match op {
                PlOp::Oplus => rational::mv_oplus(fa, ga),
                PlOp::Odot => rational::mv_odot(fa, ga),
                PlOp::Ominus => rational::mv_ominus(fa, ga),
                PlOp::Join => rational::mv_join(fa, ga),
                PlOp::Meet => rational::mv_meet(fa, ga),
                PlOp::Dist => rational::mv_dist(fa, ga),
            }
        };
        let pts = grid
            .into_iter()
            .map(|x| {
                let v = apply(&self.eval(&x).unwrap(), &other.eval(&x).unwrap());
                (x, v)
            })
            .collect();
        Self::canonical(pts)
    }

    pub fn oplus(&self, other: &Pl1) -> Pl1 {
        self.combine(other, PlOp::Oplus)
    }

    pub fn odot(&self, other: &Pl1) -> Pl1 {
        self.combine(other, PlOp::Odot)
    }

    pub fn ominus(&self, other: &Pl1) -> Pl1 {
        self.combine(other, PlOp::Ominus)
    }

    pub fn join(&self, other: &Pl1) -> Pl1 {
        self.combine(other, PlOp::Join)
    }

    pub fn meet(&self, other: &Pl1) -> Pl1 {
        self.combine(other, PlOp::Meet)
    }

    pub fn dist(&self, other: &Pl1) -> Pl1 {
        self.combine(other, PlOp::Dist)
    }

    /// `f ≤ g` pointwise.
    pub fn leq(&self, other: &Pl1) -> bool {
        self.ominus(other).is_zero()
    }

    /// The n-fold truncated sum, stopping early once stationary.
    pub fn nmul(&self, n: u32) -> Pl1 {
        let mut acc = Pl1::zero();
        for _ in 0..n {
            let next = acc.oplus(self);
            if next == acc {
                return acc;
            }
            acc = next;
        }
        acc
    }

    /// Maximum value; attained at a breakpoint.
    pub fn max_value(&self) -> Q {
        self.pts.iter().map(|(_, y)| y).max().unwrap().clone()
    }

    pub fn min_value(&self) -> Q {
        self.pts.iter().map(|(_, y)| y).min().unwrap().clone()
    }

    /// Smallest positive breakpoint value, if any.
    pub fn min_positive_breakpoint_value(&self) -> Option<Q> {
        self.pts.iter().map(|(_, y)| y).filter(|y| y.is_positive()).min().cloned()
    }

    /// The exact zero locus `f⁻¹(0)` as a finite union of closed
    /// intervals. A nonnegative linear piece vanishes on `∅`, one endpoint,
    /// or the whole piece, so the locus is assembled segment by segment.
    pub fn zero_set(&self) -> ClosedSet1 {
        let mut ivs: Vec<(Q, Q)> = Vec::new();
        for w in self.pts.windows(2) {
            let (xa, ya) = &w[0];
            let (xb, yb) = &w[1];
            match (ya.is_zero(), yb.is_zero()) {
                (true, true) => ivs.push((xa.clone(), xb.clone())),
                (true, false) => ivs.push((xa.clone(), xa.clone())),
                (false, true) => ivs.push((xb.clone(), xb.clone())),
                (false, false) => {}
            }
        }
        ClosedSet1::from_intervals(ivs)
    }
}

/// A finite union of disjoint closed rational intervals inside `[0, 1]`,
/// kept sorted with touching intervals merged; points are degenerate
/// intervals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ClosedSet1 {
    ivs: Vec<(Q, Q)>,
}

impl fmt::Debug for ClosedSet1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ClosedSet1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ivs.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, (a, b)) in self.ivs.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            if a == b {
                write!(f, "{{{}}}", rational::fmt_q(a))?;
            } else {
                write!(f, "[{}, {}]", rational::fmt_q(a), rational::fmt_q(b))?;
            }
        }
        Ok(())
    }
}

impl ClosedSet1 {
    pub fn empty() -> Self {
        Self { ivs: vec![] }
    }

    pub fn whole() -> Self {
        Self { ivs: vec![(Q::zero(), Q::one())] }
    }

    pub fn point(p: Q) -> Self {
        Self::from_intervals(vec![(p.clone(), p)])
    }

    pub fn interval(a: Q, b: Q) -> Self {
        Self::from_intervals(vec![(a, b)])
    }

    /// Normalizes an arbitrary list: sorts, drops empties, merges
    /// overlapping or touching intervals.
    pub fn from_intervals(mut ivs: Vec<(Q, Q)>) -> Self {
        ivs.retain(|(a, b)| a <= b);
        ivs.sort();
        let mut out: Vec<(Q, Q)> = Vec::with_capacity(ivs.len());
        for (a, b) in ivs {
            match out.last_mut() {
                Some((_, pb)) if a <= *pb => {
                    if b > *pb {
                        *pb = b;
                    }
                }
                _ => out.push((a, b)),
            }
        }
        Self { ivs: out }
    }

    pub fn components(&self) -> &[(Q, Q)] {
        &self.ivs
    }

    pub fn is_empty(&self) -> bool {
        self.ivs.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.ivs.len() == 1 && self.ivs[0].0.is_zero() && self.ivs[0].1.is_one()
    }

    pub fn contains(&self, x: &Q) -> bool {
        self.ivs.iter().any(|(a, b)| a <= x && x <= b)
    }

    /// After normalization components are separated, so a connected
    /// component of `self` is covered iff it fits inside a single
    /// component of `other`.
    pub fn is_subset(&self, other: &ClosedSet1) -> bool {
        self.ivs
            .iter()
            .all(|(a, b)| other.ivs.iter().any(|(c, d)| c <= a && b <= d))
    }

    pub fn union(&self, other: &ClosedSet1) -> ClosedSet1 {
        let mut ivs = self.ivs.clone();
        ivs.extend(other.ivs.iter().cloned());
        Self::from_intervals(ivs)
    }

    pub fn intersect(&self, other: &ClosedSet1) -> ClosedSet1 {
        let mut out = Vec::new();
        for (a, b) in &self.ivs {
            for (c, d) in &other.ivs {
                let lo = a.max(c).clone();
                let hi = b.min(d).clone();
                if lo <= hi {
                    out.push((lo, hi));
                }
            }
        }
        Self::from_intervals(out)
    }
}

/// Exact PL realisation of a one-variable term; structural recursion over
/// the AST with [`Pl1::combine`] at every connective.
pub fn to_pl1(t: &Term) -> Result<Pl1, TermError> {
    let vars = t.vars();
    if vars.len() > 1 {
        return Err(TermError::Multivariable { vars: vars.into_iter().collect() });
    }
    fn rec(t: &Term) -> Pl1 {
        match t {
            Term::Zero => Pl1::zero(),
            Term::One => Pl1::one(),
            Term::Var(_) => Pl1::identity(),
            Term::Neg(a) => rec(a).neg(),
            Term::Oplus(a, b) => rec(a).oplus(&rec(b)),
            Term::Odot(a, b) => rec(a).odot(&rec(b)),
            Term::Ominus(a, b) => rec(a).ominus(&rec(b)),
            Term::Join(a, b) => rec(a).join(&rec(b)),
            Term::Meet(a, b) => rec(a).meet(&rec(b)),
            Term::Dist(a, b) => rec(a).dist(&rec(b)),
        }
    }
    Ok(rec(t))
}

/// Equality in the free one-variable algebra: equality of term functions,
/// decided structurally on canonical PL forms.
pub fn term_eq1(t1: &Term, t2: &Term) -> Result<bool, TermError> {
    Ok(to_pl1(t1)? == to_pl1(t2)?)
}

/// A point where two PL functions differ, with both values; `None` when
/// they are equal. Two PL functions agreeing on the union of their
/// breakpoint grids agree everywhere.
pub fn pl_diff_witness(f: &Pl1, g: &Pl1) -> Option<(Q, Q, Q)> {
    let mut xs: Vec<Q> = f
        .breakpoints()
        .iter()
        .chain(g.breakpoints())
        .map(|(x, _)| x.clone())
        .collect();
    xs.sort();
    xs.dedup();
    for x in xs {
        let fx = f.eval(&x).unwrap();
        let gx = g.eval(&x).unwrap();
        if fx != gx {
            return Some((x, fx, gx));
        }
    }
    None
}

/// Archimedean test for an element of the function algebra: `f` is
/// archimedean iff its zero set is open in `[0, 1]`, and since zero sets
/// are closed and `[0, 1]` is connected this means empty or everything.
pub fn archimedean_pl(f: &Pl1) -> bool {
    let z = f.zero_set();
    z.is_empty() || z.is_whole()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;
    use crate::rational::q;

    fn pl(s: &str) -> Pl1 {
        to_pl1(&parse_term(s).unwrap()).unwrap()
    }

    fn bp(pairs: &[(i64, i64, i64, i64)]) -> Vec<(Q, Q)> {
        pairs.iter().map(|&(a, b, c, d)| (q(a, b), q(c, d))).collect()
    }

    #[test]
    fn basic_pl_shapes() {
        assert_eq!(pl("x + x").breakpoints(), &bp(&[(0, 1, 0, 1), (1, 2, 1, 1), (1, 1, 1, 1)])[..]);
        assert_eq!(pl("x . x").breakpoints(), &bp(&[(0, 1, 0, 1), (1, 2, 0, 1), (1, 1, 1, 1)])[..]);
        assert_eq!(pl("x - x"), Pl1::zero());
        assert_eq!(pl("!x").breakpoints(), &bp(&[(0, 1, 1, 1), (1, 1, 0, 1)])[..]);
    }

    #[test]
    fn pointwise_examples() {
        let f = pl("!x").ominus(&pl("x"));
        assert_eq!(f.eval(&q(3, 4)).unwrap(), q(0, 1));
        let g = pl("x");
        let h = g.meet(&g.neg());
        assert_eq!(h.eval(&q(0, 1)).unwrap(), q(0, 1));
        assert_eq!(h.eval(&q(1, 1)).unwrap(), q(0, 1));
    }

    #[test]
    fn zero_sets() {
        assert_eq!(pl("x . x").zero_set(), ClosedSet1::interval(q(0, 1), q(1, 2)));
        assert_eq!(pl("x").zero_set(), ClosedSet1::point(q(0, 1)));
        assert_eq!(Pl1::zero().zero_set(), ClosedSet1::whole());
        assert_eq!(pl("x \\/ !x").zero_set(), ClosedSet1::empty());
        assert_eq!(
            pl("x /\\ !x").zero_set(),
            ClosedSet1::point(q(0, 1)).union(&ClosedSet1::point(q(1, 1)))
        );
        assert_eq!(pl("d(x, !x)").zero_set(), ClosedSet1::point(q(1, 2)));
    }

    #[test]
    fn term_equality_examples() {
        let a = parse_term("x \\/ !x").unwrap();
        let b = parse_term("!(x /\\ !x)").unwrap();
        assert!(term_eq1(&a, &b).unwrap());

        let a = parse_term("x").unwrap();
        let b = parse_term("x + x").unwrap();
        assert!(!term_eq1(&a, &b).unwrap());
        let (x, fx, gx) =
            pl_diff_witness(&to_pl1(&a).unwrap(), &to_pl1(&b).unwrap()).unwrap();
        assert_eq!(x, q(1, 2));
        assert_eq!(fx, q(1, 2));
        assert_eq!(gx, q(1, 1));

        assert!(term_eq1(&parse_term("x - x").unwrap(), &parse_term("0").unwrap()).unwrap());
    }

    #[test]
    fn archimedean_via_zero_set_openness() {
        assert!(!archimedean_pl(&pl("x"))); // zero set {0}: neither empty nor everything
        assert!(archimedean_pl(&Pl1::zero()));
        let f = pl("x \\/ !x");
        assert!(archimedean_pl(&f));
        // the direct route agrees: the sum sequence goes stationary at n = 2
        assert!(!f.nmul(2).ominus(&f.nmul(1)).is_zero());
        assert!(f.nmul(3).ominus(&f.nmul(2)).is_zero());
    }

    #[test]
    fn archimedean_direct_cross_check_on_samples() {
        for s in ["x", "!x", "x . x", "x \\/ !x", "0", "1", "d(x, !x)"] {
            let f = pl(s);
            let stationary =
                (0..=16u32).any(|n| f.nmul(n + 1).ominus(&f.nmul(n)).is_zero());
            assert_eq!(archimedean_pl(&f), stationary, "mismatch on {s}");
        }
    }

    #[test]
    fn nmul_is_pointwise_truncated_scaling() {
        // independent oracle: nf evaluated pointwise must be min(1, n·f)
        for s in ["x", "x . x", "d(x, !x)", "x /\\ !x"] {
            let f = pl(s);
            for n in 0..=6u32 {
                let nf = f.nmul(n);
                for den in 1..=12i64 {
                    for num in 0..=den {
                        let x = q(num, den);
                        let direct = (f.eval(&x).unwrap() * q(n as i64, 1)).min(q(1, 1));
                        assert_eq!(nf.eval(&x).unwrap(), direct, "{s} at {num}/{den}, n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn closed_set_algebra() {
        let a = ClosedSet1::interval(q(0, 1), q(1, 2));
        let b = ClosedSet1::interval(q(1, 3), q(2, 3));
        assert_eq!(a.intersect(&b), ClosedSet1::interval(q(1, 3), q(1, 2)));
        assert!(ClosedSet1::point(q(2, 5)).is_subset(&a));
        assert!(!a.is_subset(&b));
        // touching intervals merge
        let u = ClosedSet1::interval(q(0, 1), q(1, 2)).union(&ClosedSet1::interval(q(1, 2), q(1, 1)));
        assert!(u.is_whole());
    }

    #[test]
    fn malformed_breakpoints_are_rejected() {
        assert!(Pl1::from_breakpoints(vec![(q(0, 1), q(0, 1))]).is_err());
        assert!(Pl1::from_breakpoints(vec![(q(0, 1), q(0, 1)), (q(1, 1), q(1, 2))]).is_err());
        assert!(Pl1::from_breakpoints(vec![(q(1, 4), q(0, 1)), (q(1, 1), q(1, 1))]).is_err());
        // collinear interior point is silently canonicalized away
        let f = Pl1::from_breakpoints(vec![
            (q(0, 1), q(0, 1)),
            (q(1, 2), q(1, 2)),
            (q(1, 1), q(1, 1)),
        ])
        .unwrap();
        assert_eq!(f, Pl1::identity());
    }

    #[test]
    fn multivariable_terms_are_rejected() {
        let t = parse_term("x1 + x2").unwrap();
        assert!(matches!(to_pl1(&t), Err(TermError::Multivariable { .. })));
        // a single variable of any name is fine
        let t = parse_term("x3 . x3").unwrap();
        assert_eq!(to_pl1(&t).unwrap(), pl("x . x"));
    }
}
