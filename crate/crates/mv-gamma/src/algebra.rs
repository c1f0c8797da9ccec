use std::fmt;

use serde::Serialize;

use mv_core::{AxiomFailure, AxiomKind, ElementClass, FiniteMvAlgebra};

use crate::error::GammaError;

/// An element `(p, q)` of the unit interval `[(0,0), (k,0)]` of
/// `ℤ ×lex ℤ`. The derived `Ord` is the lexicographic order, which is
/// exactly the MV order of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LexGammaElement {
    pub p: i64,
    pub q: i64,
}

impl LexGammaElement {
    pub const fn new(p: i64, q: i64) -> Self {
        Self { p, q }
    }
}

impl fmt::Display for LexGammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// The three ideals of a lex Γ-algebra: `{0} ⊂ Rad ⊂ A` with
/// `Rad = {(0, q) : q ≥ 0}`, the set of infinitesimals.
///
/// These are all of them: an ideal containing some `(p, q)` with `p ≥ 1`
/// contains an n-fold sum equal to the unit and hence everything, while a
/// nonzero ideal inside `Rad` contains some `(0, q)` with `q ≥ 1`, hence
/// `(0, 1)` by downward closure and every `(0, m)` by `⊕`-closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaIdeal {
    Zero,
    Rad,
    Full,
}

impl GammaIdeal {
    pub fn contains(self, x: LexGammaElement) -> bool {
        match self {
            GammaIdeal::Zero => x.p == 0 && x.q == 0,
            GammaIdeal::Rad => x.p == 0,
            GammaIdeal::Full => true,
        }
    }

    pub fn is_proper(self) -> bool {
        self != GammaIdeal::Full
    }

    pub fn name(self) -> &'static str {
        match self {
            GammaIdeal::Zero => "zero",
            GammaIdeal::Rad => "rad",
            GammaIdeal::Full => "full",
        }
    }
}

impl fmt::Display for GammaIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `Γ(ℤ ×lex ℤ, (k, 0))` for `k ≥ 1`; Chang's algebra at `k = 1`.
///
/// Elements carry exact `i64` coordinates with checked arithmetic; the
/// carrier is conceptually unbounded in `q` and an overflow surfaces as an
/// explicit error rather than a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LexGammaAlgebra {
    k: i64,
}

#[inline]
fn lex_le(a: (i64, i64), b: (i64, i64)) -> bool {
    a.0 < b.0 || (a.0 == b.0 && a.1 <= b.1)
}

impl LexGammaAlgebra {
    pub fn new(k: i64) -> Result<Self, GammaError> {
        if k < 1 {
            return Err(GammaError::InvalidUnit(k));
        }
        Ok(Self { k })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn zero(&self) -> LexGammaElement {
        LexGammaElement::new(0, 0)
    }

    pub fn one(&self) -> LexGammaElement {
        LexGammaElement::new(self.k, 0)
    }

    pub fn check_element(&self, x: LexGammaElement) -> Result<(), GammaError> {
        let ok = 0 <= x.p
            && x.p <= self.k
            && (x.p != 0 || x.q >= 0)
            && (x.p != self.k || x.q <= 0);
        if ok {
            Ok(())
        } else {
            Err(GammaError::InvalidElement { k: self.k, p: x.p, q: x.q })
        }
    }

    /// Truncated addition: the group sum capped at the unit in the
    /// lexicographic order.
    pub fn oplus(&self, x: LexGammaElement, y: LexGammaElement) -> Result<LexGammaElement, GammaError> {
        self.check_element(x)?;
        self.check_element(y)?;
        let p = x.p.checked_add(y.p).ok_or(GammaError::Overflow)?;
        let q = x.q.checked_add(y.q).ok_or(GammaError::Overflow)?;
        Ok(self.truncate(p, q))
    }

    #[inline]
    fn truncate(&self, p: i64, q: i64) -> LexGammaElement {
        if p > self.k || (p == self.k && q > 0) {
            self.one()
        } else {
            LexGammaElement::new(p, q)
        }
    }

    /// `¬x = (k, 0) − x = (k − p, −q)`.
    pub fn neg(&self, x: LexGammaElement) -> Result<LexGammaElement, GammaError> {
        self.check_element(x)?;
        Ok(LexGammaElement::new(self.k - x.p, -x.q))
    }

    /// `x ⊙ y = ¬(¬x ⊕ ¬y)`.
    pub fn odot(&self, x: LexGammaElement, y: LexGammaElement) -> Result<LexGammaElement, GammaError> {
        let s = self.oplus(self.neg(x)?, self.neg(y)?)?;
        self.neg(s)
    }

    /// `x ⊖ y = x ⊙ ¬y`.
    pub fn ominus(&self, x: LexGammaElement, y: LexGammaElement) -> Result<LexGammaElement, GammaError> {
        self.odot(x, self.neg(y)?)
    }

    /// The MV order coincides with the lexicographic order.
    pub fn leq(&self, x: LexGammaElement, y: LexGammaElement) -> bool {
        x <= y
    }

    pub fn join(&self, x: LexGammaElement, y: LexGammaElement) -> LexGammaElement {
        x.max(y)
    }

    pub fn meet(&self, x: LexGammaElement, y: LexGammaElement) -> LexGammaElement {
        x.min(y)
    }

    pub fn dist(&self, x: LexGammaElement, y: LexGammaElement) -> Result<LexGammaElement, GammaError> {
        self.oplus(self.ominus(x, y)?, self.ominus(y, x)?)
    }

    /// `nx`, stopping early once the sum goes stationary.
    pub fn nmul(&self, n: u32, x: LexGammaElement) -> Result<LexGammaElement, GammaError> {
        self.check_element(x)?;
        let mut acc = self.zero();
        for _ in 0..n {
            let next = self.oplus(acc, x)?;
            if next == acc {
                return Ok(acc);
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Closed-form element classification:
    /// infinitesimal ⟺ `p = 0` (then `nx = (0, nq)` never truncates and
    /// `nx ⊙ x = 0`); archimedean ⟺ `p ≥ 1` or `x = 0` (for `p ≥ 1` the
    /// sum `nx` reaches the unit by `n = k + 1`, while for `p = 0, q > 0`
    /// the differences `(n+1)x ⊖ nx = x` never vanish); quasiarchimedean
    /// always (for `p = 0` that constant difference is infinitesimal).
    pub fn classify(&self, x: LexGammaElement) -> Result<ElementClass, GammaError> {
        self.check_element(x)?;
        let infinitesimal = x.p == 0;
        if x == self.zero() {
            return Ok(ElementClass {
                infinitesimal: true,
                archimedean: true,
                quasiarchimedean: true,
                stabilization_index: Some(0),
            });
        }
        if x.p == 0 {
            // (n+1)x ⊖ nx = x for every n, and x is infinitesimal
            return Ok(ElementClass {
                infinitesimal: true,
                archimedean: false,
                quasiarchimedean: true,
                stabilization_index: Some(0),
            });
        }
        // p ≥ 1: nx reaches the unit; find the least stabilization point
        let mut cur = self.zero();
        let mut witness = None;
        for n in 0..=(self.k as u32 + 2) {
            let next = self.oplus(cur, x)?;
            if self.ominus(next, cur)? == self.zero() {
                witness = Some(n as usize);
                break;
            }
            cur = next;
        }
        Ok(ElementClass {
            infinitesimal,
            archimedean: true,
            quasiarchimedean: true,
            stabilization_index: witness,
        })
    }

    /// Least `n` with `(n+1)x ⊖ nx` infinitesimal.
    pub fn quasiarchimedean_witness(&self, x: LexGammaElement) -> Result<usize, GammaError> {
        self.check_element(x)?;
        let mut cur = self.zero();
        for n in 0..=(self.k as u32 + 2) {
            let next = self.oplus(cur, x)?;
            if self.ominus(next, cur)?.p == 0 {
                return Ok(n as usize);
            }
            cur = next;
        }
        unreachable!("every lex element is quasiarchimedean with witness <= k + 2")
    }

    /// The full (three-element) ideal lattice.
    pub fn ideals(&self) -> [GammaIdeal; 3] {
        [GammaIdeal::Zero, GammaIdeal::Rad, GammaIdeal::Full]
    }

    /// The quotient by `Rad` collapses each `(p, q)` to `p`, giving the
    /// chain `Ł_k`.
    pub fn quotient_by_rad(&self) -> FiniteMvAlgebra {
        FiniteMvAlgebra::chain(self.k as usize).expect("k >= 1")
    }

    /// The projection underlying [`quotient_by_rad`]: `(p, q) ↦ p`.
    ///
    /// [`quotient_by_rad`]: LexGammaAlgebra::quotient_by_rad
    pub fn project_mod_rad(&self, x: LexGammaElement) -> Result<usize, GammaError> {
        self.check_element(x)?;
        Ok(x.p as usize)
    }

    /// Class flags: a non-semisimple quasihyperarchimedean chain. The
    /// witness separating quasihyperarchimedean from hyperarchimedean is
    /// `c = (0, 1)`, which is quasiarchimedean but not archimedean.
    pub fn algebra_class(&self) -> mv_core::AlgebraClassFlags {
        mv_core::AlgebraClassFlags {
            simple: false,
            quasisimple: false,
            semisimple: false,
            chain: true,
            hyperarchimedean: false,
            quasihyperarchimedean: true,
        }
    }

    /// All valid elements with `|q| ≤ q_bound`, in lexicographic order.
    pub fn window_elements(&self, q_bound: i64) -> Vec<LexGammaElement> {
        let mut out = Vec::new();
        for p in 0..=self.k {
            let lo = if p == 0 { 0 } else { -q_bound };
            let hi = if p == self.k { 0 } else { q_bound };
            for q in lo..=hi {
                out.push(LexGammaElement::new(p, q));
            }
        }
        out
    }

    /// Exhaustive MV-axiom check over a `|q| ≤ q_bound` window. The
    /// operations are total on the carrier, so results may leave the
    /// window; only the quantified variables are windowed.
    pub fn check_axioms_window(&self, q_bound: i64) -> Vec<AxiomFailure<LexGammaElement>> {
        let k = self.k;
        let u = (k, 0i64);
        let trunc = |p: i64, q: i64| -> (i64, i64) {
            if p > k || (p == k && q > 0) {
                u
            } else {
                (p, q)
            }
        };
        let add = |a: (i64, i64), b: (i64, i64)| trunc(a.0 + b.0, a.1 + b.1);
        let neg = |a: (i64, i64)| (k - a.0, -a.1);
        let sub = |a: (i64, i64), b: (i64, i64)| neg(add(neg(a), b)); // a ⊖ b
        let el = |a: (i64, i64)| LexGammaElement::new(a.0, a.1);

        let window: Vec<(i64, i64)> =
            self.window_elements(q_bound).into_iter().map(|e| (e.p, e.q)).collect();
        let mut failures = Vec::new();
        let mut fail = |axiom: AxiomKind, witness: &[(i64, i64)]| {
            failures.push(AxiomFailure { axiom, witness: witness.iter().copied().map(el).collect() });
        };

        for &x in &window {
            if add(x, (0, 0)) != x {
                fail(AxiomKind::ZeroUnit, &[x]);
            }
            if neg(neg(x)) != x {
                fail(AxiomKind::NegInvolutive, &[x]);
            }
            if add(x, u) != u {
                fail(AxiomKind::OneAbsorbing, &[x]);
            }
            if !lex_le((0, 0), x) || !lex_le(x, u) {
                fail(AxiomKind::ZeroBottom, &[x]);
            }
        }
        for &x in &window {
            for &y in &window {
                if add(x, y) != add(y, x) {
                    fail(AxiomKind::OplusCommutative, &[x, y]);
                }
                let lhs = add(neg(add(neg(x), y)), y);
                let rhs = add(neg(add(neg(y), x)), x);
                if lhs != rhs {
                    fail(AxiomKind::Lukasiewicz, &[x, y]);
                }
                // the derived order must coincide with the lex order
                if (sub(x, y) == (0, 0)) != lex_le(x, y) {
                    fail(AxiomKind::OrderAntisymmetric, &[x, y]);
                }
                // the join/meet formulas must give the lex max/min
                let j = add(sub(x, y), y);
                if j != if lex_le(x, y) { y } else { x } {
                    fail(AxiomKind::JoinLeast, &[x, y]);
                }
                let m = neg(add(sub(neg(x), neg(y)), neg(y)));
                if m != if lex_le(x, y) { x } else { y } {
                    fail(AxiomKind::MeetGreatest, &[x, y]);
                }
            }
        }
        for &x in &window {
            for &y in &window {
                let xy = add(x, y);
                for &z in &window {
                    if add(xy, z) != add(x, add(y, z)) {
                        fail(AxiomKind::OplusAssociative, &[x, y, z]);
                    }
                }
            }
        }
        failures
    }
}
