use std::fmt;

use serde::Serialize;

use crate::error::CoreError;

/// A finite MV-algebra `(A, ⊕, ¬, 0)` given by its operation tables.
///
/// Elements are opaque indices `0..size`. Presentation-level labels (such as
/// the rational `i/n` for the chain `Ł_n`) are the caller's concern; keeping
/// the carrier as bare indices makes products and quotients cheap and
/// canonical.
///
/// Construction does not require the tables to satisfy the MV axioms — a
/// deliberately broken table is representable so that [`check_axioms`]
/// can report the failures. Only dimensional consistency is enforced.
///
/// [`check_axioms`]: FiniteMvAlgebra::check_axioms
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteMvAlgebra {
    size: usize,
    oplus: Vec<usize>, // row-major size×size
    neg: Vec<usize>,
    zero: usize,
}

impl fmt::Debug for FiniteMvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteMvAlgebra(size={})", self.size)
    }
}

/// One of the checked axioms / order laws. `Lukasiewicz` is the
/// characteristic axiom `¬(¬x⊕y)⊕y = ¬(¬y⊕x)⊕x`; the order kinds verify
/// that `x ≤ y ⟺ x⊖y = 0` really is a lattice order with bottom `0` and
/// top `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomKind {
    OplusAssociative,
    OplusCommutative,
    ZeroUnit,
    NegInvolutive,
    OneAbsorbing,
    Lukasiewicz,
    OrderAntisymmetric,
    JoinUpperBound,
    JoinLeast,
    MeetLowerBound,
    MeetGreatest,
    ZeroBottom,
    OneTop,
}

impl fmt::Display for AxiomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomKind::OplusAssociative => "(x+y)+z = x+(y+z)",
            AxiomKind::OplusCommutative => "x+y = y+x",
            AxiomKind::ZeroUnit => "x+0 = x",
            AxiomKind::NegInvolutive => "!!x = x",
            AxiomKind::OneAbsorbing => "x+1 = 1",
            AxiomKind::Lukasiewicz => "!(!x+y)+y = !(!y+x)+x",
            AxiomKind::OrderAntisymmetric => "x<=y and y<=x imply x=y",
            AxiomKind::JoinUpperBound => "x\\/y is an upper bound",
            AxiomKind::JoinLeast => "x\\/y is the least upper bound",
            AxiomKind::MeetLowerBound => "x/\\y is a lower bound",
            AxiomKind::MeetGreatest => "x/\\y is the greatest lower bound",
            AxiomKind::ZeroBottom => "0 <= x",
            AxiomKind::OneTop => "x <= 1",
        };
        f.write_str(s)
    }
}

/// A single axiom violation with the witnessing tuple. Generic over the
/// element type so the Γ carrier can reuse it with integer-pair witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomFailure<E> {
    pub axiom: AxiomKind,
    pub witness: Vec<E>,
}

impl<E: fmt::Display> fmt::Display for AxiomFailure<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at (", self.axiom)?;
        for (i, w) in self.witness.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, ")")
    }
}

impl FiniteMvAlgebra {
    /// Builds an algebra from raw tables. Fails on any dimensional
    /// inconsistency or out-of-range entry; does not check the axioms.
    pub fn from_tables(
        size: usize,
        oplus: Vec<Vec<usize>>,
        neg: Vec<usize>,
        zero: usize,
    ) -> Result<Self, CoreError> {
        if size == 0 {
            return Err(CoreError::InvalidParameter("carrier must be non-empty".into()));
        }
        if oplus.len() != size {
            return Err(CoreError::MalformedAlgebra(format!(
                "oplus table has {} rows, expected {}",
                oplus.len(),
                size
            )));
        }
        let mut flat = Vec::with_capacity(size * size);
        for (i, row) in oplus.iter().enumerate() {
            if row.len() != size {
                return Err(CoreError::MalformedAlgebra(format!(
                    "oplus row {} has {} entries, expected {}",
                    i,
                    row.len(),
                    size
                )));
            }
            for &v in row {
                if v >= size {
                    return Err(CoreError::MalformedAlgebra(format!(
                        "oplus entry {v} out of range in row {i}"
                    )));
                }
                flat.push(v);
            }
        }
        if neg.len() != size {
            return Err(CoreError::MalformedAlgebra(format!(
                "neg table has {} entries, expected {}",
                neg.len(),
                size
            )));
        }
        if let Some(&v) = neg.iter().find(|&&v| v >= size) {
            return Err(CoreError::MalformedAlgebra(format!("neg entry {v} out of range")));
        }
        if zero >= size {
            return Err(CoreError::MalformedAlgebra(format!("zero index {zero} out of range")));
        }
        Ok(Self { size, oplus: flat, neg, zero })
    }

    /// The Łukasiewicz chain `Ł_n` with carrier `{0, 1/n, …, 1}`;
    /// element `i` encodes the rational `i/n`.
    pub fn chain(n: usize) -> Result<Self, CoreError> {
        if n == 0 {
            return Err(CoreError::InvalidParameter("chain parameter must be >= 1".into()));
        }
        let size = n + 1;
        let mut oplus = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                oplus.push((x + y).min(n));
            }
        }
        let neg = (0..size).map(|x| n - x).collect();
        Ok(Self { size, oplus, neg, zero: 0 })
    }

    /// Componentwise product. The pair `(a, b)` is encoded as
    /// `a * other.size() + b`; see [`pair_index`]/[`index_pair`].
    ///
    /// [`pair_index`]: FiniteMvAlgebra::pair_index
    /// [`index_pair`]: FiniteMvAlgebra::index_pair
    pub fn product(a: &FiniteMvAlgebra, b: &FiniteMvAlgebra) -> FiniteMvAlgebra {
        let size = a.size * b.size;
        let enc = |x: usize, y: usize| x * b.size + y;
        let mut oplus = Vec::with_capacity(size * size);
        for xa in 0..a.size {
            for xb in 0..b.size {
                for ya in 0..a.size {
                    for yb in 0..b.size {
                        oplus.push(enc(a.op(xa, ya), b.op(xb, yb)));
                    }
                }
            }
        }
        let mut neg = Vec::with_capacity(size);
        for xa in 0..a.size {
            for xb in 0..b.size {
                neg.push(enc(a.neg(xa), b.neg(xb)));
            }
        }
        FiniteMvAlgebra { size, oplus, neg, zero: enc(a.zero, b.zero) }
    }

    /// Encodes a pair of factor indices into a product-algebra index,
    /// given the size of the second factor.
    pub fn pair_index(a_index: usize, b_index: usize, b_size: usize) -> usize {
        a_index * b_size + b_index
    }

    /// Decodes a product-algebra index back into factor indices.
    pub fn index_pair(index: usize, b_size: usize) -> (usize, usize) {
        (index / b_size, index % b_size)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.neg[self.zero]
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size
    }

    pub fn check_element(&self, x: usize) -> Result<(), CoreError> {
        if x < self.size {
            Ok(())
        } else {
            Err(CoreError::ElementOutOfRange { element: x, size: self.size })
        }
    }

    /// `x ⊕ y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.oplus[x * self.size + y]
    }

    /// `¬x`.
    #[inline]
    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    /// `x ⊙ y = ¬(¬x ⊕ ¬y)`.
    #[inline]
    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.neg(self.op(self.neg(x), self.neg(y)))
    }

    /// `x ⊖ y = x ⊙ ¬y`.
    #[inline]
    pub fn ominus(&self, x: usize, y: usize) -> usize {
        self.odot(x, self.neg(y))
    }

    /// The derived order: `x ≤ y ⟺ x ⊖ y = 0`.
    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.ominus(x, y) == self.zero
    }

    /// `x ∨ y = (x ⊖ y) ⊕ y`.
    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.op(self.ominus(x, y), y)
    }

    /// `x ∧ y = ¬(¬x ∨ ¬y)`.
    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.neg(self.join(self.neg(x), self.neg(y)))
    }

    /// The distance `d(x, y) = (x ⊖ y) ⊕ (y ⊖ x)`.
    #[inline]
    pub fn dist(&self, x: usize, y: usize) -> usize {
        self.op(self.ominus(x, y), self.ominus(y, x))
    }

    /// The n-fold sum `nx = x ⊕ … ⊕ x`, with `0x = 0`.
    pub fn nmul(&self, n: usize, x: usize) -> usize {
        let mut acc = self.zero;
        for _ in 0..n {
            let next = self.op(acc, x);
            if next == acc {
                return acc; // stationary; further summands change nothing
            }
            acc = next;
        }
        acc
    }

    /// Checks every MV axiom and the derived-order laws exhaustively.
    /// The report is empty iff the tables define an MV-algebra.
    pub fn check_axioms(&self) -> Vec<AxiomFailure<usize>> {
        let mut failures = Vec::new();
        let m = self.size;
        let one = self.one();
        for x in 0..m {
            if self.op(x, self.zero) != x {
                failures.push(AxiomFailure { axiom: AxiomKind::ZeroUnit, witness: vec![x] });
            }
            if self.neg(self.neg(x)) != x {
                failures.push(AxiomFailure { axiom: AxiomKind::NegInvolutive, witness: vec![x] });
            }
            if self.op(x, one) != one {
                failures.push(AxiomFailure { axiom: AxiomKind::OneAbsorbing, witness: vec![x] });
            }
            if !self.leq(self.zero, x) {
                failures.push(AxiomFailure { axiom: AxiomKind::ZeroBottom, witness: vec![x] });
            }
            if !self.leq(x, one) {
                failures.push(AxiomFailure { axiom: AxiomKind::OneTop, witness: vec![x] });
            }
        }
        for x in 0..m {
            for y in 0..m {
                if self.op(x, y) != self.op(y, x) {
                    failures.push(AxiomFailure { axiom: AxiomKind::OplusCommutative, witness: vec![x, y] });
                }
                let lhs = self.op(self.neg(self.op(self.neg(x), y)), y);
                let rhs = self.op(self.neg(self.op(self.neg(y), x)), x);
                if lhs != rhs {
                    failures.push(AxiomFailure { axiom: AxiomKind::Lukasiewicz, witness: vec![x, y] });
                }
                if x != y && self.leq(x, y) && self.leq(y, x) {
                    failures.push(AxiomFailure { axiom: AxiomKind::OrderAntisymmetric, witness: vec![x, y] });
                }
                let j = self.join(x, y);
                if !(self.leq(x, j) && self.leq(y, j)) {
                    failures.push(AxiomFailure { axiom: AxiomKind::JoinUpperBound, witness: vec![x, y] });
                }
                let mt = self.meet(x, y);
                if !(self.leq(mt, x) && self.leq(mt, y)) {
                    failures.push(AxiomFailure { axiom: AxiomKind::MeetLowerBound, witness: vec![x, y] });
                }
            }
        }
        for x in 0..m {
            for y in 0..m {
                let j = self.join(x, y);
                let mt = self.meet(x, y);
                for z in 0..m {
                    if self.op(self.op(x, y), z) != self.op(x, self.op(y, z)) {
                        failures.push(AxiomFailure {
                            axiom: AxiomKind::OplusAssociative,
                            witness: vec![x, y, z],
                        });
                    }
                    if self.leq(x, z) && self.leq(y, z) && !self.leq(j, z) {
                        failures.push(AxiomFailure { axiom: AxiomKind::JoinLeast, witness: vec![x, y, z] });
                    }
                    if self.leq(z, x) && self.leq(z, y) && !self.leq(z, mt) {
                        failures.push(AxiomFailure { axiom: AxiomKind::MeetGreatest, witness: vec![x, y, z] });
                    }
                }
            }
        }
        failures
    }
}
