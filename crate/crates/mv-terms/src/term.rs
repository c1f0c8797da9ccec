use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::TermError;
use crate::rational::{self, Q};

/// Abstract syntax of an MV-term. `One` and the non-primitive connectives
/// are definable from `{0, ¬, ⊕}`; [`Term::normalize`] performs that
/// rewriting, and evaluation treats both forms identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Zero,
    One,
    Var(String),
    Neg(Box<Term>),
    Oplus(Box<Term>, Box<Term>),
    Odot(Box<Term>, Box<Term>),
    Ominus(Box<Term>, Box<Term>),
    Join(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
    Dist(Box<Term>, Box<Term>),
}

/// A total assignment of rationals in `[0, 1]` to variable names.
pub type Valuation = BTreeMap<String, Q>;

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn oplus(a: Term, b: Term) -> Term {
        Term::Oplus(Box::new(a), Box::new(b))
    }

    pub fn odot(a: Term, b: Term) -> Term {
        Term::Odot(Box::new(a), Box::new(b))
    }

    pub fn ominus(a: Term, b: Term) -> Term {
        Term::Ominus(Box::new(a), Box::new(b))
    }

    pub fn join(a: Term, b: Term) -> Term {
        Term::Join(Box::new(a), Box::new(b))
    }

    pub fn meet(a: Term, b: Term) -> Term {
        Term::Meet(Box::new(a), Box::new(b))
    }

    pub fn dist(a: Term, b: Term) -> Term {
        Term::Dist(Box::new(a), Box::new(b))
    }

    /// The set of variable names occurring in the term.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Zero | Term::One => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Neg(t) => t.collect_vars(out),
            Term::Oplus(a, b)
            | Term::Odot(a, b)
            | Term::Ominus(a, b)
            | Term::Join(a, b)
            | Term::Meet(a, b)
            | Term::Dist(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Rewrites the term into the primitive signature `{0, ¬, ⊕}` using
    /// `1 = ¬0`, `x⊙y = ¬(¬x⊕¬y)`, `x⊖y = x⊙¬y`, `x∨y = (x⊖y)⊕y`,
    /// `x∧y = ¬(¬x∨¬y)` and `d(x,y) = (x⊖y)⊕(y⊖x)`.
    pub fn normalize(&self) -> Term {
        fn odot(a: Term, b: Term) -> Term {
            Term::neg(Term::oplus(Term::neg(a), Term::neg(b)))
        }
        fn ominus(a: Term, b: Term) -> Term {
            odot(a, Term::neg(b))
        }
        fn join(a: Term, b: Term) -> Term {
            Term::oplus(ominus(a, b.clone()), b)
        }
        match self {
            Term::Zero => Term::Zero,
            Term::One => Term::neg(Term::Zero),
            Term::Var(v) => Term::Var(v.clone()),
            Term::Neg(t) => Term::neg(t.normalize()),
            Term::Oplus(a, b) => Term::oplus(a.normalize(), b.normalize()),
            Term::Odot(a, b) => odot(a.normalize(), b.normalize()),
            Term::Ominus(a, b) => ominus(a.normalize(), b.normalize()),
            Term::Join(a, b) => join(a.normalize(), b.normalize()),
            Term::Meet(a, b) => {
                let (a, b) = (a.normalize(), b.normalize());
                Term::neg(join(Term::neg(a), Term::neg(b)))
            }
            Term::Dist(a, b) => {
                let (a, b) = (a.normalize(), b.normalize());
                Term::oplus(ominus(a.clone(), b.clone()), ominus(b, a))
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Term::Join(..) => 0,
            Term::Meet(..) => 1,
            Term::Oplus(..) | Term::Ominus(..) => 2,
            Term::Odot(..) => 3,
            _ => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.precedence();
        let parens = p < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Term::Zero => write!(f, "0")?,
            Term::One => write!(f, "1")?,
            Term::Var(v) => write!(f, "{v}")?,
            Term::Neg(t) => {
                write!(f, "!")?;
                t.fmt_prec(f, 4)?;
            }
            Term::Dist(a, b) => {
                write!(f, "d(")?;
                a.fmt_prec(f, 0)?;
                write!(f, ", ")?;
                b.fmt_prec(f, 0)?;
                write!(f, ")")?;
            }
            Term::Join(a, b) => {
                a.fmt_prec(f, 0)?;
                write!(f, " \\/ ")?;
                b.fmt_prec(f, 1)?;
            }
            Term::Meet(a, b) => {
                a.fmt_prec(f, 1)?;
                write!(f, " /\\ ")?;
                b.fmt_prec(f, 2)?;
            }
            Term::Oplus(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " + ")?;
                b.fmt_prec(f, 3)?;
            }
            Term::Ominus(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " - ")?;
                b.fmt_prec(f, 3)?;
            }
            Term::Odot(a, b) => {
                a.fmt_prec(f, 3)?;
                write!(f, " . ")?;
                b.fmt_prec(f, 4)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Exact evaluation at a rational point of `[0, 1]^vars`.
pub fn eval(t: &Term, v: &Valuation) -> Result<Q, TermError> {
    match t {
        Term::Zero => Ok(Q::from_integer(0.into())),
        Term::One => Ok(Q::from_integer(1.into())),
        Term::Var(name) => {
            let x = v
                .get(name)
                .ok_or_else(|| TermError::MissingBinding { var: name.clone() })?;
            if !rational::in_unit_interval(x) {
                return Err(TermError::InvalidValuation {
                    var: name.clone(),
                    value: rational::fmt_q(x),
                });
            }
            Ok(x.clone())
        }
        Term::Neg(t) => Ok(rational::mv_neg(&eval(t, v)?)),
        Term::Oplus(a, b) => Ok(rational::mv_oplus(&eval(a, v)?, &eval(b, v)?)),
        Term::Odot(a, b) => Ok(rational::mv_odot(&eval(a, v)?, &eval(b, v)?)),
        Term::Ominus(a, b) => Ok(rational::mv_ominus(&eval(a, v)?, &eval(b, v)?)),
        Term::Join(a, b) => Ok(rational::mv_join(&eval(a, v)?, &eval(b, v)?)),
        Term::Meet(a, b) => Ok(rational::mv_meet(&eval(a, v)?, &eval(b, v)?)),
        Term::Dist(a, b) => Ok(rational::mv_dist(&eval(a, v)?, &eval(b, v)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_term;
    use crate::rational::q;

    fn at(x: Q) -> Valuation {
        let mut v = Valuation::new();
        v.insert("x".into(), x);
        v
    }

    #[test]
    fn eval_examples() {
        let t = parse_term("x + x").unwrap();
        assert_eq!(eval(&t, &at(q(1, 3))).unwrap(), q(2, 3));

        let t = parse_term("x . x").unwrap();
        assert_eq!(eval(&t, &at(q(3, 4))).unwrap(), q(1, 2));

        let t = parse_term("d(x, x)").unwrap();
        for num in 0..=6 {
            assert_eq!(eval(&t, &at(q(num, 6))).unwrap(), q(0, 1));
        }
    }

    #[test]
    fn missing_binding_errors() {
        let t = parse_term("x + x2").unwrap();
        assert_eq!(
            eval(&t, &at(q(1, 2))).unwrap_err(),
            TermError::MissingBinding { var: "x2".into() }
        );
    }

    #[test]
    fn out_of_range_valuation_errors() {
        let t = parse_term("x").unwrap();
        assert!(matches!(
            eval(&t, &at(q(3, 2))).unwrap_err(),
            TermError::InvalidValuation { .. }
        ));
    }

    #[test]
    fn normalize_uses_only_primitives_and_preserves_values() {
        let samples = ["x . x", "x - x", "x \\/ !x", "x /\\ !x", "d(x, x + x)", "1"];
        fn primitive(t: &Term) -> bool {
            match t {
                Term::Zero | Term::Var(_) => true,
                Term::Neg(a) => primitive(a),
                Term::Oplus(a, b) => primitive(a) && primitive(b),
                _ => false,
            }
        }
        for s in samples {
            let t = parse_term(s).unwrap();
            let n = t.normalize();
            assert!(primitive(&n), "{s} did not normalize to {{0, !, +}}");
            for num in 0..=8 {
                let v = at(q(num, 8));
                assert_eq!(eval(&t, &v).unwrap(), eval(&n, &v).unwrap(), "at {num}/8 in {s}");
            }
        }
    }

    #[test]
    fn display_round_trips_through_the_parser() {
        let samples = [
            "x + x . x",
            "!(x + x)",
            "x \\/ x /\\ x",
            "d(x, !x) - x",
            "x - (x - x)",
            "1 + 0",
        ];
        for s in samples {
            let t = parse_term(s).unwrap();
            let printed = t.to_string();
            let back = parse_term(&printed).unwrap();
            assert_eq!(t, back, "round trip failed: {s} printed as {printed}");
        }
    }
}
