//! Recursive-descent parser for the term grammar:
//!
//! ```text
//! term := disj
//! disj := conj { "\/" conj }
//! conj := sum  { "/\" sum }
//! sum  := prod { ("+" | "-") prod }
//! prod := atom { "." atom }
//! atom := "0" | "1" | ident | "!" atom | "d(" term "," term ")" | "(" term ")"
//! ident := "x" digits?
//! ```
//!
//! All binary connectives associate to the left; columns in errors are
//! 1-based character positions.

use crate::error::TermError;
use crate::term::Term;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Zero,
    One,
    Ident(String),
    DistHead,
    Bang,
    Plus,
    Minus,
    Dot,
    JoinOp,
    MeetOp,
    LParen,
    RParen,
    Comma,
}

struct Lexed {
    tok: Tok,
    col: usize,
}

fn lex(s: &str) -> Result<Vec<Lexed>, TermError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                out.push(Lexed { tok: Tok::Plus, col });
                i += 1;
            }
            '-' => {
                out.push(Lexed { tok: Tok::Minus, col });
                i += 1;
            }
            '.' => {
                out.push(Lexed { tok: Tok::Dot, col });
                i += 1;
            }
            '!' => {
                out.push(Lexed { tok: Tok::Bang, col });
                i += 1;
            }
            '(' => {
                out.push(Lexed { tok: Tok::LParen, col });
                i += 1;
            }
            ')' => {
                out.push(Lexed { tok: Tok::RParen, col });
                i += 1;
            }
            ',' => {
                out.push(Lexed { tok: Tok::Comma, col });
                i += 1;
            }
            '\\' => {
                if chars.get(i + 1) == Some(&'/') {
                    out.push(Lexed { tok: Tok::JoinOp, col });
                    i += 2;
                } else {
                    return Err(TermError::Syntax { col, message: "expected `\\/`".into() });
                }
            }
            '/' => {
                if chars.get(i + 1) == Some(&'\\') {
                    out.push(Lexed { tok: Tok::MeetOp, col });
                    i += 2;
                } else {
                    return Err(TermError::Syntax { col, message: "expected `/\\`".into() });
                }
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                match word.as_str() {
                    "0" => out.push(Lexed { tok: Tok::Zero, col }),
                    "1" => out.push(Lexed { tok: Tok::One, col }),
                    _ => {
                        return Err(TermError::Syntax {
                            col,
                            message: format!("unexpected number `{word}`; only 0 and 1 are constants"),
                        })
                    }
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                let word: String = chars[start..i].iter().collect();
                if word == "d" {
                    out.push(Lexed { tok: Tok::DistHead, col });
                } else if word.starts_with('x')
                    && word.len() >= 1
                    && word[1..].chars().all(|c| c.is_ascii_digit())
                {
                    out.push(Lexed { tok: Tok::Ident(word), col });
                } else {
                    return Err(TermError::UnknownIdent { col, name: word });
                }
            }
            other => {
                return Err(TermError::Syntax {
                    col,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Lexed>,
    pos: usize,
    end_col: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|l| l.col).unwrap_or(self.end_col)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|l| l.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), TermError> {
        if self.peek() == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(TermError::Syntax { col: self.col(), message: format!("expected {what}") })
        }
    }

    fn disj(&mut self) -> Result<Term, TermError> {
        let mut t = self.conj()?;
        while self.peek() == Some(&Tok::JoinOp) {
            self.pos += 1;
            t = Term::join(t, self.conj()?);
        }
        Ok(t)
    }

    fn conj(&mut self) -> Result<Term, TermError> {
        let mut t = self.sum()?;
        while self.peek() == Some(&Tok::MeetOp) {
            self.pos += 1;
            t = Term::meet(t, self.sum()?);
        }
        Ok(t)
    }

    fn sum(&mut self) -> Result<Term, TermError> {
        let mut t = self.prod()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    t = Term::oplus(t, self.prod()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    t = Term::ominus(t, self.prod()?);
                }
                _ => return Ok(t),
            }
        }
    }

    fn prod(&mut self) -> Result<Term, TermError> {
        let mut t = self.atom()?;
        while self.peek() == Some(&Tok::Dot) {
            self.pos += 1;
            t = Term::odot(t, self.atom()?);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term, TermError> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Zero) => Ok(Term::Zero),
            Some(Tok::One) => Ok(Term::One),
            Some(Tok::Ident(name)) => Ok(Term::Var(name)),
            Some(Tok::Bang) => Ok(Term::neg(self.atom()?)),
            Some(Tok::DistHead) => {
                self.expect(Tok::LParen, "`(` after `d`")?;
                let a = self.disj()?;
                self.expect(Tok::Comma, "`,` between the arguments of d")?;
                let b = self.disj()?;
                self.expect(Tok::RParen, "`)` closing d(…)")?;
                Ok(Term::dist(a, b))
            }
            Some(Tok::LParen) => {
                let t = self.disj()?;
                self.expect(Tok::RParen, "closing `)`")?;
                Ok(t)
            }
            Some(other) => Err(TermError::Syntax {
                col,
                message: format!("unexpected token `{other:?}` where a term atom was expected"),
            }),
            None => Err(TermError::Syntax { col, message: "unexpected end of input".into() }),
        }
    }
}

/// Parses a term, or reports the first error with its 1-based column.
pub fn parse_term(s: &str) -> Result<Term, TermError> {
    let toks = lex(s)?;
    let end_col = s.chars().count() + 1;
    let mut p = Parser { toks, pos: 0, end_col };
    let t = p.disj()?;
    if p.pos != p.toks.len() {
        return Err(TermError::Syntax { col: p.col(), message: "trailing input after term".into() });
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn direct_parses() {
        assert_eq!(
            parse_term("!(x + x)").unwrap(),
            Term::neg(Term::oplus(Term::var("x"), Term::var("x")))
        );
        assert_eq!(
            parse_term("x . x").unwrap(),
            Term::odot(Term::var("x"), Term::var("x"))
        );
    }

    #[test]
    fn syntax_error_carries_the_column() {
        match parse_term("x + * x").unwrap_err() {
            TermError::Syntax { col, .. } => assert_eq!(col, 5),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_identifier_is_reported() {
        match parse_term("x + y").unwrap_err() {
            TermError::UnknownIdent { col, name } => {
                assert_eq!(col, 5);
                assert_eq!(name, "y");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn precedence_and_associativity() {
        // prod binds tighter than sum, sum tighter than meet, meet tighter than join
        assert_eq!(
            parse_term("x + x . x").unwrap(),
            Term::oplus(Term::var("x"), Term::odot(Term::var("x"), Term::var("x")))
        );
        assert_eq!(
            parse_term("x \\/ x /\\ x").unwrap(),
            Term::join(Term::var("x"), Term::meet(Term::var("x"), Term::var("x")))
        );
        // left associativity of the sum level
        assert_eq!(
            parse_term("x - x + x").unwrap(),
            Term::oplus(Term::ominus(Term::var("x"), Term::var("x")), Term::var("x"))
        );
    }

    #[test]
    fn dist_and_parens() {
        assert_eq!(
            parse_term("d(x, x1 + x2)").unwrap(),
            Term::dist(Term::var("x"), Term::oplus(Term::var("x1"), Term::var("x2")))
        );
        assert!(parse_term("d x").is_err());
        assert!(parse_term("(x").is_err());
        assert!(parse_term("x)").is_err());
        assert!(parse_term("").is_err());
        assert!(parse_term("2").is_err());
    }
}
