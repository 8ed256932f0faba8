//! Boolean combinations of registered space predicates.
//!
//! Grammar (loosest binding first): `expr = and ('|' and)*`,
//! `and = unary ('&' unary)*`, `unary = '!' unary | '(' expr ')' | ident`.
//! Identifiers are the names accepted by
//! [`eval_named_predicate`](crate::dense::eval_named_predicate), so a
//! counterexample hunt composes existing predicates without new semantics.

use crate::dense::eval_named_predicate;
use crate::enumerate::Caps;
use crate::error::{Error, Result};
use crate::space::FiniteSpace;

/// A parsed predicate expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Ident(String),
    Not(Box<Expr>),
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Parses `src`; rejects trailing input and unknown operators.
    pub fn parse(src: &str) -> Result<Expr> {
        let mut p = Parser {
            src: src.as_bytes(),
            pos: 0,
        };
        let e = p.or_expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::BadExpression(format!(
                "unexpected input at byte {}: `{}`",
                p.pos,
                &src[p.pos..]
            )));
        }
        Ok(e)
    }

    /// Evaluates against a space; unknown identifiers surface the
    /// underlying predicate-registry error.
    pub fn eval(&self, space: &FiniteSpace, caps: &Caps) -> Result<bool> {
        Ok(match self {
            Expr::Ident(name) => eval_named_predicate(name, space, caps)?,
            Expr::Not(e) => !e.eval(space, caps)?,
            Expr::And(a, b) => a.eval(space, caps)? && b.eval(space, caps)?,
            Expr::Or(a, b) => a.eval(space, caps)? || b.eval(space, caps)?,
        })
    }

    /// All identifiers mentioned, for upfront validation.
    pub fn idents(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_idents(&mut out);
        out
    }

    fn collect_idents<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Ident(name) => out.push(name),
            Expr::Not(e) => e.collect_idents(out),
            Expr::And(a, b) | Expr::Or(a, b) => {
                a.collect_idents(out);
                b.collect_idents(out);
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn or_expr(&mut self) -> Result<Expr> {
        let mut e = self.and_expr()?;
        while self.eat(b'|') {
            e = Expr::Or(Box::new(e), Box::new(self.and_expr()?));
        }
        Ok(e)
    }

    fn and_expr(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while self.eat(b'&') {
            e = Expr::And(Box::new(e), Box::new(self.unary()?));
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'!') {
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        if self.eat(b'(') {
            let e = self.or_expr()?;
            if !self.eat(b')') {
                return Err(Error::BadExpression("missing `)`".to_string()));
            }
            return Ok(e);
        }
        self.ident()
    }

    fn ident(&mut self) -> Result<Expr> {
        self.skip_ws();
        let start = self.pos;
        while self
            .src
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::BadExpression(format!(
                "expected a predicate name at byte {start}"
            )));
        }
        let name = std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii-delimited slice")
            .to_string();
        Ok(Expr::Ident(name))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_precedence_and_grouping() {
        // `&` binds tighter than `|`.
        let e = Expr::parse("a | b & c").unwrap();
        assert_eq!(
            e,
            Expr::Or(
                Box::new(Expr::Ident("a".into())),
                Box::new(Expr::And(
                    Box::new(Expr::Ident("b".into())),
                    Box::new(Expr::Ident("c".into()))
                ))
            )
        );
        let g = Expr::parse("(a | b) & !c").unwrap();
        assert_eq!(
            g,
            Expr::And(
                Box::new(Expr::Or(
                    Box::new(Expr::Ident("a".into())),
                    Box::new(Expr::Ident("b".into()))
                )),
                Box::new(Expr::Not(Box::new(Expr::Ident("c".into()))))
            )
        );
        assert_eq!(g.idents(), ["a", "b", "c"]);
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "a &", "& a", "(a", "a b", "a ^ b", "!(", "a)"] {
            assert!(
                matches!(Expr::parse(bad), Err(Error::BadExpression(_))),
                "`{bad}` should not parse"
            );
        }
    }

    #[test]
    fn evaluates_against_spaces() {
        let caps = Caps::default();
        let h = FiniteSpace::h_analogue();
        let e = Expr::parse("ultraconnected & !dense_ultraconnected").unwrap();
        assert!(e.eval(&h, &caps).unwrap());
        assert!(!e.eval(&FiniteSpace::indiscrete(3), &caps).unwrap());

        let unknown = Expr::parse("mystery | connected").unwrap();
        assert!(unknown.eval(&h, &caps).is_err());
    }
}
