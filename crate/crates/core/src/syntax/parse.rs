//! Surface syntax to de Bruijn terms.
//!
//! The same concrete syntax serves every calculus; the [`Dialect`] decides
//! whether `\x:A. b`, juxtaposition, pairs and projections build the simple
//! (SDC) constructors or the graded (DDC) ones.

use std::fmt;

use thiserror::Error;

use super::context::Context;
use super::lexer::{lex, Tok, Token, KEYWORDS};
use super::subst::shift;
use super::term::{Motive, Name, Names2, Term};
use crate::lattice::{Grade, Lattice};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Dialect {
    Sdc,
    Ddc,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownGrade,
    UnboundVariable,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

/// Which sorts are in scope and which dialect to build.
#[derive(Clone, Debug)]
pub struct ParseOptions {
    pub dialect: Dialect,
    pub sorts: Vec<String>,
}

impl ParseOptions {
    pub fn sdc() -> ParseOptions {
        ParseOptions { dialect: Dialect::Sdc, sorts: vec!["Type".into()] }
    }

    pub fn ddc() -> ParseOptions {
        ParseOptions { dialect: Dialect::Ddc, sorts: vec!["Type".into()] }
    }

    pub fn with_sorts(mut self, sorts: Vec<String>) -> ParseOptions {
        self.sorts = sorts;
        self
    }
}

/// Parses a closed term in the DDC dialect with the single sort `Type`.
pub fn parse(source: &str, lattice: &Lattice) -> Result<Term, ParseError> {
    parse_with(source, lattice, &ParseOptions::ddc())
}

/// Parses a closed term.
pub fn parse_with(source: &str, lattice: &Lattice, opts: &ParseOptions) -> Result<Term, ParseError> {
    let (ctx, t) = parse_program(source, lattice, opts)?;
    if !ctx.is_empty() {
        return Err(ParseError {
            kind: ParseErrorKind::Syntax,
            line: 1,
            col: 1,
            message: "assumptions are not allowed here".into(),
        });
    }
    Ok(t)
}

/// Parses `assume x :^g A;` declarations followed by a term.
pub fn parse_program(source: &str, lattice: &Lattice, opts: &ParseOptions) -> Result<(Context, Term), ParseError> {
    let mut p = Parser { toks: lex(source)?, pos: 0, lat: lattice, opts, scope: Vec::new() };
    let mut ctx = Context::new();
    while p.is_kw("assume") {
        p.bump();
        let x = p.ident()?;
        p.expect(Tok::Colon)?;
        let g = p.grade_opt()?;
        let ty = p.expr()?;
        p.expect(Tok::Semi)?;
        ctx.push(Name::new(&x), g, ty);
        p.scope.push(x);
    }
    let t = p.expr()?;
    if p.peek() != &Tok::Eof {
        return Err(p.error("expected end of input"));
    }
    Ok((ctx, t))
}

/// Parses a term whose free variables are the given names, innermost last.
pub fn parse_open(source: &str, lattice: &Lattice, opts: &ParseOptions, names: &[String]) -> Result<Term, ParseError> {
    let mut p = Parser { toks: lex(source)?, pos: 0, lat: lattice, opts, scope: names.to_vec() };
    let t = p.expr()?;
    if p.peek() != &Tok::Eof {
        return Err(p.error("expected end of input"));
    }
    Ok(t)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    lat: &'a Lattice,
    opts: &'a ParseOptions,
    scope: Vec<String>,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, n: usize) -> &Tok {
        &self.toks[(self.pos + n).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: &str) -> ParseError {
        self.error_kind(ParseErrorKind::Syntax, msg.to_string())
    }

    fn error_kind(&self, kind: ParseErrorKind, message: String) -> ParseError {
        let t = &self.toks[self.pos];
        ParseError { kind, line: t.line, col: t.col, message }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected {}", describe(&tok))))
        }
    }

    fn is_kw(&self, kw: &str) -> bool {
        matches!(self.peek(), Tok::Ident(s) if s == kw)
    }

    fn expect_kw(&mut self, kw: &str) -> Result<(), ParseError> {
        if self.is_kw(kw) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{kw}`")))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                self.bump();
                Ok(s)
            }
            _ => Err(self.error("expected an identifier")),
        }
    }

    fn grade_name(&mut self) -> Result<Grade, ParseError> {
        match self.peek().clone() {
            Tok::Ident(s) => match self.lat.grade(&s) {
                Some(g) => {
                    self.bump();
                    Ok(g)
                }
                None => Err(self.error_kind(ParseErrorKind::UnknownGrade, format!("unknown grade `{s}`"))),
            },
            _ => Err(self.error("expected a grade")),
        }
    }

    /// An optional `^g`, defaulting to the bottom grade.
    fn grade_opt(&mut self) -> Result<Grade, ParseError> {
        if *self.peek() == Tok::Caret {
            self.bump();
            self.grade_name()
        } else {
            Ok(self.lat.bot())
        }
    }

    fn no_grade(&self, what: &str) -> Result<(), ParseError> {
        if *self.peek() == Tok::Caret {
            Err(self.error(&format!("{what} takes no grade in the simple dialect")))
        } else {
            Ok(())
        }
    }

    fn sdc(&self) -> bool {
        self.opts.dialect == Dialect::Sdc
    }

    fn under<T>(&mut self, names: &[&str], f: impl FnOnce(&mut Self) -> Result<T, ParseError>) -> Result<T, ParseError> {
        let n = self.scope.len();
        self.scope.extend(names.iter().map(|s| s.to_string()));
        let r = f(self);
        self.scope.truncate(n);
        r
    }

    fn expr(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Backslash => {
                self.bump();
                let x = self.ident()?;
                self.expect(Tok::Colon)?;
                let sdc = self.sdc();
                if sdc {
                    self.no_grade("a lambda")?;
                }
                let g = self.grade_opt()?;
                let a = self.expr()?;
                self.expect(Tok::Dot)?;
                let b = self.under(&[&x], |p| p.expr())?;
                Ok(if sdc { Term::lam(&x, a, b) } else { Term::glam(g, &x, a, b) })
            }
            Tok::Ident(kw) if kw == "Pi" || kw == "Sigma" => {
                self.bump();
                let x = self.ident()?;
                self.expect(Tok::Colon)?;
                let g = self.grade_opt()?;
                let a = self.expr()?;
                self.expect(Tok::Dot)?;
                let b = self.under(&[&x], |p| p.expr())?;
                Ok(if kw == "Pi" { Term::pi(g, &x, a, b) } else { Term::sigma(g, &x, a, b) })
            }
            Tok::Ident(kw) if kw == "let" => {
                self.bump();
                self.expect(Tok::LParen)?;
                let x = self.ident()?;
                let g = self.grade_opt()?;
                self.expect(Tok::Comma)?;
                let y = self.ident()?;
                self.expect(Tok::RParen)?;
                self.expect(Tok::Equals)?;
                let a = self.expr()?;
                let motive = if self.is_kw("return") {
                    self.bump();
                    let z = self.ident()?;
                    self.expect(Tok::Dot)?;
                    let c = self.under(&[&z], |p| p.expr())?;
                    Some(Motive(Name::new(&z), Box::new(c)))
                } else {
                    None
                };
                self.expect_kw("in")?;
                let body = self.under(&[&x, &y], |p| p.expr())?;
                Ok(Term::LetPair(g, Names2(Name::new(&x), Name::new(&y)), Box::new(a), Box::new(body), motive))
            }
            Tok::Ident(kw) if kw == "bind" => {
                self.bump();
                let g = self.grade_opt()?;
                let x = self.ident()?;
                self.expect(Tok::Equals)?;
                let a = self.expr()?;
                self.expect_kw("in")?;
                let b = self.under(&[&x], |p| p.expr())?;
                Ok(Term::bind(g, &x, a, b))
            }
            Tok::Ident(kw) if kw == "case" => {
                self.bump();
                let a = self.expr()?;
                self.expect_kw("of")?;
                let b1 = self.expr()?;
                self.expect(Tok::Semi)?;
                let b2 = self.expr()?;
                Ok(Term::case(a, b1, b2))
            }
            _ => self.arrow(),
        }
    }

    fn arrow(&mut self) -> Result<Term, ParseError> {
        let a = self.sum()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let b = self.expr()?;
            Ok(if self.sdc() { Term::arrow(a, b) } else { Term::pi(self.lat.bot(), "x", a, shift(&b, 1)) })
        } else {
            Ok(a)
        }
    }

    fn sum(&mut self) -> Result<Term, ParseError> {
        let a = self.prod()?;
        if *self.peek() == Tok::Plus {
            self.bump();
            let b = self.sum()?;
            Ok(Term::sum(a, b))
        } else {
            Ok(a)
        }
    }

    fn prod(&mut self) -> Result<Term, ParseError> {
        let a = self.app()?;
        if *self.peek() == Tok::Star {
            self.bump();
            let b = self.prod()?;
            Ok(if self.sdc() { Term::prod(a, b) } else { Term::sigma(self.lat.bot(), "x", a, shift(&b, 1)) })
        } else {
            Ok(a)
        }
    }

    fn starts_atom(&self) -> bool {
        match self.peek() {
            Tok::LParen => true,
            Tok::Ident(s) => !KEYWORDS.contains(&s.as_str()) || s == "Unit" || s == "unit",
            _ => false,
        }
    }

    fn app(&mut self) -> Result<Term, ParseError> {
        let mut head = self.head()?;
        while self.starts_atom() {
            let arg = self.atom()?;
            if self.sdc() {
                self.no_grade("an application")?;
                head = Term::app(head, arg);
            } else {
                let g = if *self.peek() == Tok::Caret && *self.peek_at(2) != Tok::Comma {
                    self.bump();
                    self.grade_name()?
                } else {
                    self.lat.bot()
                };
                head = Term::gapp(head, arg, g);
            }
        }
        Ok(head)
    }

    fn head(&mut self) -> Result<Term, ParseError> {
        let kw = match self.peek() {
            Tok::Ident(s) => s.clone(),
            _ => return self.atom(),
        };
        match kw.as_str() {
            "inj1" | "inj2" => {
                self.bump();
                let other = if *self.peek() == Tok::LBrace {
                    self.bump();
                    let t = self.expr()?;
                    self.expect(Tok::RBrace)?;
                    t
                } else {
                    Term::UnitTy
                };
                let a = self.atom()?;
                Ok(if kw == "inj1" { Term::inj1(other, a) } else { Term::inj2(other, a) })
            }
            "eta" | "seal" | "unseal" | "T" => {
                self.bump();
                let g = self.grade_opt()?;
                let a = self.atom()?;
                Ok(match kw.as_str() {
                    "eta" => Term::ret(g, a),
                    "seal" => Term::seal(g, a),
                    "unseal" => Term::unseal(g, a),
                    _ => Term::tmonad(g, a),
                })
            }
            "pi1" | "pi2" => {
                self.bump();
                let first = kw == "pi1";
                if self.sdc() {
                    self.no_grade("a projection")?;
                    let a = self.atom()?;
                    Ok(if first { Term::proj1(a) } else { Term::proj2(a) })
                } else {
                    let g = self.grade_opt()?;
                    let a = self.atom()?;
                    Ok(if first { Term::fst(g, a) } else { Term::snd(g, a) })
                }
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let a = self.expr()?;
                if *self.peek() == Tok::RParen {
                    self.bump();
                    return Ok(a);
                }
                let sdc = self.sdc();
                if sdc {
                    self.no_grade("a pair")?;
                }
                let g = self.grade_opt()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RParen)?;
                if sdc {
                    return Ok(Term::pair(a, b));
                }
                if self.is_kw("as") {
                    self.bump();
                    let ty = self.atom()?;
                    Ok(Term::gpair_as(a, g, b, ty))
                } else {
                    Ok(Term::gpair(a, g, b))
                }
            }
            Tok::Ident(s) if s == "Unit" => {
                self.bump();
                Ok(Term::UnitTy)
            }
            Tok::Ident(s) if s == "unit" => {
                self.bump();
                Ok(Term::UnitTm)
            }
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                if let Some(i) = self.scope.iter().rev().position(|x| *x == s) {
                    self.bump();
                    Ok(Term::Var(i))
                } else if self.opts.sorts.contains(&s) {
                    self.bump();
                    Ok(Term::sort(&s))
                } else {
                    Err(self.error_kind(ParseErrorKind::UnboundVariable, format!("unbound variable `{s}`")))
                }
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

fn describe(tok: &Tok) -> String {
    match tok {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Backslash => "`\\`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::LBrace => "`{`".into(),
        Tok::RBrace => "`}`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Colon => "`:`".into(),
        Tok::Caret => "`^`".into(),
        Tok::Dot => "`.`".into(),
        Tok::Equals => "`=`".into(),
        Tok::Semi => "`;`".into(),
        Tok::Plus => "`+`".into(),
        Tok::Star => "`*`".into(),
        Tok::Arrow => "`->`".into(),
        Tok::Eof => "end of input".into(),
    }
}
