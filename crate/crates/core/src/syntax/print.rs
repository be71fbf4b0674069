//! Pretty-printing back to the surface syntax.
//!
//! Binders are printed with their hints, renamed when a hint would shadow a
//! name already in scope, so `parse(print(t)) == t`.

use std::collections::HashSet;

use super::lexer::KEYWORDS;
use super::term::{Motive, Name, Term};
use crate::lattice::{Grade, Lattice};

/// Prints a closed term.
pub fn print(t: &Term, lat: &Lattice) -> String {
    print_in(t, lat, &[])
}

/// Prints a term whose free variables carry the given names, innermost last.
pub fn print_in(t: &Term, lat: &Lattice, free: &[Name]) -> String {
    let mut avoid = HashSet::new();
    collect_sorts(t, &mut avoid);
    let mut p = Printer { lat, scope: free.iter().map(|n| n.as_str().to_string()).collect(), avoid, out: String::new() };
    p.term(t, 0);
    p.out
}

fn collect_sorts(t: &Term, out: &mut HashSet<String>) {
    if let Term::Sort(s) = t {
        out.insert(s.to_string());
    }
    t.for_each_child(|c, _| collect_sorts(c, out));
}

struct Printer<'a> {
    lat: &'a Lattice,
    scope: Vec<String>,
    avoid: HashSet<String>,
    out: String,
}

const EXPR: u8 = 0;
const ARROW: u8 = 1;
const SUM: u8 = 2;
const PROD: u8 = 3;
const APP: u8 = 4;
const ATOM: u8 = 5;

impl Printer<'_> {
    fn w(&mut self, s: &str) {
        self.out.push_str(s);
    }

    fn grade(&mut self, g: Grade) {
        self.out.push('^');
        let name = self.lat.name(g).to_string();
        self.w(&name);
    }

    fn fresh(&self, hint: &Name) -> String {
        let base = match hint.as_str() {
            "" => "x",
            s if KEYWORDS.contains(&s) => "x",
            s => s,
        };
        let taken = |s: &str| self.scope.iter().any(|x| x == s) || self.avoid.contains(s) || KEYWORDS.contains(&s);
        if !taken(base) {
            return base.to_string();
        }
        (1..).map(|i| format!("{base}{i}")).find(|s| !taken(s)).unwrap()
    }

    fn bound<R>(&mut self, names: &[String], f: impl FnOnce(&mut Self) -> R) -> R {
        let n = self.scope.len();
        self.scope.extend(names.iter().cloned());
        let r = f(self);
        self.scope.truncate(n);
        r
    }

    fn term(&mut self, t: &Term, prec: u8) {
        let own = precedence(t);
        if own < prec {
            self.w("(");
            self.raw(t);
            self.w(")");
        } else {
            self.raw(t);
        }
    }

    fn raw(&mut self, t: &Term) {
        use Term::*;
        match t {
            Var(i) => {
                let s = match self.scope.len().checked_sub(i + 1) {
                    Some(p) => self.scope[p].clone(),
                    None => format!("#{i}"),
                };
                self.w(&s);
            }
            Sort(s) => self.w(s),
            UnitTy => self.w("Unit"),
            UnitTm => self.w("unit"),
            Arrow(a, b) => {
                self.term(a, SUM);
                self.w(" -> ");
                self.term(b, ARROW);
            }
            Sum(a, b) => {
                self.term(a, PROD);
                self.w(" + ");
                self.term(b, SUM);
            }
            Prod(a, b) => {
                self.term(a, APP);
                self.w(" * ");
                self.term(b, PROD);
            }
            TMonad(g, a) => {
                self.w("T");
                self.grade(*g);
                self.w(" ");
                self.term(a, ATOM);
            }
            Lam(x, a, b) => {
                let x = self.fresh(x);
                self.w(&format!("\\{x}:"));
                self.term(a, EXPR);
                self.w(". ");
                self.bound(&[x], |p| p.term(b, EXPR));
            }
            GLam(g, x, a, b) => {
                let x = self.fresh(x);
                self.w(&format!("\\{x}:"));
                self.grade(*g);
                self.w(" ");
                self.term(a, EXPR);
                self.w(". ");
                self.bound(&[x], |p| p.term(b, EXPR));
            }
            Pi(g, x, a, b) | Sigma(g, x, a, b) => {
                let x = self.fresh(x);
                self.w(if matches!(t, Pi(..)) { "Pi " } else { "Sigma " });
                self.w(&format!("{x}:"));
                self.grade(*g);
                self.w(" ");
                self.term(a, EXPR);
                self.w(". ");
                self.bound(&[x], |p| p.term(b, EXPR));
            }
            App(b, a) => {
                self.term(b, APP);
                self.w(" ");
                self.term(a, ATOM);
            }
            GApp(b, a, g) => {
                self.term(b, APP);
                self.w(" ");
                self.term(a, ATOM);
                self.grade(*g);
            }
            Pair(a, b) => {
                self.w("(");
                self.term(a, EXPR);
                self.w(", ");
                self.term(b, EXPR);
                self.w(")");
            }
            GPair(a, g, b, ty) => {
                self.w("(");
                self.term(a, EXPR);
                self.grade(*g);
                self.w(", ");
                self.term(b, EXPR);
                self.w(")");
                if let Some(ty) = ty {
                    self.w(" as (");
                    self.term(ty, EXPR);
                    self.w(")");
                }
            }
            Proj1(a) | Proj2(a) => {
                self.w(if matches!(t, Proj1(_)) { "pi1 " } else { "pi2 " });
                self.term(a, ATOM);
            }
            Return(g, a) | Seal(g, a) | Unseal(g, a) => {
                self.w(match t {
                    Return(..) => "eta",
                    Seal(..) => "seal",
                    _ => "unseal",
                });
                self.grade(*g);
                self.w(" ");
                self.term(a, ATOM);
            }
            Bind(g, x, a, b) => {
                self.w("bind");
                self.grade(*g);
                let x = self.fresh(x);
                self.w(&format!(" {x} = "));
                self.term(a, EXPR);
                self.w(" in ");
                self.bound(&[x], |p| p.term(b, EXPR));
            }
            LetPair(g, xs, a, body, motive) => {
                let x = self.fresh(&xs.0);
                let y = self.bound(&[x.clone()], |p| p.fresh(&xs.1));
                self.w(&format!("let ({x}"));
                self.grade(*g);
                self.w(&format!(", {y}) = "));
                self.term(a, EXPR);
                if let Some(Motive(z, c)) = motive {
                    let z = self.fresh(z);
                    self.w(&format!(" return {z}. "));
                    self.bound(&[z], |p| p.term(c, EXPR));
                }
                self.w(" in ");
                self.bound(&[x, y], |p| p.term(body, EXPR));
            }
            Inj1(other, a) | Inj2(other, a) => {
                self.w(if matches!(t, Inj1(..)) { "inj1 " } else { "inj2 " });
                if **other != UnitTy {
                    self.w("{");
                    self.term(other, EXPR);
                    self.w("} ");
                }
                self.term(a, ATOM);
            }
            Case(a, b1, b2) => {
                self.w("case ");
                self.term(a, EXPR);
                self.w(" of ");
                self.term(b1, EXPR);
                self.w(" ; ");
                self.term(b2, EXPR);
            }
        }
    }
}

fn precedence(t: &Term) -> u8 {
    use Term::*;
    match t {
        Var(_) | Sort(_) | UnitTy | UnitTm | Pair(..) | GPair(..) => ATOM,
        App(..) | GApp(..) | TMonad(..) | Proj1(_) | Proj2(_) | Return(..) | Seal(..) | Unseal(..) | Inj1(..)
        | Inj2(..) => APP,
        Prod(..) => PROD,
        Sum(..) => SUM,
        Arrow(..) => ARROW,
        Lam(..) | GLam(..) | Pi(..) | Sigma(..) | Bind(..) | LetPair(..) | Case(..) => EXPR,
    }
}
