use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::lattice::Grade;

/// A binder's surface name, kept only as a printing hint.
///
/// Hints never take part in equality or hashing, so structural equality of
/// terms is α-equivalence.
#[derive(Clone)]
pub struct Name(Arc<str>);

impl Name {
    pub fn new(s: &str) -> Name {
        Name(Arc::from(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Default for Name {
    fn default() -> Name {
        Name::new("x")
    }
}

impl PartialEq for Name {
    fn eq(&self, _: &Name) -> bool {
        true
    }
}

impl Eq for Name {}

impl Hash for Name {
    fn hash<H: Hasher>(&self, _: &mut H) {}
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<&str> for Name {
    fn from(s: &str) -> Name {
        Name::new(s)
    }
}

/// Sort names are compared by their text.
pub type Sort = Arc<str>;

/// One AST for SDC, the sealing calculus and DDC.
///
/// Variables are de Bruijn indices. The comment on each binder form gives
/// the number of variables it binds in each child.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Var(usize),
    Sort(Sort),
    UnitTy,
    UnitTm,

    Arrow(Box<Term>, Box<Term>),
    Prod(Box<Term>, Box<Term>),
    TMonad(Grade, Box<Term>),
    /// `\x:A. b`: binds one in `b`.
    Lam(Name, Box<Term>, Box<Term>),
    App(Box<Term>, Box<Term>),
    Pair(Box<Term>, Box<Term>),
    Proj1(Box<Term>),
    Proj2(Box<Term>),
    Return(Grade, Box<Term>),
    /// `bind^g x = a in b`: binds one in `b`.
    Bind(Grade, Name, Box<Term>, Box<Term>),
    Seal(Grade, Box<Term>),
    Unseal(Grade, Box<Term>),

    /// `Pi x:^g A. B`: binds one in `B`.
    Pi(Grade, Name, Box<Term>, Box<Term>),
    /// `\x:^g A. b`: binds one in `b`.
    GLam(Grade, Name, Box<Term>, Box<Term>),
    GApp(Box<Term>, Box<Term>, Grade),
    /// `Sigma x:^g A. B`: binds one in `B`.
    Sigma(Grade, Name, Box<Term>, Box<Term>),
    /// `(a^g, b)` with an optional Σ-type ascription.
    GPair(Box<Term>, Grade, Box<Term>, Option<Box<Term>>),
    /// `let (x^g, y) = a return z. C in b`: binds two in the body, one in
    /// the motive.
    LetPair(Grade, Names2, Box<Term>, Box<Term>, Option<Motive>),

    Sum(Box<Term>, Box<Term>),
    /// `inj1 {B} a`; the first field annotates the other summand.
    Inj1(Box<Term>, Box<Term>),
    /// `inj2 {A} b`; the first field annotates the other summand.
    Inj2(Box<Term>, Box<Term>),
    /// `case a of b1 ; b2` with function-typed branches.
    Case(Box<Term>, Box<Term>, Box<Term>),
}

/// Binder hints of a let-pair pattern.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Names2(pub Name, pub Name);

/// A let-pair motive `return z. C`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Motive(pub Name, pub Box<Term>);

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn sort(s: &str) -> Term {
        Term::Sort(Arc::from(s))
    }

    pub fn arrow(a: Term, b: Term) -> Term {
        Term::Arrow(Box::new(a), Box::new(b))
    }

    pub fn prod(a: Term, b: Term) -> Term {
        Term::Prod(Box::new(a), Box::new(b))
    }

    pub fn sum(a: Term, b: Term) -> Term {
        Term::Sum(Box::new(a), Box::new(b))
    }

    pub fn tmonad(g: Grade, a: Term) -> Term {
        Term::TMonad(g, Box::new(a))
    }

    pub fn lam(x: &str, a: Term, b: Term) -> Term {
        Term::Lam(Name::new(x), Box::new(a), Box::new(b))
    }

    pub fn app(b: Term, a: Term) -> Term {
        Term::App(Box::new(b), Box::new(a))
    }

    pub fn pair(a: Term, b: Term) -> Term {
        Term::Pair(Box::new(a), Box::new(b))
    }

    pub fn proj1(a: Term) -> Term {
        Term::Proj1(Box::new(a))
    }

    pub fn proj2(a: Term) -> Term {
        Term::Proj2(Box::new(a))
    }

    pub fn ret(g: Grade, a: Term) -> Term {
        Term::Return(g, Box::new(a))
    }

    pub fn bind(g: Grade, x: &str, a: Term, b: Term) -> Term {
        Term::Bind(g, Name::new(x), Box::new(a), Box::new(b))
    }

    pub fn seal(g: Grade, a: Term) -> Term {
        Term::Seal(g, Box::new(a))
    }

    pub fn unseal(g: Grade, a: Term) -> Term {
        Term::Unseal(g, Box::new(a))
    }

    pub fn pi(g: Grade, x: &str, a: Term, b: Term) -> Term {
        Term::Pi(g, Name::new(x), Box::new(a), Box::new(b))
    }

    pub fn glam(g: Grade, x: &str, a: Term, b: Term) -> Term {
        Term::GLam(g, Name::new(x), Box::new(a), Box::new(b))
    }

    pub fn gapp(b: Term, a: Term, g: Grade) -> Term {
        Term::GApp(Box::new(b), Box::new(a), g)
    }

    pub fn sigma(g: Grade, x: &str, a: Term, b: Term) -> Term {
        Term::Sigma(g, Name::new(x), Box::new(a), Box::new(b))
    }

    pub fn gpair(a: Term, g: Grade, b: Term) -> Term {
        Term::GPair(Box::new(a), g, Box::new(b), None)
    }

    pub fn gpair_as(a: Term, g: Grade, b: Term, ty: Term) -> Term {
        Term::GPair(Box::new(a), g, Box::new(b), Some(Box::new(ty)))
    }

    pub fn let_pair(g: Grade, x: &str, y: &str, a: Term, body: Term) -> Term {
        Term::LetPair(g, Names2(Name::new(x), Name::new(y)), Box::new(a), Box::new(body), None)
    }

    pub fn let_pair_motive(g: Grade, x: &str, y: &str, a: Term, z: &str, motive: Term, body: Term) -> Term {
        Term::LetPair(
            g,
            Names2(Name::new(x), Name::new(y)),
            Box::new(a),
            Box::new(body),
            Some(Motive(Name::new(z), Box::new(motive))),
        )
    }

    /// `pi1^g a`, the derived first projection.
    pub fn fst(g: Grade, a: Term) -> Term {
        Term::let_pair(g, "x", "y", a, Term::Var(1))
    }

    /// `pi2^g a`, the derived second projection.
    pub fn snd(g: Grade, a: Term) -> Term {
        Term::let_pair(g, "x", "y", a, Term::Var(0))
    }

    pub fn inj1(other: Term, a: Term) -> Term {
        Term::Inj1(Box::new(other), Box::new(a))
    }

    pub fn inj2(other: Term, a: Term) -> Term {
        Term::Inj2(Box::new(other), Box::new(a))
    }

    pub fn case(a: Term, b1: Term, b2: Term) -> Term {
        Term::Case(Box::new(a), Box::new(b1), Box::new(b2))
    }

    /// Number of AST nodes; grades and binder hints do not count.
    pub fn size(&self) -> usize {
        let mut n = 1;
        self.for_each_child(|c, _| n += c.size());
        n
    }

    /// Visits the immediate children with the number of binders each one
    /// sits under relative to `self`.
    pub fn for_each_child<'a>(&'a self, mut f: impl FnMut(&'a Term, usize)) {
        use Term::*;
        match self {
            Var(_) | Sort(_) | UnitTy | UnitTm => {}
            Arrow(a, b) | Prod(a, b) | App(a, b) | Pair(a, b) | Sum(a, b) | Inj1(a, b) | Inj2(a, b) => {
                f(a, 0);
                f(b, 0);
            }
            GApp(a, b, _) => {
                f(a, 0);
                f(b, 0);
            }
            TMonad(_, a) | Proj1(a) | Proj2(a) | Return(_, a) | Seal(_, a) | Unseal(_, a) => f(a, 0),
            Lam(_, a, b) | Bind(_, _, a, b) | Pi(_, _, a, b) | GLam(_, _, a, b) | Sigma(_, _, a, b) => {
                f(a, 0);
                f(b, 1);
            }
            GPair(a, _, b, ty) => {
                f(a, 0);
                f(b, 0);
                if let Some(ty) = ty {
                    f(ty, 0);
                }
            }
            LetPair(_, _, a, body, motive) => {
                f(a, 0);
                f(body, 2);
                if let Some(Motive(_, m)) = motive {
                    f(m, 1);
                }
            }
            Case(a, b, c) => {
                f(a, 0);
                f(b, 0);
                f(c, 0);
            }
        }
    }

    /// Rebuilds the node with every child replaced by `f(child, binders)`.
    pub fn map_children(&self, mut f: impl FnMut(&Term, usize) -> Term) -> Term {
        use Term::*;
        let mut g = |t: &Term, k: usize| Box::new(f(t, k));
        match self {
            Var(_) | Sort(_) | UnitTy | UnitTm => self.clone(),
            Arrow(a, b) => Arrow(g(a, 0), g(b, 0)),
            Prod(a, b) => Prod(g(a, 0), g(b, 0)),
            TMonad(l, a) => TMonad(*l, g(a, 0)),
            Lam(x, a, b) => Lam(x.clone(), g(a, 0), g(b, 1)),
            App(a, b) => App(g(a, 0), g(b, 0)),
            Pair(a, b) => Pair(g(a, 0), g(b, 0)),
            Proj1(a) => Proj1(g(a, 0)),
            Proj2(a) => Proj2(g(a, 0)),
            Return(l, a) => Return(*l, g(a, 0)),
            Bind(l, x, a, b) => Bind(*l, x.clone(), g(a, 0), g(b, 1)),
            Seal(l, a) => Seal(*l, g(a, 0)),
            Unseal(l, a) => Unseal(*l, g(a, 0)),
            Pi(l, x, a, b) => Pi(*l, x.clone(), g(a, 0), g(b, 1)),
            GLam(l, x, a, b) => GLam(*l, x.clone(), g(a, 0), g(b, 1)),
            GApp(a, b, l) => GApp(g(a, 0), g(b, 0), *l),
            Sigma(l, x, a, b) => Sigma(*l, x.clone(), g(a, 0), g(b, 1)),
            GPair(a, l, b, ty) => {
                let a = g(a, 0);
                let b = g(b, 0);
                GPair(a, *l, b, ty.as_ref().map(|t| g(t, 0)))
            }
            LetPair(l, xs, a, body, motive) => {
                let a = g(a, 0);
                let body = g(body, 2);
                LetPair(*l, xs.clone(), a, body, motive.as_ref().map(|Motive(z, m)| Motive(z.clone(), g(m, 1))))
            }
            Sum(a, b) => Sum(g(a, 0), g(b, 0)),
            Inj1(a, b) => Inj1(g(a, 0), g(b, 0)),
            Inj2(a, b) => Inj2(g(a, 0), g(b, 0)),
            Case(a, b, c) => Case(g(a, 0), g(b, 0), g(c, 0)),
        }
    }

    /// Whether index `i` (relative to `self`) occurs free.
    pub fn has_free(&self, i: usize) -> bool {
        match self {
            Term::Var(j) => *j == i,
            _ => {
                let mut found = false;
                self.for_each_child(|c, k| found = found || c.has_free(i + k));
                found
            }
        }
    }

    /// One more than the largest free index, or zero for closed terms.
    pub fn free_bound(&self) -> usize {
        match self {
            Term::Var(j) => j + 1,
            _ => {
                let mut m = 0;
                self.for_each_child(|c, k| m = m.max(c.free_bound().saturating_sub(k)));
                m
            }
        }
    }

    pub fn is_closed(&self) -> bool {
        self.free_bound() == 0
    }

    /// The grades mentioned anywhere in the term.
    pub fn grades(&self, out: &mut Vec<Grade>) {
        use Term::*;
        match self {
            TMonad(g, _) | Return(g, _) | Bind(g, ..) | Seal(g, _) | Unseal(g, _) | Pi(g, ..) | GLam(g, ..)
            | GApp(_, _, g) | Sigma(g, ..) | GPair(_, g, _, _) | LetPair(g, ..) => out.push(*g),
            _ => {}
        }
        self.for_each_child(|c, _| c.grades(out));
    }
}
