use std::collections::HashSet;
use std::fmt;

use crate::lattice::{Grade, Lattice};
use crate::syntax::{Name, Sort, Term};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relevance {
    /// `( )` binders and arguments.
    Relevant,
    /// `[ ]` binders and arguments.
    Irrelevant,
}

/// ICC* syntax with de Bruijn variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IccTerm {
    Sort(Sort),
    Var(usize),
    Pi(Relevance, Name, Box<IccTerm>, Box<IccTerm>),
    /// The domain is dropped by [`icc_star_erase`].
    Lam(Relevance, Name, Option<Box<IccTerm>>, Box<IccTerm>),
    App(Relevance, Box<IccTerm>, Box<IccTerm>),
    /// What erasure leaves where an irrelevant variable was used.
    Erased,
}

/// A DDC construct outside the Π-fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutOfFragment(pub String);

impl fmt::Display for OutOfFragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} is outside the Pi fragment", self.0)
    }
}

impl std::error::Error for OutOfFragment {}

/// Grades at or below `C` become relevant, the rest irrelevant.
pub fn ddc_to_icc(lat: &Lattice, a: &Term) -> Result<IccTerm, OutOfFragment> {
    let rel = |g: Grade| if lat.leq(g, lat.c()) { Relevance::Relevant } else { Relevance::Irrelevant };
    let tr = |t: &Term| ddc_to_icc(lat, t).map(Box::new);
    Ok(match a {
        Term::Sort(s) => IccTerm::Sort(s.clone()),
        Term::Var(i) => IccTerm::Var(*i),
        Term::Pi(g, x, d, b) => IccTerm::Pi(rel(*g), x.clone(), tr(d)?, tr(b)?),
        Term::GLam(g, x, d, b) => IccTerm::Lam(rel(*g), x.clone(), Some(tr(d)?), tr(b)?),
        Term::GApp(f, x, g) => IccTerm::App(rel(*g), tr(f)?, tr(x)?),
        other => {
            let head = format!("{other:?}");
            let head = head.split(['(', ' ']).next().unwrap_or("term").to_string();
            return Err(OutOfFragment(head));
        }
    })
}

fn shift_from(t: &IccTerm, d: isize, cutoff: usize) -> IccTerm {
    use IccTerm::*;
    match t {
        Var(i) if *i >= cutoff => Var((*i as isize + d) as usize),
        Var(_) | Sort(_) | Erased => t.clone(),
        Pi(r, x, a, b) => Pi(*r, x.clone(), Box::new(shift_from(a, d, cutoff)), Box::new(shift_from(b, d, cutoff + 1))),
        Lam(r, x, a, b) => Lam(
            *r,
            x.clone(),
            a.as_ref().map(|a| Box::new(shift_from(a, d, cutoff))),
            Box::new(shift_from(b, d, cutoff + 1)),
        ),
        App(r, f, a) => App(*r, Box::new(shift_from(f, d, cutoff)), Box::new(shift_from(a, d, cutoff))),
    }
}

fn subst_at(t: &IccTerm, k: usize, arg: &IccTerm) -> IccTerm {
    use IccTerm::*;
    match t {
        Var(i) if *i == k => shift_from(arg, k as isize, 0),
        Var(i) if *i > k => Var(i - 1),
        Var(_) | Sort(_) | Erased => t.clone(),
        Pi(r, x, a, b) => Pi(*r, x.clone(), Box::new(subst_at(a, k, arg)), Box::new(subst_at(b, k + 1, arg))),
        Lam(r, x, a, b) => Lam(
            *r,
            x.clone(),
            a.as_ref().map(|a| Box::new(subst_at(a, k, arg))),
            Box::new(subst_at(b, k + 1, arg)),
        ),
        App(r, f, a) => App(*r, Box::new(subst_at(f, k, arg)), Box::new(subst_at(a, k, arg))),
    }
}

/// The `*`-erasure: drops irrelevant abstractions and arguments and every
/// abstraction domain; irrelevant Π-types stay.
pub fn icc_star_erase(t: &IccTerm) -> IccTerm {
    use IccTerm::*;
    match t {
        Var(_) | Sort(_) | Erased => t.clone(),
        Pi(r, x, a, b) => Pi(*r, x.clone(), Box::new(icc_star_erase(a)), Box::new(icc_star_erase(b))),
        Lam(Relevance::Irrelevant, _, _, b) => icc_star_erase(&subst_at(b, 0, &Erased)),
        Lam(r, x, _, b) => Lam(*r, x.clone(), None, Box::new(icc_star_erase(b))),
        App(Relevance::Irrelevant, f, _) => icc_star_erase(f),
        App(r, f, a) => App(*r, Box::new(icc_star_erase(f)), Box::new(icc_star_erase(a))),
    }
}

/// One normal-order β-step; abstraction and application must agree on
/// relevance.
pub fn icc_step(t: &IccTerm) -> Option<IccTerm> {
    use IccTerm::*;
    match t {
        App(r, f, a) => match &**f {
            Lam(r2, _, _, body) if r2 == r => Some(subst_at(body, 0, a)),
            _ => icc_step(f)
                .map(|f| App(*r, Box::new(f), a.clone()))
                .or_else(|| icc_step(a).map(|a| App(*r, f.clone(), Box::new(a)))),
        },
        Lam(r, x, a, b) => {
            if let Some(a2) = a.as_ref().and_then(|a| icc_step(a)) {
                return Some(Lam(*r, x.clone(), Some(Box::new(a2)), b.clone()));
            }
            icc_step(b).map(|b| Lam(*r, x.clone(), a.clone(), Box::new(b)))
        }
        Pi(r, x, a, b) => icc_step(a)
            .map(|a| Pi(*r, x.clone(), Box::new(a), b.clone()))
            .or_else(|| icc_step(b).map(|b| Pi(*r, x.clone(), a.clone(), Box::new(b)))),
        Var(_) | Sort(_) | Erased => None,
    }
}

/// The β-normal form within `fuel` steps.
pub fn icc_normalize(t: &IccTerm, fuel: usize) -> Option<IccTerm> {
    let mut cur = t.clone();
    for _ in 0..fuel {
        match icc_step(&cur) {
            Some(next) => cur = next,
            None => return Some(cur),
        }
    }
    icc_step(&cur).is_none().then_some(cur)
}

/// Prints with `( )` for relevant and `[ ]` for irrelevant positions.
pub fn print_icc(t: &IccTerm) -> String {
    let mut avoid = HashSet::new();
    sorts(t, &mut avoid);
    let mut p = Printer { scope: Vec::new(), avoid, out: String::new() };
    p.term(t, false);
    p.out
}

fn sorts(t: &IccTerm, out: &mut HashSet<String>) {
    match t {
        IccTerm::Sort(s) => {
            out.insert(s.to_string());
        }
        IccTerm::Pi(_, _, a, b) => {
            sorts(a, out);
            sorts(b, out);
        }
        IccTerm::Lam(_, _, a, b) => {
            if let Some(a) = a {
                sorts(a, out);
            }
            sorts(b, out);
        }
        IccTerm::App(_, f, a) => {
            sorts(f, out);
            sorts(a, out);
        }
        IccTerm::Var(_) | IccTerm::Erased => {}
    }
}

struct Printer {
    scope: Vec<String>,
    avoid: HashSet<String>,
    out: String,
}

impl Printer {
    fn fresh(&self, hint: &Name) -> String {
        let taken = |s: &str| self.scope.iter().any(|x| x == s) || self.avoid.contains(s);
        let base = if hint.as_str().is_empty() { "x" } else { hint.as_str() };
        if !taken(base) {
            return base.to_string();
        }
        (1..).map(|i| format!("{base}{i}")).find(|s| !taken(s)).unwrap()
    }

    fn brackets(r: Relevance) -> (&'static str, &'static str) {
        match r {
            Relevance::Relevant => ("(", ")"),
            Relevance::Irrelevant => ("[", "]"),
        }
    }

    fn binder(&mut self, x: &Name, body: &IccTerm) {
        let name = self.fresh(x);
        self.scope.push(name);
        self.term(body, false);
        self.scope.pop();
    }

    /// `atom` asks for parentheses around anything but variables and sorts.
    fn term(&mut self, t: &IccTerm, atom: bool) {
        match t {
            IccTerm::Sort(s) => self.out.push_str(s),
            IccTerm::Var(i) => {
                let name = self.scope.len().checked_sub(i + 1).map(|p| self.scope[p].clone());
                self.out.push_str(&name.unwrap_or_else(|| format!("#{i}")));
            }
            IccTerm::Erased => self.out.push('_'),
            IccTerm::App(r, f, a) => {
                if atom {
                    self.out.push('(');
                }
                self.term(f, matches!(**f, IccTerm::Pi(..) | IccTerm::Lam(..)));
                let (open, close) = Self::brackets(*r);
                self.out.push(' ');
                self.out.push_str(open);
                self.term(a, false);
                self.out.push_str(close);
                if atom {
                    self.out.push(')');
                }
            }
            IccTerm::Pi(r, x, a, b) | IccTerm::Lam(r, x, Some(a), b) => {
                if atom {
                    self.out.push('(');
                }
                let (open, close) = Self::brackets(*r);
                let lead = if matches!(t, IccTerm::Pi(..)) { "Pi " } else { "\\" };
                let name = self.fresh(x);
                self.out.push_str(&format!("{lead}{open}{name}:"));
                self.term(a, false);
                self.out.push_str(close);
                self.out.push_str(". ");
                self.binder(x, b);
                if atom {
                    self.out.push(')');
                }
            }
            IccTerm::Lam(r, x, None, b) => {
                if atom {
                    self.out.push('(');
                }
                let (open, close) = Self::brackets(*r);
                let name = self.fresh(x);
                self.out.push_str(&format!("\\{open}{name}{close}. "));
                self.binder(x, b);
                if atom {
                    self.out.push(')');
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grades_choose_brackets() {
        let lat = Lattice::irrelevance();
        let ty = Term::sort("Type");
        let t = Term::glam(lat.top(), "x", ty.clone(), Term::glam(lat.bot(), "y", Term::Var(0), Term::Var(0)));
        let icc = ddc_to_icc(&lat, &t).unwrap();
        assert_eq!(print_icc(&icc), r"\[x:Type]. \(y:x). y");
        assert_eq!(print_icc(&icc_star_erase(&icc)), r"\(y). y");
    }

    #[test]
    fn sigma_is_out_of_fragment() {
        let lat = Lattice::irrelevance();
        assert!(ddc_to_icc(&lat, &Term::UnitTm).is_err());
    }

    #[test]
    fn irrelevant_application_is_dropped() {
        let lat = Lattice::irrelevance();
        let id = Term::glam(lat.top(), "x", Term::sort("Type"), Term::glam(lat.bot(), "y", Term::Var(0), Term::Var(0)));
        let app = Term::gapp(id, Term::sort("Type"), lat.top());
        let erased = icc_star_erase(&ddc_to_icc(&lat, &app).unwrap());
        assert_eq!(print_icc(&erased), r"\(y). y");
        assert_eq!(print_icc(&ddc_to_icc(&lat, &Term::gapp(Term::Var(0), Term::Var(1), lat.bot())).unwrap()), "#0 (#1)");
    }
}
