//! Exhaustive enumeration of well-scoped terms by AST size.

use std::collections::HashMap;
use std::rc::Rc;

use gradia_core::syntax::{Name, Names2, Sort};
use gradia_core::{Grade, Lattice, Term};

/// Which syntax an enumeration or generator draws from.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Fragment {
    Sdc,
    Seal,
    Ddc,
    /// Sorts, variables, Π, abstraction and application only.
    DdcPi,
}

impl Fragment {
    pub fn name(self) -> &'static str {
        match self {
            Fragment::Sdc => "sdc",
            Fragment::Seal => "seal",
            Fragment::Ddc => "ddc",
            Fragment::DdcPi => "ddc-pi",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash)]
enum Kind {
    Type,
    Term,
}

/// Enumerates every term of a fragment by exact size, memoising on size
/// and scope depth.
pub struct Enumerator {
    fragment: Fragment,
    grades: Vec<Grade>,
    sorts: Vec<Sort>,
    memo: HashMap<(Kind, usize, usize), Rc<Vec<Term>>>,
}

impl Enumerator {
    pub fn new(fragment: Fragment, lat: &Lattice, sorts: &[Sort]) -> Enumerator {
        Enumerator { fragment, grades: lat.grades().collect(), sorts: sorts.to_vec(), memo: HashMap::new() }
    }

    /// All terms of exactly `size` nodes whose free indices are below
    /// `depth`. For the simple fragments this includes the types.
    pub fn exact(&mut self, size: usize, depth: usize) -> Vec<Term> {
        let mut out = (*self.get(Kind::Term, size, depth)).clone();
        if matches!(self.fragment, Fragment::Sdc | Fragment::Seal) {
            out.extend(self.get(Kind::Type, size, 0).iter().cloned());
        }
        out
    }

    /// All terms of at most `bound` nodes, smallest first.
    pub fn up_to(&mut self, bound: usize, depth: usize) -> Vec<Term> {
        (1..=bound).flat_map(|n| self.exact(n, depth)).collect()
    }

    fn get(&mut self, kind: Kind, size: usize, depth: usize) -> Rc<Vec<Term>> {
        if let Some(v) = self.memo.get(&(kind, size, depth)) {
            return v.clone();
        }
        let v = Rc::new(match (kind, self.fragment) {
            (Kind::Type, Fragment::Sdc | Fragment::Seal) => self.simple_types(size),
            (Kind::Term, Fragment::Sdc | Fragment::Seal) => self.simple_terms(size, depth),
            (_, Fragment::Ddc) => self.ddc_terms(size, depth, false),
            (_, Fragment::DdcPi) => self.ddc_terms(size, depth, true),
        });
        self.memo.insert((kind, size, depth), v.clone());
        v
    }

    /// Every way to build a node of `size` from two children of the given
    /// kinds and depths.
    fn two(&mut self, size: usize, k1: (Kind, usize), k2: (Kind, usize), mut f: impl FnMut(&Term, &Term)) {
        if size < 3 {
            return;
        }
        for s1 in 1..size - 1 {
            let a = self.get(k1.0, s1, k1.1);
            if a.is_empty() {
                continue;
            }
            let b = self.get(k2.0, size - 1 - s1, k2.1);
            for x in a.iter() {
                for y in b.iter() {
                    f(x, y);
                }
            }
        }
    }

    fn simple_types(&mut self, size: usize) -> Vec<Term> {
        let mut out = Vec::new();
        if size == 1 {
            out.push(Term::UnitTy);
            return out;
        }
        let ty = (Kind::Type, 0);
        self.two(size, ty, ty, |a, b| {
            out.push(Term::arrow(a.clone(), b.clone()));
            out.push(Term::prod(a.clone(), b.clone()));
            out.push(Term::sum(a.clone(), b.clone()));
        });
        let grades = self.grades.clone();
        for a in self.get(Kind::Type, size - 1, 0).iter() {
            for &g in &grades {
                out.push(Term::tmonad(g, a.clone()));
            }
        }
        out
    }

    fn simple_terms(&mut self, size: usize, d: usize) -> Vec<Term> {
        let mut out = Vec::new();
        if size == 1 {
            out.extend((0..d).map(Term::Var));
            out.push(Term::UnitTm);
            return out;
        }
        let grades = self.grades.clone();
        let seal = self.fragment == Fragment::Seal;
        let tm = (Kind::Term, d);
        self.two(size, (Kind::Type, 0), (Kind::Term, d + 1), |a, b| {
            out.push(Term::lam("x", a.clone(), b.clone()));
        });
        self.two(size, tm, tm, |a, b| {
            out.push(Term::app(a.clone(), b.clone()));
            out.push(Term::pair(a.clone(), b.clone()));
        });
        self.two(size, (Kind::Type, 0), tm, |t, a| {
            out.push(Term::inj1(t.clone(), a.clone()));
            out.push(Term::inj2(t.clone(), a.clone()));
        });
        if !seal {
            self.two(size, tm, (Kind::Term, d + 1), |a, b| {
                for &g in &grades {
                    out.push(Term::Bind(g, Name::new("x"), Box::new(a.clone()), Box::new(b.clone())));
                }
            });
        }
        for a in self.get(Kind::Term, size - 1, d).iter() {
            out.push(Term::proj1(a.clone()));
            out.push(Term::proj2(a.clone()));
            for &g in &grades {
                out.push(if seal { Term::seal(g, a.clone()) } else { Term::ret(g, a.clone()) });
                if seal {
                    out.push(Term::unseal(g, a.clone()));
                }
            }
        }
        if size >= 4 {
            for s1 in 1..size - 2 {
                for s2 in 1..size - 1 - s1 {
                    let s3 = size - 1 - s1 - s2;
                    let a = self.get(Kind::Term, s1, d);
                    let b = self.get(Kind::Term, s2, d);
                    let c = self.get(Kind::Term, s3, d);
                    for x in a.iter() {
                        for y in b.iter() {
                            for z in c.iter() {
                                out.push(Term::case(x.clone(), y.clone(), z.clone()));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn ddc_terms(&mut self, size: usize, d: usize, pi_only: bool) -> Vec<Term> {
        let mut out = Vec::new();
        if size == 1 {
            out.extend((0..d).map(Term::Var));
            out.extend(self.sorts.iter().map(|s| Term::Sort(s.clone())));
            if !pi_only {
                out.push(Term::UnitTy);
                out.push(Term::UnitTm);
            }
            return out;
        }
        let grades = self.grades.clone();
        let tm = (Kind::Term, d);
        self.two(size, tm, (Kind::Term, d + 1), |a, b| {
            for &g in &grades {
                out.push(Term::Pi(g, Name::new("x"), Box::new(a.clone()), Box::new(b.clone())));
                out.push(Term::GLam(g, Name::new("x"), Box::new(a.clone()), Box::new(b.clone())));
                if !pi_only {
                    out.push(Term::Sigma(g, Name::new("x"), Box::new(a.clone()), Box::new(b.clone())));
                }
            }
        });
        self.two(size, tm, tm, |a, b| {
            for &g in &grades {
                out.push(Term::gapp(a.clone(), b.clone(), g));
                if !pi_only {
                    out.push(Term::gpair(a.clone(), g, b.clone()));
                }
            }
            if !pi_only {
                out.push(Term::sum(a.clone(), b.clone()));
                out.push(Term::inj1(a.clone(), b.clone()));
                out.push(Term::inj2(a.clone(), b.clone()));
            }
        });
        if !pi_only {
            self.two(size, tm, (Kind::Term, d + 2), |a, b| {
                for &g in &grades {
                    let names = Names2(Name::new("x"), Name::new("y"));
                    out.push(Term::LetPair(g, names, Box::new(a.clone()), Box::new(b.clone()), None));
                }
            });
            if size >= 4 {
                for s1 in 1..size - 2 {
                    for s2 in 1..size - 1 - s1 {
                        let s3 = size - 1 - s1 - s2;
                        let a = self.get(Kind::Term, s1, d);
                        let b = self.get(Kind::Term, s2, d);
                        let c = self.get(Kind::Term, s3, d);
                        for x in a.iter() {
                            for y in b.iter() {
                                for z in c.iter() {
                                    out.push(Term::case(x.clone(), y.clone(), z.clone()));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Every term of `fragment` with at most `bound` nodes and free indices
/// below `free`.
pub fn enumerate_terms(fragment: Fragment, lat: &Lattice, sorts: &[Sort], bound: usize, free: usize) -> Vec<Term> {
    Enumerator::new(fragment, lat, sorts).up_to(bound, free)
}
