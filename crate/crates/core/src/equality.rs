//! Definitional equality at a grade, decided by joinability.
//!
//! Both sides are driven by the maximal parallel reduction at the grade;
//! after every round the recent reducts of each side are compared with
//! indistinguishability.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::ddc::ddc_indist;
use crate::lattice::{Grade, Lattice};
use crate::syntax::{subst, subst2, GradeContext, Motive, Term};

/// How many recent reducts of each side take part in comparisons.
pub const WINDOW: usize = 8;

/// Default number of parallel-reduction rounds.
pub const DEFAULT_FUEL: usize = 1000;

/// The maximal parallel reduct of `a` as seen by an observer at `l`.
///
/// Every redex is contracted at once, under binders too; subterms the
/// observer cannot see (arguments and first components at grades not
/// below `l`, and annotations unless `l` is the top) are left untouched.
pub fn par_step(lat: &Lattice, a: &Term, l: Grade) -> Term {
    Par { lat, l }.go(a)
}

struct Par<'a> {
    lat: &'a Lattice,
    l: Grade,
}

impl Par<'_> {
    fn guarded(&self, g: Grade, a: &Term) -> Term {
        if self.lat.leq(g, self.l) {
            self.go(a)
        } else {
            a.clone()
        }
    }

    fn annotation(&self, a: &Term) -> Term {
        self.guarded(self.lat.top(), a)
    }

    fn go(&self, a: &Term) -> Term {
        use Term::*;
        match a {
            GApp(f, x, g) => match &**f {
                GLam(g2, _, _, body) if g2 == g => subst(&self.go(body), &self.guarded(*g, x)),
                _ => Term::gapp(self.go(f), self.guarded(*g, x), *g),
            },
            LetPair(g, xs, s, body, motive) => match &**s {
                GPair(x, g2, y, _) if g2 == g => subst2(&self.go(body), &self.guarded(*g, x), &self.go(y)),
                _ => LetPair(
                    *g,
                    xs.clone(),
                    Box::new(self.go(s)),
                    Box::new(self.go(body)),
                    motive.as_ref().map(|Motive(z, c)| Motive(z.clone(), Box::new(self.annotation(c)))),
                ),
            },
            Case(s, b1, b2) => match &**s {
                Inj1(_, v) => Term::gapp(self.go(b1), self.go(v), self.lat.bot()),
                Inj2(_, v) => Term::gapp(self.go(b2), self.go(v), self.lat.bot()),
                _ => Term::case(self.go(s), self.go(b1), self.go(b2)),
            },
            GLam(g, x, ann, body) => GLam(*g, x.clone(), Box::new(self.annotation(ann)), Box::new(self.go(body))),
            GPair(x, g, y, ty) => GPair(
                Box::new(self.guarded(*g, x)),
                *g,
                Box::new(self.go(y)),
                ty.as_ref().map(|t| Box::new(self.annotation(t))),
            ),
            Inj1(t, x) => Term::inj1(self.annotation(t), self.go(x)),
            Inj2(t, x) => Term::inj2(self.annotation(t), self.go(x)),
            _ => a.map_children(|c, _| self.go(c)),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    NotEqual,
    FuelExhausted,
}

/// The outcome of a joinability query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinResult {
    pub verdict: Verdict,
    /// On `Equal`, the two reducts found indistinguishable.
    pub witnesses: Option<(Term, Term)>,
    /// The last reducts of each side; on `NotEqual` these are the two
    /// normal forms.
    pub last: (Term, Term),
    pub steps_used: usize,
    pub cancelled: bool,
}

/// A flag a caller can raise to stop a running [`def_eq`].
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> CancelToken {
        CancelToken::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

/// Decides `Φ ⊢ a ≡_l b` by searching for indistinguishable reducts.
pub fn def_eq(lat: &Lattice, phi: &GradeContext, a: &Term, b: &Term, l: Grade, fuel: usize) -> JoinResult {
    def_eq_cancellable(lat, phi, a, b, l, fuel, None)
}

pub fn def_eq_cancellable(
    lat: &Lattice,
    phi: &GradeContext,
    a: &Term,
    b: &Term,
    l: Grade,
    fuel: usize,
    cancel: Option<&CancelToken>,
) -> JoinResult {
    let same = |x: &Term, y: &Term| ddc_indist(lat, phi, x, y, l);
    let result = |verdict, witnesses, last, steps_used, cancelled| JoinResult {
        verdict,
        witnesses,
        last,
        steps_used,
        cancelled,
    };
    if same(a, b) {
        return result(Verdict::Equal, Some((a.clone(), b.clone())), (a.clone(), b.clone()), 0, false);
    }
    let mut left: VecDeque<Term> = VecDeque::from([a.clone()]);
    let mut right: VecDeque<Term> = VecDeque::from([b.clone()]);
    let (mut done_left, mut done_right) = (false, false);
    for round in 1..=fuel {
        if cancel.is_some_and(CancelToken::is_cancelled) {
            let last = (left.back().unwrap().clone(), right.back().unwrap().clone());
            return result(Verdict::FuelExhausted, None, last, round - 1, true);
        }
        if !done_left {
            let next = par_step(lat, left.back().unwrap(), l);
            if &next == left.back().unwrap() {
                done_left = true;
            } else {
                if let Some(hit) = right.iter().find(|r| same(&next, r)) {
                    let w = (next.clone(), hit.clone());
                    return result(Verdict::Equal, Some(w), (next, right.back().unwrap().clone()), round, false);
                }
                push(&mut left, next);
            }
        }
        if !done_right {
            let next = par_step(lat, right.back().unwrap(), l);
            if &next == right.back().unwrap() {
                done_right = true;
            } else {
                if let Some(hit) = left.iter().find(|x| same(x, &next)) {
                    let w = (hit.clone(), next.clone());
                    return result(Verdict::Equal, Some(w), (left.back().unwrap().clone(), next), round, false);
                }
                push(&mut right, next);
            }
        }
        if done_left && done_right {
            let last = (left.back().unwrap().clone(), right.back().unwrap().clone());
            return result(Verdict::NotEqual, None, last, round, false);
        }
    }
    let last = (left.back().unwrap().clone(), right.back().unwrap().clone());
    result(Verdict::FuelExhausted, None, last, fuel, false)
}

fn push(chain: &mut VecDeque<Term>, t: Term) {
    if chain.len() == WINDOW {
        chain.pop_front();
    }
    chain.push_back(t);
}

/// The head constructor of a head form, if `a` is one.
pub fn head_form(a: &Term) -> Option<&'static str> {
    match a {
        Term::Sort(_) => Some("sort"),
        Term::UnitTy => Some("Unit"),
        Term::Pi(..) => Some("Pi"),
        Term::Sigma(..) => Some("Sigma"),
        Term::Sum(..) => Some("Sum"),
        _ => None,
    }
}

/// False exactly when both terms are head forms with different heads.
///
/// Two sorts are consistent only when they are the same sort.
pub fn consistent(a: &Term, b: &Term) -> bool {
    match (a, b) {
        (Term::Sort(s1), Term::Sort(s2)) => s1 == s2,
        _ => match (head_form(a), head_form(b)) {
            (Some(h1), Some(h2)) => h1 == h2,
            _ => true,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_step_fires_both_redexes() {
        let lat = Lattice::two_point();
        let b = lat.bot();
        let id = Term::glam(b, "x", Term::UnitTy, Term::Var(0));
        let redex = Term::gapp(id, Term::UnitTm, b);
        let p = Term::gpair(redex.clone(), b, redex);
        assert_eq!(par_step(&lat, &p, b), Term::gpair(Term::UnitTm, b, Term::UnitTm));
    }

    #[test]
    fn normal_forms_are_fixed() {
        let lat = Lattice::two_point();
        let t = Term::pi(lat.bot(), "x", Term::UnitTy, Term::Var(0));
        assert_eq!(par_step(&lat, &t, lat.bot()), t);
    }

    #[test]
    fn unit_and_sum_differ() {
        let lat = Lattice::irrelevance();
        let r = def_eq(&lat, &GradeContext::new(), &Term::sum(Term::UnitTy, Term::UnitTy), &Term::UnitTy, lat.c(), 10);
        assert_eq!(r.verdict, Verdict::NotEqual);
    }

    #[test]
    fn consistency_of_heads() {
        let lat = Lattice::two_point();
        let pi = |g| Term::pi(g, "x", Term::UnitTy, Term::UnitTy);
        assert!(consistent(&pi(lat.bot()), &pi(lat.top())));
        assert!(!consistent(&Term::UnitTy, &Term::sum(Term::UnitTy, Term::UnitTy)));
        assert!(consistent(&Term::gapp(Term::Var(0), Term::UnitTm, lat.bot()), &Term::UnitTy));
    }
}
