use crate::lattice::Lattice;
use crate::syntax::{subst, subst2, Term};

/// DDC values: the type formers, `unit`, abstractions, pairs and
/// injections.
pub fn is_value(a: &Term) -> bool {
    matches!(
        a,
        Term::Sort(_)
            | Term::Pi(..)
            | Term::Sigma(..)
            | Term::Sum(..)
            | Term::UnitTy
            | Term::UnitTm
            | Term::GLam(..)
            | Term::GPair(..)
            | Term::Inj1(..)
            | Term::Inj2(..)
    )
}

/// One call-by-name step, or `None` for values and stuck terms.
///
/// Case branches are functions applied at the bottom grade.
pub fn ddc_step(lat: &Lattice, a: &Term) -> Option<Term> {
    use Term::*;
    match a {
        GApp(f, x, g) => match &**f {
            GLam(g2, _, _, body) if g2 == g => Some(subst(body, x)),
            GLam(..) => None,
            _ => ddc_step(lat, f).map(|f| Term::gapp(f, (**x).clone(), *g)),
        },
        Case(s, b1, b2) => match &**s {
            Inj1(_, v) => Some(Term::gapp((**b1).clone(), (**v).clone(), lat.bot())),
            Inj2(_, v) => Some(Term::gapp((**b2).clone(), (**v).clone(), lat.bot())),
            _ => ddc_step(lat, s).map(|s| Term::case(s, (**b1).clone(), (**b2).clone())),
        },
        LetPair(g, xs, s, body, motive) => match &**s {
            GPair(x, g2, y, _) if g2 == g => Some(subst2(body, x, y)),
            GPair(..) => None,
            _ => ddc_step(lat, s).map(|s| LetPair(*g, xs.clone(), Box::new(s), body.clone(), motive.clone())),
        },
        _ => None,
    }
}

/// Steps until no step applies or the fuel runs out; the flag reports
/// whether evaluation stopped on its own.
pub fn ddc_eval(lat: &Lattice, a: &Term, fuel: usize) -> (Term, bool) {
    let mut cur = a.clone();
    for _ in 0..fuel {
        match ddc_step(lat, &cur) {
            Some(next) => cur = next,
            None => return (cur, true),
        }
    }
    let done = ddc_step(lat, &cur).is_none();
    (cur, done)
}
