use crate::syntax::{subst, Term};

/// Weak head normal forms of the simple calculi.
pub fn is_value(a: &Term) -> bool {
    matches!(
        a,
        Term::UnitTm | Term::Lam(..) | Term::Pair(..) | Term::Inj1(..) | Term::Inj2(..) | Term::Return(..) | Term::Seal(..)
    )
}

/// One call-by-name step, or `None` for values and stuck terms.
///
/// Covers both SDC (`bind`/`eta`) and the sealing calculus
/// (`unseal`/`seal`).
pub fn sdc_step(a: &Term) -> Option<Term> {
    use Term::*;
    match a {
        App(f, x) => match &**f {
            Lam(_, _, body) => Some(subst(body, x)),
            _ => sdc_step(f).map(|f| Term::app(f, (**x).clone())),
        },
        Proj1(p) | Proj2(p) => match &**p {
            Pair(x, y) => Some(if matches!(a, Proj1(_)) { (**x).clone() } else { (**y).clone() }),
            _ => sdc_step(p).map(|p| if matches!(a, Proj1(_)) { Term::proj1(p) } else { Term::proj2(p) }),
        },
        Case(s, b1, b2) => match &**s {
            Inj1(_, v) => Some(Term::app((**b1).clone(), (**v).clone())),
            Inj2(_, v) => Some(Term::app((**b2).clone(), (**v).clone())),
            _ => sdc_step(s).map(|s| Term::case(s, (**b1).clone(), (**b2).clone())),
        },
        Bind(g, x, m, body) => match &**m {
            Return(g2, v) if g2 == g => Some(subst(body, v)),
            Return(..) => None,
            _ => sdc_step(m).map(|m| Bind(*g, x.clone(), Box::new(m), body.clone())),
        },
        Unseal(g, m) => match &**m {
            Seal(g2, v) if g2 == g => Some((**v).clone()),
            Seal(..) => None,
            _ => sdc_step(m).map(|m| Term::unseal(*g, m)),
        },
        _ => None,
    }
}

/// Steps until a value, a stuck term or the fuel runs out; returns the
/// final term and whether it stopped within the fuel.
pub fn sdc_eval(a: &Term, fuel: usize) -> (Term, bool) {
    let mut cur = a.clone();
    for _ in 0..fuel {
        match sdc_step(&cur) {
            Some(next) => cur = next,
            None => return (cur, true),
        }
    }
    let done = sdc_step(&cur).is_none();
    (cur, done)
}

/// The redex contraction at the root, if the root is a redex.
fn contract(a: &Term) -> Option<Term> {
    use Term::*;
    match a {
        App(f, x) => match &**f {
            Lam(_, _, body) => Some(subst(body, x)),
            _ => None,
        },
        Proj1(p) | Proj2(p) => match &**p {
            Pair(x, y) => Some(if matches!(a, Proj1(_)) { (**x).clone() } else { (**y).clone() }),
            _ => None,
        },
        Case(s, b1, b2) => match &**s {
            Inj1(_, v) => Some(Term::app((**b1).clone(), (**v).clone())),
            Inj2(_, v) => Some(Term::app((**b2).clone(), (**v).clone())),
            _ => None,
        },
        Bind(g, _, m, body) => match &**m {
            Return(g2, v) if g2 == g => Some(subst(body, v)),
            _ => None,
        },
        Unseal(g, m) => match &**m {
            Seal(g2, v) if g2 == g => Some((**v).clone()),
            _ => None,
        },
        _ => None,
    }
}

/// Every one-step reduct under full reduction, leftmost-outermost first.
pub fn full_step(a: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    if let Some(r) = contract(a) {
        out.push(r);
    }
    let mut children = Vec::new();
    a.for_each_child(|c, _| children.push(c));
    for (i, c) in children.iter().enumerate() {
        for r in full_step(c) {
            let mut k = 0;
            out.push(a.map_children(|orig, _| {
                let t = if k == i { r.clone() } else { orig.clone() };
                k += 1;
                t
            }));
        }
    }
    out
}
