//! A second, deliberately naive implementation of the simple typing rules.
//!
//! Each rule is an entry in a table. A query collects every conclusion any
//! rule can derive by trying all premise solutions, so the oracle never
//! relies on the rules being syntax-directed. Results are memoised on the
//! whole judgment.

use std::collections::HashMap;

use gradia_core::sdc::Mode;
use gradia_core::{Context, Grade, Lattice, Term};

type Ctx = Vec<(Grade, Term)>;
type Rule = fn(&mut Oracle<'_>, &Ctx, &Term, Grade) -> Vec<Term>;

const SHARED: &[(&str, Rule)] = &[
    ("Var", rule_var),
    ("Unit", rule_unit),
    ("Abs", rule_abs),
    ("App", rule_app),
    ("Pair", rule_pair),
    ("ProjOne", rule_proj1),
    ("ProjTwo", rule_proj2),
    ("InjOne", rule_inj1),
    ("InjTwo", rule_inj2),
    ("Case", rule_case),
];

const GRADED: &[(&str, Rule)] = &[("Return", rule_return), ("Bind", rule_bind)];

const SEALING: &[(&str, Rule)] = &[("Seal", rule_seal), ("Unseal", rule_unseal)];

/// Memoising proof search for SDC or the sealing calculus.
pub struct Oracle<'a> {
    lat: &'a Lattice,
    mode: Mode,
    memo: HashMap<(Ctx, Term, Grade), Vec<Term>>,
}

impl<'a> Oracle<'a> {
    pub fn new(lat: &'a Lattice, mode: Mode) -> Oracle<'a> {
        Oracle { lat, mode, memo: HashMap::new() }
    }

    /// The type of `a`, when exactly one is derivable.
    pub fn check(&mut self, ctx: &Context, a: &Term, l: Grade) -> Option<Term> {
        let all = self.derivable(ctx, a, l);
        (all.len() == 1).then(|| all[0].clone())
    }

    /// Every type derivable for `a`.
    pub fn derivable(&mut self, ctx: &Context, a: &Term, l: Grade) -> Vec<Term> {
        let ctx: Ctx = ctx.bindings().iter().map(|b| (b.grade, b.ty.clone())).collect();
        if !ctx.iter().all(|(_, t)| is_type(t)) {
            return Vec::new();
        }
        if self.memo.len() > 2_000_000 {
            self.memo.clear();
        }
        self.derive(&ctx, a, l)
    }

    fn derive(&mut self, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
        let key = (ctx.clone(), a.clone(), l);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let extra = if self.mode == Mode::Sdc { GRADED } else { SEALING };
        let mut out: Vec<Term> = Vec::new();
        for (_, rule) in SHARED.iter().chain(extra) {
            for t in rule(self, ctx, a, l) {
                if !out.contains(&t) {
                    out.push(t);
                }
            }
        }
        self.memo.insert(key, out.clone());
        out
    }

    fn under(&mut self, ctx: &Ctx, g: Grade, ty: &Term, a: &Term, l: Grade) -> Vec<Term> {
        let mut inner = ctx.clone();
        inner.push((g, ty.clone()));
        self.derive(&inner, a, l)
    }
}

/// Well-formedness of simple types, as its own small judgment.
fn is_type(t: &Term) -> bool {
    match t {
        Term::UnitTy => true,
        Term::TMonad(_, a) => is_type(a),
        Term::Arrow(a, b) | Term::Prod(a, b) | Term::Sum(a, b) => is_type(a) && is_type(b),
        _ => false,
    }
}

fn rule_var(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Var(i) = a else { return vec![] };
    if *i >= ctx.len() {
        return vec![];
    }
    let (g, ty) = &ctx[ctx.len() - 1 - i];
    if o.mode == Mode::Seal || o.lat.leq(*g, l) {
        vec![ty.clone()]
    } else {
        vec![]
    }
}

fn rule_unit(_: &mut Oracle<'_>, _: &Ctx, a: &Term, _: Grade) -> Vec<Term> {
    if *a == Term::UnitTm {
        vec![Term::UnitTy]
    } else {
        vec![]
    }
}

fn rule_abs(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Lam(_, dom, body) = a else { return vec![] };
    if !is_type(dom) {
        return vec![];
    }
    o.under(ctx, l, dom, body, l).into_iter().map(|b| Term::arrow((**dom).clone(), b)).collect()
}

fn rule_app(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::App(f, x) = a else { return vec![] };
    let fs = o.derive(ctx, f, l);
    let xs = o.derive(ctx, x, l);
    let mut out = vec![];
    for tf in &fs {
        if let Term::Arrow(d, c) = tf {
            if xs.iter().any(|tx| tx == &**d) {
                out.push((**c).clone());
            }
        }
    }
    out
}

fn rule_pair(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Pair(x, y) = a else { return vec![] };
    let xs = o.derive(ctx, x, l);
    let ys = o.derive(ctx, y, l);
    let mut out = vec![];
    for tx in &xs {
        for ty in &ys {
            out.push(Term::prod(tx.clone(), ty.clone()));
        }
    }
    out
}

fn rule_proj1(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Proj1(p) = a else { return vec![] };
    o.derive(ctx, p, l)
        .into_iter()
        .filter_map(|t| match t {
            Term::Prod(x, _) => Some(*x),
            _ => None,
        })
        .collect()
}

fn rule_proj2(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Proj2(p) = a else { return vec![] };
    o.derive(ctx, p, l)
        .into_iter()
        .filter_map(|t| match t {
            Term::Prod(_, y) => Some(*y),
            _ => None,
        })
        .collect()
}

fn rule_inj1(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Inj1(other, x) = a else { return vec![] };
    if !is_type(other) {
        return vec![];
    }
    o.derive(ctx, x, l).into_iter().map(|t| Term::sum(t, (**other).clone())).collect()
}

fn rule_inj2(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Inj2(other, x) = a else { return vec![] };
    if !is_type(other) {
        return vec![];
    }
    o.derive(ctx, x, l).into_iter().map(|t| Term::sum((**other).clone(), t)).collect()
}

fn rule_case(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Case(s, b1, b2) = a else { return vec![] };
    let ss = o.derive(ctx, s, l);
    let t1s = o.derive(ctx, b1, l);
    let t2s = o.derive(ctx, b2, l);
    let mut out = vec![];
    for ts in &ss {
        let Term::Sum(x1, x2) = ts else { continue };
        for t1 in &t1s {
            for t2 in &t2s {
                if let (Term::Arrow(d1, r1), Term::Arrow(d2, r2)) = (t1, t2) {
                    if d1 == x1 && d2 == x2 && r1 == r2 && !out.contains(&**r1) {
                        out.push((**r1).clone());
                    }
                }
            }
        }
    }
    out
}

fn rule_return(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Return(g, x) = a else { return vec![] };
    let k = o.lat.join(l, *g);
    o.derive(ctx, x, k).into_iter().map(|t| Term::tmonad(*g, t)).collect()
}

fn rule_bind(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Bind(g, _, m, body) = a else { return vec![] };
    let k = o.lat.join(l, *g);
    let mut out = vec![];
    for tm in o.derive(ctx, m, l) {
        if let Term::TMonad(g2, inner) = tm {
            if g2 == *g {
                for t in o.under(ctx, k, &inner, body, l) {
                    if !out.contains(&t) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

fn rule_seal(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Seal(g, x) = a else { return vec![] };
    let k = o.lat.join(l, *g);
    o.derive(ctx, x, k).into_iter().map(|t| Term::tmonad(*g, t)).collect()
}

fn rule_unseal(o: &mut Oracle<'_>, ctx: &Ctx, a: &Term, l: Grade) -> Vec<Term> {
    let Term::Unseal(g, x) = a else { return vec![] };
    if !o.lat.leq(*g, l) {
        return vec![];
    }
    o.derive(ctx, x, l)
        .into_iter()
        .filter_map(|t| match t {
            Term::TMonad(g2, inner) if g2 == *g => Some(*inner),
            _ => None,
        })
        .collect()
}

/// Names of the rules the oracle knows for a calculus.
pub fn rule_names(mode: Mode) -> Vec<&'static str> {
    let extra = if mode == Mode::Sdc { GRADED } else { SEALING };
    SHARED.iter().chain(extra).map(|(n, _)| *n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_types_identity() {
        let lat = Lattice::two_point();
        let mut o = Oracle::new(&lat, Mode::Sdc);
        let id = Term::lam("x", Term::UnitTy, Term::Var(0));
        assert_eq!(o.check(&Context::new(), &id, lat.bot()), Some(Term::arrow(Term::UnitTy, Term::UnitTy)));
    }

    #[test]
    fn oracle_respects_grades() {
        let lat = Lattice::two_point();
        let mut o = Oracle::new(&lat, Mode::Sdc);
        let ctx = Context::new().with("x", lat.top(), Term::UnitTy);
        assert_eq!(o.check(&ctx, &Term::Var(0), lat.bot()), None);
        assert_eq!(o.check(&ctx, &Term::ret(lat.top(), Term::Var(0)), lat.bot()), Some(Term::tmonad(lat.top(), Term::UnitTy)));
    }
}
