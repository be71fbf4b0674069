use crate::lattice::Lattice;
use crate::syntax::{shift, shift_from, Binding, Context, Name, Names2, Term};

/// Sealing calculus to SDC: `seal` becomes `eta` and `unseal^g a` becomes
/// `bind^g x = a in x`.
pub fn seal_to_sdc(a: &Term) -> Term {
    match a {
        Term::Seal(g, x) => Term::ret(*g, seal_to_sdc(x)),
        Term::Unseal(g, x) => Term::Bind(*g, Name::new("x"), Box::new(seal_to_sdc(x)), Box::new(Term::Var(0))),
        _ => a.map_children(|c, _| seal_to_sdc(c)),
    }
}

/// SDC terms and types into DDC with `C = ⊤`.
///
/// Simple functions and products become bottom-graded Π and Σ, `T^g A`
/// becomes `Σ x:^g A. Unit`, `eta^g a` the pair `(a^g, unit)` and `bind`
/// a let-pair whose second pattern variable is unused.
pub fn sdc_to_ddct(lat: &Lattice, a: &Term) -> Term {
    use Term::*;
    let bot = lat.bot();
    let tr = |t: &Term| sdc_to_ddct(lat, t);
    let hint = Name::new("x");
    match a {
        Arrow(x, y) => Pi(bot, hint, Box::new(tr(x)), Box::new(shift(&tr(y), 1))),
        Prod(x, y) => Sigma(bot, hint, Box::new(tr(x)), Box::new(shift(&tr(y), 1))),
        TMonad(g, x) => Sigma(*g, hint, Box::new(tr(x)), Box::new(UnitTy)),
        Lam(x, ann, body) => GLam(bot, x.clone(), Box::new(tr(ann)), Box::new(tr(body))),
        App(f, x) => Term::gapp(tr(f), tr(x), bot),
        Pair(x, y) => Term::gpair(tr(x), bot, tr(y)),
        Proj1(p) => Term::fst(bot, tr(p)),
        Proj2(p) => Term::snd(bot, tr(p)),
        Return(g, x) => Term::gpair(tr(x), *g, UnitTm),
        Bind(g, x, m, body) => LetPair(
            *g,
            Names2(x.clone(), Name::new("y")),
            Box::new(tr(m)),
            Box::new(shift_from(&tr(body), 1, 0)),
            None,
        ),
        _ => a.map_children(|c, _| tr(c)),
    }
}

/// Translates every assumption's type, keeping names and grades.
pub fn lift_context(lat: &Lattice, ctx: &Context) -> Context {
    Context::from_bindings(
        ctx.bindings()
            .iter()
            .map(|b| Binding { name: b.name.clone(), grade: b.grade, ty: sdc_to_ddct(lat, &b.ty) })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unseal_becomes_bind() {
        let h = Lattice::low_medium_high().top();
        let t = Term::unseal(h, Term::seal(h, Term::UnitTm));
        let want = Term::bind(h, "x", Term::ret(h, Term::UnitTm), Term::Var(0));
        assert_eq!(seal_to_sdc(&t), want);
    }

    #[test]
    fn modality_becomes_sigma() {
        let lat = Lattice::low_medium_high();
        let h = lat.top();
        let t = Term::tmonad(h, Term::UnitTy);
        assert_eq!(sdc_to_ddct(&lat, &t), Term::sigma(h, "x", Term::UnitTy, Term::UnitTy));
        let e = Term::ret(h, Term::UnitTm);
        assert_eq!(sdc_to_ddct(&lat, &e), Term::gpair(Term::UnitTm, h, Term::UnitTm));
    }

    #[test]
    fn bind_body_skips_the_unit_binder() {
        let lat = Lattice::two_point();
        let t = Term::bind(lat.top(), "x", Term::Var(0), Term::pair(Term::Var(0), Term::Var(1)));
        let Term::LetPair(_, _, _, body, _) = sdc_to_ddct(&lat, &t) else { panic!() };
        assert_eq!(*body, Term::gpair(Term::Var(1), lat.bot(), Term::Var(2)));
    }
}
