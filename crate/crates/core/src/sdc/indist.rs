use crate::lattice::{Grade, Lattice};
use crate::syntax::{GradeContext, Term};

/// `Φ ⊢ a ∼_l b`: the two terms look the same to an observer at `l`.
///
/// Structural, except under `eta^g` with `g` not below `l`, where any two
/// bodies are related provided both are well-graded at `l ∨ g`.
pub fn sdc_indist(lat: &Lattice, phi: &GradeContext, a: &Term, b: &Term, l: Grade) -> bool {
    let mut phi = phi.clone();
    indist(lat, &mut phi, a, b, l)
}

/// `Φ ⊢ a : l`, the diagonal of [`sdc_indist`].
pub fn sdc_grade(lat: &Lattice, phi: &GradeContext, a: &Term, l: Grade) -> bool {
    sdc_indist(lat, phi, a, a, l)
}

fn indist(lat: &Lattice, phi: &mut GradeContext, a: &Term, b: &Term, l: Grade) -> bool {
    use Term::*;
    let under = |phi: &mut GradeContext, g: Grade, x: &Term, y: &Term| {
        phi.push(g);
        let r = indist(lat, phi, x, y, l);
        phi.pop();
        r
    };
    match (a, b) {
        (Var(i), Var(j)) => i == j && phi.get(*i).is_some_and(|g| lat.leq(g, l)),
        (UnitTm, UnitTm) => true,
        (Lam(_, t1, b1), Lam(_, t2, b2)) => t1 == t2 && under(phi, l, b1, b2),
        (App(f1, x1), App(f2, x2)) | (Pair(f1, x1), Pair(f2, x2)) => {
            indist(lat, phi, f1, f2, l) && indist(lat, phi, x1, x2, l)
        }
        (Proj1(x1), Proj1(x2)) | (Proj2(x1), Proj2(x2)) => indist(lat, phi, x1, x2, l),
        (Inj1(t1, x1), Inj1(t2, x2)) | (Inj2(t1, x1), Inj2(t2, x2)) => t1 == t2 && indist(lat, phi, x1, x2, l),
        (Case(s1, p1, q1), Case(s2, p2, q2)) => {
            indist(lat, phi, s1, s2, l) && indist(lat, phi, p1, p2, l) && indist(lat, phi, q1, q2, l)
        }
        (Return(g1, x1), Return(g2, x2)) | (Seal(g1, x1), Seal(g2, x2)) => {
            g1 == g2 && cond(lat, phi, *g1, x1, x2, l)
        }
        (Bind(g1, _, m1, b1), Bind(g2, _, m2, b2)) => {
            g1 == g2 && indist(lat, phi, m1, m2, l) && under(phi, lat.join(l, *g1), b1, b2)
        }
        (Unseal(g1, x1), Unseal(g2, x2)) => g1 == g2 && indist(lat, phi, x1, x2, l),
        (UnitTy, UnitTy) | (Arrow(..), Arrow(..)) | (Prod(..), Prod(..)) | (Sum(..), Sum(..)) | (TMonad(..), TMonad(..)) => {
            a == b
        }
        _ => false,
    }
}

/// Conditional equivalence `Φ ⊢^g_l a ∼ b`.
fn cond(lat: &Lattice, phi: &mut GradeContext, g: Grade, a: &Term, b: &Term, l: Grade) -> bool {
    if lat.leq(g, l) {
        indist(lat, phi, a, b, l)
    } else {
        let k = lat.join(l, g);
        indist(lat, phi, a, a, k) && indist(lat, phi, b, b, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bools() -> (Term, Term) {
        (Term::inj1(Term::UnitTy, Term::UnitTm), Term::inj2(Term::UnitTy, Term::UnitTm))
    }

    #[test]
    fn high_boxes_hide_contents() {
        let lat = Lattice::low_medium_high();
        let (l, h) = (lat.bot(), lat.top());
        let (t, f) = bools();
        let phi = GradeContext::new();
        assert!(sdc_indist(&lat, &phi, &Term::ret(h, t.clone()), &Term::ret(h, f.clone()), l));
        assert!(!sdc_indist(&lat, &phi, &Term::ret(h, t), &Term::ret(h, f), h));
    }

    #[test]
    fn grading_checks_variables() {
        let lat = Lattice::two_point();
        let phi = GradeContext::from_grades(vec![lat.top()]);
        assert!(!sdc_grade(&lat, &phi, &Term::Var(0), lat.bot()));
        assert!(sdc_grade(&lat, &phi, &Term::lam("x", Term::UnitTy, Term::Var(0)), lat.bot()));
    }
}
