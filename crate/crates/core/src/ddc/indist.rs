use crate::lattice::{Grade, Lattice};
use crate::syntax::{GradeContext, Motive, Term};

/// `Φ ⊢ a ∼_l b` for DDC.
///
/// Application arguments and first pair components at grade `g` are
/// compared only when `g ≤ l`; type annotations (abstraction domains,
/// injection annotations, pair ascriptions and let-pair motives) count as
/// `⊤`-graded positions.
pub fn ddc_indist(lat: &Lattice, phi: &GradeContext, a: &Term, b: &Term, l: Grade) -> bool {
    let mut phi = phi.clone();
    Indist { lat, l }.eq(&mut phi, a, b)
}

/// `Φ ⊢ a : l`, the diagonal of [`ddc_indist`].
pub fn ddc_grade(lat: &Lattice, phi: &GradeContext, a: &Term, l: Grade) -> bool {
    ddc_indist(lat, phi, a, a, l)
}

struct Indist<'a> {
    lat: &'a Lattice,
    l: Grade,
}

impl Indist<'_> {
    fn under(&self, phi: &mut GradeContext, gs: &[Grade], a: &Term, b: &Term) -> bool {
        for &g in gs {
            phi.push(g);
        }
        let r = self.eq(phi, a, b);
        for _ in gs {
            phi.pop();
        }
        r
    }

    /// Conditional indistinguishability at guard `g`.
    fn cond(&self, phi: &mut GradeContext, g: Grade, a: &Term, b: &Term) -> bool {
        !self.lat.leq(g, self.l) || self.eq(phi, a, b)
    }

    fn annotation(&self, phi: &mut GradeContext, a: &Term, b: &Term) -> bool {
        self.cond(phi, self.lat.top(), a, b)
    }

    fn eq(&self, phi: &mut GradeContext, a: &Term, b: &Term) -> bool {
        use Term::*;
        let (lat, l) = (self.lat, self.l);
        match (a, b) {
            (Var(i), Var(j)) => i == j && phi.get(*i).is_some_and(|g| lat.leq(g, l)),
            (Sort(s1), Sort(s2)) => s1 == s2,
            (UnitTy, UnitTy) | (UnitTm, UnitTm) => true,
            (Pi(g1, _, a1, b1), Pi(g2, _, a2, b2)) | (Sigma(g1, _, a1, b1), Sigma(g2, _, a2, b2)) => {
                g1 == g2 && self.eq(phi, a1, a2) && self.under(phi, &[l], b1, b2)
            }
            (GLam(g1, _, a1, b1), GLam(g2, _, a2, b2)) => {
                g1 == g2 && self.annotation(phi, a1, a2) && self.under(phi, &[lat.join(*g1, l)], b1, b2)
            }
            (GApp(f1, x1, g1), GApp(f2, x2, g2)) => g1 == g2 && self.eq(phi, f1, f2) && self.cond(phi, *g1, x1, x2),
            (GPair(x1, g1, y1, t1), GPair(x2, g2, y2, t2)) => {
                g1 == g2
                    && self.cond(phi, *g1, x1, x2)
                    && self.eq(phi, y1, y2)
                    && (!lat.leq(lat.top(), l) || match (t1, t2) {
                        (Some(t1), Some(t2)) => self.eq(phi, t1, t2),
                        (None, None) => true,
                        _ => false,
                    })
            }
            (LetPair(g1, _, s1, b1, m1), LetPair(g2, _, s2, b2, m2)) => {
                g1 == g2
                    && self.eq(phi, s1, s2)
                    && self.under(phi, &[lat.join(*g1, l), l], b1, b2)
                    && (!lat.leq(lat.top(), l) || match (m1, m2) {
                        (Some(Motive(_, c1)), Some(Motive(_, c2))) => self.under(phi, &[lat.top()], c1, c2),
                        (None, None) => true,
                        _ => false,
                    })
            }
            (Sum(a1, b1), Sum(a2, b2)) => self.eq(phi, a1, a2) && self.eq(phi, b1, b2),
            (Inj1(t1, x1), Inj1(t2, x2)) | (Inj2(t1, x1), Inj2(t2, x2)) => {
                self.annotation(phi, t1, t2) && self.eq(phi, x1, x2)
            }
            (Case(s1, p1, q1), Case(s2, p2, q2)) => {
                self.eq(phi, s1, s2) && self.eq(phi, p1, p2) && self.eq(phi, q1, q2)
            }
            _ => false,
        }
    }
}

/// `⌊a⌋_l`: replaces everything an `l`-observer cannot see with `unit`
/// (terms) or `Unit` (annotations), and drops ascriptions and motives.
pub fn erase(lat: &Lattice, a: &Term, l: Grade) -> Term {
    use Term::*;
    let sees_types = lat.leq(lat.top(), l);
    match a {
        GApp(f, x, g) => {
            let x = if lat.leq(*g, l) { erase(lat, x, l) } else { UnitTm };
            Term::gapp(erase(lat, f, l), x, *g)
        }
        GPair(x, g, y, ty) => {
            let x = if lat.leq(*g, l) { erase(lat, x, l) } else { UnitTm };
            let ty = if sees_types { ty.as_ref().map(|t| Box::new(erase(lat, t, l))) } else { None };
            GPair(Box::new(x), *g, Box::new(erase(lat, y, l)), ty)
        }
        GLam(g, x, ann, body) => {
            let ann = if sees_types { erase(lat, ann, l) } else { UnitTy };
            GLam(*g, x.clone(), Box::new(ann), Box::new(erase(lat, body, l)))
        }
        Inj1(t, x) | Inj2(t, x) => {
            let t = if sees_types { erase(lat, t, l) } else { UnitTy };
            let x = erase(lat, x, l);
            if matches!(a, Inj1(..)) {
                Term::inj1(t, x)
            } else {
                Term::inj2(t, x)
            }
        }
        LetPair(g, xs, s, body, motive) => {
            let motive = if sees_types {
                motive.as_ref().map(|Motive(z, c)| Motive(z.clone(), Box::new(erase(lat, c, l))))
            } else {
                None
            };
            LetPair(*g, xs.clone(), Box::new(erase(lat, s, l)), Box::new(erase(lat, body, l)), motive)
        }
        _ => a.map_children(|c, _| erase(lat, c, l)),
    }
}
