use crate::error::{ErrorKind, TypeError};
use crate::lattice::{Grade, Lattice};
use crate::syntax::{print, Context, Term};
use crate::trace::Trace;

/// Which simple calculus a term is checked in.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Graded contexts, `eta` and `bind`.
    Sdc,
    /// Ungraded contexts, `seal` and `unseal`.
    Seal,
}

/// Synthesizes the type of `a` at observer `l` in SDC.
pub fn sdc_check(lat: &Lattice, ctx: &Context, a: &Term, l: Grade) -> Result<Term, TypeError> {
    Checker::new(lat, Mode::Sdc, ctx, None)?.synth(a, l)
}

/// Synthesizes the type of `a` at `l` in the sealing calculus; binding
/// grades in `ctx` are ignored.
pub fn seal_check(lat: &Lattice, ctx: &Context, a: &Term, l: Grade) -> Result<Term, TypeError> {
    Checker::new(lat, Mode::Seal, ctx, None)?.synth(a, l)
}

/// Like [`sdc_check`] or [`seal_check`], recording the derivation.
pub fn check_traced(lat: &Lattice, mode: Mode, ctx: &Context, a: &Term, l: Grade, trace: &mut Trace) -> Result<Term, TypeError> {
    Checker::new(lat, mode, ctx, Some(trace))?.synth(a, l)
}

/// Whether `t` is a simple type: built from `Unit`, `->`, `*`, `+` and `T^g`.
pub fn is_simple_type(t: &Term) -> bool {
    match t {
        Term::UnitTy => true,
        Term::Arrow(a, b) | Term::Prod(a, b) | Term::Sum(a, b) => is_simple_type(a) && is_simple_type(b),
        Term::TMonad(_, a) => is_simple_type(a),
        _ => false,
    }
}

struct Checker<'a> {
    lat: &'a Lattice,
    mode: Mode,
    vars: Vec<(Grade, Term)>,
    path: Vec<u8>,
    trace: Option<&'a mut Trace>,
}

impl<'a> Checker<'a> {
    fn new(lat: &'a Lattice, mode: Mode, ctx: &Context, trace: Option<&'a mut Trace>) -> Result<Checker<'a>, TypeError> {
        let mut vars = Vec::with_capacity(ctx.len() + 8);
        for b in ctx.bindings() {
            if !is_simple_type(&b.ty) {
                return Err(TypeError::new(ErrorKind::NotInFragment, "context", "assumption is not a simple type")
                    .found(print(&b.ty, lat)));
            }
            vars.push((b.grade, b.ty.clone()));
        }
        Ok(Checker { lat, mode, vars, path: Vec::new(), trace })
    }

    fn show(&self, t: &Term) -> String {
        print(t, self.lat)
    }

    fn fail(&self, kind: ErrorKind, rule: &'static str, msg: impl Into<String>) -> TypeError {
        TypeError::new(kind, rule, msg).at(&self.path)
    }

    fn mismatch(&self, rule: &'static str, what: &str, expected: String, found: &Term) -> TypeError {
        self.fail(ErrorKind::TypeMismatch, rule, what.to_string()).expected(expected).found(self.show(found))
    }

    fn child(&mut self, i: u8, a: &Term, l: Grade) -> Result<Term, TypeError> {
        self.path.push(i);
        let r = self.synth(a, l);
        self.path.pop();
        r
    }

    fn child_under(&mut self, i: u8, g: Grade, ty: Term, a: &Term, l: Grade) -> Result<Term, TypeError> {
        self.vars.push((g, ty));
        let r = self.child(i, a, l);
        self.vars.pop();
        r
    }

    fn simple_type(&self, rule: &'static str, t: &Term) -> Result<(), TypeError> {
        if is_simple_type(t) {
            Ok(())
        } else {
            Err(self.fail(ErrorKind::NotInFragment, rule, "annotation is not a simple type").found(self.show(t)))
        }
    }

    fn rule_name(&self, t: &Term) -> &'static str {
        use Term::*;
        match (self.mode, t) {
            (Mode::Seal, Var(_)) => "Sealing-Var",
            (_, Var(_)) => "SDC-Var",
            (_, UnitTm) => "SDC-Unit",
            (_, Lam(..)) => "SDC-Abs",
            (_, App(..)) => "SDC-App",
            (_, Pair(..)) => "SDC-Pair",
            (_, Proj1(_)) => "SDC-ProjOne",
            (_, Proj2(_)) => "SDC-ProjTwo",
            (_, Inj1(..)) => "SDC-InjOne",
            (_, Inj2(..)) => "SDC-InjTwo",
            (_, Case(..)) => "SDC-Case",
            (Mode::Sdc, Return(..)) => "SDC-Return",
            (Mode::Sdc, Bind(..)) => "SDC-Bind",
            (Mode::Seal, Seal(..)) => "Sealing-Seal",
            (Mode::Seal, Unseal(..)) => "Sealing-Unseal",
            _ => "fragment",
        }
    }

    fn synth(&mut self, a: &Term, l: Grade) -> Result<Term, TypeError> {
        let rule = self.rule_name(a);
        if let Some(tr) = self.trace.as_deref_mut() {
            let detail = format!(":^{} {}", self.lat.name(l), print(a, self.lat));
            tr.enter(rule, detail);
        }
        let r = self.synth_rule(rule, a, l);
        if let Some(tr) = self.trace.as_deref_mut() {
            tr.exit();
        }
        r
    }

    fn synth_rule(&mut self, rule: &'static str, a: &Term, l: Grade) -> Result<Term, TypeError> {
        use Term::*;
        let lat = self.lat;
        match a {
            Var(i) => {
                let Some(p) = self.vars.len().checked_sub(i + 1) else {
                    return Err(self.fail(ErrorKind::UnboundIndex, rule, format!("index {i} is not in scope")));
                };
                let (g, ty) = self.vars[p].clone();
                if self.mode == Mode::Sdc && !lat.leq(g, l) {
                    return Err(self
                        .fail(ErrorKind::VarGradeTooHigh, rule, "variable is not visible at this grade")
                        .expected(format!("grade <= {}", lat.name(l)))
                        .found(lat.name(g).to_string()));
                }
                Ok(ty)
            }
            UnitTm => Ok(UnitTy),
            Lam(_, ann, body) => {
                self.simple_type(rule, ann)?;
                let b = self.child_under(1, l, (**ann).clone(), body, l)?;
                Ok(Term::arrow((**ann).clone(), b))
            }
            App(f, arg) => {
                let tf = self.child(0, f, l)?;
                let Arrow(dom, cod) = tf else {
                    return Err(self.mismatch(rule, "applied term is not a function", "_ -> _".into(), &tf));
                };
                let ta = self.child(1, arg, l)?;
                if ta != *dom {
                    return Err(self.mismatch(rule, "argument type differs from the domain", self.show(&dom), &ta));
                }
                Ok(*cod)
            }
            Pair(x, y) => {
                let tx = self.child(0, x, l)?;
                let ty = self.child(1, y, l)?;
                Ok(Term::prod(tx, ty))
            }
            Proj1(p) | Proj2(p) => {
                let tp = self.child(0, p, l)?;
                let Prod(t1, t2) = tp else {
                    return Err(self.mismatch(rule, "projection from a non-product", "_ * _".into(), &tp));
                };
                Ok(if matches!(a, Proj1(_)) { *t1 } else { *t2 })
            }
            Inj1(other, x) | Inj2(other, x) => {
                self.path.push(0);
                let ok = self.simple_type(rule, other);
                self.path.pop();
                ok?;
                let tx = self.child(1, x, l)?;
                Ok(if matches!(a, Inj1(..)) {
                    Term::sum(tx, (**other).clone())
                } else {
                    Term::sum((**other).clone(), tx)
                })
            }
            Case(s, b1, b2) => {
                let ts = self.child(0, s, l)?;
                let Sum(s1, s2) = ts else {
                    return Err(self.mismatch(rule, "scrutinee is not a sum", "_ + _".into(), &ts));
                };
                let t1 = self.child(1, b1, l)?;
                let Arrow(d1, r1) = t1 else {
                    return Err(self.mismatch(rule, "first branch is not a function", self.show(&s1) + " -> _", &t1));
                };
                if d1 != s1 {
                    return Err(self.mismatch(rule, "first branch domain differs", self.show(&s1), &d1));
                }
                let t2 = self.child(2, b2, l)?;
                let Arrow(d2, r2) = t2 else {
                    return Err(self.mismatch(rule, "second branch is not a function", self.show(&s2) + " -> _", &t2));
                };
                if d2 != s2 {
                    return Err(self.mismatch(rule, "second branch domain differs", self.show(&s2), &d2));
                }
                if r1 != r2 {
                    return Err(self.mismatch(rule, "branch results differ", self.show(&r1), &r2));
                }
                Ok(*r1)
            }
            Return(g, x) if self.mode == Mode::Sdc => {
                let tx = self.child(0, x, lat.join(l, *g))?;
                Ok(Term::tmonad(*g, tx))
            }
            Seal(g, x) if self.mode == Mode::Seal => {
                let tx = self.child(0, x, lat.join(l, *g))?;
                Ok(Term::tmonad(*g, tx))
            }
            Bind(g, _, m, body) if self.mode == Mode::Sdc => {
                let tm = self.child(0, m, l)?;
                let inner = match tm {
                    TMonad(g2, inner) if g2 == *g => *inner,
                    other => {
                        let want = format!("T^{} _", lat.name(*g));
                        return Err(self.mismatch(rule, "bound term is not in the matching modality", want, &other));
                    }
                };
                self.child_under(1, lat.join(l, *g), inner, body, l)
            }
            Unseal(g, x) if self.mode == Mode::Seal => {
                let tx = self.child(0, x, l)?;
                let inner = match tx {
                    TMonad(g2, inner) if g2 == *g => *inner,
                    other => {
                        let want = format!("T^{} _", lat.name(*g));
                        return Err(self.mismatch(rule, "unsealed term is not in the matching modality", want, &other));
                    }
                };
                if !lat.leq(*g, l) {
                    return Err(self
                        .fail(ErrorKind::UnsealClearance, rule, "observer lacks clearance to unseal")
                        .expected(format!("grade >= {}", lat.name(*g)))
                        .found(lat.name(l).to_string()));
                }
                Ok(inner)
            }
            _ => {
                let calculus = if self.mode == Mode::Sdc { "SDC" } else { "the sealing calculus" };
                Err(self
                    .fail(ErrorKind::NotInFragment, rule, format!("construct is not part of {calculus}"))
                    .found(self.show(a)))
            }
        }
    }
}
