use crate::equality::{def_eq, Verdict, DEFAULT_FUEL};
use crate::error::{ErrorKind, TypeError};
use crate::lattice::{Grade, Lattice};
use crate::syntax::{print_in, shift, shift_from, strengthen, subst, Context, Motive, PtsSignature, Term};
use crate::trace::Trace;

use super::step::ddc_step;

/// Everything a DDC judgment is parameterised by.
#[derive(Clone, Debug)]
pub struct DdcConfig {
    pub lattice: Lattice,
    pub pts: PtsSignature,
    /// Rounds of reduction allowed for each conversion or head
    /// normalisation.
    pub fuel: usize,
}

impl DdcConfig {
    pub fn new(lattice: Lattice, pts: PtsSignature) -> DdcConfig {
        DdcConfig { lattice, pts, fuel: DEFAULT_FUEL }
    }

    pub fn with_fuel(mut self, fuel: usize) -> DdcConfig {
        self.fuel = fuel;
        self
    }
}

/// Synthesizes the type of `a` in `Ω ⊢ a :^l A`.
pub fn ddc_check(cfg: &DdcConfig, ctx: &Context, a: &Term, l: Grade) -> Result<Term, TypeError> {
    Checker::new(cfg, ctx, None).synth(a, l)
}

/// Like [`ddc_check`], recording the derivation.
pub fn ddc_check_traced(cfg: &DdcConfig, ctx: &Context, a: &Term, l: Grade, trace: &mut Trace) -> Result<Term, TypeError> {
    Checker::new(cfg, ctx, Some(trace)).synth(a, l)
}

/// The truncated judgment `Ω ⊩ a :^k A`: a request at `⊤` is answered at
/// `C` under `C ∧ Ω`, anything else directly.
pub fn ddc_check_truncated(cfg: &DdcConfig, ctx: &Context, a: &Term, k: Grade, trace: Option<&mut Trace>) -> Result<Term, TypeError> {
    Checker::new(cfg, ctx, trace).truncated(k, |ch, k| ch.synth(a, k))
}

/// Checks that every assumption's type is a type, each in the truncated
/// prefix before it.
pub fn check_context(cfg: &DdcConfig, ctx: &Context) -> Result<(), TypeError> {
    let mut prefix = Context::new();
    for b in ctx.bindings() {
        let mut ch = Checker::new(cfg, &prefix, None);
        let top = cfg.lattice.top();
        ch.sort_of_truncated("context", &b.ty, top)?;
        prefix.push(b.name.clone(), b.grade, b.ty.clone());
    }
    Ok(())
}

/// Call-by-name weak head normal form, or `FuelExhausted`.
pub fn whnf(cfg: &DdcConfig, a: &Term) -> Result<Term, TypeError> {
    let mut cur = a.clone();
    for _ in 0..cfg.fuel {
        match ddc_step(&cfg.lattice, &cur) {
            Some(next) => cur = next,
            None => return Ok(cur),
        }
    }
    match ddc_step(&cfg.lattice, &cur) {
        None => Ok(cur),
        Some(_) => Err(TypeError::new(ErrorKind::FuelExhausted, "whnf", format!("no head normal form within {} steps", cfg.fuel))),
    }
}

struct Checker<'a> {
    cfg: &'a DdcConfig,
    lat: &'a Lattice,
    ctx: Context,
    path: Vec<u8>,
    trace: Option<&'a mut Trace>,
}

impl<'a> Checker<'a> {
    fn new(cfg: &'a DdcConfig, ctx: &Context, trace: Option<&'a mut Trace>) -> Checker<'a> {
        Checker { cfg, lat: &cfg.lattice, ctx: ctx.clone(), path: Vec::new(), trace }
    }

    fn show(&self, t: &Term) -> String {
        print_in(t, self.lat, &self.ctx.names())
    }

    fn fail(&self, kind: ErrorKind, rule: &'static str, msg: impl Into<String>) -> TypeError {
        TypeError::new(kind, rule, msg).at(&self.path)
    }

    fn mismatch(&self, rule: &'static str, what: &str, expected: impl Into<String>, found: &Term) -> TypeError {
        self.fail(ErrorKind::TypeMismatch, rule, what.to_string()).expected(expected).found(self.show(found))
    }

    fn note(&mut self, rule: &'static str, detail: String) {
        if let Some(tr) = self.trace.as_deref_mut() {
            tr.note(rule, detail);
        }
    }

    fn child(&mut self, i: u8, a: &Term, l: Grade) -> Result<Term, TypeError> {
        self.path.push(i);
        let r = self.synth(a, l);
        self.path.pop();
        r
    }

    fn under<T>(&mut self, binds: Vec<(crate::Name, Grade, Term)>, f: impl FnOnce(&mut Self) -> T) -> T {
        let n = binds.len();
        for (x, g, ty) in binds {
            self.ctx.push(x, g, ty);
        }
        let r = f(self);
        for _ in 0..n {
            self.ctx.pop();
        }
        r
    }

    /// The truncated-at-top judgment `Ω ⊩ a :^k A`: a request at `⊤` is
    /// answered at `C` under `C ∧ Ω`.
    fn truncated<T>(&mut self, k: Grade, f: impl FnOnce(&mut Self, Grade) -> T) -> T {
        let (top, c) = (self.lat.top(), self.lat.c());
        if k != top || c == top {
            return f(self, k);
        }
        let saved = std::mem::replace(&mut self.ctx, Context::new());
        self.ctx = saved.truncated(self.lat, c);
        if self.trace.is_some() {
            let shown: Vec<String> = self
                .ctx
                .bindings()
                .iter()
                .map(|b| format!("{}:^{}", b.name.as_str(), self.lat.name(b.grade)))
                .collect();
            let detail = format!("{} /\\ Omega = [{}]", self.lat.name(c), shown.join(", "));
            self.note("CT-Top", detail);
        }
        let r = f(self, c);
        self.ctx = saved;
        r
    }

    fn child_truncated(&mut self, i: u8, a: &Term, k: Grade) -> Result<Term, TypeError> {
        self.truncated(k, |ch, k| ch.child(i, a, k))
    }

    fn whnf(&self, rule: &'static str, t: &Term) -> Result<Term, TypeError> {
        whnf(self.cfg, t).map_err(|e| TypeError { rule, ..e }.at(&self.path))
    }

    fn sort_of(&mut self, rule: &'static str, i: u8, a: &Term, l: Grade) -> Result<crate::syntax::Sort, TypeError> {
        let t = self.child(i, a, l)?;
        match self.whnf(rule, &t)? {
            Term::Sort(s) => Ok(s),
            other => {
                self.path.push(i);
                let e = self.fail(ErrorKind::NotAType, rule, "expected a type").expected("a sort").found(self.show(&other));
                self.path.pop();
                Err(e)
            }
        }
    }

    fn sort_of_truncated(&mut self, rule: &'static str, a: &Term, k: Grade) -> Result<crate::syntax::Sort, TypeError> {
        self.truncated(k, |ch, k| ch.sort_of(rule, 0, a, k))
    }

    /// `C ∧ |Ω| ⊢ found ≡_C expected`.
    fn convert(&mut self, rule: &'static str, found: &Term, expected: &Term) -> Result<(), TypeError> {
        let c = self.lat.c();
        let phi = self.ctx.grades().truncated(self.lat, c);
        let r = def_eq(self.lat, &phi, found, expected, c, self.cfg.fuel);
        match r.verdict {
            Verdict::Equal => {
                self.note("T-ConvC", format!("{} == {}", self.show(found), self.show(expected)));
                Ok(())
            }
            Verdict::NotEqual => Err(self
                .fail(ErrorKind::ConversionFailed, rule, "types are not definitionally equal")
                .expected(self.show(&r.last.1))
                .found(self.show(&r.last.0))),
            Verdict::FuelExhausted => Err(self.fail(
                ErrorKind::FuelExhausted,
                rule,
                format!("conversion undecided after {} rounds", self.cfg.fuel),
            )),
        }
    }

    fn rule_name(t: &Term) -> &'static str {
        use Term::*;
        match t {
            Var(_) => "T-Var",
            Sort(_) => "T-Type",
            UnitTy => "T-Unit",
            UnitTm => "T-UnitTm",
            Pi(..) => "T-Pi",
            GLam(..) => "T-AbsC",
            GApp(..) => "T-AppC",
            Sigma(..) => "T-WSigma",
            GPair(..) => "T-WPairC",
            LetPair(..) => "T-LetPairC",
            Sum(..) => "T-Sum",
            Inj1(..) => "T-InjOne",
            Inj2(..) => "T-InjTwo",
            Case(..) => "T-CaseC",
            _ => "fragment",
        }
    }

    fn synth(&mut self, a: &Term, l: Grade) -> Result<Term, TypeError> {
        let rule = Self::rule_name(a);
        if self.trace.is_some() {
            let detail = format!(":^{} {}", self.lat.name(l), self.show(a));
            self.trace.as_deref_mut().unwrap().enter(rule, detail);
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
        if !lat.leq(l, lat.c()) {
            return Err(self
                .fail(ErrorKind::LevelAboveC, rule, "judgments only exist at levels up to C")
                .expected(format!("grade <= {}", lat.name(lat.c())))
                .found(lat.name(l).to_string()));
        }
        match a {
            Var(i) => {
                let Some((g, ty)) = self.ctx.lookup(*i) else {
                    return Err(self.fail(ErrorKind::UnboundIndex, rule, format!("index {i} is not in scope")));
                };
                if !lat.leq(g, l) {
                    return Err(self
                        .fail(ErrorKind::VarGradeTooHigh, rule, "variable is not visible at this grade")
                        .expected(format!("grade <= {}", lat.name(l)))
                        .found(lat.name(g).to_string()));
                }
                Ok(ty)
            }
            Sort(s) => match self.cfg.pts.axiom(s) {
                Some(s2) => Ok(Sort(s2.clone())),
                None => Err(self.fail(ErrorKind::NoAxiom, rule, format!("no axiom for sort {s}"))),
            },
            UnitTy => Ok(Sort(self.cfg.pts.base().clone())),
            UnitTm => Ok(UnitTy),
            Pi(_, x, dom, cod) | Sigma(_, x, dom, cod) => {
                let s1 = self.sort_of(rule, 0, dom, l)?;
                let s2 = self.under(vec![(x.clone(), l, (**dom).clone())], |ch| ch.sort_of(rule, 1, cod, l))?;
                match self.cfg.pts.rule(&s1, &s2) {
                    Some(s3) => Ok(Sort(s3.clone())),
                    None => Err(self.fail(ErrorKind::NoRule, rule, format!("no rule for ({s1}, {s2})"))),
                }
            }
            Sum(left, right) => {
                let s1 = self.sort_of(rule, 0, left, l)?;
                let s2 = self.sort_of(rule, 1, right, l)?;
                if s1 != s2 {
                    return Err(self.mismatch(rule, "summands live in different sorts", s1.to_string(), &Sort(s2)));
                }
                Ok(Sort(s1))
            }
            GLam(g, x, dom, body) => {
                let top = lat.top();
                self.path.push(0);
                let dom_ok = self.sort_of_truncated(rule, dom, top);
                self.path.pop();
                dom_ok?;
                let cod = self.under(vec![(x.clone(), lat.join(*g, l), (**dom).clone())], |ch| ch.child(1, body, l))?;
                let pi = Pi(*g, x.clone(), dom.clone(), Box::new(cod));
                self.sort_of_truncated(rule, &pi, top)?;
                Ok(pi)
            }
            GApp(f, arg, g) => {
                let tf = self.child(0, f, l)?;
                let tf = self.whnf(rule, &tf)?;
                let Pi(g2, _, dom, cod) = &tf else {
                    let want = format!("Pi _:^{} _. _", lat.name(*g));
                    return Err(self.mismatch(rule, "applied term is not a function", want, &tf));
                };
                if g2 != g {
                    let want = format!("Pi _:^{} _. _", lat.name(*g));
                    return Err(self.mismatch(rule, "application grade differs from the function's", want, &tf));
                }
                let ta = self.child_truncated(1, arg, lat.join(*g, l))?;
                self.path.push(1);
                let conv = self.convert(rule, &ta, dom);
                self.path.pop();
                conv?;
                Ok(subst(cod, arg))
            }
            GPair(x, g, y, asc) => {
                let k = lat.join(*g, l);
                match asc {
                    Some(asc) => {
                        self.path.push(2);
                        let ok = self.sort_of_truncated(rule, asc, lat.top());
                        self.path.pop();
                        ok?;
                        let sig = self.whnf(rule, asc)?;
                        let Sigma(g2, _, dom, cod) = &sig else {
                            return Err(self.mismatch(rule, "pair ascription is not a Sigma type", "Sigma _:^_ _. _", &sig));
                        };
                        if g2 != g {
                            let want = format!("Sigma _:^{} _. _", lat.name(*g));
                            return Err(self.mismatch(rule, "pair grade differs from the ascription's", want, &sig));
                        }
                        let tx = self.child_truncated(0, x, k)?;
                        self.path.push(0);
                        let conv = self.convert(rule, &tx, dom);
                        self.path.pop();
                        conv?;
                        let ty = self.child(1, y, l)?;
                        self.path.push(1);
                        let conv = self.convert(rule, &ty, &subst(cod, x));
                        self.path.pop();
                        conv?;
                        Ok((**asc).clone())
                    }
                    None => {
                        let tx = self.child_truncated(0, x, k)?;
                        let ty = self.child(1, y, l)?;
                        Ok(Sigma(*g, crate::Name::new("x"), Box::new(tx), Box::new(shift(&ty, 1))))
                    }
                }
            }
            LetPair(g, names, scrut, body, motive) => {
                let ts = self.child(0, scrut, l)?;
                let sig = self.whnf(rule, &ts)?;
                let Sigma(g2, _, dom, cod) = &sig else {
                    return Err(self.mismatch(rule, "let-pair scrutinee is not a pair", "Sigma _:^_ _. _", &sig));
                };
                if g2 != g {
                    let want = format!("Sigma _:^{} _. _", lat.name(*g));
                    return Err(self.mismatch(rule, "pattern grade differs from the pair's", want, &sig));
                }
                let binds = vec![
                    (names.0.clone(), lat.join(*g, l), (**dom).clone()),
                    (names.1.clone(), l, (**cod).clone()),
                ];
                match motive {
                    Some(Motive(z, c)) => {
                        let top = lat.top();
                        self.path.push(2);
                        let ok = self.truncated(top, |ch, k| {
                            ch.under(vec![(z.clone(), top, sig.clone())], |ch| ch.sort_of(rule, 0, c, k))
                        });
                        self.path.pop();
                        ok?;
                        let tb = self.under(binds, |ch| {
                            let tb = ch.child(1, body, l)?;
                            let pair = GPair(Box::new(Var(1)), *g, Box::new(Var(0)), None);
                            let want = subst(&shift_from(c, 2, 1), &pair);
                            ch.path.push(1);
                            let conv = ch.convert(rule, &tb, &want);
                            ch.path.pop();
                            conv
                        });
                        tb?;
                        Ok(subst(c, scrut))
                    }
                    None => {
                        let tb = self.under(binds, |ch| ch.child(1, body, l))?;
                        strengthen(&tb, 2).ok_or_else(|| {
                            self.fail(
                                ErrorKind::TypeMismatch,
                                rule,
                                "body type mentions the pattern variables; a motive is required",
                            )
                        })
                    }
                }
            }
            Inj1(other, x) | Inj2(other, x) => {
                let tx = self.child(1, x, l)?;
                let sum = if matches!(a, Inj1(..)) {
                    Term::sum(tx, (**other).clone())
                } else {
                    Term::sum((**other).clone(), tx)
                };
                self.path.push(0);
                let ok = self.sort_of_truncated(rule, &sum, lat.top());
                self.path.pop();
                ok?;
                Ok(sum)
            }
            Case(scrut, b1, b2) => {
                let ts = self.child(0, scrut, l)?;
                let ts = self.whnf(rule, &ts)?;
                let Sum(s1, s2) = &ts else {
                    return Err(self.mismatch(rule, "scrutinee is not a sum", "_ + _", &ts));
                };
                let r1 = self.branch(rule, 1, b1, s1, l)?;
                let r2 = self.branch(rule, 2, b2, s2, l)?;
                self.path.push(2);
                let conv = self.convert(rule, &r2, &r1);
                self.path.pop();
                conv?;
                Ok(r1)
            }
            _ => Err(self.fail(ErrorKind::NotInFragment, rule, "construct is not part of DDC").found(self.show(a))),
        }
    }

    /// A case branch must be a bottom-graded function from the summand to
    /// a result independent of the argument; returns that result.
    fn branch(&mut self, rule: &'static str, i: u8, b: &Term, summand: &Term, l: Grade) -> Result<Term, TypeError> {
        let bot = self.lat.bot();
        let tb = self.child(i, b, l)?;
        let tb = self.whnf(rule, &tb)?;
        let want = format!("{} -> _", self.show(summand));
        let Term::Pi(g, _, dom, cod) = &tb else {
            return Err(self.mismatch(rule, "case branch is not a function", want, &tb));
        };
        if *g != bot {
            return Err(self.mismatch(rule, "case branch must take its argument at the bottom grade", want, &tb));
        }
        self.path.push(i);
        let r = self.convert(rule, summand, dom).and_then(|()| {
            strengthen(cod, 1)
                .ok_or_else(|| self.fail(ErrorKind::TypeMismatch, rule, "case branch result depends on its argument"))
        });
        self.path.pop();
        r
    }
}
