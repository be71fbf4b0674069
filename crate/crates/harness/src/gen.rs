//! Random generation of well-typed terms by inverting the typing rules.
//!
//! Generators can also produce *twins*: a second term that agrees with
//! the first everywhere an observer at a chosen grade can see, and is
//! generated independently in the positions the observer cannot.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gradia_core::ddc::{ddc_check, DdcConfig};
use gradia_core::sdc::{check_traced, Mode};
use gradia_core::syntax::{shift, strengthen, subst, Binding, Name};
use gradia_core::trace::Trace;
use gradia_core::{Context, Grade, Lattice, PtsSignature, Term};

use crate::enumerate::Fragment;

/// The deterministic RNG for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Clone, Debug)]
pub struct GenConfig {
    pub seed: u64,
    /// Upper bound on AST nodes per generated term.
    pub max_size: usize,
    pub lattice: Lattice,
    pub pts: PtsSignature,
    pub fragment: Fragment,
    pub trials: usize,
    /// Number of assumptions in generated contexts.
    pub free: usize,
}

impl GenConfig {
    pub fn new(fragment: Fragment, lattice: Lattice) -> GenConfig {
        GenConfig { seed: 0, max_size: 40, lattice, pts: PtsSignature::coc(), fragment, trials: 1000, free: 0 }
    }

    pub fn seed(mut self, seed: u64) -> GenConfig {
        self.seed = seed;
        self
    }

    pub fn trials(mut self, trials: usize) -> GenConfig {
        self.trials = trials;
        self
    }

    pub fn free(mut self, free: usize) -> GenConfig {
        self.free = free;
        self
    }

    pub fn max_size(mut self, max_size: usize) -> GenConfig {
        self.max_size = max_size;
        self
    }

    pub fn pts(mut self, pts: PtsSignature) -> GenConfig {
        self.pts = pts;
        self
    }

    pub fn ddc(&self) -> DdcConfig {
        DdcConfig::new(self.lattice.clone(), self.pts.clone())
    }
}

/// A generated judgment `Ω ⊢ term :^level ty`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub ctx: Context,
    pub term: Term,
    pub level: Grade,
    pub ty: Term,
}

/// No acceptable term was found within the retry budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationStuck {
    pub trial: u64,
}

/// A generated term and the variants that differ from it only where the
/// observer cannot look. `others` is empty when nothing was hidden.
#[derive(Clone, Debug)]
pub struct Twin {
    pub a: Term,
    pub others: Vec<Term>,
}

impl Twin {
    pub fn one(a: Term) -> Twin {
        Twin { a, others: Vec::new() }
    }

    pub fn variant(&self, j: usize) -> &Term {
        self.others.get(j).unwrap_or(&self.a)
    }

    fn build(children: Vec<Twin>, f: impl Fn(Vec<Term>) -> Term) -> Twin {
        let n = children.iter().map(|c| c.others.len()).max().unwrap_or(0);
        let others = (0..n).map(|j| f(children.iter().map(|c| c.variant(j).clone()).collect())).collect();
        Twin { a: f(children.into_iter().map(|c| c.a).collect()), others }
    }

    fn split(mut draws: Vec<Twin>) -> Twin {
        let a = draws.remove(0).a;
        Twin { a, others: draws.into_iter().map(|t| t.a).collect() }
    }

    fn max_size(&self) -> usize {
        self.others.iter().chain([&self.a]).map(Term::size).max().unwrap_or(0)
    }
}

const RETRIES: usize = 20;

/// Draws the sample for one trial, retrying a bounded number of times.
pub fn sample(cfg: &GenConfig, trial: u64) -> Result<Sample, GenerationStuck> {
    sample_variants(cfg, trial, None, 0).map(|(s, _)| s)
}

/// Like [`sample`], also returning a partner indistinguishable at
/// `observer`; the sample's level is at most `observer`.
pub fn sample_twin(cfg: &GenConfig, trial: u64, observer: Grade) -> Result<(Sample, Term), GenerationStuck> {
    sample_variants(cfg, trial, Some(observer), 1).map(|(s, mut v)| (s, v.remove(0)))
}

/// `n` partners of the sample, each differing from it only in positions
/// `observer` cannot see. Retries prefer draws where something differs.
pub fn sample_variants(
    cfg: &GenConfig,
    trial: u64,
    observer: Option<Grade>,
    n: usize,
) -> Result<(Sample, Vec<Term>), GenerationStuck> {
    let mut rng = trial_rng(cfg.seed, trial);
    let copies = if observer.is_some() { n } else { 0 };
    let mut fallback = None;
    for _ in 0..RETRIES {
        let found = match cfg.fragment {
            Fragment::Sdc | Fragment::Seal => {
                let mode = if cfg.fragment == Fragment::Sdc { Mode::Sdc } else { Mode::Seal };
                SimpleGen { lat: &cfg.lattice, mode, rng: &mut rng, observer, copies }.sample(cfg)
            }
            Fragment::Ddc | Fragment::DdcPi => {
                let dcfg = cfg.ddc();
                let pi_only = cfg.fragment == Fragment::DdcPi;
                DepGen { cfg: &dcfg, rng: &mut rng, observer, copies, pi_only }.sample(cfg)
            }
        };
        let Some((s, twin)) = found else { continue };
        let differs = twin.others.iter().any(|o| *o != twin.a);
        let variants: Vec<Term> = (0..n).map(|j| twin.variant(j).clone()).collect();
        if differs || copies == 0 {
            return Ok((s, variants));
        }
        fallback.get_or_insert((s, variants));
    }
    fallback.ok_or(GenerationStuck { trial })
}

/// An inhabitant of `ty` at `level` under `ctx`, not re-checked.
pub fn inhabitant(cfg: &GenConfig, ctx: &Context, ty: &Term, level: Grade, rng: &mut ChaCha8Rng) -> Option<Term> {
    let fuel = cfg.max_size / 4;
    match cfg.fragment {
        Fragment::Sdc | Fragment::Seal => {
            let mode = if cfg.fragment == Fragment::Sdc { Mode::Sdc } else { Mode::Seal };
            let mut scope: Vec<(Grade, Term)> = ctx.bindings().iter().map(|b| (b.grade, b.ty.clone())).collect();
            let mut g = SimpleGen { lat: &cfg.lattice, mode, rng, observer: None, copies: 0 };
            Some(g.inhabit(&mut scope, ty, level, fuel).a)
        }
        Fragment::Ddc | Fragment::DdcPi => {
            let dcfg = cfg.ddc();
            let pi_only = cfg.fragment == Fragment::DdcPi;
            let mut g = DepGen { cfg: &dcfg, rng, observer: None, copies: 0, pi_only };
            g.inhabit_trunc(&mut ctx.clone(), ty, level, fuel).map(|t| t.a)
        }
    }
}

/// A closed small type for contexts and substitution instances.
pub fn small_type(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> Term {
    match cfg.fragment {
        Fragment::Sdc | Fragment::Seal => {
            SimpleGen { lat: &cfg.lattice, mode: Mode::Sdc, rng, observer: None, copies: 0 }.simple_type(1)
        }
        Fragment::Ddc | Fragment::DdcPi => {
            let dcfg = cfg.ddc();
            let pi_only = cfg.fragment == Fragment::DdcPi;
            DepGen { cfg: &dcfg, rng, observer: None, copies: 0, pi_only }.small_type(1)
        }
    }
}

/// The first `cfg.trials` samples; stuck trials are skipped.
pub fn gen_well_typed(cfg: &GenConfig) -> Vec<Sample> {
    (0..cfg.trials as u64).filter_map(|t| sample(cfg, t).ok()).collect()
}

fn named(ctx: Vec<(Grade, Term)>) -> Context {
    Context::from_bindings(
        ctx.into_iter()
            .enumerate()
            .map(|(i, (grade, ty))| Binding { name: Name::new(&format!("v{i}")), grade, ty })
            .collect(),
    )
}

struct SimpleGen<'a, 'r> {
    lat: &'a Lattice,
    mode: Mode,
    rng: &'r mut ChaCha8Rng,
    observer: Option<Grade>,
    copies: usize,
}

impl SimpleGen<'_, '_> {
    fn grade(&mut self) -> Grade {
        let gs: Vec<Grade> = self.lat.grades().collect();
        *gs.choose(self.rng).unwrap()
    }

    fn simple_type(&mut self, depth: usize) -> Term {
        if depth == 0 || self.rng.gen_bool(0.4) {
            return Term::UnitTy;
        }
        match self.rng.gen_range(0..4) {
            0 => Term::arrow(self.simple_type(depth - 1), self.simple_type(depth - 1)),
            1 => Term::prod(self.simple_type(depth - 1), self.simple_type(depth - 1)),
            2 => Term::sum(self.simple_type(depth - 1), self.simple_type(depth - 1)),
            _ => {
                let g = self.grade();
                Term::tmonad(g, self.simple_type(depth - 1))
            }
        }
    }

    fn sample(&mut self, cfg: &GenConfig) -> Option<(Sample, Twin)> {
        let below: Vec<Grade> =
            self.lat.grades().filter(|&g| self.observer.map_or(true, |k| self.lat.leq(g, k))).collect();
        let level = *below.choose(self.rng).unwrap();
        let ctx: Vec<(Grade, Term)> = (0..cfg.free).map(|_| (self.grade(), self.simple_type(2))).collect();
        let ty = self.simple_type(3);
        let fuel = cfg.max_size / 2;
        let mut scope = ctx.clone();
        let twin = self.inhabit(&mut scope, &ty, level, fuel);
        if twin.max_size() > cfg.max_size {
            return None;
        }
        let ctx = named(ctx);
        let mut trace = Trace::new();
        let got = check_traced(self.lat, self.mode, &ctx, &twin.a, level, &mut trace).ok()?;
        Some((Sample { ctx, term: twin.a.clone(), level, ty: got }, twin))
    }

    fn hidden(&self, g: Grade) -> bool {
        self.mode == Mode::Sdc && self.observer.is_some_and(|k| !self.lat.leq(g, k))
    }

    fn inhabit(&mut self, ctx: &mut Vec<(Grade, Term)>, ty: &Term, l: Grade, fuel: usize) -> Twin {
        let vars: Vec<usize> = (0..ctx.len())
            .filter(|&i| {
                let (g, t) = &ctx[ctx.len() - 1 - i];
                t == ty && (self.mode == Mode::Seal || self.lat.leq(*g, l))
            })
            .collect();
        if !vars.is_empty() && self.rng.gen_bool(0.35) {
            return Twin::one(Term::Var(*vars.choose(self.rng).unwrap()));
        }
        if fuel >= 4 && self.rng.gen_bool(0.4) {
            return self.eliminate(ctx, ty, l, fuel);
        }
        self.introduce(ctx, ty, l, fuel)
    }

    fn introduce(&mut self, ctx: &mut Vec<(Grade, Term)>, ty: &Term, l: Grade, fuel: usize) -> Twin {
        let fuel = fuel.saturating_sub(1);
        match ty {
            Term::Arrow(a, b) => {
                ctx.push((l, (**a).clone()));
                let body = self.inhabit(ctx, b, l, fuel);
                ctx.pop();
                let a = (**a).clone();
                Twin::build(vec![body], |v| Term::lam("x", a.clone(), v[0].clone()))
            }
            Term::Prod(a, b) => {
                let x = self.inhabit(ctx, a, l, fuel / 2);
                let y = self.inhabit(ctx, b, l, fuel / 2);
                Twin::build(vec![x, y], |v| Term::pair(v[0].clone(), v[1].clone()))
            }
            Term::Sum(a, b) => {
                if self.rng.gen_bool(0.5) {
                    let x = self.inhabit(ctx, a, l, fuel);
                    let b = (**b).clone();
                    Twin::build(vec![x], |v| Term::inj1(b.clone(), v[0].clone()))
                } else {
                    let x = self.inhabit(ctx, b, l, fuel);
                    let a = (**a).clone();
                    Twin::build(vec![x], |v| Term::inj2(a.clone(), v[0].clone()))
                }
            }
            Term::TMonad(g, a) => {
                let k = self.lat.join(l, *g);
                let x = if self.hidden(*g) {
                    let draws = (0..=self.copies).map(|_| self.inhabit(ctx, a, k, fuel)).collect();
                    Twin::split(draws)
                } else {
                    self.inhabit(ctx, a, k, fuel)
                };
                let (g, seal) = (*g, self.mode == Mode::Seal);
                Twin::build(vec![x], |v| if seal { Term::seal(g, v[0].clone()) } else { Term::ret(g, v[0].clone()) })
            }
            _ => Twin::one(Term::UnitTm),
        }
    }

    fn eliminate(&mut self, ctx: &mut Vec<(Grade, Term)>, ty: &Term, l: Grade, fuel: usize) -> Twin {
        let half = fuel / 2;
        match self.rng.gen_range(0..5) {
            0 => {
                let a = self.simple_type(1);
                let f = self.inhabit(ctx, &Term::arrow(a.clone(), ty.clone()), l, half);
                let x = self.inhabit(ctx, &a, l, half);
                Twin::build(vec![f, x], |v| Term::app(v[0].clone(), v[1].clone()))
            }
            1 => {
                let other = self.simple_type(1);
                if self.rng.gen_bool(0.5) {
                    let p = self.inhabit(ctx, &Term::prod(ty.clone(), other), l, fuel - 1);
                    Twin::build(vec![p], |v| Term::proj1(v[0].clone()))
                } else {
                    let p = self.inhabit(ctx, &Term::prod(other, ty.clone()), l, fuel - 1);
                    Twin::build(vec![p], |v| Term::proj2(v[0].clone()))
                }
            }
            2 => {
                let (a1, a2) = (self.simple_type(1), self.simple_type(1));
                let third = fuel / 3;
                let s = self.inhabit(ctx, &Term::sum(a1.clone(), a2.clone()), l, third);
                let b1 = self.inhabit(ctx, &Term::arrow(a1, ty.clone()), l, third);
                let b2 = self.inhabit(ctx, &Term::arrow(a2, ty.clone()), l, third);
                Twin::build(vec![s, b1, b2], |v| Term::case(v[0].clone(), v[1].clone(), v[2].clone()))
            }
            _ if self.mode == Mode::Sdc => {
                let g = self.grade();
                let a = self.simple_type(1);
                let m = self.inhabit(ctx, &Term::tmonad(g, a.clone()), l, half);
                ctx.push((self.lat.join(l, g), a));
                let body = self.inhabit(ctx, ty, l, half);
                ctx.pop();
                Twin::build(vec![m, body], |v| Term::bind(g, "x", v[0].clone(), v[1].clone()))
            }
            _ => {
                let below: Vec<Grade> = self.lat.grades().filter(|&g| self.lat.leq(g, l)).collect();
                let g = *below.choose(self.rng).unwrap();
                let m = self.inhabit(ctx, &Term::tmonad(g, ty.clone()), l, fuel - 1);
                Twin::build(vec![m], |v| Term::unseal(g, v[0].clone()))
            }
        }
    }
}

/// `Π X:^⊤ Type. Π y:^⊥ X. X` inhabitant.
pub fn poly_id(lat: &Lattice, base: &Term) -> Term {
    Term::glam(lat.top(), "X", base.clone(), Term::glam(lat.bot(), "y", Term::Var(0), Term::Var(0)))
}

struct DepGen<'a, 'r> {
    cfg: &'a DdcConfig,
    rng: &'r mut ChaCha8Rng,
    observer: Option<Grade>,
    copies: usize,
    pi_only: bool,
}

impl DepGen<'_, '_> {
    fn lat(&self) -> &Lattice {
        &self.cfg.lattice
    }

    fn base(&self) -> Term {
        Term::Sort(self.cfg.pts.base().clone())
    }

    fn grade(&mut self) -> Grade {
        let gs: Vec<Grade> = self.cfg.lattice.grades().collect();
        *gs.choose(self.rng).unwrap()
    }

    fn hidden(&self, g: Grade) -> bool {
        self.observer.is_some_and(|k| !self.lat().leq(g, k))
    }

    /// A closed type living in the base sort.
    fn small_type(&mut self, depth: usize) -> Term {
        if self.pi_only {
            if depth == 0 || self.rng.gen_bool(0.5) {
                return poly_id_type(self.lat(), &self.base());
            }
            let g = self.grade();
            let (a, b) = (self.small_type(depth - 1), self.small_type(depth - 1));
            return Term::pi(g, "x", a, b);
        }
        if depth == 0 || self.rng.gen_bool(0.4) {
            return Term::UnitTy;
        }
        let g = self.grade();
        let (a, b) = (self.small_type(depth - 1), self.small_type(depth - 1));
        match self.rng.gen_range(0..3) {
            0 => Term::pi(g, "x", a, b),
            1 => Term::sigma(g, "x", a, b),
            _ => Term::sum(a, b),
        }
    }

    /// A closed type for a generated judgment: mostly small types, with
    /// occasional dependent ones.
    fn target_type(&mut self) -> Term {
        let base = self.base();
        match self.rng.gen_range(0..10) {
            0 => base,
            1 => poly_id_type(self.lat(), &base),
            2 if !self.pi_only => {
                let g = self.grade();
                Term::sigma(g, "X", base, Term::Var(0))
            }
            _ => self.small_type(2),
        }
    }

    fn levels(&self) -> Vec<Grade> {
        let lat = self.lat();
        lat.grades().filter(|&g| lat.leq(g, lat.c())).collect()
    }

    fn sample(&mut self, gcfg: &GenConfig) -> Option<(Sample, Twin)> {
        let lat = self.cfg.lattice.clone();
        let levels: Vec<Grade> =
            self.levels().into_iter().filter(|&g| self.observer.map_or(true, |k| lat.leq(g, k))).collect();
        let level = *levels.choose(self.rng).unwrap();
        let mut ctx = Context::new();
        for i in 0..gcfg.free {
            let (g, t) = (self.grade(), self.small_type(1));
            ctx.push(Name::new(&format!("v{i}")), g, t);
        }
        let ty = self.target_type();
        let fuel = gcfg.max_size / 2;
        let mut scope = ctx.clone();
        let twin = self.inhabit(&mut scope, &ty, level, fuel)?;
        if twin.max_size() > gcfg.max_size {
            return None;
        }
        let got = ddc_check(self.cfg, &ctx, &twin.a, level).ok()?;
        for b in &twin.others {
            ddc_check(self.cfg, &ctx, b, level).ok()?;
        }
        Some((Sample { ctx, term: twin.a.clone(), level, ty: got }, twin))
    }

    /// The truncated-at-top judgment, mirrored: a request at `⊤` is served
    /// at `C` under `C ∧ Ω`.
    fn inhabit_trunc(&mut self, ctx: &mut Context, ty: &Term, k: Grade, fuel: usize) -> Option<Twin> {
        let (top, c) = (self.lat().top(), self.lat().c());
        if k == top && c != top {
            let mut cut = ctx.truncated(self.lat(), c);
            self.inhabit(&mut cut, ty, c, fuel)
        } else if self.lat().leq(k, c) {
            self.inhabit(ctx, ty, k, fuel)
        } else {
            None
        }
    }

    fn inhabit(&mut self, ctx: &mut Context, ty: &Term, l: Grade, fuel: usize) -> Option<Twin> {
        let vars: Vec<usize> = (0..ctx.len())
            .filter(|&i| {
                let (g, t) = ctx.lookup(i).unwrap();
                t == *ty && self.lat().leq(g, l)
            })
            .collect();
        if !vars.is_empty() && self.rng.gen_bool(0.4) {
            return Some(Twin::one(Term::Var(*vars.choose(self.rng).unwrap())));
        }
        if fuel >= 4 && self.rng.gen_bool(0.35) {
            if let Some(t) = self.eliminate(ctx, ty, l, fuel) {
                return Some(t);
            }
        }
        match self.introduce(ctx, ty, l, fuel) {
            Some(t) => Some(t),
            None => vars.choose(self.rng).map(|&i| Twin::one(Term::Var(i))),
        }
    }

    fn introduce(&mut self, ctx: &mut Context, ty: &Term, l: Grade, fuel: usize) -> Option<Twin> {
        let fuel = fuel.saturating_sub(1);
        let lat = self.cfg.lattice.clone();
        match ty {
            Term::UnitTy => Some(Twin::one(Term::UnitTm)),
            Term::Sort(s) if s == self.cfg.pts.base() => {
                if fuel >= 3 && !self.pi_only && self.rng.gen_bool(0.15) {
                    let g = self.levels().into_iter().max_by_key(|g| g.id()).unwrap();
                    let inner = self.small_type(1);
                    let id = Term::glam(g, "X", self.base(), Term::Var(0));
                    return Some(Twin::one(Term::gapp(id, inner, g)));
                }
                Some(Twin::one(self.small_type(2)))
            }
            Term::Sort(s) if self.cfg.pts.axiom(self.cfg.pts.base()) == Some(s) => Some(Twin::one(self.base())),
            Term::Pi(g, x, a, b) => {
                ctx.push(x.clone(), lat.join(*g, l), (**a).clone());
                let body = self.inhabit(ctx, b, l, fuel);
                ctx.pop();
                let (g, x, a) = (*g, x.clone(), (**a).clone());
                Some(Twin::build(vec![body?], |v| Term::GLam(g, x.clone(), Box::new(a.clone()), Box::new(v[0].clone()))))
            }
            Term::Sigma(g, _, a, b) if b.has_free(0) => {
                if **a != self.base() {
                    return None;
                }
                let s = self.small_type(1);
                let second = self.inhabit(ctx, &subst(b, &s), l, fuel)?;
                let (g, asc) = (*g, ty.clone());
                Some(Twin::build(vec![second], |v| Term::gpair_as(s.clone(), g, v[0].clone(), asc.clone())))
            }
            Term::Sigma(g, _, a, b) => {
                let k = lat.join(*g, l);
                let first = if self.hidden(*g) {
                    let draws = (0..=self.copies).map(|_| self.inhabit_trunc(ctx, a, k, fuel / 2)).collect::<Option<_>>()?;
                    Twin::split(draws)
                } else {
                    self.inhabit_trunc(ctx, a, k, fuel / 2)?
                };
                let second = self.inhabit(ctx, &strengthen(b, 1)?, l, fuel / 2)?;
                let g = *g;
                Some(Twin::build(vec![first, second], |v| Term::gpair(v[0].clone(), g, v[1].clone())))
            }
            Term::Sum(a, b) => {
                if self.rng.gen_bool(0.5) {
                    let x = self.inhabit(ctx, a, l, fuel)?;
                    let b = (**b).clone();
                    Some(Twin::build(vec![x], |v| Term::inj1(b.clone(), v[0].clone())))
                } else {
                    let x = self.inhabit(ctx, b, l, fuel)?;
                    let a = (**a).clone();
                    Some(Twin::build(vec![x], |v| Term::inj2(a.clone(), v[0].clone())))
                }
            }
            _ => None,
        }
    }

    fn argument(&mut self, ctx: &mut Context, ty: &Term, g: Grade, l: Grade, fuel: usize) -> Option<Twin> {
        let k = self.lat().join(g, l);
        if self.hidden(g) {
            let draws = (0..=self.copies).map(|_| self.inhabit_trunc(ctx, ty, k, fuel)).collect::<Option<_>>()?;
            Some(Twin::split(draws))
        } else {
            self.inhabit_trunc(ctx, ty, k, fuel)
        }
    }

    fn is_small(&self, t: &Term) -> bool {
        t.is_closed() && ddc_check(self.cfg, &Context::new(), t, self.lat().bot()).ok() == Some(self.base())
    }

    fn eliminate(&mut self, ctx: &mut Context, ty: &Term, l: Grade, fuel: usize) -> Option<Twin> {
        let half = fuel / 2;
        let lat = self.cfg.lattice.clone();
        let choice = if self.pi_only { self.rng.gen_range(0..2) } else { self.rng.gen_range(0..5) };
        match choice {
            0 => {
                let g = self.grade();
                let a = self.small_type(1);
                let f = self.inhabit(ctx, &Term::pi(g, "x", a.clone(), shift(ty, 1)), l, half)?;
                let x = self.argument(ctx, &a, g, l, half)?;
                Some(Twin::build(vec![f, x], |v| Term::gapp(v[0].clone(), v[1].clone(), g)))
            }
            1 => {
                if !self.is_small(ty) {
                    return None;
                }
                let x = self.inhabit(ctx, ty, l, fuel - 1)?;
                let id = poly_id(&lat, &self.base());
                let (top, bot, ty) = (lat.top(), lat.bot(), ty.clone());
                Some(Twin::build(vec![x], |v| Term::gapp(Term::gapp(id.clone(), ty.clone(), top), v[0].clone(), bot)))
            }
            2 => {
                let g = self.grade();
                let (a, b) = (self.small_type(1), self.small_type(1));
                let p = self.inhabit(ctx, &Term::sigma(g, "x", a.clone(), b.clone()), l, half)?;
                ctx.push(Name::new("x"), lat.join(g, l), a);
                ctx.push(Name::new("y"), l, shift(&b, 1));
                let body = self.inhabit(ctx, &shift(ty, 2), l, half);
                ctx.pop();
                ctx.pop();
                Some(Twin::build(vec![p, body?], |v| Term::let_pair(g, "x", "y", v[0].clone(), v[1].clone())))
            }
            3 => {
                let (a1, a2) = (self.small_type(1), self.small_type(1));
                let third = fuel / 3;
                let s = self.inhabit(ctx, &Term::sum(a1.clone(), a2.clone()), l, third)?;
                let bot = lat.bot();
                let b1 = self.inhabit(ctx, &Term::pi(bot, "x", a1, shift(ty, 1)), l, third)?;
                let b2 = self.inhabit(ctx, &Term::pi(bot, "x", a2, shift(ty, 1)), l, third)?;
                Some(Twin::build(vec![s, b1, b2], |v| Term::case(v[0].clone(), v[1].clone(), v[2].clone())))
            }
            _ => {
                if !self.is_small(ty) {
                    return None;
                }
                let g = self.grade();
                let redex = Term::gapp(Term::glam(g, "X", self.base(), Term::Var(0)), ty.clone(), g);
                let x = self.inhabit(ctx, ty, l, fuel - 1)?;
                let bot = lat.bot();
                let cast = Term::glam(bot, "y", redex, Term::Var(0));
                Some(Twin::build(vec![x], |v| Term::gapp(cast.clone(), v[0].clone(), bot)))
            }
        }
    }
}

/// `Π X:^⊤ base. Π y:^⊥ X. X`.
pub fn poly_id_type(lat: &Lattice, base: &Term) -> Term {
    Term::pi(lat.top(), "X", base.clone(), Term::pi(lat.bot(), "y", Term::Var(0), Term::Var(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_deterministic() {
        let cfg = GenConfig::new(Fragment::Sdc, Lattice::low_medium_high()).seed(7);
        assert_eq!(sample(&cfg, 3), sample(&cfg, 3));
    }

    #[test]
    fn ddc_samples_recheck() {
        let cfg = GenConfig::new(Fragment::Ddc, Lattice::irrelevance()).seed(1).trials(50);
        let dcfg = cfg.ddc();
        let got = gen_well_typed(&cfg);
        assert!(got.len() > 40);
        for s in got {
            assert!(ddc_check(&dcfg, &s.ctx, &s.term, s.level).is_ok());
        }
    }
}
