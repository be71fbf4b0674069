//! The property suites. Each suite draws instances from the generators or
//! the enumerator, checks one metatheorem on each, and summarises the
//! outcome in a [`Report`].

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use gradia_core::ddc::{ddc_check, ddc_indist, ddc_step, erase, whnf, DdcConfig};
use gradia_core::equality::{consistent, def_eq, head_form, par_step, Verdict, DEFAULT_FUEL};
use gradia_core::sdc::{full_step, sdc_check, sdc_indist, sdc_step, seal_check};
use gradia_core::syntax::{print_in, shift_from, subst, Binding, Name};
use gradia_core::translate::{ddc_to_icc, icc_normalize, icc_star_erase, sdc_to_ddct, seal_to_sdc};
use gradia_core::{ddc, sdc, Context, Grade, GradeContext, Lattice, Term};

use crate::enumerate::{enumerate_terms, Fragment};
use crate::gen::{inhabitant, sample, sample_twin, sample_variants, small_type, trial_rng, GenConfig};
use crate::oracle::Oracle;
use crate::report::{Counterexample, Outcome, Report};
use crate::shrink::shrink;

/// Steps taken in tandem before a trajectory is cut off.
pub const MAX_STEPS: usize = 100;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Noninterference,
    Erasure,
    Preservation,
    Progress,
    Subsumption,
    Narrowing,
    Upgrading,
    Weakening,
    Substitution,
    TranslationSim,
    DefeqConsistency,
    IndistEquivalence,
    OracleAgreement,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Noninterference,
        Suite::Erasure,
        Suite::Preservation,
        Suite::Progress,
        Suite::Subsumption,
        Suite::Narrowing,
        Suite::Upgrading,
        Suite::Weakening,
        Suite::Substitution,
        Suite::TranslationSim,
        Suite::DefeqConsistency,
        Suite::IndistEquivalence,
        Suite::OracleAgreement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Noninterference => "noninterference",
            Suite::Erasure => "erasure",
            Suite::Preservation => "preservation",
            Suite::Progress => "progress",
            Suite::Subsumption => "subsumption",
            Suite::Narrowing => "narrowing",
            Suite::Upgrading => "upgrading",
            Suite::Weakening => "weakening",
            Suite::Substitution => "substitution",
            Suite::TranslationSim => "translation-sim",
            Suite::DefeqConsistency => "defeq-consistency",
            Suite::IndistEquivalence => "indist-equivalence",
            Suite::OracleAgreement => "oracle-agreement",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

/// Runs `suite` under `cfg`. Trials run in parallel; the report only
/// depends on `(suite, cfg)`.
///
/// Exhaustive suites (`translation-sim`, `oracle-agreement`) take
/// `cfg.max_size` as the enumeration bound, capped at 6 and 7.
pub fn run_suite(suite: Suite, cfg: &GenConfig) -> Report {
    let start = Instant::now();
    let mut report = match suite {
        Suite::TranslationSim => translation_sim(&cfg.lattice, cfg.max_size.min(6)),
        Suite::OracleAgreement => oracle_agreement(&cfg.lattice, cfg.max_size.min(7), &default_oracle_contexts(&cfg.lattice)),
        _ => {
            let calc = Calc::new(cfg);
            let results: Vec<(Outcome, Vec<&'static str>)> =
                (0..cfg.trials as u64).into_par_iter().map(|t| calc.trial(suite, t)).collect();
            let mut report = Report::new(suite.name(), cfg.fragment.name(), cfg.seed);
            let mut tags: BTreeMap<&str, usize> = BTreeMap::new();
            for (outcome, ts) in results {
                report.record(outcome);
                for t in ts {
                    *tags.entry(t).or_default() += 1;
                }
            }
            for (k, v) in tags {
                report.stat(k, v);
            }
            report
        }
    };
    report.seed = cfg.seed;
    report.wall = start.elapsed();
    report
}

/// The calculus under test, as selected by the fragment.
struct Calc<'a> {
    cfg: &'a GenConfig,
    dcfg: DdcConfig,
}

type Trial = (Outcome, Vec<&'static str>);

impl<'a> Calc<'a> {
    fn new(cfg: &'a GenConfig) -> Calc<'a> {
        Calc { cfg, dcfg: cfg.ddc() }
    }

    fn lat(&self) -> &Lattice {
        &self.cfg.lattice
    }

    fn dependent(&self) -> bool {
        matches!(self.cfg.fragment, Fragment::Ddc | Fragment::DdcPi)
    }

    fn check(&self, ctx: &Context, a: &Term, l: Grade) -> Option<Term> {
        match self.cfg.fragment {
            Fragment::Sdc => sdc_check(self.lat(), ctx, a, l).ok(),
            Fragment::Seal => seal_check(self.lat(), ctx, a, l).ok(),
            Fragment::Ddc | Fragment::DdcPi => ddc_check(&self.dcfg, ctx, a, l).ok(),
        }
    }

    /// Checks `a` at `l`, serving `⊤` at `C` under the truncated context
    /// when `⊤` lies above `C`.
    fn check_at(&self, ctx: &Context, a: &Term, l: Grade) -> Option<Term> {
        let lat = self.lat();
        if self.dependent() && !lat.leq(l, lat.c()) {
            if l != lat.top() {
                return None;
            }
            return self.check(&ctx.truncated(lat, lat.c()), a, lat.c());
        }
        self.check(ctx, a, l)
    }

    fn step(&self, a: &Term) -> Option<Term> {
        if self.dependent() {
            ddc_step(self.lat(), a)
        } else {
            sdc_step(a)
        }
    }

    fn is_value(&self, a: &Term) -> bool {
        if self.dependent() {
            ddc::is_value(a)
        } else {
            sdc::is_value(a)
        }
    }

    fn indist(&self, phi: &GradeContext, a: &Term, b: &Term, k: Grade) -> bool {
        if self.dependent() {
            ddc_indist(self.lat(), phi, a, b, k)
        } else {
            sdc_indist(self.lat(), phi, a, b, k)
        }
    }

    /// The grades an observer sees for `ctx`. Sealing contexts are
    /// ungraded: every assumption sits at the judgment level.
    fn phi(&self, ctx: &Context, level: Grade) -> GradeContext {
        if self.cfg.fragment == Fragment::Seal {
            GradeContext::from_grades(vec![level; ctx.len()])
        } else {
            ctx.grades()
        }
    }

    fn same_type(&self, ctx: &Context, a: &Term, b: &Term) -> bool {
        if a == b {
            return true;
        }
        if !self.dependent() {
            return false;
        }
        let lat = self.lat();
        let phi = ctx.grades().truncated(lat, lat.c());
        def_eq(lat, &phi, a, b, lat.c(), DEFAULT_FUEL).verdict == Verdict::Equal
    }

    fn print(&self, ctx: &Context, t: &Term) -> String {
        print_in(t, self.lat(), &ctx.names())
    }

    fn print_ctx(&self, ctx: &Context) -> String {
        let mut names = Vec::new();
        let mut parts = Vec::new();
        for b in ctx.bindings() {
            parts.push(format!("{}:^{} {}", b.name.as_str(), self.lat().name(b.grade), print_in(&b.ty, self.lat(), &names)));
            names.push(b.name.clone());
        }
        format!("[{}]", parts.join(", "))
    }

    /// A failure, shrunk under `fails` and printed.
    fn failure(
        &self,
        trial: u64,
        property: &str,
        ctx: &Context,
        terms: Vec<Term>,
        detail: String,
        fails: impl Fn(&[Term]) -> bool,
    ) -> Outcome {
        let terms = if fails(&terms) { shrink(terms, fails) } else { terms };
        let mut printed: Vec<String> = terms.iter().map(|t| self.print(ctx, t)).collect();
        if !ctx.is_empty() {
            printed.insert(0, format!("context {}", self.print_ctx(ctx)));
        }
        Outcome::Fail(Counterexample { trial, property: property.to_string(), terms: printed, detail })
    }

    /// A grade for the observer of trial `t`. Without `allow_top` the top
    /// grade is avoided when the lattice has anything else.
    fn observer(&self, t: u64, allow_top: bool) -> Grade {
        let mut rng = trial_rng(self.cfg.seed ^ 0x5eed_0b5e, t);
        let lat = self.lat();
        let gs: Vec<Grade> = lat.grades().filter(|&g| allow_top || g != lat.top() || lat.size() == 1).collect();
        *gs.choose(&mut rng).unwrap()
    }

    fn trial(&self, suite: Suite, t: u64) -> Trial {
        match suite {
            Suite::Noninterference => self.noninterference(t),
            Suite::Erasure | Suite::DefeqConsistency if !self.dependent() => (Outcome::Skip, vec![]),
            Suite::Erasure => self.erasure(t),
            Suite::Preservation => self.preservation(t, true),
            Suite::Progress => self.preservation(t, false),
            Suite::Subsumption | Suite::Narrowing | Suite::Upgrading | Suite::Weakening | Suite::Substitution => {
                self.mutation(suite, t)
            }
            Suite::DefeqConsistency => self.defeq_consistency(t),
            Suite::IndistEquivalence => self.indist_equivalence(t),
            Suite::TranslationSim | Suite::OracleAgreement => (Outcome::Skip, vec![]),
        }
    }

    /// Steps the pair in tandem; the error names the first violation.
    fn tandem(&self, phi: &GradeContext, a: &Term, b: &Term, k: Grade) -> Result<usize, String> {
        let (mut a, mut b) = (a.clone(), b.clone());
        for n in 0..MAX_STEPS {
            match (self.step(&a), self.step(&b)) {
                (Some(a2), Some(b2)) => {
                    if !self.indist(phi, &a2, &b2, k) {
                        return Err(format!("reducts after step {} are distinguishable", n + 1));
                    }
                    (a, b) = (a2, b2);
                }
                (None, None) => return Ok(n),
                _ => return Err(format!("only one side steps at step {}", n + 1)),
            }
        }
        Ok(MAX_STEPS)
    }

    fn noninterference(&self, t: u64) -> Trial {
        let k = self.observer(t, false);
        let Ok((s, b)) = sample_twin(self.cfg, t, k) else { return (Outcome::Stuck, vec![]) };
        let phi = self.phi(&s.ctx, s.level);
        let differs = if s.term != b { "distinct-pair" } else { "equal-pair" };
        let pre = |ts: &[Term]| {
            self.check(&s.ctx, &ts[0], s.level).is_some()
                && self.check(&s.ctx, &ts[1], s.level).is_some()
                && self.indist(&phi, &ts[0], &ts[1], k)
        };
        if !self.indist(&phi, &s.term, &b, k) {
            let detail = format!("observer {}", self.lat().name(k));
            let fails = |ts: &[Term]| {
                self.check(&s.ctx, &ts[0], s.level).is_some()
                    && self.check(&s.ctx, &ts[1], s.level).is_some()
                    && !self.indist(&phi, &ts[0], &ts[1], k)
            };
            let out = self.failure(t, "generated twins are indistinguishable", &s.ctx, vec![s.term, b], detail, fails);
            return (out, vec![differs]);
        }
        match self.tandem(&phi, &s.term, &b, k) {
            Ok(_) => (Outcome::Pass, vec![differs]),
            Err(e) => {
                let detail = format!("observer {}: {e}", self.lat().name(k));
                let fails = |ts: &[Term]| pre(ts) && self.tandem(&phi, &ts[0], &ts[1], k).is_err();
                (self.failure(t, "non-interference", &s.ctx, vec![s.term, b], detail, fails), vec![differs])
            }
        }
    }

    /// The erasure square, checked along the reduction sequence.
    fn erasure_simulation(&self, a: &Term, l: Grade) -> Result<(), String> {
        let lat = self.lat();
        let mut cur = a.clone();
        for n in 0..MAX_STEPS {
            let e = erase(lat, &cur, l);
            if self.is_value(&cur) != self.is_value(&e) {
                return Err(format!("value status differs after {n} steps"));
            }
            let next = self.step(&cur);
            if self.step(&e) != next.as_ref().map(|x| erase(lat, x, l)) {
                return Err(format!("square fails at step {}", n + 1));
            }
            match next {
                Some(x) => cur = x,
                None => return Ok(()),
            }
        }
        Ok(())
    }

    fn erasure(&self, t: u64) -> Trial {
        let l = self.observer(t, true);
        let Ok((s, b)) = sample_twin(self.cfg, t, l) else { return (Outcome::Stuck, vec![]) };
        let lat = self.lat();
        let phi = self.phi(&s.ctx, s.level);
        let typed = |a: &Term| self.check(&s.ctx, a, s.level).is_some();
        let detail = format!("erased at {}", lat.name(l));
        if !ddc_indist(lat, &phi, &s.term, &erase(lat, &s.term, l), l) {
            let fails = |ts: &[Term]| typed(&ts[0]) && !ddc_indist(lat, &phi, &ts[0], &erase(lat, &ts[0], l), l);
            return (self.failure(t, "erasure indistinguishability", &s.ctx, vec![s.term], detail, fails), vec![]);
        }
        if ddc_indist(lat, &phi, &s.term, &b, l) {
            if erase(lat, &s.term, l) != erase(lat, &b, l) {
                let fails = |ts: &[Term]| {
                    typed(&ts[0])
                        && typed(&ts[1])
                        && ddc_indist(lat, &phi, &ts[0], &ts[1], l)
                        && erase(lat, &ts[0], l) != erase(lat, &ts[1], l)
                };
                return (self.failure(t, "canonical element", &s.ctx, vec![s.term, b], detail, fails), vec![]);
            }
        } else {
            let fails = |ts: &[Term]| typed(&ts[0]) && typed(&ts[1]) && !ddc_indist(lat, &phi, &ts[0], &ts[1], l);
            return (
                self.failure(t, "generated twins are indistinguishable", &s.ctx, vec![s.term, b], detail, fails),
                vec![],
            );
        }
        if let Err(e) = self.erasure_simulation(&s.term, l) {
            let fails = |ts: &[Term]| typed(&ts[0]) && self.erasure_simulation(&ts[0], l).is_err();
            return (self.failure(t, "erasure simulation", &s.ctx, vec![s.term], format!("{detail}: {e}"), fails), vec![]);
        }
        (Outcome::Pass, vec![])
    }

    /// Follows the reduction sequence, re-checking each reduct.
    fn trajectory(&self, ctx: &Context, a: &Term, l: Grade, ty: &Term, preservation: bool) -> Result<usize, String> {
        let mut cur = a.clone();
        for n in 0..MAX_STEPS {
            match self.step(&cur) {
                Some(next) => {
                    if preservation {
                        match self.check(ctx, &next, l) {
                            Some(ty2) if self.same_type(ctx, ty, &ty2) => {}
                            Some(ty2) => return Err(format!("step {} changes the type to {}", n + 1, self.print(ctx, &ty2))),
                            None => return Err(format!("reduct {} is ill-typed", n + 1)),
                        }
                    }
                    cur = next;
                }
                None if self.is_value(&cur) || preservation => return Ok(n),
                None => return Err(format!("stuck after {n} steps at {}", self.print(ctx, &cur))),
            }
        }
        Ok(MAX_STEPS)
    }

    /// Progress is only claimed for closed terms, so its samples have an
    /// empty context.
    fn preservation(&self, t: u64, preservation: bool) -> Trial {
        let cfg = if preservation { self.cfg.clone() } else { self.cfg.clone().free(0) };
        let Ok(s) = sample(&cfg, t) else { return (Outcome::Stuck, vec![]) };
        match self.trajectory(&s.ctx, &s.term, s.level, &s.ty, preservation) {
            Ok(n) if n == MAX_STEPS => (Outcome::Pass, vec!["cut-off"]),
            Ok(_) => (Outcome::Pass, vec![]),
            Err(e) => {
                let fails = |ts: &[Term]| match self.check(&s.ctx, &ts[0], s.level) {
                    Some(ty) => self.trajectory(&s.ctx, &ts[0], s.level, &ty, preservation).is_err(),
                    None => false,
                };
                let name = if preservation { "preservation" } else { "progress" };
                (self.failure(t, name, &s.ctx, vec![s.term], e, fails), vec![])
            }
        }
    }

    fn mutation(&self, suite: Suite, t: u64) -> Trial {
        let cfg = self.cfg.clone().free(self.cfg.free.max(2));
        let Ok(s) = sample(&cfg, t) else { return (Outcome::Stuck, vec![]) };
        let mut rng = trial_rng(cfg.seed ^ 0x0d1f_fe2e, t);
        let lat = self.lat();
        let n = s.ctx.len();
        let pick = |rng: &mut rand_chacha::ChaCha8Rng, pred: &dyn Fn(Grade) -> bool| -> Option<Grade> {
            let gs: Vec<Grade> = lat.grades().filter(|&g| pred(g)).collect();
            gs.choose(rng).copied()
        };
        let regrade = |i: usize, g: Grade| {
            let mut ctx = s.ctx.clone();
            ctx.bindings_mut()[i].grade = g;
            ctx
        };
        type Map = Box<dyn Fn(&Term) -> Term + Sync>;
        let keep: Map = Box::new(|t: &Term| t.clone());
        // The mutated context and level, and the map applied to the term
        // and its type.
        let instance: Option<(Context, Grade, Map, String)> = match suite {
            Suite::Narrowing => {
                let i = rng.gen_range(0..n);
                let g0 = s.ctx.bindings()[i].grade;
                let g = pick(&mut rng, &|g| lat.leq(g, g0)).unwrap();
                let what = format!("binding {i} lowered from {} to {}", lat.name(g0), lat.name(g));
                Some((regrade(i, g), s.level, keep, what))
            }
            Suite::Upgrading => {
                let i = rng.gen_range(0..n);
                let g0 = s.ctx.bindings()[i].grade;
                let l1 = pick(&mut rng, &|g| lat.leq(g, s.level)).unwrap();
                let g = lat.join(g0, l1);
                let what = format!("binding {i} raised from {} to {}", lat.name(g0), lat.name(g));
                Some((regrade(i, g), s.level, keep, what))
            }
            Suite::Subsumption => {
                let dep = self.dependent();
                let k = pick(&mut rng, &|g| lat.leq(s.level, g) && (!dep || lat.leq(g, lat.c()))).unwrap();
                let what = format!("level raised from {} to {}", lat.name(s.level), lat.name(k));
                Some((s.ctx.clone(), k, keep, what))
            }
            Suite::Weakening => {
                let p = rng.gen_range(0..=n);
                let g = pick(&mut rng, &|_| true).unwrap();
                let ty = small_type(&cfg, &mut rng);
                let mut bindings = s.ctx.bindings().to_vec();
                for (q, b) in bindings.iter_mut().enumerate().skip(p) {
                    b.ty = shift_from(&b.ty, 1, q - p);
                }
                bindings.insert(p, Binding { name: Name::new("w"), grade: g, ty });
                let cut = n - p;
                let what = format!("assumption inserted at position {p}");
                Some((Context::from_bindings(bindings), s.level, Box::new(move |t: &Term| shift_from(t, 1, cut)) as Map, what))
            }
            Suite::Substitution => {
                let mut prefix = s.ctx.clone();
                let last = prefix.pop().unwrap();
                // Sealing contexts are ungraded: the value lives at the judgment's level.
                let g0 = if cfg.fragment == Fragment::Seal { s.level } else { last.grade };
                match inhabitant(&cfg, &prefix, &last.ty, g0, &mut rng) {
                    Some(v) if self.check_at(&prefix, &v, g0).is_some_and(|ty| self.same_type(&prefix, &ty, &last.ty)) => {
                        let what = format!("innermost assumption replaced by {}", self.print(&prefix, &v));
                        Some((prefix, s.level, Box::new(move |t: &Term| subst(t, &v)) as Map, what))
                    }
                    _ => None,
                }
            }
            _ => None,
        };
        let Some((ctx, l, map, what)) = instance else { return (Outcome::Skip, vec![]) };
        let holds = |a: &Term| match self.check(&s.ctx, a, s.level) {
            Some(ty) => Some(self.check(&ctx, &map(a), l).is_some_and(|got| self.same_type(&ctx, &got, &map(&ty)))),
            None => None,
        };
        if holds(&s.term) == Some(true) {
            return (Outcome::Pass, vec![]);
        }
        let detail = format!("{what}; level {}; expected type {}", lat.name(l), self.print(&ctx, &map(&s.ty)));
        let fails = |ts: &[Term]| holds(&ts[0]) == Some(false);
        (self.failure(t, suite.name(), &s.ctx, vec![s.term.clone()], detail, fails), vec![])
    }

    fn defeq_consistency(&self, t: u64) -> Trial {
        let lat = self.lat();
        let c = lat.c();
        let (ctx, a, b, kind) = match t % 4 {
            0 | 1 => {
                let Ok((s, b)) = sample_twin(self.cfg, t, c) else { return (Outcome::Stuck, vec![]) };
                if t % 4 == 0 {
                    (s.ctx, s.term, b, "twin-terms")
                } else {
                    let Some(tb) = self.check(&s.ctx, &b, s.level) else { return (Outcome::Skip, vec![]) };
                    (s.ctx, s.ty, tb, "twin-types")
                }
            }
            2 => {
                let other = self.cfg.clone().seed(self.cfg.seed.wrapping_add(1));
                let (Ok(s1), Ok(s2)) = (sample(self.cfg, t), sample(&other, t)) else { return (Outcome::Stuck, vec![]) };
                if !s1.ctx.is_empty() || !s2.ctx.is_empty() {
                    return (Outcome::Skip, vec![]);
                }
                (s1.ctx, s1.ty, s2.ty, "independent-types")
            }
            _ => {
                let Ok(s) = sample(self.cfg, t) else { return (Outcome::Stuck, vec![]) };
                let mut rng = trial_rng(self.cfg.seed ^ 0xdefe_0001, t);
                let gs: Vec<Grade> = lat.grades().filter(|&g| lat.leq(g, c)).collect();
                let g = *gs.choose(&mut rng).unwrap();
                let id = Term::glam(g, "x", s.ty.clone(), Term::Var(0));
                (s.ctx, s.term.clone(), Term::gapp(id, s.term, g), "beta-expansion")
            }
        };
        let phi = ctx.grades().truncated(lat, c);
        let r = def_eq(lat, &phi, &a, &b, c, DEFAULT_FUEL);
        let verdict = match r.verdict {
            Verdict::Equal => "equal",
            Verdict::NotEqual => "not-equal",
            Verdict::FuelExhausted => "fuel-exhausted",
        };
        let tags = vec![verdict, kind];
        match r.verdict {
            Verdict::FuelExhausted => {
                let fails = |ts: &[Term]| def_eq(lat, &phi, &ts[0], &ts[1], c, DEFAULT_FUEL).verdict == Verdict::FuelExhausted;
                (self.failure(t, "def_eq terminates within fuel", &ctx, vec![a, b], kind.to_string(), fails), tags)
            }
            Verdict::Equal => {
                let clash = |x: &Term, y: &Term| match (whnf(&self.dcfg, x), whnf(&self.dcfg, y)) {
                    (Ok(x), Ok(y)) => head_form(&x).is_some() && head_form(&y).is_some() && !consistent(&x, &y),
                    _ => false,
                };
                if clash(&a, &b) {
                    let fails = |ts: &[Term]| {
                        def_eq(lat, &phi, &ts[0], &ts[1], c, DEFAULT_FUEL).verdict == Verdict::Equal && clash(&ts[0], &ts[1])
                    };
                    return (self.failure(t, "consistency of head forms", &ctx, vec![a, b], kind.to_string(), fails), tags);
                }
                (Outcome::Pass, tags)
            }
            Verdict::NotEqual => (Outcome::Pass, tags),
        }
    }

    fn indist_equivalence(&self, t: u64) -> Trial {
        let k = self.observer(t, false);
        let Ok((s, vs)) = sample_variants(self.cfg, t, Some(k), 2) else { return (Outcome::Stuck, vec![]) };
        let phi = self.phi(&s.ctx, s.level);
        let (a, b, c) = (&s.term, &vs[0], &vs[1]);
        let ind = |x: &Term, y: &Term| self.indist(&phi, x, y, k);
        let detail = format!("observer {}", self.lat().name(k));
        let typed = |ts: &[Term]| ts.iter().all(|x| self.check(&s.ctx, x, s.level).is_some());
        let props: [(&str, &dyn Fn(&[Term]) -> bool); 4] = [
            ("reflexivity on well-typed terms", &|ts| !ind(&ts[0], &ts[0])),
            ("symmetry", &|ts| ind(&ts[0], &ts[1]) != ind(&ts[1], &ts[0])),
            ("transitivity", &|ts| ind(&ts[0], &ts[1]) && ind(&ts[1], &ts[2]) && !ind(&ts[0], &ts[2])),
            ("generated variants are indistinguishable", &|ts| !ind(&ts[0], &ts[1]) || !ind(&ts[0], &ts[2])),
        ];
        let inst = vec![a.clone(), b.clone(), c.clone()];
        for (name, broken) in props {
            if broken(&inst) {
                let fails = |ts: &[Term]| typed(ts) && broken(ts);
                return (self.failure(t, name, &s.ctx, inst, detail, fails), vec![]);
            }
        }
        (Outcome::Pass, vec![])
    }
}

/// Exhaustive translation checks on closed terms up to `bound` nodes:
/// sealing into SDC, SDC into DDC with `C = ⊤`, and the Π-fragment into
/// ICC* under the lattice's own `C`.
pub fn translation_sim(lat: &Lattice, bound: usize) -> Report {
    let start = Instant::now();
    let mut report = Report::new("translation-sim", "seal+sdc+ddc-pi", 0);
    report.absorb(seal_to_sdc_suite(lat, bound));
    report.absorb(sdc_to_ddct_suite(lat, bound));
    report.absorb(ddc_to_icc_suite(lat, bound));
    report.wall = start.elapsed();
    report
}

fn record_all(report: &mut Report, outcomes: Vec<Outcome>) {
    for o in outcomes {
        report.record(o);
    }
}

fn cx(trial: usize, property: &str, terms: Vec<String>, detail: String) -> Outcome {
    Outcome::Fail(Counterexample { trial: trial as u64, property: property.to_string(), terms, detail })
}

fn print(lat: &Lattice, t: &Term) -> String {
    print_in(t, lat, &[])
}

/// Typing preservation and full-reduction simulation for the sealing
/// translation.
pub fn seal_to_sdc_suite(lat: &Lattice, bound: usize) -> Report {
    let mut report = Report::new("seal-to-sdc", "seal", 0);
    let terms = enumerate_terms(Fragment::Seal, lat, &[], bound, 0);
    let ctx = Context::new();
    let outcomes: Vec<Outcome> = terms
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let tr = seal_to_sdc(a);
            for l in lat.grades() {
                if let Ok(ty) = seal_check(lat, &ctx, a, l) {
                    let got = sdc_check(lat, &ctx, &tr, l).ok();
                    if got.as_ref() != Some(&ty) {
                        let detail = format!("level {}, source type {}", lat.name(l), print(lat, &ty));
                        return cx(i, "typing preservation", vec![print(lat, a), print(lat, &tr)], detail);
                    }
                }
            }
            let src: Vec<Term> = full_step(a).iter().map(seal_to_sdc).collect();
            let tgt = full_step(&tr);
            if let Some(r) = src.iter().find(|r| !tgt.contains(r)) {
                return cx(i, "forward simulation", vec![print(lat, a), print(lat, r)], "reduct not reached".into());
            }
            if let Some(r) = tgt.iter().find(|r| !src.contains(r)) {
                return cx(i, "backward simulation", vec![print(lat, a), print(lat, r)], "reduct without source".into());
            }
            Outcome::Pass
        })
        .collect();
    record_all(&mut report, outcomes);
    report.stat("terms", terms.len());
    report
}

/// Typing preservation and lock-step call-by-name simulation for the
/// translation of SDC into DDC with `C = ⊤`.
pub fn sdc_to_ddct_suite(lat: &Lattice, bound: usize) -> Report {
    let mut report = Report::new("sdc-to-ddct", "sdc", 0);
    let top = lat.with_c(lat.top());
    let dcfg = DdcConfig::new(top.clone(), gradia_core::PtsSignature::coc());
    let terms = enumerate_terms(Fragment::Sdc, lat, &[], bound, 0);
    let ctx = Context::new();
    let outcomes: Vec<Outcome> = terms
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let mut typed = false;
            for l in lat.grades() {
                let Ok(ty) = sdc_check(lat, &ctx, a, l) else { continue };
                typed = true;
                let want = sdc_to_ddct(&top, &ty);
                let tr = sdc_to_ddct(&top, a);
                match ddc_check(&dcfg, &ctx, &tr, l) {
                    Ok(got) if got == want => {}
                    Ok(got) if def_eq(&top, &GradeContext::new(), &got, &want, top.top(), DEFAULT_FUEL).verdict == Verdict::Equal => {}
                    other => {
                        let detail = match other {
                            Ok(got) => format!("level {}: got {}, want {}", lat.name(l), print(&top, &got), print(&top, &want)),
                            Err(e) => format!("level {}: {e}", lat.name(l)),
                        };
                        return cx(i, "typing preservation", vec![print(lat, a), print(&top, &tr)], detail);
                    }
                }
            }
            if !typed {
                return Outcome::Skip;
            }
            let mut cur = a.clone();
            for n in 0..MAX_STEPS {
                let next = sdc_step(&cur);
                let tr = sdc_to_ddct(&top, &cur);
                if ddc_step(&top, &tr) != next.as_ref().map(|x| sdc_to_ddct(&top, x)) {
                    let detail = format!("diverges at step {}", n + 1);
                    return cx(i, "call-by-name bisimulation", vec![print(lat, a), print(lat, &cur)], detail);
                }
                if sdc::is_value(&cur) != ddc::is_value(&tr) {
                    return cx(i, "value correspondence", vec![print(lat, a), print(lat, &cur)], String::new());
                }
                match next {
                    Some(x) => cur = x,
                    None => break,
                }
            }
            Outcome::Pass
        })
        .collect();
    record_all(&mut report, outcomes);
    report.stat("terms", terms.len());
    report
}

/// For well-typed Π-fragment terms `a` with `a ⇒_C b` and `a ≠ b`, the
/// `*`-erased ICC translations of `a` and `b` have the same β-normal
/// form.
///
/// Terms are typed with `Type : Type`: under the stratified signature no
/// closed well-typed redex fits in six nodes.
pub fn ddc_to_icc_suite(lat: &Lattice, bound: usize) -> Report {
    let mut report = Report::new("ddc-to-icc", "ddc-pi", 0);
    let pts = gradia_core::PtsSignature::type_in_type();
    let dcfg = DdcConfig::new(lat.clone(), pts.clone());
    let terms = enumerate_terms(Fragment::DdcPi, lat, pts.sorts(), bound, 0);
    let ctx = Context::new();
    let c = lat.c();
    let levels: Vec<Grade> = lat.grades().filter(|&g| lat.leq(g, c)).collect();
    let outcomes: Vec<Outcome> = terms
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            if !levels.iter().any(|&l| ddc_check(&dcfg, &ctx, a, l).is_ok()) {
                return Outcome::Skip;
            }
            let b = par_step(lat, a, c);
            if b == *a {
                return Outcome::Skip;
            }
            let norm = |t: &Term| ddc_to_icc(lat, t).ok().and_then(|x| icc_normalize(&icc_star_erase(&x), 10_000));
            let (na, nb) = (norm(a), norm(&b));
            if na.is_none() || na != nb {
                let show = |n: &Option<gradia_core::translate::IccTerm>| {
                    n.as_ref().map(gradia_core::translate::print_icc).unwrap_or_else(|| "no normal form".into())
                };
                let detail = format!("{} vs {}", show(&na), show(&nb));
                return cx(i, "beta correspondence", vec![print(lat, a), print(lat, &b)], detail);
            }
            Outcome::Pass
        })
        .collect();
    record_all(&mut report, outcomes);
    report.stat("terms", terms.len());
    report
}

/// The contexts the oracle comparison runs under: the empty one and a
/// handful with one or two assumptions at the bottom and top grades.
pub fn default_oracle_contexts(lat: &Lattice) -> Vec<Context> {
    let (lo, hi) = (lat.bot(), lat.top());
    let unit = Term::UnitTy;
    vec![
        Context::new(),
        Context::new().with("x", lo, unit.clone()),
        Context::new().with("x", hi, unit.clone()),
        Context::new().with("x", lo, Term::arrow(unit.clone(), unit.clone())),
        Context::new().with("x", hi, Term::tmonad(hi, unit.clone())),
        Context::new().with("x", hi, unit.clone()).with("y", lo, unit.clone()),
        Context::new().with("x", lo, Term::sum(unit.clone(), unit.clone())).with("y", hi, Term::tmonad(hi, unit)),
    ]
}

/// Compares the SDC checker with the proof-search oracle on every term up
/// to `bound` nodes, at every level, under each context.
pub fn oracle_agreement(lat: &Lattice, bound: usize, contexts: &[Context]) -> Report {
    let start = Instant::now();
    let mut report = Report::new("oracle-agreement", "sdc", 0);
    let mut index = 0usize;
    for ctx in contexts {
        let terms = enumerate_terms(Fragment::Sdc, lat, &[], bound, ctx.len());
        let outcomes: Vec<Outcome> = terms
            .par_iter()
            .enumerate()
            .map_init(
                || Oracle::new(lat, sdc::Mode::Sdc),
                |oracle, (i, a)| {
                    for l in lat.grades() {
                        let mine = sdc_check(lat, ctx, a, l).ok();
                        let theirs = oracle.check(ctx, a, l);
                        if mine != theirs {
                            let show = |t: &Option<Term>| t.as_ref().map(|t| print(lat, t)).unwrap_or_else(|| "reject".into());
                            let detail = format!("level {}: checker {}, oracle {}", lat.name(l), show(&mine), show(&theirs));
                            let fails = |ts: &[Term]| sdc_check(lat, ctx, &ts[0], l).ok() != Oracle::new(lat, sdc::Mode::Sdc).check(ctx, &ts[0], l);
                            let small = shrink(vec![a.clone()], fails);
                            let names = ctx.names();
                            return cx(index + i, "checker agrees with oracle", vec![print_in(&small[0], lat, &names)], detail);
                        }
                    }
                    Outcome::Pass
                },
            )
            .collect();
        index += terms.len();
        record_all(&mut report, outcomes);
    }
    report.stat("contexts", contexts.len());
    report.stat("judgments", report.trials * lat.size());
    report.wall = start.elapsed();
    report
}
