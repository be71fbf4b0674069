use std::path::{Path, PathBuf};

use gradia_core::ddc::{check_context, ddc_check_truncated, ddc_eval, erase as ddc_erase, DdcConfig};
use gradia_core::equality::{def_eq, Verdict};
use gradia_core::sdc::{check_traced, sdc_eval, sdc_indist, Mode};
use gradia_core::syntax::print_in;
use gradia_core::trace::Trace;
use gradia_core::translate::{ddc_to_icc, icc_star_erase, lift_context, print_icc, sdc_to_ddct, seal_to_sdc};
use gradia_core::{ErrorKind, TypeError};
use gradia_harness::{run_suite, Fragment, GenConfig, Suite};

use crate::config::{self, setup, Setup};
use crate::{Opts, System, Target};

/// What one command produced for one input.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { stdout: text, ..Output::default() }
    }

    pub fn fail(code: u8, msg: String) -> Output {
        Output { stderr: format!("error: {msg}\n"), code, ..Output::default() }
    }

    pub fn usage(msg: &str) -> Output {
        Output::fail(2, msg.to_string())
    }

    fn type_error(e: &TypeError) -> Output {
        let code = if e.kind == ErrorKind::FuelExhausted { 3 } else { 1 };
        Output::fail(code, e.to_string())
    }

    pub fn labelled(self, label: &str) -> Output {
        let tag = |s: String| if s.is_empty() { s } else { format!("== {label}\n{s}") };
        Output { stdout: tag(self.stdout), stderr: tag(self.stderr), code: self.code }
    }

    fn with_trace(mut self, trace: &Trace, enabled: bool) -> Output {
        if enabled {
            self.stdout = trace.render() + &self.stdout;
        }
        self
    }
}

fn lines(s: &str) -> String {
    format!("{s}\n")
}

fn ddc_config(s: &Setup, opts: &Opts) -> DdcConfig {
    DdcConfig::new(s.lat.clone(), s.pts.clone()).with_fuel(opts.fuel)
}

fn mode(system: System) -> Mode {
    if system == System::Seal {
        Mode::Seal
    } else {
        Mode::Sdc
    }
}

pub fn check(path: &Path, opts: &Opts) -> Output {
    let s = match setup(path, opts) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let names = s.ctx.names();
    let mut trace = Trace::new();
    let result = match s.system {
        System::Sdc | System::Seal => check_traced(&s.lat, mode(s.system), &s.ctx, &s.term, s.level, &mut trace),
        System::Ddc => {
            let cfg = ddc_config(&s, opts);
            check_context(&cfg, &s.ctx).and_then(|_| ddc_check_truncated(&cfg, &s.ctx, &s.term, s.level, Some(&mut trace)))
        }
    };
    match result {
        Ok(ty) => Output::ok(lines(&print_in(&ty, &s.lat, &names))),
        Err(e) => Output::type_error(&e),
    }
    .with_trace(&trace, opts.trace)
}

pub fn eval(path: &Path, opts: &Opts) -> Output {
    let s = match setup(path, opts) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let (v, done) = match s.system {
        System::Sdc | System::Seal => sdc_eval(&s.term, opts.fuel),
        System::Ddc => ddc_eval(&s.lat, &s.term, opts.fuel),
    };
    let shown = print_in(&v, &s.lat, &s.ctx.names());
    if done {
        Output::ok(lines(&shown))
    } else {
        Output::fail(3, format!("no value within {} steps; reached {shown}", opts.fuel))
    }
}

pub fn erase(path: &Path, opts: &Opts) -> Output {
    let s = match setup(path, opts) {
        Ok(s) => s,
        Err(o) => return o,
    };
    if s.system != System::Ddc {
        return Output::usage("erase applies to ddc terms");
    }
    Output::ok(lines(&print_in(&ddc_erase(&s.lat, &s.term, s.level), &s.lat, &s.ctx.names())))
}

/// Both terms are read under the first file's assumptions. The simple
/// calculi have no conversion, so there `eq` decides indistinguishability.
pub fn eq(paths: &[PathBuf], opts: &Opts) -> Output {
    let [a, b] = paths else { return Output::usage("eq takes exactly two files") };
    let s = match setup(a, opts) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let popts = config::parse_options(s.system, &s.pts);
    let (ctx_b, other) = match config::program(b, &s.lat, &popts) {
        Ok(p) => p,
        Err(o) => return o,
    };
    if ctx_b != s.ctx {
        return Output::usage("both files must make the same assumptions");
    }
    if s.system != System::Ddc {
        let same = sdc_indist(&s.lat, &s.ctx.grades(), &s.term, &other, s.level);
        return Output::ok(lines(if same { "Indistinguishable" } else { "Distinguishable" }));
    }
    let r = def_eq(&s.lat, &s.ctx.grades(), &s.term, &other, s.level, opts.fuel);
    let names = s.ctx.names();
    let mut out = format!("{:?}\n", r.verdict);
    if opts.trace {
        out += &format!("rounds: {}\n", r.steps_used);
        let (l, rr) = r.witnesses.as_ref().unwrap_or(&r.last);
        out += &format!("left:  {}\nright: {}\n", print_in(l, &s.lat, &names), print_in(rr, &s.lat, &names));
    }
    let code = if r.verdict == Verdict::FuelExhausted { 3 } else { 0 };
    Output { stdout: out, stderr: String::new(), code }
}

pub fn translate(path: &Path, opts: &Opts, from: System, to: Target) -> Output {
    let opts = Opts { system: Some(from), ..opts.clone() };
    let s = match setup(path, &opts) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let names = s.ctx.names();
    match (from, to) {
        (System::Seal, Target::Sdc) => Output::ok(lines(&print_in(&seal_to_sdc(&s.term), &s.lat, &names))),
        (System::Sdc, Target::Ddc) => {
            let lat = s.lat.with_c(s.lat.top());
            let ctx = lift_context(&lat, &s.ctx);
            Output::ok(lines(&print_in(&sdc_to_ddct(&lat, &s.term), &lat, &ctx.names())))
        }
        (System::Ddc, Target::Icc | Target::IccErased) => match ddc_to_icc(&s.lat, &s.term) {
            Ok(t) if to == Target::Icc => Output::ok(lines(&print_icc(&t))),
            Ok(t) => Output::ok(lines(&print_icc(&icc_star_erase(&t)))),
            Err(e) => Output::fail(1, e.to_string()),
        },
        _ => Output::usage(&format!("no translation from {from:?} to {to:?}")),
    }
}

pub fn suite(opts: &Opts, name: &str, detail: Option<&Path>) -> Output {
    let Some(suite) = Suite::parse(name) else {
        let known: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
        return Output::usage(&format!("unknown suite `{name}`; expected one of {}", known.join(", ")));
    };
    let system = opts.system.unwrap_or(System::Sdc);
    let lat = match config::lattice(opts, system) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let pts = match config::pts(opts) {
        Ok(p) => p,
        Err(o) => return o,
    };
    let fragment = match system {
        System::Sdc => Fragment::Sdc,
        System::Seal => Fragment::Seal,
        System::Ddc => Fragment::Ddc,
    };
    let cfg = GenConfig::new(fragment, lat).pts(pts).seed(opts.seed).trials(opts.trials).free(2);
    let report = run_suite(suite, &cfg);
    if let Some(p) = detail {
        if let Err(e) = std::fs::write(p, report.detail()) {
            return Output::fail(4, format!("{}: {e}", p.display()));
        }
    }
    Output { stdout: report.render(), stderr: String::new(), code: if report.ok() { 0 } else { 5 } }
}
