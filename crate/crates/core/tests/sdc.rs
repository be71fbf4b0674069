use gradia_core::sdc::{full_step, is_value, sdc_check, sdc_eval, sdc_indist, sdc_step, seal_check};
use gradia_core::syntax::{parse_open, parse_program, parse_with, ParseOptions};
use gradia_core::{Context, ErrorKind, GradeContext, Lattice, Term};

fn lmh() -> Lattice {
    Lattice::low_medium_high()
}

fn bool_ty() -> Term {
    Term::sum(Term::UnitTy, Term::UnitTy)
}

fn program(src: &str, lat: &Lattice) -> (Context, Term) {
    parse_program(src, lat, &ParseOptions::sdc()).unwrap()
}

const ASSUMPTIONS: &str = "assume x :^L Unit + Unit; assume y :^H Unit + Unit; assume z :^M Unit + Unit;";

#[test]
fn conditional_on_medium_input_is_medium() {
    let lat = lmh();
    let m = lat.grade("M").unwrap();
    let src = format!(r"{ASSUMPTIONS} case z of (\u:Unit. x); (\u:Unit. inj2 {{Unit}} unit)");
    let (ctx, t) = program(&src, &lat);
    assert_eq!(sdc_check(&lat, &ctx, &t, m).unwrap(), bool_ty());
    assert_eq!(sdc_check(&lat, &ctx, &t, lat.grade("L").unwrap()).unwrap_err().kind, ErrorKind::VarGradeTooHigh);
}

#[test]
fn conditional_on_high_input_is_not_medium() {
    let lat = lmh();
    let src = format!(r"{ASSUMPTIONS} case y of (\u:Unit. x); (\u:Unit. inj2 {{Unit}} unit)");
    let (ctx, t) = program(&src, &lat);
    let e = sdc_check(&lat, &ctx, &t, lat.grade("M").unwrap()).unwrap_err();
    assert_eq!(e.kind, ErrorKind::VarGradeTooHigh);
    assert_eq!(e.rule, "SDC-Var");
    assert!(sdc_check(&lat, &ctx, &t, lat.top()).is_ok());
}

#[test]
fn high_variable_is_hidden_from_low_observer() {
    let lat = lmh();
    let (ctx, x) = program("assume x :^H Unit + Unit; x", &lat);
    let l = lat.grade("L").unwrap();
    assert_eq!(sdc_check(&lat, &ctx, &x, l).unwrap_err().kind, ErrorKind::VarGradeTooHigh);
    let (_, wrapped) = program("assume x :^H Unit + Unit; eta^H x", &lat);
    let h = lat.grade("H").unwrap();
    assert_eq!(sdc_check(&lat, &ctx, &wrapped, l).unwrap(), Term::tmonad(h, bool_ty()));
}

#[test]
fn bind_requires_the_result_to_be_protected() {
    let lat = lmh();
    let opts = ParseOptions::sdc();
    let l = lat.grade("L").unwrap();
    let names = ["a".to_string()];
    let mut ctx = Context::new();
    ctx.push("a".into(), l, Term::tmonad(lat.grade("H").unwrap(), Term::UnitTy));
    let ok = parse_open("bind^H v = a in eta^H v", &lat, &opts, &names).unwrap();
    assert!(sdc_check(&lat, &ctx, &ok, l).is_ok());
    let leaky = parse_open("bind^H v = a in eta^L v", &lat, &opts, &names).unwrap();
    assert!(sdc_check(&lat, &ctx, &leaky, l).is_err());
}

#[test]
fn sealing_round_trip() {
    let lat = Lattice::two_point();
    let t = parse_with("unseal^bot (seal^bot unit)", &lat, &ParseOptions::sdc()).unwrap();
    assert_eq!(seal_check(&lat, &Context::new(), &t, lat.bot()).unwrap(), Term::UnitTy);
    let hidden = parse_with("unseal^top (seal^top unit)", &lat, &ParseOptions::sdc()).unwrap();
    assert_eq!(seal_check(&lat, &Context::new(), &hidden, lat.bot()).unwrap_err().kind, ErrorKind::UnsealClearance);
    assert!(seal_check(&lat, &Context::new(), &hidden, lat.top()).is_ok());
}

#[test]
fn reduction_examples() {
    let lat = lmh();
    let opts = ParseOptions::sdc();
    let beta = parse_with(r"(\x:Unit. (x, x)) unit", &lat, &opts).unwrap();
    assert_eq!(sdc_step(&beta), Some(Term::pair(Term::UnitTm, Term::UnitTm)));

    let h = lat.grade("H").unwrap();
    let bind = parse_with(r"bind^H v = eta^H unit in eta^H (v, v)", &lat, &opts).unwrap();
    assert_eq!(sdc_step(&bind), Some(Term::ret(h, Term::pair(Term::UnitTm, Term::UnitTm))));

    let case = parse_with(r"case inj2 {Unit} unit of (\u:Unit. inj1 {Unit} u); (\u:Unit. inj2 {Unit} u)", &lat, &opts).unwrap();
    let (v, done) = sdc_eval(&case, 10);
    assert!(done && is_value(&v));
    assert_eq!(v, Term::Inj2(Box::new(Term::UnitTy), Box::new(Term::UnitTm)));
}

#[test]
fn full_step_reaches_every_redex() {
    let lat = lmh();
    let t = parse_with(r"((\x:Unit. x) unit, (\x:Unit. x) unit)", &lat, &ParseOptions::sdc()).unwrap();
    assert!(is_value(&t) && sdc_step(&t).is_none());
    let reducts = full_step(&t);
    assert_eq!(reducts.len(), 2);
    assert!(reducts.iter().all(|r| full_step(r).len() == 1));
}

#[test]
fn protected_booleans_are_indistinguishable_below_their_grade() {
    let lat = lmh();
    let opts = ParseOptions::sdc();
    let tt = parse_with("eta^H (inj1 {Unit} unit)", &lat, &opts).unwrap();
    let ff = parse_with("eta^H (inj2 {Unit} unit)", &lat, &opts).unwrap();
    let phi = GradeContext::new();
    assert!(sdc_indist(&lat, &phi, &tt, &ff, lat.grade("L").unwrap()));
    assert!(sdc_indist(&lat, &phi, &tt, &ff, lat.grade("M").unwrap()));
    assert!(!sdc_indist(&lat, &phi, &tt, &ff, lat.grade("H").unwrap()));
}

#[test]
fn high_variables_are_visible_only_inside_high_boxes() {
    let lat = lmh();
    let h = lat.grade("H").unwrap();
    let l = lat.grade("L").unwrap();
    let phi = GradeContext::from_grades(vec![h, h]);
    assert!(!sdc_indist(&lat, &phi, &Term::Var(0), &Term::Var(0), l));
    assert!(sdc_indist(&lat, &phi, &Term::Var(0), &Term::Var(0), h));
    assert!(!sdc_indist(&lat, &phi, &Term::Var(0), &Term::Var(1), h));
    assert!(sdc_indist(&lat, &phi, &Term::ret(h, Term::Var(0)), &Term::ret(h, Term::Var(1)), l));
}
