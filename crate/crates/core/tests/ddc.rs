use gradia_core::ddc::{check_context, ddc_check, ddc_eval, ddc_indist, ddc_step, erase, is_value, whnf, DdcConfig};
use gradia_core::syntax::{parse, parse_program, ParseOptions};
use gradia_core::{Context, ErrorKind, GradeContext, Lattice, PtsSignature, Term};

fn li() -> DdcConfig {
    DdcConfig::new(Lattice::irrelevance(), PtsSignature::type_in_type())
}

fn program(cfg: &DdcConfig, src: &str) -> (Context, Term) {
    parse_program(src, &cfg.lattice, &ParseOptions::ddc()).unwrap()
}

fn level(cfg: &DdcConfig, name: &str) -> gradia_core::Grade {
    cfg.lattice.grade(name).unwrap()
}

#[test]
fn polymorphic_identity_has_its_pi_type() {
    for pts in [PtsSignature::type_in_type(), PtsSignature::coc()] {
        let cfg = DdcConfig::new(Lattice::irrelevance(), pts);
        let id = parse(r"\x:^top Type. \y:^bot x. y", &cfg.lattice).unwrap();
        let want = parse(r"Pi x:^top Type. Pi y:^bot x. x", &cfg.lattice).unwrap();
        assert_eq!(ddc_check(&cfg, &Context::new(), &id, cfg.lattice.bot()).unwrap(), want);
    }
}

#[test]
fn top_level_is_never_derivable() {
    let cfg = li();
    for src in ["unit", "Unit", "Type", r"\x:^bot Unit. x"] {
        let t = parse(src, &cfg.lattice).unwrap();
        let e = ddc_check(&cfg, &Context::new(), &t, cfg.lattice.top()).unwrap_err();
        assert_eq!(e.kind, ErrorKind::LevelAboveC, "{src}");
    }
}

#[test]
fn types_are_checked_at_compile_time() {
    let cfg = li();
    let (ctx, t) = program(&cfg, "assume A :^top Type; assume a :^bot A; a");
    check_context(&cfg, &ctx).unwrap();
    assert_eq!(ddc_check(&cfg, &ctx, &t, cfg.lattice.bot()).unwrap(), Term::Var(1));
    let (ctx, t) = program(&cfg, "assume A :^top Type; A");
    assert_eq!(ddc_check(&cfg, &ctx, &t, cfg.lattice.bot()).unwrap_err().kind, ErrorKind::VarGradeTooHigh);
    assert!(ddc_check(&cfg, &ctx, &t, cfg.lattice.c()).is_err());
}

#[test]
fn conversion_with_compile_time_at_top() {
    let lat = Lattice::irrelevance();
    let cfg = DdcConfig::new(lat.with_c(lat.top()), PtsSignature::type_in_type());
    let src = r"(\A:^top Type. \y:^bot A. y) ((\B:^bot Type. B) Unit^bot)^top unit^bot";
    let t = parse(src, &cfg.lattice).unwrap();
    let ty = ddc_check(&cfg, &Context::new(), &t, cfg.lattice.bot()).unwrap();
    assert_eq!(whnf(&cfg, &ty).unwrap(), Term::UnitTy);
    assert!(ddc_check(&cfg, &Context::new(), &t, cfg.lattice.top()).is_ok());
}

#[test]
fn phantom_argument_does_not_affect_conversion() {
    let cfg = li();
    let src = r"assume F :^C (Pi b:^top Unit + Unit. Type);
                assume v :^bot F (inj1 {Unit} unit)^top;
                (\w:^bot F (inj2 {Unit} unit)^top. w) v^bot";
    let (ctx, t) = program(&cfg, src);
    assert!(ddc_check(&cfg, &ctx, &t, level(&cfg, "bot")).is_ok());

    let visible = r"assume F :^C (Pi b:^bot Unit + Unit. Type);
                    assume v :^bot F (inj1 {Unit} unit)^bot;
                    (\w:^bot F (inj2 {Unit} unit)^bot. w) v^bot";
    let (ctx, t) = program(&cfg, visible);
    assert_eq!(ddc_check(&cfg, &ctx, &t, level(&cfg, "bot")).unwrap_err().kind, ErrorKind::ConversionFailed);
}

#[test]
fn first_projection_is_restricted() {
    let cfg = li();
    let check = |src: &str, l: &str| ddc_check(&cfg, &Context::new(), &parse(src, &cfg.lattice).unwrap(), level(&cfg, l));
    assert!(check("pi1^C (unit^C, unit)", "C").is_ok());
    assert!(check("pi1^C (unit^C, unit)", "bot").is_err());
    assert!(check("pi1^top (unit^top, unit)", "C").is_err());
    assert!(check("pi2^top (unit^top, unit)", "bot").is_ok());
}

#[test]
fn reduction_examples() {
    let lat = Lattice::irrelevance();
    let beta = parse(r"(\x:^top Unit. (x^top, unit)) unit^top", &lat).unwrap();
    let pair = Term::gpair(Term::UnitTm, lat.top(), Term::UnitTm);
    assert_eq!(ddc_step(&lat, &beta), Some(pair.clone()));
    assert!(is_value(&pair));

    let mismatched = parse(r"(\x:^top Unit. x) unit^bot", &lat).unwrap();
    assert_eq!(ddc_step(&lat, &mismatched), None);

    let split = parse(r"let (x^C, y) = (unit^C, inj1 {Unit} unit) in y", &lat).unwrap();
    assert_eq!(ddc_step(&lat, &split), Some(Term::inj1(Term::UnitTy, Term::UnitTm)));

    let case = parse(r"case inj2 {Unit} unit of (\u:^bot Unit. Unit); (\u:^bot Unit. Type)", &lat).unwrap();
    assert_eq!(ddc_eval(&lat, &case, 10), (Term::sort("Type"), true));
}

#[test]
fn erasure_examples() {
    let lat = Lattice::two_point();
    let (bot, top) = (lat.bot(), lat.top());
    let inner = parse(r"(\x:^bot Unit. x) unit^bot", &lat).unwrap();
    let p = Term::gpair(Term::Var(0), top, inner.clone());
    assert_eq!(erase(&lat, &p, bot), Term::gpair(Term::UnitTm, top, inner));
    assert_eq!(erase(&lat, &Term::Var(0), bot), Term::Var(0));
    let app = Term::gapp(Term::Var(0), Term::Var(1), top);
    assert_eq!(erase(&lat, &app, bot), Term::gapp(Term::Var(0), Term::UnitTm, top));
    assert_eq!(erase(&lat, &app, top), app);
}

#[test]
fn phantom_applications_are_indistinguishable_at_compile_time() {
    let lat = Lattice::irrelevance();
    let a = parse(r"(\b:^top Unit + Unit. Unit) (inj1 {Unit} unit)^top", &lat).unwrap();
    let b = parse(r"(\b:^top Unit + Unit. Unit) (inj2 {Unit} unit)^top", &lat).unwrap();
    let phi = GradeContext::new();
    assert!(ddc_indist(&lat, &phi, &a, &b, lat.bot()));
    assert!(ddc_indist(&lat, &phi, &a, &b, lat.c()));
    assert!(!ddc_indist(&lat, &phi, &a, &b, lat.top()));
}

#[test]
fn top_requests_go_through_truncation() {
    use gradia_core::ddc::ddc_check_truncated;
    use gradia_core::trace::Trace;
    let cfg = li();
    let (ctx, t) = program(&cfg, "assume A :^top Type; A");
    let top = cfg.lattice.top();
    let mut trace = Trace::new();
    assert_eq!(ddc_check_truncated(&cfg, &ctx, &t, top, Some(&mut trace)).unwrap(), Term::sort("Type"));
    assert!(trace.render().starts_with("CT-Top  C /\\ Omega = [A:^C]"), "{}", trace.render());
    assert_eq!(ddc_check(&cfg, &ctx, &t, top).unwrap_err().kind, ErrorKind::LevelAboveC);
}
