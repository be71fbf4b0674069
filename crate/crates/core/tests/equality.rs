use gradia_core::ddc::ddc_indist;
use gradia_core::equality::{consistent, def_eq, def_eq_cancellable, par_step, CancelToken, Verdict, DEFAULT_FUEL};
use gradia_core::syntax::parse;
use gradia_core::{GradeContext, Lattice, Term};

fn li() -> Lattice {
    Lattice::irrelevance()
}

fn t(src: &str) -> Term {
    parse(src, &li()).unwrap()
}

const PHANTOM0: &str = r"(\b:^top Unit + Unit. Unit) (inj1 {Unit} unit)^top";
const PHANTOM1: &str = r"(\b:^top Unit + Unit. Unit) (inj2 {Unit} unit)^top";
const OMEGA: &str = r"(\x:^bot Unit. x x^bot) (\x:^bot Unit. x x^bot)^bot";
const GROWING: &str = r"(\x:^bot Unit. x x^bot x^bot) (\x:^bot Unit. x x^bot x^bot)^bot";

#[test]
fn phantom_applications_are_equal_without_reduction() {
    let lat = li();
    let r = def_eq(&lat, &GradeContext::new(), &t(PHANTOM0), &t(PHANTOM1), lat.c(), DEFAULT_FUEL);
    assert_eq!(r.verdict, Verdict::Equal);
    assert_eq!(r.steps_used, 0);
}

#[test]
fn phantom_applications_are_equal_at_top_after_reduction() {
    let lat = li();
    let r = def_eq(&lat, &GradeContext::new(), &t(PHANTOM0), &t(PHANTOM1), lat.top(), DEFAULT_FUEL);
    assert_eq!(r.verdict, Verdict::Equal);
    assert_eq!(r.steps_used, 1);
    assert_eq!(r.witnesses, Some((Term::UnitTy, Term::UnitTy)));
}

#[test]
fn distinct_normal_forms_are_not_equal() {
    let lat = li();
    let r = def_eq(&lat, &GradeContext::new(), &t("Unit + Unit"), &t("Unit"), lat.c(), DEFAULT_FUEL);
    assert_eq!(r.verdict, Verdict::NotEqual);
    assert_eq!(r.last, (t("Unit + Unit"), Term::UnitTy));
    assert!(!consistent(&r.last.0, &r.last.1));
}

#[test]
fn witnesses_are_indistinguishable() {
    let lat = li();
    let phi = GradeContext::new();
    let a = t(r"(\A:^bot Type. A) ((\B:^bot Type. B) Unit^bot)^bot");
    let b = t(r"(\C:^bot Type. Pi x:^top C. C) Unit^bot");
    for (x, y) in [(&a, &t("Unit")), (&t(PHANTOM0), &t("Unit")), (&b, &t(r"Pi z:^top Unit. Unit"))] {
        let r = def_eq(&lat, &phi, x, y, lat.c(), DEFAULT_FUEL);
        assert_eq!(r.verdict, Verdict::Equal, "{x:?}");
        let (w1, w2) = r.witnesses.unwrap();
        assert!(ddc_indist(&lat, &phi, &w1, &w2, lat.c()));
    }
}

#[test]
fn parallel_step_leaves_hidden_arguments_alone() {
    let lat = li();
    let redex = r"((\y:^bot Unit. y) unit^bot)";
    let hidden = t(&format!(r"(\x:^top Unit. unit) {redex}^top"));
    assert_eq!(par_step(&lat, &hidden, lat.c()), Term::UnitTm);
    let pair = t(&format!("({redex}^top, {redex})"));
    assert_eq!(par_step(&lat, &pair, lat.c()), Term::gpair(t(redex), lat.top(), Term::UnitTm));
    assert_eq!(par_step(&lat, &pair, lat.top()), Term::gpair(Term::UnitTm, lat.top(), Term::UnitTm));
}

#[test]
fn self_reproducing_term_is_its_own_normal_form() {
    let lat = li();
    assert_eq!(par_step(&lat, &t(OMEGA), lat.c()), t(OMEGA));
    let r = def_eq(&lat, &GradeContext::new(), &t(OMEGA), &t("Unit"), lat.c(), 50);
    assert_eq!(r.verdict, Verdict::NotEqual);
}

#[test]
fn divergence_exhausts_fuel() {
    let lat = li();
    let r = def_eq(&lat, &GradeContext::new(), &t(GROWING), &t("Unit"), lat.c(), 12);
    assert_eq!(r.verdict, Verdict::FuelExhausted);
    assert_eq!(r.steps_used, 12);
    assert!(!r.cancelled);
}

#[test]
fn cancellation_stops_the_search() {
    let lat = li();
    let token = CancelToken::new();
    token.cancel();
    let r = def_eq_cancellable(&lat, &GradeContext::new(), &t(OMEGA), &t("Unit"), lat.c(), DEFAULT_FUEL, Some(&token));
    assert_eq!(r.verdict, Verdict::FuelExhausted);
    assert!(r.cancelled);
    assert_eq!(r.steps_used, 0);
}

#[test]
fn consistency_distinguishes_head_forms() {
    assert!(!consistent(&t("Unit + Unit"), &Term::UnitTy));
    assert!(!consistent(&t("Type"), &t(r"Pi x:^bot Unit. Unit")));
    assert!(consistent(&t(r"Pi x:^bot Unit. Unit"), &t(r"Pi x:^top Type. x")));
    assert!(consistent(&t(PHANTOM0), &Term::UnitTy));
    assert!(consistent(&Term::sort("Type"), &Term::sort("Type")));
    assert!(!consistent(&Term::sort("Type"), &Term::sort("Kind")));
}
