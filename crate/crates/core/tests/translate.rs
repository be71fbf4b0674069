use gradia_core::ddc::{ddc_check, DdcConfig};
use gradia_core::equality::{def_eq, Verdict, DEFAULT_FUEL};
use gradia_core::sdc::{sdc_check, sdc_step, seal_check};
use gradia_core::syntax::{parse, parse_program, parse_with, ParseOptions};
use gradia_core::translate::{
    ddc_to_icc, icc_normalize, icc_star_erase, lift_context, print_icc, sdc_to_ddct, seal_to_sdc, IccTerm,
};
use gradia_core::{Context, Lattice, PtsSignature, Term};

#[test]
fn unseal_translates_to_bind() {
    let lat = Lattice::low_medium_high();
    let h = lat.grade("H").unwrap();
    let t = parse_with("unseal^H (seal^H unit)", &lat, &ParseOptions::sdc()).unwrap();
    let out = seal_to_sdc(&t);
    assert_eq!(out, Term::bind(h, "x", Term::ret(h, Term::UnitTm), Term::Var(0)));
    assert_eq!(seal_check(&lat, &Context::new(), &t, h).unwrap(), sdc_check(&lat, &Context::new(), &out, h).unwrap());
    assert_eq!(sdc_step(&out), Some(Term::UnitTm));
}

#[test]
fn sdc_typing_is_preserved_into_ddc() {
    let lat = Lattice::low_medium_high();
    let lat_t = lat.with_c(lat.top());
    let cfg = DdcConfig::new(lat_t.clone(), PtsSignature::coc());
    let src = r"assume x :^H Unit + Unit; assume f :^L Unit -> Unit;
                (eta^H x, \u:Unit. bind^H v = eta^H u in eta^H (f u))";
    let (ctx, t) = parse_program(src, &lat, &ParseOptions::sdc()).unwrap();
    let l = lat.grade("L").unwrap();
    let ty = sdc_check(&lat, &ctx, &t, l).unwrap();
    let ctx_t = lift_context(&lat_t, &ctx);
    let got = ddc_check(&cfg, &ctx_t, &sdc_to_ddct(&lat_t, &t), l).unwrap();
    let want = sdc_to_ddct(&lat_t, &ty);
    let r = def_eq(&lat_t, &ctx_t.grades(), &got, &want, lat_t.c(), DEFAULT_FUEL);
    assert_eq!(r.verdict, Verdict::Equal);
}

#[test]
fn monad_becomes_graded_sigma() {
    let lat = Lattice::two_point();
    let ty = Term::tmonad(lat.top(), Term::UnitTy);
    assert_eq!(sdc_to_ddct(&lat, &ty), Term::sigma(lat.top(), "x", Term::UnitTy, Term::UnitTy));
    let e = Term::ret(lat.top(), Term::UnitTm);
    assert_eq!(sdc_to_ddct(&lat, &e), Term::gpair(Term::UnitTm, lat.top(), Term::UnitTm));
}

#[test]
fn irrelevant_positions_become_bracketed() {
    let lat = Lattice::irrelevance();
    let id = parse(r"\x:^top Type. \y:^bot x. y", &lat).unwrap();
    let icc = ddc_to_icc(&lat, &id).unwrap();
    assert_eq!(print_icc(&icc), r"\[x:Type]. \(y:x). y");
    assert_eq!(print_icc(&icc_star_erase(&icc)), r"\(y). y");
    let ty = parse(r"Pi x:^top Type. Pi y:^bot x. x", &lat).unwrap();
    assert_eq!(print_icc(&ddc_to_icc(&lat, &ty).unwrap()), r"Pi [x:Type]. Pi (y:x). x");
}

#[test]
fn erased_application_normalises_like_its_source() {
    let lat = Lattice::irrelevance();
    let src = parse(r"(\x:^top Type. \y:^bot x. y) Type^top", &lat).unwrap();
    let erased = icc_normalize(&icc_star_erase(&ddc_to_icc(&lat, &src).unwrap()), 100).unwrap();
    assert!(matches!(erased, IccTerm::Lam(_, _, None, _)));
    assert_eq!(print_icc(&erased), r"\(y). y");
}

#[test]
fn non_pi_constructs_are_rejected() {
    let lat = Lattice::irrelevance();
    let e = ddc_to_icc(&lat, &Term::UnitTm).unwrap_err();
    assert!(e.to_string().contains("outside"));
}
