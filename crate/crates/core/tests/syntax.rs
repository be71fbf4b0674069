use gradia_core::syntax::{
    parse, parse_open, parse_program, parse_with, print, shift, shift_from, subst, Names2, ParseErrorKind,
    ParseOptions,
};
use gradia_core::{Lattice, Term};
use proptest::prelude::*;

fn li() -> Lattice {
    Lattice::irrelevance()
}

#[test]
fn polymorphic_identity_parses() {
    let lat = li();
    let id = parse(r"\x:^top Type. \y:^bot x. y", &lat).unwrap();
    let want = Term::glam(lat.top(), "x", Term::sort("Type"), Term::glam(lat.bot(), "y", Term::Var(0), Term::Var(0)));
    assert_eq!(id, want);
    assert_eq!(print(&id, &lat), r"\x:^top Type. \y:^bot x. y");
}

#[test]
fn bind_parses_to_de_bruijn() {
    let lat = Lattice::low_medium_high();
    let h = lat.grade("H").unwrap();
    let t = parse_open("bind^H x = a in x", &lat, &ParseOptions::sdc(), &["a".into()]).unwrap();
    assert_eq!(t, Term::bind(h, "x", Term::Var(0), Term::Var(0)));
}

#[test]
fn dialects_choose_constructors() {
    let lat = li();
    let sdc = parse_with(r"(\x:Unit. x) unit", &lat, &ParseOptions::sdc()).unwrap();
    assert!(matches!(sdc, Term::App(..)));
    let ddc = parse(r"(\x:^bot Unit. x) unit", &lat).unwrap();
    assert!(matches!(ddc, Term::GApp(..)));
}

#[test]
fn let_pair_binds_two_names() {
    let lat = li();
    let t = parse("let (x^C, y) = (unit^C, unit) in x", &lat).unwrap();
    let Term::LetPair(g, Names2(x, y), _, body, None) = &t else { panic!("{t:?}") };
    assert_eq!(*g, lat.c());
    assert_eq!((x.as_str(), y.as_str()), ("x", "y"));
    assert_eq!(**body, Term::Var(1));
}

#[test]
fn assumptions_build_the_context() {
    let lat = li();
    let (ctx, t) = parse_program("assume A :^top Type; assume a : A; a", &lat, &ParseOptions::ddc()).unwrap();
    assert_eq!(ctx.len(), 2);
    assert_eq!(ctx.lookup(0), Some((lat.bot(), Term::Var(1))));
    assert_eq!(t, Term::Var(0));
}

#[test]
fn parse_errors_are_classified() {
    let lat = li();
    assert_eq!(parse("\\x:^mid Type. x", &lat).unwrap_err().kind, ParseErrorKind::UnknownGrade);
    assert_eq!(parse("y", &lat).unwrap_err().kind, ParseErrorKind::UnboundVariable);
    let e = parse("(unit", &lat).unwrap_err();
    assert_eq!(e.kind, ParseErrorKind::Syntax);
    assert_eq!((e.line, e.col), (1, 6));
}

#[test]
fn printing_avoids_capture() {
    let lat = li();
    let t = Term::glam(lat.bot(), "x", Term::UnitTy, Term::glam(lat.bot(), "x", Term::UnitTy, Term::Var(1)));
    let s = print(&t, &lat);
    assert_eq!(parse(&s, &lat).unwrap(), t);
}

/// Terms with named variables, for checking de Bruijn substitution
/// against the textbook definition.
#[derive(Clone, Debug)]
enum Named {
    Var(String),
    /// The original node and its children, each with the names it binds.
    Node(Term, Vec<(Vec<String>, Named)>),
}

struct Namer {
    next: usize,
}

impl Namer {
    fn fresh(&mut self) -> String {
        self.next += 1;
        format!("b{}", self.next)
    }

    fn name(&mut self, t: &Term, env: &mut Vec<String>) -> Named {
        if let Term::Var(i) = t {
            return Named::Var(env[env.len() - 1 - i].clone());
        }
        let mut kids = Vec::new();
        let mut children = Vec::new();
        t.for_each_child(|c, k| children.push((c.clone(), k)));
        for (c, k) in children {
            let names: Vec<String> = (0..k).map(|_| self.fresh()).collect();
            env.extend(names.iter().cloned());
            kids.push((names, self.name(&c, env)));
            env.truncate(env.len() - k);
        }
        Named::Node(t.clone(), kids)
    }
}

fn free_names(n: &Named, out: &mut Vec<String>) {
    match n {
        Named::Var(x) => out.push(x.clone()),
        Named::Node(_, kids) => {
            for (bound, k) in kids {
                let mut inner = Vec::new();
                free_names(k, &mut inner);
                out.extend(inner.into_iter().filter(|x| !bound.contains(x)));
            }
        }
    }
}

fn rename(n: &Named, from: &str, to: &str) -> Named {
    match n {
        Named::Var(x) if x == from => Named::Var(to.to_string()),
        Named::Var(_) => n.clone(),
        Named::Node(t, kids) => Named::Node(
            t.clone(),
            kids.iter()
                .map(|(bound, k)| {
                    if bound.iter().any(|b| b == from) {
                        (bound.clone(), k.clone())
                    } else {
                        (bound.clone(), rename(k, from, to))
                    }
                })
                .collect(),
        ),
    }
}

fn subst_named(n: &Named, x: &str, arg: &Named, namer: &mut Namer) -> Named {
    match n {
        Named::Var(y) if y == x => arg.clone(),
        Named::Var(_) => n.clone(),
        Named::Node(t, kids) => {
            let mut fv = Vec::new();
            free_names(arg, &mut fv);
            let kids = kids
                .iter()
                .map(|(bound, k)| {
                    if bound.iter().any(|b| b == x) {
                        return (bound.clone(), k.clone());
                    }
                    let mut bound = bound.clone();
                    let mut k = k.clone();
                    for b in bound.iter_mut() {
                        if fv.contains(b) {
                            let fresh = namer.fresh();
                            k = rename(&k, b, &fresh);
                            *b = fresh;
                        }
                    }
                    let k = subst_named(&k, x, arg, namer);
                    (bound, k)
                })
                .collect();
            Named::Node(t.clone(), kids)
        }
    }
}

fn unname(n: &Named, env: &mut Vec<String>) -> Term {
    match n {
        Named::Var(x) => Term::Var(env.iter().rev().position(|y| y == x).expect("scoped")),
        Named::Node(t, kids) => {
            let mut i = 0;
            t.map_children(|_, _| {
                let (bound, k) = &kids[i];
                i += 1;
                env.extend(bound.iter().cloned());
                let out = unname(k, env);
                env.truncate(env.len() - bound.len());
                out
            })
        }
    }
}

const FREE: usize = 8;

/// `f7 … f0`, innermost last, so that `Var(j)` at the top is `fj`.
fn free_env(offset: usize) -> Vec<String> {
    (0..FREE).rev().map(|j| format!("f{}", j + offset)).collect()
}

fn arb_term() -> impl Strategy<Value = Term> {
    let lat = li();
    let gs: Vec<_> = lat.grades().collect();
    let leaf = prop_oneof![(0usize..4).prop_map(Term::Var), Just(Term::UnitTm), Just(Term::sort("Type")), Just(Term::UnitTy)];
    leaf.prop_recursive(5, 48, 3, move |inner| {
        let g = proptest::sample::select(gs.clone());
        prop_oneof![
            (g.clone(), inner.clone(), inner.clone()).prop_map(|(g, a, b)| Term::glam(g, "x", a, b)),
            (g.clone(), inner.clone(), inner.clone()).prop_map(|(g, a, b)| Term::pi(g, "x", a, b)),
            (g.clone(), inner.clone(), inner.clone()).prop_map(|(g, a, b)| Term::gapp(a, b, g)),
            (g.clone(), inner.clone(), inner.clone()).prop_map(|(g, a, b)| Term::sigma(g, "x", a, b)),
            (g.clone(), inner.clone(), inner.clone()).prop_map(|(g, a, b)| Term::gpair(a, g, b)),
            (g, inner.clone(), inner.clone()).prop_map(|(g, a, b)| Term::let_pair(g, "x", "y", a, b)),
            (inner.clone(), inner.clone(), inner.clone()).prop_map(|(a, b, c)| Term::case(a, b, c)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::inj1(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::lam("x", a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn substitution_matches_named_oracle(t in arb_term(), a in arb_term()) {
        let mut namer = Namer { next: 0 };
        let named_t = namer.name(&t, &mut free_env(0));
        // `a` lives in the context without index 0, so its `Var(j)` is `f(j+1)`.
        let named_a = namer.name(&a, &mut free_env(1));
        let result = subst_named(&named_t, "f0", &named_a, &mut namer);
        prop_assert_eq!(unname(&result, &mut free_env(1)), subst(&t, &a));
    }

    #[test]
    fn substituting_into_a_weakened_term_is_identity(t in arb_term(), a in arb_term()) {
        prop_assert_eq!(subst(&shift(&t, 1), &a), t);
    }

    #[test]
    fn shifting_commutes_with_substitution(t in arb_term(), a in arb_term(), c in 0usize..3) {
        let lhs = shift_from(&subst(&t, &a), 1, c);
        let rhs = subst(&shift_from(&t, 1, c + 1), &shift_from(&a, 1, c));
        prop_assert_eq!(lhs, rhs);
    }
}
