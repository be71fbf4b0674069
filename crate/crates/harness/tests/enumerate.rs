use std::collections::HashSet;

use gradia_core::{Lattice, Term};
use gradia_harness::{enumerate_terms, Enumerator, Fragment};

/// Counts of the simple grammar by size, computed from the grammar's
/// recurrences rather than by building terms.
struct Counts {
    grades: u64,
    types: Vec<u64>,
}

impl Counts {
    fn new(grades: u64, max: usize) -> Counts {
        let mut types = vec![0; max + 1];
        for n in 1..=max {
            types[n] = if n == 1 {
                1
            } else {
                let split: u64 = (1..n - 1).map(|s| types[s] * types[n - 1 - s]).sum();
                3 * split + grades * types[n - 1]
            };
        }
        Counts { grades, types }
    }

    fn terms(&self, n: usize, d: u64) -> u64 {
        if n == 1 {
            return d + 1;
        }
        let t = &self.types;
        let mut c = 0;
        for s in 1..n.saturating_sub(1) {
            let r = n - 1 - s;
            c += t[s] * self.terms(r, d + 1);
            c += 2 * self.terms(s, d) * self.terms(r, d);
            c += 2 * t[s] * self.terms(r, d);
            c += self.grades * self.terms(s, d) * self.terms(r, d + 1);
        }
        c += (2 + self.grades) * self.terms(n - 1, d);
        for s1 in 1..n.saturating_sub(2) {
            for s2 in 1..n - 1 - s1 {
                c += self.terms(s1, d) * self.terms(s2, d) * self.terms(n - 1 - s1 - s2, d);
            }
        }
        c
    }
}

#[test]
fn sdc_counts_match_the_grammar() {
    let lat = Lattice::two_point();
    let counts = Counts::new(2, 6);
    let mut e = Enumerator::new(Fragment::Sdc, &lat, &[]);
    for d in 0..3 {
        for n in 1..=5 {
            let got = e.exact(n, d);
            assert_eq!(got.len() as u64, counts.terms(n, d as u64) + counts.types[n], "size {n} depth {d}");
            let distinct: HashSet<&Term> = got.iter().collect();
            assert_eq!(distinct.len(), got.len());
        }
    }
}

#[test]
fn closed_sdc_terms_up_to_three_nodes() {
    let lat = Lattice::two_point();
    let all = enumerate_terms(Fragment::Sdc, &lat, &[], 3, 0);
    assert_eq!(all.len(), 41);
    let counts = Counts::new(2, 3);
    assert_eq!((1..=3).map(|n| counts.terms(n, 0) + counts.types[n]).sum::<u64>(), 41);
    assert!(all.contains(&Term::ret(lat.top(), Term::UnitTm)));
    assert!(all.contains(&Term::lam("x", Term::UnitTy, Term::Var(0))));
}

#[test]
fn enumerated_terms_are_sized_and_scoped() {
    let lat = Lattice::irrelevance();
    let sorts = ["Type".into()];
    for frag in [Fragment::Sdc, Fragment::Seal, Fragment::Ddc, Fragment::DdcPi] {
        let mut e = Enumerator::new(frag, &lat, &sorts);
        for n in 1..=4 {
            for t in e.exact(n, 2) {
                assert_eq!(t.size(), n, "{t:?}");
                assert!(t.free_bound() <= 2, "{t:?}");
            }
        }
    }
}

#[test]
fn pi_fragment_uses_only_pi_constructs() {
    let lat = Lattice::two_point();
    let sorts = ["Type".into()];
    for t in enumerate_terms(Fragment::DdcPi, &lat, &sorts, 5, 1) {
        assert!(gradia_core::translate::ddc_to_icc(&lat, &t).is_ok(), "{t:?}");
    }
}
