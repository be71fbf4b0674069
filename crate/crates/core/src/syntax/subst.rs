//! Index shifting and capture-avoiding substitution.

use super::term::Term;

/// Adds `d` to every free index at or above `cutoff`.
///
/// Panics if a negative shift would take an index below zero.
pub fn shift_from(t: &Term, d: isize, cutoff: usize) -> Term {
    if d == 0 {
        return t.clone();
    }
    match t {
        Term::Var(i) if *i >= cutoff => {
            let j = *i as isize + d;
            assert!(j >= 0, "negative shift took index {i} below zero");
            Term::Var(j as usize)
        }
        Term::Var(_) => t.clone(),
        _ => t.map_children(|c, k| shift_from(c, d, cutoff + k)),
    }
}

/// Shifts every free index by `d`.
pub fn shift(t: &Term, d: isize) -> Term {
    shift_from(t, d, 0)
}

/// Replaces index `k` with `arg` (which lives `k` binders further out) and
/// closes the gap left by the removed binder.
pub fn subst_at(t: &Term, k: usize, arg: &Term) -> Term {
    match t {
        Term::Var(i) if *i == k => shift(arg, k as isize),
        Term::Var(i) if *i > k => Term::Var(i - 1),
        Term::Var(_) => t.clone(),
        _ => t.map_children(|c, n| subst_at(c, k + n, arg)),
    }
}

/// `body{arg/x}` where `x` is index 0 of `body`.
pub fn subst(body: &Term, arg: &Term) -> Term {
    subst_at(body, 0, arg)
}

/// `body{x_val/x}{y_val/y}` for a body binding `x` (index 1) and `y`
/// (index 0); both values live outside the two binders.
pub fn subst2(body: &Term, x_val: &Term, y_val: &Term) -> Term {
    let once = subst(body, &shift(y_val, 1));
    subst(&once, x_val)
}

/// Removes `n` unused innermost binders from the scope of `t`, or returns
/// `None` if any of them occurs.
pub fn strengthen(t: &Term, n: usize) -> Option<Term> {
    if (0..n).any(|i| t.has_free(i)) {
        None
    } else {
        Some(shift_from(t, -(n as isize), n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Lattice;

    #[test]
    fn subst_var_zero() {
        assert_eq!(subst(&Term::Var(0), &Term::UnitTm), Term::UnitTm);
    }

    #[test]
    fn subst_touches_only_index_zero() {
        let t = Term::app(Term::Var(0), Term::Var(1));
        assert_eq!(subst(&t, &Term::UnitTm), Term::app(Term::UnitTm, Term::Var(0)));
    }

    #[test]
    fn subst_under_binder_shifts_argument() {
        let bot = Lattice::two_point().bot();
        let body = Term::glam(bot, "y", Term::UnitTy, Term::Var(1));
        let arg = Term::Var(3);
        assert_eq!(subst(&body, &arg), Term::glam(bot, "y", Term::UnitTy, Term::Var(4)));
    }

    #[test]
    fn subst2_order() {
        let body = Term::pair(Term::Var(1), Term::Var(0));
        let out = subst2(&body, &Term::UnitTm, &Term::UnitTy);
        assert_eq!(out, Term::pair(Term::UnitTm, Term::UnitTy));
    }

    #[test]
    fn strengthen_rejects_occurrence() {
        assert_eq!(strengthen(&Term::Var(0), 1), None);
        assert_eq!(strengthen(&Term::Var(3), 2), Some(Term::Var(1)));
    }
}
