//! Greedy shrinking of failing instances.
//!
//! An instance is a tuple of terms that share a shape (a term and its
//! twins, say). A shrinking move picks a path in the first term and
//! replaces the subterm there, in every component that has the path, by
//! one of its children or by `unit`/`Unit`. Moves are accepted while the
//! instance keeps failing and its size, or else its number of variable
//! occurrences, goes down; the result is locally minimal for these moves.

use gradia_core::syntax::strengthen;
use gradia_core::Term;

#[derive(Clone, Copy, Debug)]
enum Move {
    Child(usize),
    UnitTm,
    UnitTy,
}

fn children(t: &Term) -> Vec<(Term, usize)> {
    let mut out = Vec::new();
    t.for_each_child(|c, binders| out.push((c.clone(), binders)));
    out
}

fn paths(t: &Term, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    out.push(prefix.clone());
    for (i, (c, _)) in children(t).iter().enumerate() {
        prefix.push(i);
        paths(c, prefix, out);
        prefix.pop();
    }
}

fn replacement(t: &Term, m: Move) -> Option<Term> {
    match m {
        Move::UnitTm => Some(Term::UnitTm),
        Move::UnitTy => Some(Term::UnitTy),
        Move::Child(i) => {
            let (c, binders) = children(t).into_iter().nth(i)?;
            strengthen(&c, binders)
        }
    }
}

fn rewrite(t: &Term, path: &[usize], m: Move) -> Option<Term> {
    let Some((&head, rest)) = path.split_first() else {
        let r = replacement(t, m)?;
        return (r != *t).then_some(r);
    };
    let kids = children(t);
    let (child, _) = kids.get(head)?;
    let new_child = rewrite(child, rest, m)?;
    let mut k = 0;
    Some(t.map_children(|orig, _| {
        let out = if k == head { new_child.clone() } else { orig.clone() };
        k += 1;
        out
    }))
}

/// Total size, then the number of variable occurrences.
fn weight(ts: &[Term]) -> (usize, usize) {
    fn vars(t: &Term) -> usize {
        let mut n = usize::from(matches!(t, Term::Var(_)));
        t.for_each_child(|c, _| n += vars(c));
        n
    }
    (ts.iter().map(Term::size).sum(), ts.iter().map(vars).sum())
}

/// Shrinks `instance` while `fails` keeps holding. `fails` must hold for
/// the input.
pub fn shrink(instance: Vec<Term>, fails: impl Fn(&[Term]) -> bool) -> Vec<Term> {
    let mut cur = instance;
    'outer: loop {
        let mut ps = Vec::new();
        paths(&cur[0], &mut Vec::new(), &mut ps);
        for p in &ps {
            let arity = children(&subterm(&cur[0], p)).len();
            let moves = (0..arity).map(Move::Child).chain([Move::UnitTm, Move::UnitTy]);
            for m in moves {
                let cand: Option<Vec<Term>> = cur
                    .iter()
                    .map(|t| match rewrite(t, p, m) {
                        Some(r) => Some(r),
                        None if subterm_opt(t, p).is_some() => Some(t.clone()),
                        None => None,
                    })
                    .collect();
                let Some(cand) = cand else { continue };
                if weight(&cand) < weight(&cur) && fails(&cand) {
                    cur = cand;
                    continue 'outer;
                }
            }
        }
        return cur;
    }
}

fn subterm_opt(t: &Term, path: &[usize]) -> Option<Term> {
    match path.split_first() {
        None => Some(t.clone()),
        Some((&h, rest)) => subterm_opt(&children(t).get(h)?.0, rest),
    }
}

fn subterm(t: &Term, path: &[usize]) -> Term {
    subterm_opt(t, path).unwrap_or(Term::UnitTm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shrinks_to_the_offending_node() {
        let bad = Term::proj1(Term::UnitTm);
        let t = Term::pair(Term::app(Term::UnitTm, bad.clone()), Term::pair(Term::UnitTm, Term::UnitTm));
        let contains = |t: &Term| format!("{t:?}").contains("Proj1");
        let got = shrink(vec![t], |ts| contains(&ts[0]));
        assert_eq!(got, vec![bad]);
    }
}
