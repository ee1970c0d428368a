//! Forward closure of a set of `==` facts under symmetry, transitivity, the
//! pattern decompositions and atomic occurrence substitution, keeping only
//! formulas up to a length bound.

use std::collections::{HashMap, HashSet};

use paldef::syntax::{is_circular, OccSubst};
use paldef::{Atom, BoolForm};

pub const LENGTH_BOUND: usize = 21;
const FACT_CAP: usize = 20_000;

#[derive(Debug)]
pub enum Outcome {
    /// A circular formula or a pattern mismatch was derived.
    Inconsistent(BoolForm, BoolForm),
    /// Saturated without a contradiction; holds every derived fact.
    Consistent(Closure),
    /// Gave up at the fact cap.
    Inconclusive,
}

#[derive(Debug, Default)]
pub struct Closure {
    facts: Vec<(BoolForm, BoolForm)>,
    seen: HashSet<(BoolForm, BoolForm)>,
    by_left: HashMap<BoolForm, Vec<BoolForm>>,
}

impl Closure {
    /// Everything derivably equivalent to `p`, including `p`.
    pub fn class(&self, p: &BoolForm) -> Vec<BoolForm> {
        let mut out = vec![p.clone()];
        for q in self.by_left.get(p).into_iter().flatten() {
            if !out.contains(q) {
                out.push(q.clone());
            }
        }
        out
    }
}

fn mismatch(p: &BoolForm, q: &BoolForm) -> bool {
    matches!(
        (p, q),
        (BoolForm::Neg(_), BoolForm::And(..)) | (BoolForm::And(..), BoolForm::Neg(_))
    )
}

pub fn saturate(premises: &[(BoolForm, BoolForm)]) -> Outcome {
    let mut c = Closure::default();
    let mut todo: Vec<(BoolForm, BoolForm)> = premises.to_vec();
    while let Some((p, q)) = todo.pop() {
        if p.length() > LENGTH_BOUND || q.length() > LENGTH_BOUND {
            continue;
        }
        if !c.seen.insert((p.clone(), q.clone())) {
            continue;
        }
        if is_circular(&p, &q) || mismatch(&p, &q) {
            return Outcome::Inconsistent(p, q);
        }
        if c.facts.len() >= FACT_CAP {
            return Outcome::Inconclusive;
        }
        c.facts.push((p.clone(), q.clone()));
        c.by_left.entry(p.clone()).or_default().push(q.clone());

        todo.push((q.clone(), p.clone()));
        for r in c.by_left.get(&q).into_iter().flatten() {
            todo.push((p.clone(), r.clone()));
        }
        for o in c.by_left.get(&p).into_iter().flatten() {
            todo.push((o.clone(), q.clone()));
        }
        match (&p, &q) {
            (BoolForm::Neg(x), BoolForm::Neg(y)) => todo.push(((**x).clone(), (**y).clone())),
            (BoolForm::And(x1, x2), BoolForm::And(y1, y2)) => {
                todo.push(((**x1).clone(), (**y1).clone()));
                todo.push(((**x2).clone(), (**y2).clone()));
            }
            _ => {}
        }
        // The new fact as a definition used inside older facts.
        if let BoolForm::Atom(a) = &p {
            for (s, t) in &c.facts {
                substitute_all(s, t, a, &q, &mut todo);
            }
        }
        // Older atomic facts used inside the new one.
        let mut atoms: Vec<Atom> = Vec::new();
        q.for_each_leaf(&mut |a| {
            if !atoms.contains(a) {
                atoms.push(a.clone());
            }
        });
        for a in atoms {
            let key = BoolForm::Atom(a.clone());
            for r in c.by_left.get(&key).into_iter().flatten() {
                substitute_all(&p, &q, &a, r, &mut todo);
            }
        }
    }
    Outcome::Consistent(c)
}

fn substitute_all(s: &BoolForm, t: &BoolForm, a: &Atom, r: &BoolForm, todo: &mut Vec<(BoolForm, BoolForm)>) {
    for k in 1..=t.occurrences(a) {
        if let Ok(t2) = OccSubst::new(k, a.clone(), r.clone()).apply(t) {
            todo.push((s.clone(), t2));
        }
    }
}
