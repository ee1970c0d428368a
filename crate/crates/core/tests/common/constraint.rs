//! The first model constraint in its quantified form, checked by brute force
//! over all boolean formulas up to a length bound.

use std::collections::HashMap;

use paldef::models::{PreModel, World};
use paldef::syntax::enumerate_bool;
use paldef::{Atom, BoolForm};

fn unravel(w: &World, p: &BoolForm) -> BoolForm {
    p.map_atoms(&mut |a| w.def[a].clone())
}

/// Some `P`, `Q` of length at most `max_len` with equal unravelings but
/// different truth values at `w`.
pub fn counterexample(vocab: &[Atom], w: &World, max_len: usize) -> Option<(BoolForm, BoolForm)> {
    let mut seen: HashMap<BoolForm, (BoolForm, bool)> = HashMap::new();
    for p in enumerate_bool(vocab, max_len) {
        let value = p.eval(&mut |a| w.valuation[a]);
        match seen.get(&unravel(w, &p)) {
            Some((q, v)) if *v != value => return Some((q.clone(), p)),
            Some(_) => {}
            None => {
                seen.insert(unravel(w, &p), (p, value));
            }
        }
    }
    None
}

/// Per world: does the quantified constraint hold up to `max_len`?
pub fn quantified(pre: &PreModel, max_len: usize) -> Vec<bool> {
    pre.worlds
        .iter()
        .map(|w| counterexample(&pre.vocabulary, w, max_len).is_none())
        .collect()
}
