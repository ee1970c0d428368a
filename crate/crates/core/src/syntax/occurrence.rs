use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::{Atom, BoolForm};

/// `[k: p |-> R]`: replace the `k`-th occurrence (1-based, left to right)
/// of `p` by `R`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OccSubst {
    pub index: usize,
    pub atom: Atom,
    pub replacement: BoolForm,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubstError {
    #[error("occurrence {index} of `{atom}` requested but the target has {available}")]
    OutOfRange {
        index: usize,
        atom: Atom,
        available: usize,
    },
    #[error("occurrence {index} of `{atom}` is targeted twice")]
    DuplicateTarget { index: usize, atom: Atom },
}

impl OccSubst {
    pub fn new(index: usize, atom: Atom, replacement: BoolForm) -> Self {
        OccSubst {
            index,
            atom,
            replacement,
        }
    }

    pub fn apply(&self, target: &BoolForm) -> Result<BoolForm, SubstError> {
        apply_simultaneous(std::slice::from_ref(self), target)
    }
}

impl fmt::Display for OccSubst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}: {} |-> {}]", self.index, self.atom, self.replacement)
    }
}

/// Applies several occurrence substitutions at once. Indices refer to the
/// occurrences in the original `target`.
pub fn apply_simultaneous(substs: &[OccSubst], target: &BoolForm) -> Result<BoolForm, SubstError> {
    let mut wanted: BTreeMap<(&Atom, usize), &BoolForm> = BTreeMap::new();
    for s in substs {
        let available = target.occurrences(&s.atom);
        if s.index == 0 || s.index > available {
            return Err(SubstError::OutOfRange {
                index: s.index,
                atom: s.atom.clone(),
                available,
            });
        }
        if wanted.insert((&s.atom, s.index), &s.replacement).is_some() {
            return Err(SubstError::DuplicateTarget {
                index: s.index,
                atom: s.atom.clone(),
            });
        }
    }
    let mut seen: BTreeMap<Atom, usize> = BTreeMap::new();
    Ok(target.map_atoms(&mut |a| {
        let k = seen.entry(a.clone()).or_insert(0);
        *k += 1;
        match wanted.get(&(a, *k)) {
            Some(r) => (*r).clone(),
            None => BoolForm::Atom(a.clone()),
        }
    }))
}
