//! Deciding sets of `==` / `!=` literals.
//!
//! Atoms are treated as unification variables over terms built from `~` and
//! `&`. Asserting `P == Q` unifies the two sides: the pattern axioms are the
//! decomposition rules, a `~` meeting a `&` is a clash, and the occurs check
//! enforces non-circularity. Bindings are kept triangular (an image may
//! mention bound atoms) and every binding is justified by a [`Derivation`],
//! so failures come with a replayable witness.

mod derivation;
mod literals;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::models::{validate, Model, PreModel, World};
use crate::syntax::{Atom, BoolForm, OccSubst};

pub use derivation::{Derivation, Fact, ReplayError, Rule};
pub use literals::{parse_literals, Literal, LiteralError, Sign};

/// `merge(P, Q)`: the common refinement of two formulas asserted to be
/// equivalent, or `None` when a `~` meets a `&`.
pub fn merge(p: &BoolForm, q: &BoolForm) -> Option<BoolForm> {
    match (p, q) {
        (BoolForm::Atom(a), BoolForm::Atom(b)) => Some(BoolForm::Atom(a.min(b).clone())),
        (BoolForm::Atom(_), other) | (other, BoolForm::Atom(_)) => Some(other.clone()),
        (BoolForm::Neg(x), BoolForm::Neg(y)) => Some(merge(x, y)?.not()),
        (BoolForm::And(x1, x2), BoolForm::And(y1, y2)) => Some(merge(x1, y1)?.and(merge(x2, y2)?)),
        _ => None,
    }
}

/// The longest formula, and among those the least in structural order.
pub fn pick<'a>(set: impl IntoIterator<Item = &'a BoolForm>) -> Option<&'a BoolForm> {
    set.into_iter()
        .min_by(|a, b| b.length().cmp(&a.length()).then_with(|| a.cmp(b)))
}

/// A derivation ending in a circular formula `c == S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularWitness {
    pub derivation: Derivation,
}

/// A derivation ending in `~P == (Q & R)` or `(Q & R) == ~P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClashWitness {
    pub derivation: Derivation,
}

impl CircularWitness {
    pub fn conclusion(&self) -> (&BoolForm, &BoolForm) {
        let f = self.derivation.conclusion().expect("witness is never empty");
        (&f.left, &f.right)
    }
}

impl ClashWitness {
    pub fn conclusion(&self) -> (&BoolForm, &BoolForm) {
        let f = self.derivation.conclusion().expect("witness is never empty");
        (&f.left, &f.right)
    }
}

/// Why a set of equivalences is inconsistent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Conflict {
    Clash(ClashWitness),
    Circular(CircularWitness),
}

impl Conflict {
    pub fn derivation(&self) -> &Derivation {
        match self {
            Conflict::Clash(w) => &w.derivation,
            Conflict::Circular(w) => &w.derivation,
        }
    }
}

impl fmt::Display for Conflict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, (l, r)) = match self {
            Conflict::Clash(w) => ("pattern mismatch", w.conclusion()),
            Conflict::Circular(w) => ("circular", w.conclusion()),
        };
        write!(f, "{kind}: {l} == {r}")
    }
}

/// A unification state over atoms.
///
/// Each atom is either unbound or bound to an image together with the fact
/// proving `atom == image`. Atom-to-atom bindings always point from the
/// larger atom to the smaller one, so the unbound atom a class of atoms ends
/// in is its alphabetically least member.
#[derive(Debug, Clone, Default)]
pub struct DefState {
    derivation: Derivation,
    bindings: BTreeMap<Atom, (BoolForm, usize)>,
    // Atoms bound by the assertion in progress, for rolling it back.
    journal: Vec<Atom>,
}

impl DefState {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `p == q`. On a conflict the state is left as it was.
    pub fn assert_equiv(&mut self, p: &BoolForm, q: &BoolForm) -> Result<(), Conflict> {
        let facts = self.derivation.facts.len();
        self.journal.clear();
        self.derivation.premises.push((p.clone(), q.clone()));
        let premise = self.derivation.premises.len() - 1;
        let fact = self.derivation.push(p.clone(), q.clone(), Rule::Premise(premise));
        let result = self.unify(p.clone(), q.clone(), fact);
        if result.is_err() {
            for a in self.journal.drain(..) {
                self.bindings.remove(&a);
            }
            self.derivation.facts.truncate(facts);
            self.derivation.premises.pop();
        }
        result
    }

    pub fn derivation(&self) -> &Derivation {
        &self.derivation
    }

    /// The current bindings with the index of the fact justifying each.
    pub fn bindings(&self) -> impl Iterator<Item = (&Atom, &BoolForm, usize)> {
        self.bindings.iter().map(|(a, (t, f))| (a, t, *f))
    }

    pub fn is_bound(&self, a: &Atom) -> bool {
        self.bindings.contains_key(a)
    }

    /// Replaces every atom by its fully resolved binding; unbound atoms stay.
    pub fn resolve(&self, p: &BoolForm) -> BoolForm {
        p.map_atoms(&mut |a| match self.bindings.get(a) {
            Some((t, _)) => self.resolve(t),
            None => BoolForm::Atom(a.clone()),
        })
    }

    fn walk_left(&mut self, mut s: BoolForm, t: &BoolForm, mut fact: usize) -> (BoolForm, usize) {
        while let Some((img, bf)) = s.as_atom().and_then(|a| self.bindings.get(a)).cloned() {
            let back = self.derivation.push(img.clone(), s.clone(), Rule::Sym(bf));
            fact = self.derivation.push(img.clone(), t.clone(), Rule::Trans(back, fact));
            s = img;
        }
        (s, fact)
    }

    fn walk_right(&mut self, s: &BoolForm, mut t: BoolForm, mut fact: usize) -> (BoolForm, usize) {
        while let Some((img, bf)) = t.as_atom().and_then(|a| self.bindings.get(a)).cloned() {
            fact = self.derivation.push(s.clone(), img.clone(), Rule::Trans(fact, bf));
            t = img;
        }
        (t, fact)
    }

    // `fact` proves `s == t`.
    fn unify(&mut self, s: BoolForm, t: BoolForm, fact: usize) -> Result<(), Conflict> {
        let (s, fact) = self.walk_left(s, &t, fact);
        let (t, fact) = self.walk_right(&s, t, fact);
        if s == t {
            return Ok(());
        }
        match (&s, &t) {
            (BoolForm::Atom(a), BoolForm::Atom(b)) => {
                if a < b {
                    let sym = self.derivation.push(t.clone(), s.clone(), Rule::Sym(fact));
                    self.insert(b.clone(), s, sym);
                } else {
                    self.insert(a.clone(), t, fact);
                }
                Ok(())
            }
            (BoolForm::Atom(a), _) => self.bind(a.clone(), t, fact),
            (_, BoolForm::Atom(b)) => {
                let sym = self.derivation.push(t.clone(), s.clone(), Rule::Sym(fact));
                self.bind(b.clone(), s, sym)
            }
            (BoolForm::Neg(x), BoolForm::Neg(y)) => {
                let (x, y) = ((**x).clone(), (**y).clone());
                let inner = self.derivation.push(x.clone(), y.clone(), Rule::PatNeg(fact));
                self.unify(x, y, inner)
            }
            (BoolForm::And(x1, x2), BoolForm::And(y1, y2)) => {
                let (x1, x2, y1, y2) = ((**x1).clone(), (**x2).clone(), (**y1).clone(), (**y2).clone());
                let l = self.derivation.push(x1.clone(), y1.clone(), Rule::PatAndLeft(fact));
                let r = self.derivation.push(x2.clone(), y2.clone(), Rule::PatAndRight(fact));
                self.unify(x1, y1, l)?;
                self.unify(x2, y2, r)
            }
            _ => Err(Conflict::Clash(ClashWitness {
                derivation: self.derivation.extract(fact),
            })),
        }
    }

    fn insert(&mut self, a: Atom, image: BoolForm, fact: usize) {
        self.journal.push(a.clone());
        self.bindings.insert(a, (image, fact));
    }

    // `a` is unbound, `t` is compound and `fact` proves `a == t`.
    fn bind(&mut self, a: Atom, t: BoolForm, fact: usize) -> Result<(), Conflict> {
        match self.path_to(&t, &a, &mut BTreeSet::new()) {
            None => {
                self.insert(a, t, fact);
                Ok(())
            }
            Some(path) => Err(Conflict::Circular(self.circular_witness(a, fact, path))),
        }
    }

    /// Bound atoms `y1 .. yk` with `y1` in `from`, each next one in the
    /// image of the previous, and `target` in the image of `yk` (or in
    /// `from` itself when the path is empty).
    fn path_to(&self, from: &BoolForm, target: &Atom, dead: &mut BTreeSet<Atom>) -> Option<Vec<Atom>> {
        let mut leaves = Vec::new();
        from.for_each_leaf(&mut |y| leaves.push(y.clone()));
        if leaves.contains(target) {
            return Some(Vec::new());
        }
        for y in leaves {
            if dead.contains(&y) {
                continue;
            }
            if let Some((img, _)) = self.bindings.get(&y) {
                if let Some(mut rest) = self.path_to(img, target, dead) {
                    rest.insert(0, y);
                    return Some(rest);
                }
            }
            dead.insert(y);
        }
        None
    }

    // The cycle x -> y1 -> .. -> yk -> x is rotated to start at the member
    // whose binding is oldest, then unfolded by occurrence substitutions
    // until the start atom reappears on the right.
    fn circular_witness(&mut self, x: Atom, fact: usize, path: Vec<Atom>) -> CircularWitness {
        let mut members: Vec<(Atom, usize)> = vec![(x, fact)];
        members.extend(path.into_iter().map(|y| {
            let f = self.bindings[&y].1;
            (y, f)
        }));
        let start = (0..members.len()).min_by_key(|&i| members[i].1).unwrap();
        members.rotate_left(start);
        let (c, mut cur) = members[0].clone();
        for (next, def) in &members[1..] {
            let right = &self.derivation.facts[cur].right;
            let index = 1;
            let replacement = self.derivation.facts[*def].right.clone();
            let s = OccSubst::new(index, next.clone(), replacement)
                .apply(right)
                .expect("next cycle member occurs in the current image");
            cur = self.derivation.push(
                BoolForm::Atom(c.clone()),
                s,
                Rule::OccSubst { def: *def, target: cur, index },
            );
        }
        CircularWitness {
            derivation: self.derivation.extract(cur),
        }
    }
}

/// A satisfying single world: a definition for every atom mentioned in the
/// literals and a valuation meeting the model constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub def: BTreeMap<Atom, BoolForm>,
    pub valuation: BTreeMap<Atom, bool>,
}

impl Seed {
    /// The one-world model, with no agents, this seed describes.
    pub fn model(&self) -> Model {
        let vocabulary: Vec<Atom> = self.def.keys().cloned().collect();
        let mut world = World::blank("w0", &vocabulary);
        world.def = self.def.clone();
        world.valuation = self.valuation.clone();
        let pre = PreModel {
            vocabulary,
            agents: Vec::new(),
            worlds: vec![world],
            relations: BTreeMap::new(),
            actual: Some(0),
        };
        validate(pre).expect("seeds satisfy the model constraints")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unsat {
    Conflict(Conflict),
    /// A `!=` literal whose sides resolve to the same formula.
    Disequality { left: BoolForm, right: BoolForm, resolved: BoolForm },
    /// The boolean literals have no model once definitions are unfolded.
    Boolean,
}

impl fmt::Display for Unsat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unsat::Conflict(c) => write!(f, "{c}"),
            Unsat::Disequality { left, right, resolved } => {
                write!(f, "{left} != {right} but both unravel to {resolved}")
            }
            Unsat::Boolean => write!(f, "boolean literals are contradictory"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Sat(Seed),
    Unsat(Unsat),
}

impl Verdict {
    pub fn is_sat(&self) -> bool {
        matches!(self, Verdict::Sat(_))
    }
}

/// Decides whether one world can satisfy all `literals`.
pub fn literal_sat(literals: &[Literal]) -> Verdict {
    let mut state = DefState::new();
    for lit in literals {
        if let Literal::Equiv(Sign::Pos, p, q) = lit {
            if let Err(c) = state.assert_equiv(p, q) {
                return Verdict::Unsat(Unsat::Conflict(c));
            }
        }
    }
    for lit in literals {
        if let Literal::Equiv(Sign::Neg, p, q) = lit {
            let (rp, rq) = (state.resolve(p), state.resolve(q));
            if rp == rq {
                return Verdict::Unsat(Unsat::Disequality {
                    left: p.clone(),
                    right: q.clone(),
                    resolved: rp,
                });
            }
        }
    }
    let props: Vec<BoolForm> = literals
        .iter()
        .filter_map(|l| match l {
            Literal::Prop(p) => Some(state.resolve(p)),
            _ => None,
        })
        .collect();
    let mut vars = BTreeSet::new();
    for p in &props {
        p.for_each_leaf(&mut |a| {
            vars.insert(a.clone());
        });
    }
    let vars: Vec<Atom> = vars.into_iter().collect();
    let mut assignment = BTreeMap::new();
    if !solve(&props, &vars, &mut assignment) {
        return Verdict::Unsat(Unsat::Boolean);
    }

    let mut vocabulary = BTreeSet::new();
    for lit in literals {
        lit.collect_atoms(&mut vocabulary);
    }
    let def: BTreeMap<Atom, BoolForm> = vocabulary
        .into_iter()
        .map(|a| {
            let image = state.resolve(&BoolForm::Atom(a.clone()));
            (a, image)
        })
        .collect();
    let valuation = def
        .iter()
        .map(|(a, image)| {
            let v = image.eval(&mut |b| assignment.get(b).copied().unwrap_or(false));
            (a.clone(), v)
        })
        .collect();
    Verdict::Sat(Seed { def, valuation })
}

// Backtracking search, trying `false` first so unconstrained atoms end up
// false.
fn solve(props: &[BoolForm], vars: &[Atom], assignment: &mut BTreeMap<Atom, bool>) -> bool {
    if props.iter().any(|p| partial_eval(p, assignment) == Some(false)) {
        return false;
    }
    let Some((first, rest)) = vars.split_first() else {
        return true;
    };
    for value in [false, true] {
        assignment.insert(first.clone(), value);
        if solve(props, rest, assignment) {
            return true;
        }
    }
    assignment.remove(first);
    false
}

fn partial_eval(p: &BoolForm, assignment: &BTreeMap<Atom, bool>) -> Option<bool> {
    match p {
        BoolForm::Atom(a) => assignment.get(a).copied(),
        BoolForm::Neg(x) => partial_eval(x, assignment).map(|v| !v),
        BoolForm::And(x, y) => match (partial_eval(x, assignment), partial_eval(y, assignment)) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        },
    }
}
