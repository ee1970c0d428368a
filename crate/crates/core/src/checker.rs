//! Model checking for the full language.
//!
//! Announcements are evaluated by shrinking a mask of live worlds instead of
//! copying the model; valuations and definitions are world-local, so this
//! coincides with evaluating in [`Model::restrict`].

use std::collections::BTreeSet;

use crate::models::{Model, ModelError};
use crate::syntax::{BoolForm, Form};

/// A formula to evaluate at a world of a model.
#[derive(Debug, Clone, Copy)]
pub struct EvalQuery<'a> {
    pub model: &'a Model,
    pub world: usize,
    pub formula: &'a Form,
}

impl EvalQuery<'_> {
    pub fn eval(&self) -> Result<bool, ModelError> {
        eval(self.model, self.world, self.formula)
    }
}

/// Checks that every atom and agent of `f` is declared by the model.
pub fn check_signature(model: &Model, f: &Form) -> Result<(), ModelError> {
    if let Some(a) = f.vocabulary().into_iter().find(|a| !model.has_atom(a)) {
        return Err(ModelError::UnknownAtom(a.to_string()));
    }
    if let Some(i) = f.agents().into_iter().find(|i| !model.has_agent(i)) {
        return Err(ModelError::UnknownAgent(i.to_string()));
    }
    Ok(())
}

/// Truth of `f` at world `w`.
pub fn eval(model: &Model, w: usize, f: &Form) -> Result<bool, ModelError> {
    if w >= model.world_count() {
        return Err(ModelError::WorldOutOfRange(w));
    }
    check_signature(model, f)?;
    let alive = vec![true; model.world_count()];
    Ok(Evaluator { model }.holds(&alive, w, f))
}

/// Like [`eval`], addressing the world by id.
pub fn eval_at(model: &Model, world: &str, f: &Form) -> Result<bool, ModelError> {
    let w = model
        .world_index(world)
        .ok_or_else(|| ModelError::UnknownWorld(world.to_string()))?;
    eval(model, w, f)
}

/// The worlds where `f` holds.
pub fn eval_global(model: &Model, f: &Form) -> Result<BTreeSet<usize>, ModelError> {
    check_signature(model, f)?;
    let alive = vec![true; model.world_count()];
    let ev = Evaluator { model };
    Ok((0..model.world_count())
        .filter(|&w| ev.holds(&alive, w, f))
        .collect())
}

/// The extension of every distinct subformula of `f` in the whole model,
/// innermost first. Subformulas below an announcement are reported in the
/// unrestricted model.
pub fn extension_table(model: &Model, f: &Form) -> Result<Vec<(Form, BTreeSet<usize>)>, ModelError> {
    check_signature(model, f)?;
    f.subformulas()
        .into_iter()
        .map(|g| Ok((g.clone(), eval_global(model, g)?)))
        .collect()
}

struct Evaluator<'m> {
    model: &'m Model,
}

impl Evaluator<'_> {
    fn holds(&self, alive: &[bool], w: usize, f: &Form) -> bool {
        let m = self.model;
        match f {
            Form::Atom(a) => m.valuation(w, a).expect("signature checked"),
            Form::Equiv(p, q) => same_unraveling(m, w, p, w, q),
            Form::Neg(x) => !self.holds(alive, w, x),
            Form::And(x, y) => self.holds(alive, w, x) && self.holds(alive, w, y),
            Form::Modal(i, x) => m
                .successors(i, w)
                .expect("signature checked")
                .iter()
                .filter(|&&v| alive[v])
                .all(|&v| self.holds(alive, v, x)),
            Form::Ann(announced, x) => {
                if !self.holds(alive, w, announced) {
                    return true;
                }
                let next: Vec<bool> = (0..alive.len())
                    .map(|v| alive[v] && self.holds(alive, v, announced))
                    .collect();
                self.holds(&next, w, x)
            }
            Form::Kd(i, p) => m
                .successors(i, w)
                .expect("signature checked")
                .iter()
                .filter(|&&v| alive[v])
                .all(|&v| same_unraveling(m, w, p, v, p)),
            Form::DefIs(a, p) => m.definition(w, a).expect("signature checked") == p,
        }
    }
}

/// Whether `p` unraveled at `w1` is syntactically identical to `q` unraveled
/// at `w2`, compared without building either unraveling. Relies on
/// definitions only mentioning self-evident atoms, which every model
/// guarantees.
pub fn same_unraveling(m: &Model, w1: usize, p: &BoolForm, w2: usize, q: &BoolForm) -> bool {
    let def = |w: usize, a| m.definition(w, a).expect("atom in vocabulary");
    match (p, q) {
        (BoolForm::Atom(a), _) => matches_unraveled(def(w1, a), m, w2, q),
        (_, BoolForm::Atom(b)) => matches_unraveled(def(w2, b), m, w1, p),
        (BoolForm::Neg(x), BoolForm::Neg(y)) => same_unraveling(m, w1, x, w2, y),
        (BoolForm::And(x1, x2), BoolForm::And(y1, y2)) => {
            same_unraveling(m, w1, x1, w2, y1) && same_unraveling(m, w1, x2, w2, y2)
        }
        _ => false,
    }
}

// `fixed` is already unraveled; compare it against the unraveling of `q`.
fn matches_unraveled(fixed: &BoolForm, m: &Model, w: usize, q: &BoolForm) -> bool {
    match (fixed, q) {
        (_, BoolForm::Atom(b)) => fixed == m.definition(w, b).expect("atom in vocabulary"),
        (BoolForm::Neg(x), BoolForm::Neg(y)) => matches_unraveled(x, m, w, y),
        (BoolForm::And(x1, x2), BoolForm::And(y1, y2)) => {
            matches_unraveled(x1, m, w, y1) && matches_unraveled(x2, m, w, y2)
        }
        _ => false,
    }
}
