//! Seeded generators for models and formulas, used by the property suites
//! and the command line's randomized checks.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::models::{validate, Model, PreModel, World};
use crate::syntax::{Agent, Atom, BoolForm, Form};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Shape of generated models.
#[derive(Debug, Clone)]
pub struct ModelShape {
    pub atoms: Vec<Atom>,
    pub agents: Vec<Agent>,
    pub max_worlds: usize,
    pub max_def_len: usize,
    /// Chance of each ordered pair being an edge, per agent.
    pub edge_probability: f64,
}

impl ModelShape {
    /// Up to 4 worlds over `p, q, r, s` (first `atoms` of them), agents `i`
    /// and `j`, definitions of length at most 5.
    pub fn small(atoms: usize) -> Self {
        let names = ["p", "q", "r", "s"];
        ModelShape {
            atoms: names[..atoms].iter().map(|n| Atom::new(n).unwrap()).collect(),
            agents: ["i", "j"].iter().map(|n| Agent::new(n).unwrap()).collect(),
            max_worlds: 4,
            max_def_len: 5,
            edge_probability: 0.4,
        }
    }
}

/// A premodel meeting the non-circularity constraint whose valuation is
/// chosen freely, so it may break the other constraint.
pub fn premodel<R: Rng>(rng: &mut R, shape: &ModelShape) -> PreModel {
    build(rng, shape, false)
}

/// A model: like [`premodel`] but the valuation of defined atoms follows
/// their definitions.
pub fn model<R: Rng>(rng: &mut R, shape: &ModelShape) -> Model {
    validate(build(rng, shape, true)).expect("generated models satisfy the model constraints")
}

fn build<R: Rng>(rng: &mut R, shape: &ModelShape, derive_valuation: bool) -> PreModel {
    let n = rng.gen_range(1..=shape.max_worlds);
    let mut worlds = Vec::with_capacity(n);
    for w in 0..n {
        let mut base: Vec<Atom> = shape.atoms.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
        if base.is_empty() {
            base.push(shape.atoms.choose(rng).expect("at least one atom").clone());
        }
        let mut world = World::blank(format!("w{w}"), &shape.atoms);
        for a in &base {
            world.valuation.insert(a.clone(), rng.gen_bool(0.5));
        }
        for a in shape.atoms.iter().filter(|a| !base.contains(a)) {
            let image = bool_form(rng, &base, shape.max_def_len);
            let value = if derive_valuation {
                image.eval(&mut |b| world.valuation[b])
            } else {
                rng.gen_bool(0.5)
            };
            world.def.insert(a.clone(), image);
            world.valuation.insert(a.clone(), value);
        }
        worlds.push(world);
    }
    let relations: BTreeMap<Agent, Vec<(usize, usize)>> = shape
        .agents
        .iter()
        .map(|i| {
            let pairs = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(shape.edge_probability))
                .collect();
            (i.clone(), pairs)
        })
        .collect();
    PreModel {
        vocabulary: shape.atoms.clone(),
        agents: shape.agents.clone(),
        worlds,
        relations,
        actual: Some(0),
    }
}

/// A boolean formula over `atoms` of length at most `max_len` (at least 1).
pub fn bool_form<R: Rng>(rng: &mut R, atoms: &[Atom], max_len: usize) -> BoolForm {
    let atom = |rng: &mut R| BoolForm::Atom(atoms.choose(rng).expect("at least one atom").clone());
    if max_len < 2 {
        return atom(rng);
    }
    match rng.gen_range(0..3) {
        0 => atom(rng),
        1 => bool_form(rng, atoms, max_len - 1).not(),
        _ if max_len >= 5 => {
            let left = rng.gen_range(1..=max_len - 4);
            let l = bool_form(rng, atoms, left);
            let r = bool_form(rng, atoms, max_len - 3 - l.length());
            l.and(r)
        }
        _ => bool_form(rng, atoms, max_len - 1).not(),
    }
}

/// Which operators generated formulas may use.
#[derive(Debug, Clone)]
pub struct FormShape {
    pub atoms: Vec<Atom>,
    pub agents: Vec<Agent>,
    /// Nesting depth of the full-language connectives.
    pub depth: usize,
    /// Length bound for boolean operands of `==`, `kd` and `:=`.
    pub bool_len: usize,
    pub announcements: bool,
    pub definitions: bool,
}

impl FormShape {
    pub fn new(atoms: &[Atom], agents: &[Agent], depth: usize) -> Self {
        FormShape {
            atoms: atoms.to_vec(),
            agents: agents.to_vec(),
            depth,
            bool_len: 5,
            announcements: true,
            definitions: false,
        }
    }
}

pub fn form<R: Rng>(rng: &mut R, shape: &FormShape) -> Form {
    if shape.depth == 0 {
        return leaf(rng, shape);
    }
    let sub = FormShape {
        depth: shape.depth - 1,
        ..shape.clone()
    };
    let choices = if shape.announcements { 6 } else { 5 };
    match rng.gen_range(0..choices) {
        0 => leaf(rng, shape),
        1 => form(rng, &sub).not(),
        2 => form(rng, &sub).and(form(rng, &sub)),
        3 => form(rng, &sub).implies(form(rng, &sub)),
        4 => Form::modal(shape.agents.choose(rng).unwrap().clone(), form(rng, &sub)),
        _ => Form::ann(form(rng, &sub), form(rng, &sub)),
    }
}

fn leaf<R: Rng>(rng: &mut R, shape: &FormShape) -> Form {
    let choices = if shape.definitions { 4 } else { 2 };
    let p = |rng: &mut R| bool_form(rng, &shape.atoms, shape.bool_len);
    match rng.gen_range(0..choices) {
        0 => Form::Atom(shape.atoms.choose(rng).unwrap().clone()),
        1 => Form::equiv(p(rng), p(rng)),
        2 => Form::Kd(shape.agents.choose(rng).unwrap().clone(), p(rng)),
        _ => Form::DefIs(shape.atoms.choose(rng).unwrap().clone(), p(rng)),
    }
}
