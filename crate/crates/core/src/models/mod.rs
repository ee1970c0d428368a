//! Kripke models whose worlds also carry a definition for every atom.

mod file;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::syntax::{Agent, Atom, BoolForm};

pub use file::{load, model_from_json, model_to_json, save};

/// One world: its valuation and its definition function, both total on the
/// declared vocabulary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct World {
    pub id: String,
    pub valuation: BTreeMap<Atom, bool>,
    pub def: BTreeMap<Atom, BoolForm>,
}

impl World {
    /// A world where every atom is self-evident and false.
    pub fn blank(id: impl Into<String>, vocabulary: &[Atom]) -> Self {
        World {
            id: id.into(),
            valuation: vocabulary.iter().map(|a| (a.clone(), false)).collect(),
            def: vocabulary
                .iter()
                .map(|a| (a.clone(), BoolForm::Atom(a.clone())))
                .collect(),
        }
    }
}

/// A premodel: worlds, per-agent relations, valuation and definitions.
/// Relations are stored as pairs of world indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreModel {
    pub vocabulary: Vec<Atom>,
    pub agents: Vec<Agent>,
    pub worlds: Vec<World>,
    pub relations: BTreeMap<Agent, Vec<(usize, usize)>>,
    pub actual: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("model has no worlds")]
    NoWorlds,
    #[error("duplicate world id `{0}`")]
    DuplicateWorld(String),
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("world index {0} out of range")]
    WorldOutOfRange(usize),
    #[error("unknown agent `{0}`")]
    UnknownAgent(String),
    #[error("atom `{0}` is not in the model's vocabulary")]
    UnknownAtom(String),
    #[error("duplicate declaration of `{0}`")]
    DuplicateDeclaration(String),
    #[error("world `{world}` has no valuation for `{atom}`")]
    MissingValuation { world: String, atom: String },
    #[error("world `{world}` has no definition for `{atom}`")]
    MissingDefinition { world: String, atom: String },
    #[error("invalid name: {0}")]
    InvalidName(String),
    #[error("cannot parse definition of `{atom}` at world `{world}`: {message}")]
    BadDefinition {
        world: String,
        atom: String,
        message: String,
    },
    #[error("malformed model file: {0}")]
    Json(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

/// A reason why a premodel is not a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Structure(ModelError),
    /// `atom` occurs in the definition of `defined` at `world`, but is not
    /// self-evident there.
    Circular {
        world: String,
        defined: Atom,
        atom: Atom,
    },
    /// The truth value of `atom` differs from the truth value of its
    /// unraveled definition, so `atom == def(atom)` relates formulas with
    /// different truth values.
    TruthMismatch { world: String, atom: Atom },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Structure(e) => write!(f, "{e}"),
            Violation::Circular {
                world,
                defined,
                atom,
            } => write!(
                f,
                "world `{world}`: `{atom}` occurs in the definition of `{defined}` but is not self-evident"
            ),
            Violation::TruthMismatch { world, atom } => write!(
                f,
                "world `{world}`: `{atom}` and its unraveled definition have different truth values"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "not a model ({} violation(s)):", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

impl PreModel {
    pub fn world_index(&self, id: &str) -> Option<usize> {
        self.worlds.iter().position(|w| w.id == id)
    }

    /// Checks the structural invariants: at least one world, unique ids,
    /// relations over existing worlds and declared agents, and valuation and
    /// definitions total on (and limited to) the vocabulary.
    pub fn check_structure(&self) -> Result<(), ModelError> {
        if self.worlds.is_empty() {
            return Err(ModelError::NoWorlds);
        }
        let mut seen = BTreeSet::new();
        for w in &self.worlds {
            if !seen.insert(w.id.as_str()) {
                return Err(ModelError::DuplicateWorld(w.id.clone()));
            }
        }
        let vocab: BTreeSet<&Atom> = self.vocabulary.iter().collect();
        if vocab.len() != self.vocabulary.len() {
            return Err(ModelError::DuplicateDeclaration("vocabulary".into()));
        }
        let agents: BTreeSet<&Agent> = self.agents.iter().collect();
        if agents.len() != self.agents.len() {
            return Err(ModelError::DuplicateDeclaration("agents".into()));
        }
        for w in &self.worlds {
            for a in &self.vocabulary {
                if !w.valuation.contains_key(a) {
                    return Err(ModelError::MissingValuation {
                        world: w.id.clone(),
                        atom: a.to_string(),
                    });
                }
                if !w.def.contains_key(a) {
                    return Err(ModelError::MissingDefinition {
                        world: w.id.clone(),
                        atom: a.to_string(),
                    });
                }
            }
            for a in w.valuation.keys().chain(w.def.keys()) {
                if !vocab.contains(a) {
                    return Err(ModelError::UnknownAtom(a.to_string()));
                }
            }
            for d in w.def.values() {
                if let Some(a) = d.vocabulary().into_iter().find(|a| !vocab.contains(a)) {
                    return Err(ModelError::UnknownAtom(a.to_string()));
                }
            }
        }
        for (agent, pairs) in &self.relations {
            if !agents.contains(agent) {
                return Err(ModelError::UnknownAgent(agent.to_string()));
            }
            for &(a, b) in pairs {
                for x in [a, b] {
                    if x >= self.worlds.len() {
                        return Err(ModelError::WorldOutOfRange(x));
                    }
                }
            }
        }
        if let Some(a) = self.actual {
            if a >= self.worlds.len() {
                return Err(ModelError::WorldOutOfRange(a));
            }
        }
        Ok(())
    }

    /// Both model constraints, world by world. The first constraint is
    /// checked through the atom-level criterion `V(p) = V(def(p))`, which is
    /// equivalent to it whenever the second constraint holds.
    pub fn violations(&self) -> Vec<Violation> {
        if let Err(e) = self.check_structure() {
            return vec![Violation::Structure(e)];
        }
        let mut out = Vec::new();
        for w in &self.worlds {
            for (defined, image) in &w.def {
                for atom in image.vocabulary() {
                    let self_evident = matches!(&w.def[&atom], BoolForm::Atom(b) if *b == atom);
                    if !self_evident {
                        out.push(Violation::Circular {
                            world: w.id.clone(),
                            defined: defined.clone(),
                            atom,
                        });
                    }
                }
            }
            for (atom, image) in &w.def {
                let unraveled = image.eval(&mut |a| w.valuation[a]);
                if unraveled != w.valuation[atom] {
                    out.push(Violation::TruthMismatch {
                        world: w.id.clone(),
                        atom: atom.clone(),
                    });
                }
            }
        }
        out
    }
}

/// A premodel that satisfies both model constraints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pre: PreModel,
    agent_index: BTreeMap<Agent, usize>,
    // successors[agent][world]
    successors: Vec<Vec<Vec<usize>>>,
}

/// Checks a premodel against both model constraints.
pub fn validate(pre: PreModel) -> Result<Model, ValidationReport> {
    let violations = pre.violations();
    if !violations.is_empty() {
        return Err(ValidationReport { violations });
    }
    Ok(Model::new_unchecked(pre))
}

impl Model {
    fn new_unchecked(pre: PreModel) -> Self {
        let agent_index: BTreeMap<Agent, usize> = pre
            .agents
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        let mut successors = vec![vec![Vec::new(); pre.worlds.len()]; pre.agents.len()];
        for (agent, pairs) in &pre.relations {
            let i = agent_index[agent];
            for &(a, b) in pairs {
                if !successors[i][a].contains(&b) {
                    successors[i][a].push(b);
                }
            }
        }
        for per_agent in &mut successors {
            for s in per_agent {
                s.sort_unstable();
            }
        }
        Model {
            pre,
            agent_index,
            successors,
        }
    }

    pub fn premodel(&self) -> &PreModel {
        &self.pre
    }

    pub fn into_premodel(self) -> PreModel {
        self.pre
    }

    pub fn worlds(&self) -> &[World] {
        &self.pre.worlds
    }

    pub fn world_count(&self) -> usize {
        self.pre.worlds.len()
    }

    pub fn world_id(&self, w: usize) -> &str {
        &self.pre.worlds[w].id
    }

    pub fn world_index(&self, id: &str) -> Option<usize> {
        self.pre.world_index(id)
    }

    pub fn actual(&self) -> Option<usize> {
        self.pre.actual
    }

    pub fn vocabulary(&self) -> &[Atom] {
        &self.pre.vocabulary
    }

    pub fn agents(&self) -> &[Agent] {
        &self.pre.agents
    }

    pub fn has_atom(&self, a: &Atom) -> bool {
        self.pre.vocabulary.contains(a)
    }

    pub fn has_agent(&self, a: &Agent) -> bool {
        self.agent_index.contains_key(a)
    }

    /// Successors of `w` for `agent`, in increasing index order.
    pub fn successors(&self, agent: &Agent, w: usize) -> Result<&[usize], ModelError> {
        let i = self
            .agent_index
            .get(agent)
            .ok_or_else(|| ModelError::UnknownAgent(agent.to_string()))?;
        Ok(&self.successors[*i][w])
    }

    pub fn valuation(&self, w: usize, a: &Atom) -> Result<bool, ModelError> {
        self.pre.worlds[w]
            .valuation
            .get(a)
            .copied()
            .ok_or_else(|| ModelError::UnknownAtom(a.to_string()))
    }

    pub fn definition(&self, w: usize, a: &Atom) -> Result<&BoolForm, ModelError> {
        self.pre.worlds[w]
            .def
            .get(a)
            .ok_or_else(|| ModelError::UnknownAtom(a.to_string()))
    }

    fn check_world(&self, w: usize) -> Result<(), ModelError> {
        if w < self.world_count() {
            Ok(())
        } else {
            Err(ModelError::WorldOutOfRange(w))
        }
    }

    /// Replaces every atom of `p` by its definition at `w`. On a model this
    /// is a fixpoint: unraveling twice gives the same formula.
    pub fn unravel(&self, w: usize, p: &BoolForm) -> Result<BoolForm, ModelError> {
        self.check_world(w)?;
        let def = &self.pre.worlds[w].def;
        let mut missing = None;
        let out = p.map_atoms(&mut |a| match def.get(a) {
            Some(d) => d.clone(),
            None => {
                missing = Some(a.clone());
                BoolForm::Atom(a.clone())
            }
        });
        match missing {
            Some(a) => Err(ModelError::UnknownAtom(a.to_string())),
            None => Ok(out),
        }
    }

    pub fn eval_bool(&self, w: usize, p: &BoolForm) -> Result<bool, ModelError> {
        self.check_world(w)?;
        let val = &self.pre.worlds[w].valuation;
        let mut missing = None;
        let out = p.eval(&mut |a| match val.get(a) {
            Some(v) => *v,
            None => {
                missing = Some(a.clone());
                false
            }
        });
        match missing {
            Some(a) => Err(ModelError::UnknownAtom(a.to_string())),
            None => Ok(out),
        }
    }

    /// The submodel on `keep`, with valuations and definitions preserved
    /// pointwise. World order follows the original model. The designated
    /// world is kept only if it survives.
    pub fn restrict(&self, keep: &BTreeSet<usize>) -> Result<Model, ModelError> {
        if let Some(&w) = keep.iter().find(|&&w| w >= self.world_count()) {
            return Err(ModelError::WorldOutOfRange(w));
        }
        let new_index: BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let worlds = keep.iter().map(|&w| self.pre.worlds[w].clone()).collect();
        let relations = self
            .pre
            .relations
            .iter()
            .map(|(agent, pairs)| {
                let kept = pairs
                    .iter()
                    .filter_map(|(a, b)| Some((*new_index.get(a)?, *new_index.get(b)?)))
                    .collect();
                (agent.clone(), kept)
            })
            .collect();
        let pre = PreModel {
            vocabulary: self.pre.vocabulary.clone(),
            agents: self.pre.agents.clone(),
            worlds,
            relations,
            actual: self.pre.actual.and_then(|a| new_index.get(&a).copied()),
        };
        // Both constraints are per world, so restriction preserves them.
        Ok(Model::new_unchecked(pre))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_bool;

    fn at(s: &str) -> Atom {
        Atom::new(s).unwrap()
    }

    fn b(s: &str) -> BoolForm {
        parse_bool(s).unwrap()
    }

    fn single_world(defs: &[(&str, &str)], vals: &[(&str, bool)]) -> PreModel {
        let vocab: Vec<Atom> = vals.iter().map(|(a, _)| at(a)).collect();
        let mut w = World::blank("w", &vocab);
        for (a, v) in vals {
            w.valuation.insert(at(a), *v);
        }
        for (a, d) in defs {
            w.def.insert(at(a), b(d));
        }
        PreModel {
            vocabulary: vocab,
            agents: vec![],
            worlds: vec![w],
            relations: BTreeMap::new(),
            actual: Some(0),
        }
    }

    #[test]
    fn chained_definitions_are_rejected() {
        let pre = single_world(
            &[("p", "r"), ("r", "(p & q)")],
            &[("p", false), ("q", false), ("r", false)],
        );
        let report = validate(pre).unwrap_err();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Circular { defined, atom, .. } if *defined == at("p") && *atom == at("r"))));
    }

    #[test]
    fn truth_mismatch_is_reported() {
        let pre = single_world(&[("p", "q")], &[("p", true), ("q", false)]);
        let report = validate(pre).unwrap_err();
        assert_eq!(
            report.violations,
            vec![Violation::TruthMismatch {
                world: "w".into(),
                atom: at("p")
            }]
        );
    }

    #[test]
    fn unravel_is_one_pass_and_idempotent() {
        let pre = single_world(
            &[("p", "(q & ~r)")],
            &[("p", true), ("q", true), ("r", false)],
        );
        let m = validate(pre).unwrap();
        let once = m.unravel(0, &b("~(p & q)")).unwrap();
        assert_eq!(once, b("~((q & ~r) & q)"));
        assert_eq!(m.unravel(0, &once).unwrap(), once);
        assert!(m.unravel(0, &b("zz")).is_err());
        assert!(!m.eval_bool(0, &b("(p & ~p)")).unwrap());
    }

    #[test]
    fn structure_errors() {
        let mut pre = single_world(&[], &[("p", true)]);
        pre.worlds[0].def.clear();
        assert!(matches!(
            pre.check_structure(),
            Err(ModelError::MissingDefinition { .. })
        ));
        let mut pre = single_world(&[], &[("p", true)]);
        pre.relations.insert(Agent::new("i").unwrap(), vec![(0, 0)]);
        assert!(matches!(pre.check_structure(), Err(ModelError::UnknownAgent(_))));
        let mut pre = single_world(&[], &[("p", true)]);
        pre.worlds.push(pre.worlds[0].clone());
        assert!(matches!(pre.check_structure(), Err(ModelError::DuplicateWorld(_))));
    }

    #[test]
    fn restriction_keeps_local_data() {
        let vocab = vec![at("p")];
        let mut w1 = World::blank("a", &vocab);
        w1.valuation.insert(at("p"), true);
        let w2 = World::blank("b", &vocab);
        let i = Agent::new("i").unwrap();
        let pre = PreModel {
            vocabulary: vocab,
            agents: vec![i.clone()],
            worlds: vec![w1, w2],
            relations: [(i.clone(), vec![(0, 0), (0, 1), (1, 0), (1, 1)])].into(),
            actual: Some(1),
        };
        let m = validate(pre).unwrap();
        let all: BTreeSet<usize> = [0, 1].into();
        assert_eq!(m.restrict(&all).unwrap(), m);
        let r = m.restrict(&[0].into()).unwrap();
        assert_eq!(r.world_count(), 1);
        assert_eq!(r.successors(&i, 0).unwrap(), &[0]);
        assert_eq!(r.actual(), None);
        assert!(r.valuation(0, &at("p")).unwrap());
    }
}
