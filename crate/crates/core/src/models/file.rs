//! JSON model files.
//!
//! ```json
//! {
//!   "vocabulary": ["p", "q"],
//!   "agents": ["i"],
//!   "worlds": [
//!     { "id": "w", "valuation": { "p": true, "q": true }, "def": { "p": "q", "q": "q" } }
//!   ],
//!   "relations": { "i": [["w", "w"]] },
//!   "actual": "w"
//! }
//! ```
//!
//! Every world lists a valuation and a definition for every declared atom.
//! Saving uses two-space indentation and a trailing newline; files written
//! by [`save`] load and save back byte for byte.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{ModelError, PreModel, World};
use crate::syntax::{parse_bool, Agent, Atom};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    vocabulary: Vec<String>,
    agents: Vec<String>,
    worlds: Vec<WorldFile>,
    relations: BTreeMap<String, Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    actual: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WorldFile {
    id: String,
    valuation: BTreeMap<String, bool>,
    def: BTreeMap<String, String>,
}

fn atom(name: &str) -> Result<Atom, ModelError> {
    Atom::new(name).map_err(|e| ModelError::InvalidName(e.0))
}

fn agent(name: &str) -> Result<Agent, ModelError> {
    Agent::new(name).map_err(|e| ModelError::InvalidName(e.0))
}

impl ModelFile {
    fn into_premodel(self) -> Result<PreModel, ModelError> {
        let vocabulary = self
            .vocabulary
            .iter()
            .map(|a| atom(a))
            .collect::<Result<Vec<_>, _>>()?;
        let agents = self
            .agents
            .iter()
            .map(|a| agent(a))
            .collect::<Result<Vec<_>, _>>()?;
        let mut worlds = Vec::with_capacity(self.worlds.len());
        for w in self.worlds {
            let valuation = w
                .valuation
                .iter()
                .map(|(a, v)| Ok((atom(a)?, *v)))
                .collect::<Result<BTreeMap<_, _>, ModelError>>()?;
            let def = w
                .def
                .iter()
                .map(|(a, d)| {
                    let image = parse_bool(d).map_err(|e| ModelError::BadDefinition {
                        world: w.id.clone(),
                        atom: a.clone(),
                        message: e.to_string(),
                    })?;
                    Ok((atom(a)?, image))
                })
                .collect::<Result<BTreeMap<_, _>, ModelError>>()?;
            worlds.push(World {
                id: w.id,
                valuation,
                def,
            });
        }
        let index = |id: &str| {
            worlds
                .iter()
                .position(|w: &World| w.id == id)
                .ok_or_else(|| ModelError::UnknownWorld(id.to_string()))
        };
        let mut relations = BTreeMap::new();
        for (name, pairs) in &self.relations {
            let pairs = pairs
                .iter()
                .map(|[a, b]| Ok((index(a)?, index(b)?)))
                .collect::<Result<Vec<_>, ModelError>>()?;
            relations.insert(agent(name)?, pairs);
        }
        let actual = self.actual.as_deref().map(index).transpose()?;
        let pre = PreModel {
            vocabulary,
            agents,
            worlds,
            relations,
            actual,
        };
        pre.check_structure()?;
        Ok(pre)
    }

    fn from_premodel(pre: &PreModel) -> Self {
        let id = |w: usize| pre.worlds[w].id.clone();
        ModelFile {
            vocabulary: pre.vocabulary.iter().map(|a| a.to_string()).collect(),
            agents: pre.agents.iter().map(|a| a.to_string()).collect(),
            worlds: pre
                .worlds
                .iter()
                .map(|w| WorldFile {
                    id: w.id.clone(),
                    valuation: w.valuation.iter().map(|(a, v)| (a.to_string(), *v)).collect(),
                    def: w.def.iter().map(|(a, d)| (a.to_string(), d.to_string())).collect(),
                })
                .collect(),
            relations: pre
                .relations
                .iter()
                .map(|(agent, pairs)| {
                    let pairs = pairs.iter().map(|&(a, b)| [id(a), id(b)]).collect();
                    (agent.to_string(), pairs)
                })
                .collect(),
            actual: pre.actual.map(id),
        }
    }
}

/// Parses a model file's contents and checks its structural invariants.
/// The model constraints are not checked here; see [`super::validate`].
pub fn model_from_json(text: &str) -> Result<PreModel, ModelError> {
    let file: ModelFile = serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))?;
    file.into_premodel()
}

pub fn model_to_json(pre: &PreModel) -> String {
    let mut out = serde_json::to_string_pretty(&ModelFile::from_premodel(pre))
        .expect("model file serialization cannot fail");
    out.push('\n');
    out
}

pub fn load(path: impl AsRef<Path>) -> Result<PreModel, ModelError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| ModelError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    model_from_json(&text)
}

pub fn save(pre: &PreModel, path: impl AsRef<Path>) -> Result<(), ModelError> {
    let path = path.as_ref();
    std::fs::write(path, model_to_json(pre)).map_err(|e| ModelError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
