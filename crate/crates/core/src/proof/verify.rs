use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::axioms::{is_axiom_instance, is_tautology};
use crate::syntax::{parse_form, Agent, Form};

/// Line references are 1-based, as in proof files.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    /// Any axiom schema, tautologies included.
    Axiom,
    /// A propositional tautology.
    Taut,
    /// `Mp(i, j)`: line `j` is `line i -> this line`.
    Mp(usize, usize),
    /// `Nec(a, i)`: this line is `box a (line i)`.
    Nec(Agent, usize),
    /// Any other rule name; never verifies.
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: Form,
    pub justification: Justification,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Proof {
    pub lines: Vec<ProofLine>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ProofError {
    pub line: usize,
    pub reason: String,
}

impl Proof {
    pub fn push(&mut self, formula: Form, justification: Justification) -> usize {
        self.lines.push(ProofLine {
            formula,
            justification,
        });
        self.lines.len()
    }

    pub fn last(&self) -> Option<&Form> {
        self.lines.last().map(|l| &l.formula)
    }
}

/// Checks every line in order and reports the first one that fails.
pub fn verify_proof(proof: &Proof) -> Result<(), ProofError> {
    for (n, line) in proof.lines.iter().enumerate() {
        let number = n + 1;
        let fail = |reason: String| ProofError { line: number, reason };
        let earlier = |i: usize| {
            if i >= 1 && i < number {
                Ok(&proof.lines[i - 1].formula)
            } else {
                Err(fail(format!("reference {i} does not point to an earlier line")))
            }
        };
        let f = &line.formula;
        match &line.justification {
            Justification::Axiom => match is_axiom_instance(f) {
                Ok(Some(_)) => {}
                Ok(None) => return Err(fail(format!("{f} is not an axiom instance"))),
                Err(e) => return Err(fail(e.to_string())),
            },
            Justification::Taut => match is_tautology(f) {
                Ok(true) => {}
                Ok(false) => return Err(fail(format!("{f} is not a tautology"))),
                Err(e) => return Err(fail(e.to_string())),
            },
            Justification::Mp(i, j) => {
                let (a, imp) = (earlier(*i)?, earlier(*j)?);
                if *imp != a.clone().implies(f.clone()) {
                    return Err(fail(format!("line {j} is not line {i} -> this line")));
                }
            }
            Justification::Nec(agent, i) => {
                let a = earlier(*i)?;
                if *f != Form::modal(agent.clone(), a.clone()) {
                    return Err(fail(format!("this line is not box {agent} of line {i}")));
                }
            }
            Justification::Unsupported(rule) => {
                return Err(fail(format!("`{rule}` is not a rule of the proof system")))
            }
        }
    }
    Ok(())
}

#[derive(Debug, Error)]
pub enum ProofFileError {
    #[error("malformed proof file: {0}")]
    Json(String),
    #[error("proof line {line}: {message}")]
    Line { line: usize, message: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LineFile {
    formula: String,
    rule: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    refs: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    agent: Option<String>,
}

/// Reads the JSON proof format: a list of
/// `{"formula": ..., "rule": "axiom"|"taut"|"mp"|"nec", "refs": [...], "agent": ...}`.
/// Unknown rule names are kept and rejected by [`verify_proof`].
pub fn proof_from_json(text: &str) -> Result<Proof, ProofFileError> {
    let raw: Vec<LineFile> = serde_json::from_str(text).map_err(|e| ProofFileError::Json(e.to_string()))?;
    let mut proof = Proof::default();
    for (n, l) in raw.into_iter().enumerate() {
        let err = |message: String| ProofFileError::Line { line: n + 1, message };
        let formula = parse_form(&l.formula).map_err(|e| err(e.to_string()))?;
        let refs = |k: usize| {
            if l.refs.len() == k {
                Ok(l.refs.clone())
            } else {
                Err(err(format!("rule `{}` takes {k} reference(s)", l.rule)))
            }
        };
        let justification = match l.rule.as_str() {
            "axiom" => Justification::Axiom,
            "taut" => Justification::Taut,
            "mp" => {
                let r = refs(2)?;
                Justification::Mp(r[0], r[1])
            }
            "nec" => {
                let r = refs(1)?;
                let name = l.agent.as_deref().ok_or_else(|| err("`nec` needs an agent".into()))?;
                let agent = Agent::new(name).map_err(|e| err(e.to_string()))?;
                Justification::Nec(agent, r[0])
            }
            other => Justification::Unsupported(other.to_string()),
        };
        proof.push(formula, justification);
    }
    Ok(proof)
}

pub fn proof_to_json(proof: &Proof) -> String {
    let lines: Vec<LineFile> = proof
        .lines
        .iter()
        .map(|l| {
            let (rule, refs, agent) = match &l.justification {
                Justification::Axiom => ("axiom".to_string(), vec![], None),
                Justification::Taut => ("taut".to_string(), vec![], None),
                Justification::Mp(i, j) => ("mp".to_string(), vec![*i, *j], None),
                Justification::Nec(a, i) => ("nec".to_string(), vec![*i], Some(a.to_string())),
                Justification::Unsupported(r) => (r.clone(), vec![], None),
            };
            LineFile {
                formula: l.formula.to_string(),
                rule,
                refs,
                agent,
            }
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&lines).expect("proof serialization cannot fail");
    out.push('\n');
    out
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom => write!(f, "axiom"),
            Justification::Taut => write!(f, "taut"),
            Justification::Mp(i, j) => write!(f, "mp {i}, {j}"),
            Justification::Nec(a, i) => write!(f, "nec {a} {i}"),
            Justification::Unsupported(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in self.lines.iter().enumerate() {
            writeln!(f, "{:>3}. {}  [{}]", n + 1, l.formula, l.justification)?;
        }
        Ok(())
    }
}
