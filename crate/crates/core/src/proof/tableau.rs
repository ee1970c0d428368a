use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::reduce::{reduce, ReduceError};
use crate::defcore::{literal_sat, Literal, Seed, Sign, Verdict};
use crate::models::{validate, Model, PreModel, World};
use crate::syntax::{Agent, Atom, BoolForm, Form};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("the tableau only handles announcement-free formulas without kd and :=; found `{0}`")]
    Unsupported(Form),
    #[error(transparent)]
    Reduce(#[from] ReduceError),
}

#[derive(Debug, Clone)]
pub enum SatResult {
    /// A finite tree model whose world `actual` satisfies the formula.
    Sat(Model),
    Unsat,
}

impl SatResult {
    pub fn is_sat(&self) -> bool {
        matches!(self, SatResult::Sat(_))
    }
}

/// Decides satisfiability of an announcement-free formula without `kd` and
/// `:=`, returning a model on success.
pub fn satisfiable(f: &Form) -> Result<SatResult, TableauError> {
    if let Some(bad) = unsupported(f) {
        return Err(TableauError::Unsupported(bad.clone()));
    }
    Ok(match world(vec![f.clone()]) {
        Some(root) => SatResult::Sat(tree_model(&root, f)),
        None => SatResult::Unsat,
    })
}

/// Validity of any formula whose announcements can be reduced away.
pub fn valid(f: &Form) -> Result<bool, TableauError> {
    let reduced = reduce(f)?;
    Ok(!satisfiable(&reduced.not())?.is_sat())
}

fn unsupported(f: &Form) -> Option<&Form> {
    match f {
        Form::Atom(_) | Form::Equiv(..) => None,
        Form::Neg(x) | Form::Modal(_, x) => unsupported(x),
        Form::And(x, y) => unsupported(x).or_else(|| unsupported(y)),
        Form::Ann(..) | Form::Kd(..) | Form::DefIs(..) => Some(f),
    }
}

struct Node {
    seed: Seed,
    children: Vec<(Agent, Node)>,
}

#[derive(Clone, Default)]
struct Branch {
    seen: BTreeSet<Form>,
    literals: Vec<Literal>,
    boxes: BTreeMap<Agent, Vec<Form>>,
    diamonds: Vec<(Agent, Form)>,
}

fn world(formulas: Vec<Form>) -> Option<Node> {
    expand(formulas, Branch::default())
}

fn expand(mut todo: Vec<Form>, mut branch: Branch) -> Option<Node> {
    while let Some(f) = todo.pop() {
        if !branch.seen.insert(f.clone()) {
            continue;
        }
        match f {
            Form::Atom(a) => branch.literals.push(Literal::Prop(BoolForm::Atom(a))),
            Form::Equiv(p, q) => branch.literals.push(Literal::Equiv(Sign::Pos, p, q)),
            Form::And(x, y) => {
                todo.push(*x);
                todo.push(*y);
            }
            Form::Modal(i, x) => branch.boxes.entry(i).or_default().push(*x),
            Form::Neg(inner) => match *inner {
                Form::Atom(a) => branch.literals.push(Literal::Prop(BoolForm::Atom(a).not())),
                Form::Equiv(p, q) => branch.literals.push(Literal::Equiv(Sign::Neg, p, q)),
                Form::Neg(x) => todo.push(*x),
                Form::And(x, y) => {
                    let mut left = todo.clone();
                    left.push(x.not());
                    if let Some(node) = expand(left, branch.clone()) {
                        return Some(node);
                    }
                    todo.push(y.not());
                }
                Form::Modal(i, x) => branch.diamonds.push((i, x.not())),
                other => unreachable!("unsupported operator {other} passed the fragment check"),
            },
            other => unreachable!("unsupported operator {other} passed the fragment check"),
        }
    }
    let Verdict::Sat(seed) = literal_sat(&branch.literals) else {
        return None;
    };
    let mut children = Vec::new();
    for (i, d) in branch.diamonds {
        let mut succ = vec![d];
        succ.extend(branch.boxes.get(&i).into_iter().flatten().cloned());
        children.push((i, world(succ)?));
    }
    Some(Node { seed, children })
}

fn tree_model(root: &Node, f: &Form) -> Model {
    let vocabulary: Vec<Atom> = f.vocabulary().into_iter().collect();
    let agents: Vec<Agent> = f.agents().into_iter().collect();
    let mut pre = PreModel {
        relations: agents.iter().map(|i| (i.clone(), Vec::new())).collect(),
        vocabulary,
        agents,
        worlds: Vec::new(),
        actual: Some(0),
    };
    add_world(&mut pre, root);
    validate(pre).expect("tableau models satisfy the model constraints")
}

fn add_world(pre: &mut PreModel, node: &Node) -> usize {
    let index = pre.worlds.len();
    let mut w = World::blank(format!("w{index}"), &pre.vocabulary);
    for (a, image) in &node.seed.def {
        w.def.insert(a.clone(), image.clone());
    }
    for (a, v) in &node.seed.valuation {
        w.valuation.insert(a.clone(), *v);
    }
    pre.worlds.push(w);
    for (i, child) in &node.children {
        let c = add_world(pre, child);
        pre.relations.get_mut(i).expect("agent declared").push((index, c));
    }
    index
}
