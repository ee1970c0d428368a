use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::syntax::{BoolForm, OccSubst};

/// How a derived equivalence was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    /// The premise with this index.
    Premise(usize),
    /// From `P == Q` infer `Q == P`.
    Sym(usize),
    /// From `P == Q` and `Q == R` infer `P == R`.
    Trans(usize, usize),
    /// From `~P == ~Q` infer `P == Q`.
    PatNeg(usize),
    /// From `(P & Q) == (R & S)` infer `P == R`.
    PatAndLeft(usize),
    /// From `(P & Q) == (R & S)` infer `Q == S`.
    PatAndRight(usize),
    /// From `p == Q` and `R == S` infer `R == [index: p |-> Q] S`.
    OccSubst { def: usize, target: usize, index: usize },
}

/// One derived equivalence `left == right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fact {
    pub left: BoolForm,
    pub right: BoolForm,
    pub rule: Rule,
}

/// A list of premises and facts, each fact justified by premises or by
/// earlier facts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Derivation {
    pub premises: Vec<(BoolForm, BoolForm)>,
    pub facts: Vec<Fact>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("derivation step {step}: {message}")]
pub struct ReplayError {
    pub step: usize,
    pub message: String,
}

impl Derivation {
    pub(crate) fn push(&mut self, left: BoolForm, right: BoolForm, rule: Rule) -> usize {
        self.facts.push(Fact { left, right, rule });
        self.facts.len() - 1
    }

    /// The last fact.
    pub fn conclusion(&self) -> Option<&Fact> {
        self.facts.last()
    }

    /// Re-derives every fact from its rule and checks it matches.
    pub fn replay(&self) -> Result<(), ReplayError> {
        for (n, fact) in self.facts.iter().enumerate() {
            let fail = |message: String| ReplayError { step: n + 1, message };
            let earlier = |i: usize| {
                (i < n)
                    .then(|| &self.facts[i])
                    .ok_or_else(|| fail(format!("reference to step {} is not earlier", i + 1)))
            };
            let expected: Option<(BoolForm, BoolForm)> = match &fact.rule {
                Rule::Premise(i) => self.premises.get(*i).cloned(),
                Rule::Sym(i) => {
                    let f = earlier(*i)?;
                    Some((f.right.clone(), f.left.clone()))
                }
                Rule::Trans(i, j) => {
                    let (a, b) = (earlier(*i)?, earlier(*j)?);
                    (a.right == b.left).then(|| (a.left.clone(), b.right.clone()))
                }
                Rule::PatNeg(i) => match earlier(*i)? {
                    Fact {
                        left: BoolForm::Neg(x),
                        right: BoolForm::Neg(y),
                        ..
                    } => Some(((**x).clone(), (**y).clone())),
                    _ => None,
                },
                Rule::PatAndLeft(i) | Rule::PatAndRight(i) => match earlier(*i)? {
                    Fact {
                        left: BoolForm::And(x1, x2),
                        right: BoolForm::And(y1, y2),
                        ..
                    } => Some(if matches!(fact.rule, Rule::PatAndLeft(_)) {
                        ((**x1).clone(), (**y1).clone())
                    } else {
                        ((**x2).clone(), (**y2).clone())
                    }),
                    _ => None,
                },
                Rule::OccSubst { def, target, index } => {
                    let (d, t) = (earlier(*def)?, earlier(*target)?);
                    match d.left.as_atom() {
                        Some(p) => OccSubst::new(*index, p.clone(), d.right.clone())
                            .apply(&t.right)
                            .ok()
                            .map(|s| (t.left.clone(), s)),
                        None => None,
                    }
                }
            };
            match expected {
                Some((l, r)) if l == fact.left && r == fact.right => {}
                _ => return Err(fail(format!("{} does not follow", fact_text(fact)))),
            }
        }
        Ok(())
    }

    /// The sub-derivation needed for fact `root`, renumbered, with only the
    /// premises it uses. The root becomes the last fact.
    pub fn extract(&self, root: usize) -> Derivation {
        let mut needed = vec![false; root + 1];
        needed[root] = true;
        for n in (0..=root).rev() {
            if needed[n] {
                for i in self.facts[n].rule.sources() {
                    needed[i] = true;
                }
            }
        }
        let mut premise_map = BTreeMap::new();
        let mut fact_map = BTreeMap::new();
        let mut out = Derivation::default();
        for n in (0..=root).filter(|&n| needed[n]) {
            let fact = &self.facts[n];
            let rule = match &fact.rule {
                Rule::Premise(i) => {
                    let next = premise_map.len();
                    let k = *premise_map.entry(*i).or_insert_with(|| {
                        out.premises.push(self.premises[*i].clone());
                        next
                    });
                    Rule::Premise(k)
                }
                other => other.renumber(&fact_map),
            };
            fact_map.insert(n, out.facts.len());
            out.push(fact.left.clone(), fact.right.clone(), rule);
        }
        out
    }

    /// The occurrence substitution steps in order, each with the definition
    /// it inserts.
    pub fn substitutions(&self) -> Vec<(&Fact, OccSubst)> {
        self.facts
            .iter()
            .filter_map(|f| match f.rule {
                Rule::OccSubst { def, index, .. } => {
                    let d = &self.facts[def];
                    let atom = d.left.as_atom()?.clone();
                    Some((d, OccSubst::new(index, atom, d.right.clone())))
                }
                _ => None,
            })
            .collect()
    }
}

impl Rule {
    fn sources(&self) -> Vec<usize> {
        match *self {
            Rule::Premise(_) => vec![],
            Rule::Sym(i) | Rule::PatNeg(i) | Rule::PatAndLeft(i) | Rule::PatAndRight(i) => vec![i],
            Rule::Trans(i, j) => vec![i, j],
            Rule::OccSubst { def, target, .. } => vec![def, target],
        }
    }

    fn renumber(&self, map: &BTreeMap<usize, usize>) -> Rule {
        let m = |i: &usize| map[i];
        match self {
            Rule::Premise(i) => Rule::Premise(*i),
            Rule::Sym(i) => Rule::Sym(m(i)),
            Rule::Trans(i, j) => Rule::Trans(m(i), m(j)),
            Rule::PatNeg(i) => Rule::PatNeg(m(i)),
            Rule::PatAndLeft(i) => Rule::PatAndLeft(m(i)),
            Rule::PatAndRight(i) => Rule::PatAndRight(m(i)),
            Rule::OccSubst { def, target, index } => Rule::OccSubst {
                def: m(def),
                target: m(target),
                index: *index,
            },
        }
    }
}

fn fact_text(f: &Fact) -> String {
    format!("{} == {}", f.left, f.right)
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Premise(i) => write!(f, "premise {}", i + 1),
            Rule::Sym(i) => write!(f, "symmetry {}", i + 1),
            Rule::Trans(i, j) => write!(f, "transitivity {}, {}", i + 1, j + 1),
            Rule::PatNeg(i) => write!(f, "pattern ~ {}", i + 1),
            Rule::PatAndLeft(i) => write!(f, "pattern & left {}", i + 1),
            Rule::PatAndRight(i) => write!(f, "pattern & right {}", i + 1),
            Rule::OccSubst { def, target, index } => {
                write!(f, "occurrence {index} of {} into {}", def + 1, target + 1)
            }
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, fact) in self.facts.iter().enumerate() {
            writeln!(f, "{:>3}. {:<40} [{}]", n + 1, fact_text(fact), fact.rule)?;
        }
        Ok(())
    }
}
