//! Abstract syntax of the two-layer language.
//!
//! The boolean layer [`BoolForm`] only has atoms, negation and binary
//! conjunction. Its syntactic identity carries meaning: `(p & (q & r))` and
//! `((p & q) & r)` are different formulas and must never be normalized into
//! each other. The full language [`Form`] adds `==`, the box modality,
//! public announcements and the `kd` / `:=` operators on top.

mod occurrence;
mod parser;
mod printer;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use occurrence::{apply_simultaneous, OccSubst, SubstError};
pub use parser::{parse_bool, parse_form, ParseError};

/// Words that cannot be used as atom or agent names.
pub const KEYWORDS: &[&str] = &["box", "kd", "kx"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid identifier `{0}`: expected [a-z][a-z0-9_]* and not a keyword")]
pub struct InvalidName(pub String);

fn check_identifier(name: &str) -> Result<(), InvalidName> {
    let mut chars = name.chars();
    let ok = matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && !KEYWORDS.contains(&name);
    if ok {
        Ok(())
    } else {
        Err(InvalidName(name.to_string()))
    }
}

/// A propositional letter. Atoms are ordered alphabetically by name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: &str) -> Result<Self, InvalidName> {
        check_identifier(name)?;
        Ok(Atom(Arc::from(name)))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An agent index for the box modality and `kd`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Agent(Arc<str>);

impl Agent {
    pub fn new(name: &str) -> Result<Self, InvalidName> {
        check_identifier(name)?;
        Ok(Agent(Arc::from(name)))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Agent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Agent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A formula of the boolean layer.
///
/// The derived `Ord` is the structural lexicographic order used for picking
/// canonical definitions: constructors rank `Atom < Neg < And`, atoms compare
/// alphabetically, and compound formulas compare their components left to
/// right.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoolForm {
    Atom(Atom),
    Neg(Box<BoolForm>),
    And(Box<BoolForm>, Box<BoolForm>),
}

impl BoolForm {
    pub fn atom(a: Atom) -> Self {
        BoolForm::Atom(a)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        BoolForm::Neg(Box::new(self))
    }

    pub fn and(self, right: BoolForm) -> Self {
        BoolForm::And(Box::new(self), Box::new(right))
    }

    pub fn as_atom(&self) -> Option<&Atom> {
        match self {
            BoolForm::Atom(a) => Some(a),
            _ => None,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, BoolForm::Atom(_))
    }

    /// `l(p) = 1`, `l(~P) = l(P) + 1`, `l((P & Q)) = l(P) + l(Q) + 3`.
    /// Parentheses of a conjunction count.
    pub fn length(&self) -> usize {
        match self {
            BoolForm::Atom(_) => 1,
            BoolForm::Neg(p) => p.length() + 1,
            BoolForm::And(p, q) => p.length() + q.length() + 3,
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            BoolForm::Atom(_) => 1,
            BoolForm::Neg(p) => p.size() + 1,
            BoolForm::And(p, q) => p.size() + q.size() + 1,
        }
    }

    pub fn vocabulary(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        self.for_each_leaf(&mut |a| {
            out.insert(a.clone());
        });
    }

    /// Visits atom leaves left to right, which is also their printed order.
    pub fn for_each_leaf<'a>(&'a self, f: &mut impl FnMut(&'a Atom)) {
        match self {
            BoolForm::Atom(a) => f(a),
            BoolForm::Neg(p) => p.for_each_leaf(f),
            BoolForm::And(p, q) => {
                p.for_each_leaf(f);
                q.for_each_leaf(f);
            }
        }
    }

    pub fn contains(&self, atom: &Atom) -> bool {
        match self {
            BoolForm::Atom(a) => a == atom,
            BoolForm::Neg(p) => p.contains(atom),
            BoolForm::And(p, q) => p.contains(atom) || q.contains(atom),
        }
    }

    /// Number of leaf positions labelled `atom`.
    pub fn occurrences(&self, atom: &Atom) -> usize {
        let mut n = 0;
        self.for_each_leaf(&mut |a| {
            if a == atom {
                n += 1
            }
        });
        n
    }

    /// Replaces every atom by its image under `f` in one pass.
    pub fn map_atoms(&self, f: &mut impl FnMut(&Atom) -> BoolForm) -> BoolForm {
        match self {
            BoolForm::Atom(a) => f(a),
            BoolForm::Neg(p) => p.map_atoms(f).not(),
            BoolForm::And(p, q) => {
                let l = p.map_atoms(f);
                l.and(q.map_atoms(f))
            }
        }
    }

    /// Evaluates under an atom valuation.
    pub fn eval(&self, val: &mut impl FnMut(&Atom) -> bool) -> bool {
        match self {
            BoolForm::Atom(a) => val(a),
            BoolForm::Neg(p) => !p.eval(val),
            BoolForm::And(p, q) => p.eval(val) && q.eval(val),
        }
    }
}

/// Structural lexicographic comparison; see the `Ord` impl of [`BoolForm`].
pub fn lex_compare(p: &BoolForm, q: &BoolForm) -> std::cmp::Ordering {
    p.cmp(q)
}

/// Every boolean formula over `atoms` with length at most `max_len`, shortest
/// first and in structural order within each length.
pub fn enumerate_bool(atoms: &[Atom], max_len: usize) -> Vec<BoolForm> {
    let mut by_len: Vec<Vec<BoolForm>> = vec![Vec::new(); max_len + 1];
    for n in 1..=max_len {
        let mut level = Vec::new();
        if n == 1 {
            level.extend(atoms.iter().cloned().map(BoolForm::Atom));
        } else {
            level.extend(by_len[n - 1].iter().cloned().map(BoolForm::not));
        }
        for left in 1..n.saturating_sub(3) {
            let right = n - 3 - left;
            for a in &by_len[left] {
                for b in &by_len[right] {
                    level.push(a.clone().and(b.clone()));
                }
            }
        }
        level.sort();
        by_len[n] = level;
    }
    by_len.into_iter().flatten().collect()
}

/// `P == Q` is circular iff one side is an atom `p`, the other side differs
/// from `p`, and `p` occurs in it.
pub fn is_circular(p: &BoolForm, q: &BoolForm) -> bool {
    let one_way = |a: &BoolForm, b: &BoolForm| match a {
        BoolForm::Atom(x) => b != a && b.contains(x),
        _ => false,
    };
    one_way(p, q) || one_way(q, p)
}

/// A formula of the full language.
///
/// Only primitive connectives are stored. `|`, `->`, `<->`, `!=` and `kx`
/// are expanded by the parser and recognised again by the printer:
///
/// * `a | b` is `~(~a & ~b)`
/// * `a -> b` is `~a | b`, i.e. `~(~~a & ~b)`
/// * `a <-> b` is `((a -> b) & (b -> a))`
/// * `P != Q` is `~(P == Q)`
/// * `kx i P` is `(box i P & kd i P)`
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Form {
    Atom(Atom),
    Equiv(BoolForm, BoolForm),
    Neg(Box<Form>),
    And(Box<Form>, Box<Form>),
    Modal(Agent, Box<Form>),
    Ann(Box<Form>, Box<Form>),
    Kd(Agent, BoolForm),
    DefIs(Atom, BoolForm),
}

impl From<&BoolForm> for Form {
    fn from(p: &BoolForm) -> Self {
        match p {
            BoolForm::Atom(a) => Form::Atom(a.clone()),
            BoolForm::Neg(x) => Form::from(&**x).not(),
            BoolForm::And(x, y) => Form::from(&**x).and(Form::from(&**y)),
        }
    }
}

impl From<BoolForm> for Form {
    fn from(p: BoolForm) -> Self {
        Form::from(&p)
    }
}

impl Form {
    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Form::Neg(Box::new(self))
    }

    pub fn and(self, right: Form) -> Self {
        Form::And(Box::new(self), Box::new(right))
    }

    pub fn or(self, right: Form) -> Self {
        self.not().and(right.not()).not()
    }

    pub fn implies(self, right: Form) -> Self {
        self.not().or(right)
    }

    pub fn iff(self, right: Form) -> Self {
        let there = self.clone().implies(right.clone());
        there.and(right.implies(self))
    }

    pub fn equiv(p: BoolForm, q: BoolForm) -> Self {
        Form::Equiv(p, q)
    }

    pub fn nequiv(p: BoolForm, q: BoolForm) -> Self {
        Form::Equiv(p, q).not()
    }

    pub fn modal(agent: Agent, inner: Form) -> Self {
        Form::Modal(agent, Box::new(inner))
    }

    pub fn ann(announced: Form, inner: Form) -> Self {
        Form::Ann(Box::new(announced), Box::new(inner))
    }

    /// Explicit knowledge: knowing that `P` and knowing its definition.
    pub fn kx(agent: Agent, p: BoolForm) -> Self {
        Form::modal(agent.clone(), Form::from(&p)).and(Form::Kd(agent, p))
    }

    /// Conjunction of a non-empty list, nested to the right.
    pub fn conjoin(mut parts: Vec<Form>) -> Option<Form> {
        let mut acc = parts.pop()?;
        while let Some(f) = parts.pop() {
            acc = f.and(acc);
        }
        Some(acc)
    }

    pub fn as_implies(&self) -> Option<(&Form, &Form)> {
        if let Form::Neg(inner) = self {
            if let Form::And(l, r) = &**inner {
                if let (Form::Neg(nl), Form::Neg(b)) = (&**l, &**r) {
                    if let Form::Neg(a) = &**nl {
                        return Some((a, b));
                    }
                }
            }
        }
        None
    }

    pub fn as_or(&self) -> Option<(&Form, &Form)> {
        if let Form::Neg(inner) = self {
            if let Form::And(l, r) = &**inner {
                if let (Form::Neg(a), Form::Neg(b)) = (&**l, &**r) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn as_iff(&self) -> Option<(&Form, &Form)> {
        if let Form::And(l, r) = self {
            let (a, b) = l.as_implies()?;
            let (b2, a2) = r.as_implies()?;
            if a == a2 && b == b2 {
                return Some((a, b));
            }
        }
        None
    }

    /// The boolean-layer reading of this formula, if it only uses atoms,
    /// negation and conjunction.
    pub fn as_bool(&self) -> Option<BoolForm> {
        match self {
            Form::Atom(a) => Some(BoolForm::Atom(a.clone())),
            Form::Neg(x) => Some(x.as_bool()?.not()),
            Form::And(x, y) => Some(x.as_bool()?.and(y.as_bool()?)),
            _ => None,
        }
    }

    /// Number of constructor nodes, counting the boolean operands of `==`,
    /// `kd` and `:=`.
    pub fn size(&self) -> usize {
        match self {
            Form::Atom(_) => 1,
            Form::Equiv(p, q) => 1 + p.size() + q.size(),
            Form::Neg(x) | Form::Modal(_, x) => 1 + x.size(),
            Form::And(x, y) | Form::Ann(x, y) => 1 + x.size() + y.size(),
            Form::Kd(_, p) => 1 + p.size(),
            Form::DefIs(_, p) => 2 + p.size(),
        }
    }

    /// Nesting depth of box modalities (announcements do not count).
    pub fn modal_depth(&self) -> usize {
        match self {
            Form::Atom(_) | Form::Equiv(..) | Form::DefIs(..) => 0,
            Form::Kd(..) => 1,
            Form::Neg(x) => x.modal_depth(),
            Form::Modal(_, x) => 1 + x.modal_depth(),
            Form::And(x, y) | Form::Ann(x, y) => x.modal_depth().max(y.modal_depth()),
        }
    }

    /// Every atom occurring anywhere in the formula.
    pub fn vocabulary(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_vocabulary(&mut out);
        out
    }

    fn collect_vocabulary(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Form::Atom(a) => {
                out.insert(a.clone());
            }
            Form::Equiv(p, q) => {
                p.collect_atoms(out);
                q.collect_atoms(out);
            }
            Form::Neg(x) | Form::Modal(_, x) => x.collect_vocabulary(out),
            Form::And(x, y) | Form::Ann(x, y) => {
                x.collect_vocabulary(out);
                y.collect_vocabulary(out);
            }
            Form::Kd(_, p) => p.collect_atoms(out),
            Form::DefIs(a, p) => {
                out.insert(a.clone());
                p.collect_atoms(out);
            }
        }
    }

    pub fn agents(&self) -> BTreeSet<Agent> {
        let mut out = BTreeSet::new();
        self.collect_agents(&mut out);
        out
    }

    fn collect_agents(&self, out: &mut BTreeSet<Agent>) {
        match self {
            Form::Atom(_) | Form::Equiv(..) | Form::DefIs(..) => {}
            Form::Neg(x) => x.collect_agents(out),
            Form::Modal(i, x) => {
                out.insert(i.clone());
                x.collect_agents(out);
            }
            Form::Kd(i, _) => {
                out.insert(i.clone());
            }
            Form::And(x, y) | Form::Ann(x, y) => {
                x.collect_agents(out);
                y.collect_agents(out);
            }
        }
    }

    pub fn has_announcement(&self) -> bool {
        match self {
            Form::Ann(..) => true,
            Form::Neg(x) | Form::Modal(_, x) => x.has_announcement(),
            Form::And(x, y) => x.has_announcement() || y.has_announcement(),
            _ => false,
        }
    }

    /// True if `kd` or `:=` occurs anywhere.
    pub fn has_definition_operator(&self) -> bool {
        match self {
            Form::Kd(..) | Form::DefIs(..) => true,
            Form::Neg(x) | Form::Modal(_, x) => x.has_definition_operator(),
            Form::And(x, y) | Form::Ann(x, y) => {
                x.has_definition_operator() || y.has_definition_operator()
            }
            _ => false,
        }
    }

    /// All distinct subformulas, children before parents.
    pub fn subformulas(&self) -> Vec<&Form> {
        let mut out: Vec<&Form> = Vec::new();
        self.push_subformulas(&mut out);
        out
    }

    fn push_subformulas<'a>(&'a self, out: &mut Vec<&'a Form>) {
        match self {
            Form::Neg(x) | Form::Modal(_, x) => x.push_subformulas(out),
            Form::And(x, y) | Form::Ann(x, y) => {
                x.push_subformulas(out);
                y.push_subformulas(out);
            }
            _ => {}
        }
        if !out.contains(&self) {
            out.push(self);
        }
    }
}

impl std::str::FromStr for BoolForm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_bool(s)
    }
}

impl std::str::FromStr for Form {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_form(s)
    }
}
