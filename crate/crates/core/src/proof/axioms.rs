use std::fmt;

use thiserror::Error;

use crate::syntax::{BoolForm, Form, OccSubst};

/// Most distinct abstracted leaves a tautology check will truth-table.
pub const MAX_TAUTOLOGY_LEAVES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("tautology check refused: {0} distinct leaves exceed the limit of {MAX_TAUTOLOGY_LEAVES}")]
pub struct TooManyLeaves(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Tautology,
    K,
    RedAtom,
    RedEquiv,
    RedNeg,
    RedAnd,
    RedBox,
    RedAnn,
    Refl,
    Sym,
    Trans,
    Equivalence,
    OccSubst,
    PatternNeg,
    PatternAnd,
    PatternMismatch,
    NonCircularity,
}

impl Axiom {
    /// Every schema except [`Axiom::Tautology`].
    pub const SCHEMAS: [Axiom; 16] = [
        Axiom::K,
        Axiom::RedAtom,
        Axiom::RedEquiv,
        Axiom::RedNeg,
        Axiom::RedAnd,
        Axiom::RedBox,
        Axiom::RedAnn,
        Axiom::Refl,
        Axiom::Sym,
        Axiom::Trans,
        Axiom::Equivalence,
        Axiom::OccSubst,
        Axiom::PatternNeg,
        Axiom::PatternAnd,
        Axiom::PatternMismatch,
        Axiom::NonCircularity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Tautology => "tautology",
            Axiom::K => "K",
            Axiom::RedAtom => "reduction (atom)",
            Axiom::RedEquiv => "reduction (==)",
            Axiom::RedNeg => "reduction (~)",
            Axiom::RedAnd => "reduction (&)",
            Axiom::RedBox => "reduction (box)",
            Axiom::RedAnn => "reduction (composition)",
            Axiom::Refl => "reflexivity",
            Axiom::Sym => "symmetry",
            Axiom::Trans => "transitivity",
            Axiom::Equivalence => "equivalence",
            Axiom::OccSubst => "occurrence substitution",
            Axiom::PatternNeg => "pattern ~",
            Axiom::PatternAnd => "pattern &",
            Axiom::PatternMismatch => "pattern mismatch",
            Axiom::NonCircularity => "non-circularity",
        }
    }

    /// Whether `f` is an instance of this schema. Tautologies above the leaf
    /// limit count as non-instances here; use [`is_tautology`] to tell the
    /// two apart.
    pub fn matches(self, f: &Form) -> bool {
        match self {
            Axiom::Tautology => is_tautology(f).unwrap_or(false),
            Axiom::K => k_axiom(f).is_some(),
            Axiom::RedAtom
            | Axiom::RedEquiv
            | Axiom::RedNeg
            | Axiom::RedAnd
            | Axiom::RedBox
            | Axiom::RedAnn => reduction(f) == Some(self),
            Axiom::Refl => matches!(f, Form::Equiv(p, q) if p == q),
            Axiom::Sym => sym(f).is_some(),
            Axiom::Trans => trans(f).is_some(),
            Axiom::Equivalence => equivalence(f).is_some(),
            Axiom::OccSubst => occ_subst(f).is_some(),
            Axiom::PatternNeg => pattern_neg(f).is_some(),
            Axiom::PatternAnd => pattern_and(f).is_some(),
            Axiom::PatternMismatch => pattern_mismatch(f).is_some(),
            Axiom::NonCircularity => non_circularity(f).is_some(),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The schemas `f` is an instance of, tautology not included.
pub fn schemas_matching(f: &Form) -> Vec<Axiom> {
    Axiom::SCHEMAS.into_iter().filter(|a| a.matches(f)).collect()
}

/// The first schema `f` instantiates, falling back to the tautology check.
pub fn is_axiom_instance(f: &Form) -> Result<Option<Axiom>, TooManyLeaves> {
    if let Some(a) = Axiom::SCHEMAS.into_iter().find(|a| a.matches(f)) {
        return Ok(Some(a));
    }
    Ok(is_tautology(f)?.then_some(Axiom::Tautology))
}

fn equiv(f: &Form) -> Option<(&BoolForm, &BoolForm)> {
    match f {
        Form::Equiv(p, q) => Some((p, q)),
        _ => None,
    }
}

fn conj(f: &Form) -> Option<(&Form, &Form)> {
    match f {
        Form::And(x, y) => Some((x, y)),
        _ => None,
    }
}

fn modal(f: &Form) -> Option<(&crate::syntax::Agent, &Form)> {
    match f {
        Form::Modal(i, x) => Some((i, x)),
        _ => None,
    }
}

fn check(ok: bool) -> Option<()> {
    ok.then_some(())
}

// box i (a -> b) -> (box i a -> box i b)
fn k_axiom(f: &Form) -> Option<()> {
    let (lhs, rhs) = f.as_implies()?;
    let (i, inner) = modal(lhs)?;
    let (a, b) = inner.as_implies()?;
    let (ba, bb) = rhs.as_implies()?;
    let (i2, a2) = modal(ba)?;
    let (i3, b2) = modal(bb)?;
    check(i == i2 && i == i3 && a == a2 && b == b2)
}

fn reduction(f: &Form) -> Option<Axiom> {
    let (lhs, rhs) = f.as_iff()?;
    let Form::Ann(phi, body) = lhs else { return None };
    let phi = &**phi;
    let implied_by_phi = |g: &Form| rhs.as_implies().filter(|(a, b)| *a == phi && *b == g).is_some();
    match &**body {
        Form::Atom(_) => implied_by_phi(body).then_some(Axiom::RedAtom),
        Form::Equiv(..) => implied_by_phi(body).then_some(Axiom::RedEquiv),
        Form::Neg(psi) => {
            let expected = Form::ann(phi.clone(), (**psi).clone()).not();
            implied_by_phi(&expected).then_some(Axiom::RedNeg)
        }
        Form::And(psi, theta) => {
            let expected = Form::ann(phi.clone(), (**psi).clone())
                .and(Form::ann(phi.clone(), (**theta).clone()));
            (*rhs == expected).then_some(Axiom::RedAnd)
        }
        Form::Modal(i, psi) => {
            let inner = phi.clone().implies(Form::ann(phi.clone(), (**psi).clone()));
            implied_by_phi(&Form::modal(i.clone(), inner)).then_some(Axiom::RedBox)
        }
        Form::Ann(psi, xi) => {
            let announced = phi.clone().and(Form::ann(phi.clone(), (**psi).clone()));
            (*rhs == Form::ann(announced, (**xi).clone())).then_some(Axiom::RedAnn)
        }
        Form::Kd(..) | Form::DefIs(..) => None,
    }
}

// (P == Q) -> (Q == P)
fn sym(f: &Form) -> Option<()> {
    let (a, b) = f.as_implies()?;
    let (p, q) = equiv(a)?;
    let (q2, p2) = equiv(b)?;
    check(p == p2 && q == q2)
}

// ((P == Q) & (Q == R)) -> (P == R)
fn trans(f: &Form) -> Option<()> {
    let (a, b) = f.as_implies()?;
    let (e1, e2) = conj(a)?;
    let (p, q) = equiv(e1)?;
    let (q2, r) = equiv(e2)?;
    let (p2, r2) = equiv(b)?;
    check(q == q2 && p == p2 && r == r2)
}

// (P == Q) -> (P <-> Q)
fn equivalence(f: &Form) -> Option<()> {
    let (a, b) = f.as_implies()?;
    let (p, q) = equiv(a)?;
    check(*b == Form::from(p).iff(Form::from(q)))
}

// ((p == Q) & (R == S)) -> (R == [k: p |-> Q] S)
fn occ_subst(f: &Form) -> Option<()> {
    let (a, b) = f.as_implies()?;
    let (e1, e2) = conj(a)?;
    let (p, q) = equiv(e1)?;
    let p = p.as_atom()?;
    let (r, s) = equiv(e2)?;
    let (r2, s2) = equiv(b)?;
    check(r == r2)?;
    let hit = (1..=s.occurrences(p))
        .any(|k| OccSubst::new(k, p.clone(), q.clone()).apply(s).as_ref() == Ok(s2));
    check(hit)
}

// (~P == ~Q) <-> (P == Q)
fn pattern_neg(f: &Form) -> Option<()> {
    let (a, b) = f.as_iff()?;
    let (np, nq) = equiv(a)?;
    let (p, q) = equiv(b)?;
    check(*np == p.clone().not() && *nq == q.clone().not())
}

// ((P & Q) == (R & S)) <-> ((P == R) & (Q == S))
fn pattern_and(f: &Form) -> Option<()> {
    let (a, b) = f.as_iff()?;
    let (BoolForm::And(p, q), BoolForm::And(r, s)) = equiv(a)? else { return None };
    let (e1, e2) = conj(b)?;
    check(equiv(e1)? == (&**p, &**r) && equiv(e2)? == (&**q, &**s))
}

// ~(~P == (Q & R))
fn pattern_mismatch(f: &Form) -> Option<()> {
    let Form::Neg(inner) = f else { return None };
    let (l, r) = equiv(inner)?;
    check(matches!((l, r), (BoolForm::Neg(_), BoolForm::And(..))))
}

// ~(p == P) where p occurs in P and P is not p
fn non_circularity(f: &Form) -> Option<()> {
    let Form::Neg(inner) = f else { return None };
    let (l, r) = equiv(inner)?;
    let p = l.as_atom()?;
    check(r != l && r.contains(p))
}

/// Whether `f` is a propositional tautology once every maximal subformula
/// not built from `~` and `&` is replaced by a letter (equal subformulas get
/// the same letter).
pub fn is_tautology(f: &Form) -> Result<bool, TooManyLeaves> {
    let mut leaves: Vec<&Form> = Vec::new();
    collect_leaves(f, &mut leaves);
    if leaves.len() > MAX_TAUTOLOGY_LEAVES {
        return Err(TooManyLeaves(leaves.len()));
    }
    let skeleton = index_leaves(f, &leaves);
    Ok((0u32..1 << leaves.len()).all(|row| skeleton.eval(row)))
}

fn collect_leaves<'a>(f: &'a Form, out: &mut Vec<&'a Form>) {
    match f {
        Form::Neg(x) => collect_leaves(x, out),
        Form::And(x, y) => {
            collect_leaves(x, out);
            collect_leaves(y, out);
        }
        leaf => {
            if !out.contains(&leaf) {
                out.push(leaf);
            }
        }
    }
}

enum Skeleton {
    Leaf(u32),
    Neg(Box<Skeleton>),
    And(Box<Skeleton>, Box<Skeleton>),
}

impl Skeleton {
    fn eval(&self, row: u32) -> bool {
        match self {
            Skeleton::Leaf(i) => row >> i & 1 == 1,
            Skeleton::Neg(x) => !x.eval(row),
            Skeleton::And(x, y) => x.eval(row) && y.eval(row),
        }
    }
}

fn index_leaves(f: &Form, leaves: &[&Form]) -> Skeleton {
    match f {
        Form::Neg(x) => Skeleton::Neg(Box::new(index_leaves(x, leaves))),
        Form::And(x, y) => Skeleton::And(
            Box::new(index_leaves(x, leaves)),
            Box::new(index_leaves(y, leaves)),
        ),
        leaf => Skeleton::Leaf(leaves.iter().position(|l| *l == leaf).unwrap() as u32),
    }
}
