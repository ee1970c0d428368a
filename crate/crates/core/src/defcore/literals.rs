use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::syntax::{parse_form, Atom, BoolForm, Form};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

/// A literal about a single world.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Literal {
    /// `P == Q` or `P != Q`.
    Equiv(Sign, BoolForm, BoolForm),
    /// A boolean formula asserted true.
    Prop(BoolForm),
}

impl Literal {
    pub fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        let mut add = |p: &BoolForm| p.for_each_leaf(&mut |a| {
            out.insert(a.clone());
        });
        match self {
            Literal::Equiv(_, p, q) => {
                add(p);
                add(q);
            }
            Literal::Prop(p) => add(p),
        }
    }

    /// Reads a literal from a formula, if it has one of the literal shapes.
    pub fn from_form(f: &Form) -> Option<Literal> {
        match f {
            Form::Equiv(p, q) => Some(Literal::Equiv(Sign::Pos, p.clone(), q.clone())),
            Form::Neg(inner) => match &**inner {
                Form::Equiv(p, q) => Some(Literal::Equiv(Sign::Neg, p.clone(), q.clone())),
                _ => f.as_bool().map(Literal::Prop),
            },
            _ => f.as_bool().map(Literal::Prop),
        }
    }
}

impl Literal {
    pub fn to_form(&self) -> Form {
        match self {
            Literal::Equiv(Sign::Pos, p, q) => Form::equiv(p.clone(), q.clone()),
            Literal::Equiv(Sign::Neg, p, q) => Form::nequiv(p.clone(), q.clone()),
            Literal::Prop(p) => Form::from(p.clone()),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Equiv(Sign::Pos, p, q) => write!(f, "{p} == {q}"),
            Literal::Equiv(Sign::Neg, p, q) => write!(f, "{p} != {q}"),
            Literal::Prop(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct LiteralError {
    pub line: usize,
    pub message: String,
}

/// One literal per line; blank lines and `#` comments are skipped.
pub fn parse_literals(text: &str) -> Result<Vec<Literal>, LiteralError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| LiteralError { line: n + 1, message };
        let form = parse_form(line).map_err(|e| err(e.to_string()))?;
        let lit = Literal::from_form(&form)
            .ok_or_else(|| err(format!("`{form}` is not an equivalence, a disequivalence or a boolean formula")))?;
        out.push(lit);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_each_shape() {
        let lits = parse_literals("# comment\np == (q & r)\n\n~(p == q)\np != q\n~p  # trailing\n").unwrap();
        assert_eq!(lits.len(), 4);
        assert!(matches!(lits[0], Literal::Equiv(Sign::Pos, ..)));
        assert!(matches!(lits[1], Literal::Equiv(Sign::Neg, ..)));
        assert_eq!(lits[1], lits[2]);
        assert_eq!(lits[3].to_string(), "~p");
    }

    #[test]
    fn rejects_modal_lines() {
        let err = parse_literals("p\nbox i p\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(parse_literals("p == \n").is_err());
    }
}
