use std::fmt;

use super::{BoolForm, Form};

impl fmt::Display for BoolForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoolForm::Atom(a) => write!(f, "{a}"),
            BoolForm::Neg(p) => write!(f, "~{p}"),
            BoolForm::And(p, q) => write!(f, "({p} & {q})"),
        }
    }
}

impl fmt::Debug for BoolForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Binary connectives are always parenthesized so that the output parses
// back to the same tree regardless of precedence. Sugar is recognised in a
// fixed order (`<->`, `->`, `|`, `!=`), which keeps printing deterministic.
impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((a, b)) = self.as_iff() {
            return write!(f, "({a} <-> {b})");
        }
        if let Some((a, b)) = self.as_implies() {
            return write!(f, "({a} -> {b})");
        }
        if let Some((a, b)) = self.as_or() {
            return write!(f, "({a} | {b})");
        }
        match self {
            Form::Atom(a) => write!(f, "{a}"),
            Form::Equiv(p, q) => write!(f, "({p} == {q})"),
            Form::Neg(x) => match &**x {
                Form::Equiv(p, q) => write!(f, "({p} != {q})"),
                _ => write!(f, "~{x}"),
            },
            Form::And(x, y) => write!(f, "({x} & {y})"),
            Form::Modal(i, x) => write!(f, "box {i} {x}"),
            Form::Ann(x, y) => write!(f, "[{x}] {y}"),
            Form::Kd(i, p) => write!(f, "kd {i} {p}"),
            Form::DefIs(a, p) => write!(f, "({a} := {p})"),
        }
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
