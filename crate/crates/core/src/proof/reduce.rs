use thiserror::Error;

use crate::syntax::Form;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot reduce announcement: no reduction axiom for `{0}` in its scope")]
pub struct ReduceError(pub Form);

/// Rewrites `f` into an announcement-free formula with the reduction
/// axioms. Announced formulas are reduced before the announcement is pushed
/// inwards, and stacked announcements are composed first, so
/// `[p][q] s` becomes `((p & (p -> q)) -> s)`.
pub fn reduce(f: &Form) -> Result<Form, ReduceError> {
    Ok(match f {
        Form::Atom(_) | Form::Equiv(..) | Form::Kd(..) | Form::DefIs(..) => f.clone(),
        Form::Neg(x) => reduce(x)?.not(),
        Form::And(x, y) => reduce(x)?.and(reduce(y)?),
        Form::Modal(i, x) => Form::modal(i.clone(), reduce(x)?),
        Form::Ann(a, body) => after(&reduce(a)?, body)?,
    })
}

// `[a] body` for announcement-free `a`.
fn after(a: &Form, body: &Form) -> Result<Form, ReduceError> {
    Ok(match body {
        Form::Atom(_) | Form::Equiv(..) => a.clone().implies(body.clone()),
        Form::Neg(x) => a.clone().implies(after(a, x)?.not()),
        Form::And(x, y) => after(a, x)?.and(after(a, y)?),
        Form::Modal(i, x) => {
            let inner = a.clone().implies(after(a, x)?);
            a.clone().implies(Form::modal(i.clone(), inner))
        }
        Form::Ann(b, c) => {
            let announced = a.clone().and(after(a, b)?);
            after(&announced, c)?
        }
        Form::Kd(..) | Form::DefIs(..) => return Err(ReduceError(body.clone())),
    })
}
