//! Public announcement logic with boolean definitions.
//!
//! Worlds of a model carry, besides a valuation, a definition for every
//! atom: a boolean formula giving its meaning. `P == Q` holds at a world when
//! `P` and `Q` unravel to syntactically identical formulas there.
//!
//! * [`syntax`]: formulas, the concrete syntax, occurrence substitutions.
//! * [`models`]: models, the two model constraints, the JSON model format.
//! * [`checker`]: the model checker, including announcements, `kd` and `:=`.
//! * [`defcore`]: deciding sets of `==` / `!=` literals by unification with
//!   an occurs check, with replayable circularity witnesses.
//! * [`proof`]: axiom recognition, Hilbert proof checking, announcement
//!   reduction and a tableau decision procedure.
//! * [`cli`]: the `paldef` command line front end.

pub mod checker;
pub mod cli;
pub mod defcore;
pub mod models;
pub mod proof;
pub mod random;
pub mod syntax;

pub use syntax::{parse_bool, parse_form, Agent, Atom, BoolForm, Form};
