//! proptest strategies for formulas.

use proptest::prelude::*;

use paldef::{Agent, Atom, BoolForm, Form};

pub fn atom(names: &'static [&'static str]) -> impl Strategy<Value = Atom> {
    proptest::sample::select(names).prop_map(|n| Atom::new(n).unwrap())
}

pub fn bool_form(names: &'static [&'static str], depth: u32) -> impl Strategy<Value = BoolForm> {
    atom(names).prop_map(BoolForm::Atom).prop_recursive(depth, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(BoolForm::not),
            (inner.clone(), inner).prop_map(|(a, b)| a.and(b)),
        ]
    })
}

pub fn agent() -> impl Strategy<Value = Agent> {
    proptest::sample::select(&["i", "j"][..]).prop_map(|n| Agent::new(n).unwrap())
}

/// Formulas over `p`, `q`, `r` with every operator of the language.
pub fn form() -> impl Strategy<Value = Form> {
    const NAMES: &[&str] = &["p", "q", "r"];
    let leaf = prop_oneof![
        atom(NAMES).prop_map(Form::Atom),
        (bool_form(NAMES, 2), bool_form(NAMES, 2)).prop_map(|(p, q)| Form::equiv(p, q)),
        (agent(), bool_form(NAMES, 2)).prop_map(|(i, p)| Form::Kd(i, p)),
        (atom(NAMES), bool_form(NAMES, 2)).prop_map(|(a, p)| Form::DefIs(a, p)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Form::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.implies(b)),
            (agent(), inner.clone()).prop_map(|(i, a)| Form::modal(i, a)),
            (inner.clone(), inner).prop_map(|(a, b)| Form::ann(a, b)),
        ]
    })
}
