//! Oracles and helpers shared by the integration suites.
#![allow(dead_code)]

pub mod closure;
pub mod constraint;
pub mod forms;
pub mod instances;
pub mod strategy;

use std::path::PathBuf;

use paldef::models::{load, validate, Model, PreModel};
use paldef::{parse_bool, parse_form, BoolForm, Form};

pub const FIXTURES: [&str; 4] = ["fig1", "fig2", "fig3", "fig4"];

/// Seed for the randomized suites, overridable through `PALDEF_SEED`.
pub fn seed() -> u64 {
    std::env::var("PALDEF_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(20_240_917)
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_pre(name: &str) -> PreModel {
    load(fixture_path(&format!("{name}.json"))).expect("fixture loads")
}

pub fn fixture(name: &str) -> Model {
    validate(fixture_pre(name)).expect("fixture is a model")
}

pub fn f(s: &str) -> Form {
    parse_form(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn b(s: &str) -> BoolForm {
    parse_bool(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

/// One model holding every single world over `atoms` in which each atom is
/// self-evident or defined by a formula of length at most `max_def_len`
/// over the self-evident ones. No agents, no edges.
pub fn single_worlds(atoms: &[paldef::Atom], max_def_len: usize) -> Model {
    use paldef::models::World;
    let mut worlds = Vec::new();
    for mask in 1u32..1 << atoms.len() {
        let base: Vec<_> = (0..atoms.len()).filter(|k| mask >> k & 1 == 1).map(|k| atoms[k].clone()).collect();
        let defined: Vec<_> = atoms.iter().filter(|a| !base.contains(a)).cloned().collect();
        let images = paldef::syntax::enumerate_bool(&base, max_def_len);
        let mut choice = vec![0usize; defined.len()];
        loop {
            for vals in 0u32..1 << base.len() {
                let mut w = World::blank(format!("w{}", worlds.len()), atoms);
                for (k, a) in base.iter().enumerate() {
                    w.valuation.insert(a.clone(), vals >> k & 1 == 1);
                }
                for (a, &c) in defined.iter().zip(&choice) {
                    let image = images[c].clone();
                    let v = image.eval(&mut |x| w.valuation[x]);
                    w.valuation.insert(a.clone(), v);
                    w.def.insert(a.clone(), image);
                }
                worlds.push(w);
            }
            // Next combination of images.
            let mut k = 0;
            while k < choice.len() && choice[k] + 1 == images.len() {
                choice[k] = 0;
                k += 1;
            }
            if k == choice.len() {
                break;
            }
            choice[k] += 1;
        }
    }
    let pre = PreModel {
        vocabulary: atoms.to_vec(),
        agents: Vec::new(),
        worlds,
        relations: Default::default(),
        actual: Some(0),
    };
    validate(pre).expect("enumerated worlds are valid")
}
