//! The agent knows p is true without knowing what p means, and an
//! announcement of p <-> q does not fix that.

use std::path::Path;

use paldef::checker::{eval_at, eval_global, extension_table};
use paldef::models::{load, validate};
use paldef::parse_form;

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/fig1.json");
    let m = validate(load(path).unwrap()).unwrap();

    for text in [
        "box i p",
        "p == q",
        "box i (p == q)",
        "box i q",
        "[p <-> q] box i (p <-> q)",
        "[p <-> q] box i (p == q)",
    ] {
        let f = parse_form(text).unwrap();
        println!("middle |= {text:28} {}", eval_at(&m, "middle", &f).unwrap());
    }

    let announced = parse_form("p <-> q").unwrap();
    let kept: Vec<&str> = eval_global(&m, &announced).unwrap().into_iter().map(|w| m.world_id(w)).collect();
    println!("\nannouncing p <-> q keeps {kept:?}");

    println!("\nextensions of box i p & (p == q):");
    for (g, worlds) in extension_table(&m, &parse_form("box i p & (p == q)").unwrap()).unwrap() {
        let ids: Vec<&str> = worlds.iter().map(|&w| m.world_id(w)).collect();
        println!("  {g:24} {ids:?}");
    }
}
