//! Model validation: the shipped fixtures pass, and two broken variants
//! fail for different reasons.

use std::path::Path;

use paldef::models::{load, validate};
use paldef::{parse_bool, Atom};

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in ["fig1", "fig2", "fig3", "fig4"] {
        let pre = load(dir.join(format!("{name}.json"))).unwrap();
        let worlds = pre.worlds.len();
        println!("{name}: {worlds} worlds, valid = {}", validate(pre).is_ok());
    }

    // q is self-evident and p := q, so p and q must agree in truth value.
    let mut pre = load(dir.join("fig1.json")).unwrap();
    let q = Atom::new("q").unwrap();
    let middle = pre.worlds.iter_mut().find(|w| w.id == "middle").unwrap();
    let v = middle.valuation[&q];
    middle.valuation.insert(q, !v);
    println!("\nfig1 with q flipped at middle:\n{}", validate(pre).unwrap_err());

    let mut pre = load(dir.join("fig1.json")).unwrap();
    pre.worlds[0].def.insert(Atom::new("p").unwrap(), parse_bool("r").unwrap());
    pre.worlds[0].def.insert(Atom::new("r").unwrap(), parse_bool("(p & q)").unwrap());
    println!("\nfig1 with p := r and r := (p & q):\n{}", validate(pre).unwrap_err());
}
