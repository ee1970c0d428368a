//! Every finite prefix of p_i == (p_{i+1} & p_{i+2}) has a model, but the
//! definition of p1 keeps growing; the infinite set has no model.

use std::path::Path;

use paldef::defcore::{literal_sat, parse_literals, Verdict};
use paldef::Atom;

fn main() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let p1 = Atom::new("p1").unwrap();
    for n in 2..=5 {
        let text = std::fs::read_to_string(dir.join(format!("prefix{n}.lits"))).unwrap();
        let Verdict::Sat(seed) = literal_sat(&parse_literals(&text).unwrap()) else {
            panic!("prefix{n} should be satisfiable");
        };
        let def = &seed.def[&p1];
        println!("prefix{n}: p1 := {def}  (length {})", def.length());
        let m = seed.model();
        assert_eq!(m.world_count(), 1);
    }
}
