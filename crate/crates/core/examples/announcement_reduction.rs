//! Rewriting announcements away and checking the rewrite on a model.

use std::path::Path;

use paldef::checker::eval;
use paldef::models::{load, validate};
use paldef::parse_form;
use paldef::proof::reduce;

fn main() {
    let m = validate(load(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/fig3.json")).unwrap()).unwrap();
    for text in [
        "[r] p",
        "[p] ~q",
        "[p] box i q",
        "[p][q] s",
        "[r == ~r1][q == ~q1] (box a (p == (~q1 & ~r1)) & box b (p == (~q1 & ~r1)))",
    ] {
        let f = parse_form(text).unwrap();
        let r = reduce(&f).unwrap();
        println!("{text}\n  => {r}");
        if f.agents().iter().all(|a| m.has_agent(a)) && f.vocabulary().iter().all(|a| m.has_atom(a)) {
            for w in 0..m.world_count() {
                assert_eq!(eval(&m, w, &f).unwrap(), eval(&m, w, &r).unwrap());
            }
            println!("  agrees with the original at every world of fig3");
        }
    }
    println!("\n[p] kd i q: {}", reduce(&parse_form("[p] kd i q").unwrap()).unwrap_err());
}
