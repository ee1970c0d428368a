//! Satisfiability and validity by tableau, with the model it finds.

use paldef::models::model_to_json;
use paldef::parse_form;
use paldef::proof::{satisfiable, valid, SatResult};

fn main() {
    for text in [
        "box i (p == q) & box i (p <-> q) & ~box i p",
        "p == (p & p)",
        "(p1 == (p2 & p3)) & (p2 == (p3 & p4)) & ~p1",
        "box i (p == q) & ~box i (p <-> q)",
    ] {
        match satisfiable(&parse_form(text).unwrap()).unwrap() {
            SatResult::Sat(m) => println!("{text}: sat\n{}", model_to_json(m.premodel())),
            SatResult::Unsat => println!("{text}: unsat\n"),
        }
    }
    for text in [
        "(p & (q & r)) != ((p & q) & r)",
        "(p & (q & r)) <-> ((p & q) & r)",
        "p <-> (p & p)",
        "[p == q] box i (p <-> q)",
        "(kd i p & box i (p == q)) -> kd i q",
    ] {
        match valid(&parse_form(text).unwrap()) {
            Ok(v) => println!("valid({text}) = {v}"),
            Err(e) => println!("valid({text}): {e}"),
        }
    }
}
