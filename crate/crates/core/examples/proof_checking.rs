//! Building a small Hilbert proof by hand and checking it, then seeing
//! which steps the checker refuses.

use paldef::{parse_form, Agent};
use paldef::proof::{is_axiom_instance, verify_proof, Justification, Proof};

fn main() {
    let f = |s: &str| parse_form(s).unwrap();
    let mut proof = Proof::default();
    // From p == q infer p <-> q under box: box i ((p == q) -> (p <-> q)).
    let l1 = proof.push(f("(p == q) -> (p <-> q)"), Justification::Axiom);
    let l2 = proof.push(f("box i ((p == q) -> (p <-> q))"), Justification::Nec(Agent::new("i").unwrap(), l1));
    let l3 = proof.push(
        f("box i ((p == q) -> (p <-> q)) -> (box i (p == q) -> box i (p <-> q))"),
        Justification::Axiom,
    );
    proof.push(f("box i (p == q) -> box i (p <-> q)"), Justification::Mp(l2, l3));
    println!("proof of {}: {:?}", proof.last().unwrap(), verify_proof(&proof));

    for text in ["~(p == (p & q))", "~(~p == (q & r))", "[p] q <-> (p -> q)", "(p == q) -> ((p & r) == (q & r))"] {
        println!("{text}: {:?}", is_axiom_instance(&f(text)).unwrap());
    }

    let mut bad = Proof::default();
    bad.push(f("p -> p"), Justification::Taut);
    bad.push(f("[q] (p -> p)"), Justification::Unsupported("nec-ann".into()));
    println!("announcement necessitation: {:?}", verify_proof(&bad));
}
