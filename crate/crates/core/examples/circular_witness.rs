//! Three definitional equivalences, none circular alone, refuted with a
//! derivation of a circular formula and a checkable proof of inconsistency.

use paldef::defcore::{literal_sat, parse_literals, Unsat, Verdict};
use paldef::proof::{refutation, verify_proof};

fn main() {
    let lits = parse_literals("p == (q & r)\nq == (p & r)\ns == p\n").unwrap();
    let Verdict::Unsat(Unsat::Conflict(conflict)) = literal_sat(&lits) else {
        panic!("expected a conflict");
    };
    println!("{conflict}\n");
    println!("{}", conflict.derivation());

    let proof = refutation(&conflict);
    println!("refutation ({} lines):", proof.lines.len());
    for (n, line) in proof.lines.iter().enumerate() {
        println!("{:3}  {}    [{:?}]", n + 1, line.formula, line.justification);
    }
    println!("\nverified: {:?}", verify_proof(&proof));
}
