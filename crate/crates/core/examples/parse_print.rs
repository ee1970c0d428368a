//! Parsing and printing formulas, plus the syntactic measures on boolean
//! formulas.

use paldef::defcore::merge;
use paldef::syntax::{apply_simultaneous, is_circular, OccSubst};
use paldef::{parse_bool, parse_form, Atom};

fn main() {
    for text in [
        "box i p & (p == q) & ~box i (p == q)",
        "[p <-> q] box i (p <-> q)",
        "kx i (p & q) -> (q := ~r)",
        "(p & (q & r)) != ((p & q) & r)",
    ] {
        let f = parse_form(text).expect("example parses");
        println!("{text:40}  =>  {f}   (size {}, modal depth {})", f.size(), f.modal_depth());
    }

    let b = |s: &str| parse_bool(s).unwrap();
    println!();
    println!("l(~p) = {}", b("~p").length());
    println!("l((p & (p & q))) = {}", b("(p & (p & q))").length());
    let m = merge(&b("(p & (q & r))"), &b("(~s & t)")).unwrap();
    println!("merge((p & (q & r)), (~s & t)) = {m}");
    println!("merge(~p, (q & r)) = {:?}", merge(&b("~p"), &b("(q & r)")));

    let p = Atom::new("p").unwrap();
    let q = Atom::new("q").unwrap();
    let one = OccSubst::new(2, p.clone(), b("(q & r)"));
    println!("{one}(p & p) = {}", one.apply(&b("(p & p)")).unwrap());
    let both = [one, OccSubst::new(1, q, b("~r"))];
    println!(
        "{} + {} applied to ((p & p) & q) = {}",
        both[0],
        both[1],
        apply_simultaneous(&both, &b("((p & p) & q)")).unwrap()
    );
    println!("p == (p & q) circular: {}", is_circular(&b("p"), &b("(p & q)")));
    println!("~q == q circular: {}", is_circular(&b("~q"), &b("q")));
    println!("p == p circular: {}", is_circular(&b("p"), &b("p")));
}
