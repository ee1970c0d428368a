//! Two agents each understand part of a definition (fig3), and two
//! agents agree on p while reading it differently (fig4).

use std::path::Path;

use paldef::checker::eval_at;
use paldef::models::{load, validate, Model};
use paldef::parse_form;

fn fixture(name: &str) -> Model {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name);
    validate(load(path).unwrap()).unwrap()
}

fn show(m: &Model, world: &str, text: &str) {
    let value = eval_at(m, world, &parse_form(text).unwrap()).unwrap();
    println!("  {world} |= {text}: {value}");
}

fn main() {
    let fig3 = fixture("fig3.json");
    println!("fig3");
    show(&fig3, "middle", "box a (p == (q & r)) & box b (p == (q & r))");
    show(&fig3, "middle", "box b (p == (~q1 & r))");
    show(&fig3, "middle", "box a (p == (~q1 & r))");
    show(&fig3, "middle", "box a (p == (q & ~r1))");
    show(&fig3, "middle", "box b (p == (q & ~r1))");
    show(&fig3, "middle", "[r == ~r1][q == ~q1] (box a (p == (~q1 & ~r1)) & box b (p == (~q1 & ~r1)))");

    let fig4 = fixture("fig4.json");
    println!("fig4");
    show(&fig4, "middle", "p & box i p & box j p");
    show(&fig4, "middle", "box i ((p == r) & r & ~q)");
    show(&fig4, "middle", "box j ((p == q) & q & ~r)");
    show(&fig4, "middle", "kd i p");
}
