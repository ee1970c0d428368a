use super::verify::{Justification, Proof};
use crate::defcore::{Conflict, Derivation, Rule};
use crate::syntax::{BoolForm, Form};

/// A Hilbert proof of `~H`, where `H` is the conjunction of the premises the
/// conflict's derivation uses.
///
/// Every fact `E` of the derivation becomes a line `H -> E`. The lines are
/// glued together with two tautology shapes, `(H -> X) -> ((X -> Y) -> (H -> Y))`
/// and `(H -> X) -> ((H -> Y) -> (H -> (X & Y)))`, and the definition axioms.
/// The last fact is refuted by non-circularity or pattern mismatch.
pub fn refutation(conflict: &Conflict) -> Proof {
    let d = conflict.derivation();
    let mut b = Builder::new(d);
    for n in 0..d.facts.len() {
        b.fact(n);
    }
    let last = d.facts.len() - 1;
    let (mut hyp_line, mut goal) = (b.lines[last], b.eq(last));
    if let Conflict::Clash(_) = conflict {
        // The axiom has the negation on the left.
        if let Form::Equiv(l, r) = &goal {
            if matches!(l, BoolForm::And(..)) {
                let flipped = Form::equiv(r.clone(), l.clone());
                let ax = b.proof.push(goal.clone().implies(flipped.clone()), Justification::Axiom);
                hyp_line = b.chain(hyp_line, &goal, ax, &flipped);
                goal = flipped;
            }
        }
    }
    let h = b.h.clone();
    let closing = b.proof.push(goal.clone().not(), Justification::Axiom);
    let contra = h.clone().implies(goal.clone()).implies(goal.clone().not().implies(h.clone().not()));
    let t = b.proof.push(contra, Justification::Taut);
    let l = b.proof.push(goal.not().implies(h.clone().not()), Justification::Mp(hyp_line, t));
    b.proof.push(h.not(), Justification::Mp(closing, l));
    b.proof
}

struct Builder<'a> {
    d: &'a Derivation,
    h: Form,
    proof: Proof,
    /// Line number of `H -> fact` for each fact.
    lines: Vec<usize>,
}

impl<'a> Builder<'a> {
    fn new(d: &'a Derivation) -> Self {
        let parts = d
            .premises
            .iter()
            .map(|(p, q)| Form::equiv(p.clone(), q.clone()))
            .collect();
        Builder {
            d,
            h: Form::conjoin(parts).expect("a conflict uses at least one premise"),
            proof: Proof::default(),
            lines: Vec::new(),
        }
    }

    fn eq(&self, n: usize) -> Form {
        let f = &self.d.facts[n];
        Form::equiv(f.left.clone(), f.right.clone())
    }

    fn hyp(&self, x: &Form) -> Form {
        self.h.clone().implies(x.clone())
    }

    // From line `hx: H -> X` and line `xy: X -> Y`, derive `H -> Y`.
    fn chain(&mut self, hx: usize, x: &Form, xy: usize, y: &Form) -> usize {
        let (h_x, h_y) = (self.hyp(x), self.hyp(y));
        let x_y = x.clone().implies(y.clone());
        let t = self
            .proof
            .push(h_x.implies(x_y.clone().implies(h_y.clone())), Justification::Taut);
        let l = self.proof.push(x_y.implies(h_y.clone()), Justification::Mp(hx, t));
        self.proof.push(h_y, Justification::Mp(xy, l))
    }

    // From `H -> X` and `H -> Y`, derive `H -> (X & Y)`.
    fn both(&mut self, hx: usize, x: &Form, hy: usize, y: &Form) -> usize {
        let (h_x, h_y) = (self.hyp(x), self.hyp(y));
        let h_xy = self.hyp(&x.clone().and(y.clone()));
        let t = self
            .proof
            .push(h_x.implies(h_y.clone().implies(h_xy.clone())), Justification::Taut);
        let l = self.proof.push(h_y.implies(h_xy.clone()), Justification::Mp(hx, t));
        self.proof.push(h_xy, Justification::Mp(hy, l))
    }

    // `axiom` is `A <-> B`; derive `A -> target` where `target` is `B` or one
    // conjunct of `B`.
    fn from_iff(&mut self, axiom: Form, a: &Form, target: &Form) -> usize {
        let ax = self.proof.push(axiom.clone(), Justification::Axiom);
        let a_t = a.clone().implies(target.clone());
        let t = self.proof.push(axiom.implies(a_t.clone()), Justification::Taut);
        self.proof.push(a_t, Justification::Mp(ax, t))
    }

    fn fact(&mut self, n: usize) {
        let e = self.eq(n);
        let line = match self.d.facts[n].rule {
            Rule::Premise(_) => self.proof.push(self.hyp(&e), Justification::Taut),
            Rule::Sym(i) => {
                let src = self.eq(i);
                let ax = self.proof.push(src.clone().implies(e.clone()), Justification::Axiom);
                self.chain(self.lines[i], &src, ax, &e)
            }
            Rule::Trans(i, j) => self.from_two(i, j, &e),
            Rule::OccSubst { def, target, .. } => self.from_two(def, target, &e),
            Rule::PatNeg(i) => {
                let src = self.eq(i);
                let imp = self.from_iff(src.clone().iff(e.clone()), &src, &e);
                self.chain(self.lines[i], &src, imp, &e)
            }
            Rule::PatAndLeft(i) | Rule::PatAndRight(i) => {
                let src = self.eq(i);
                let (BoolForm::And(p, q), BoolForm::And(r, s)) = (&self.d.facts[i].left, &self.d.facts[i].right)
                else {
                    unreachable!("replayed derivation")
                };
                let left = Form::equiv((**p).clone(), (**r).clone());
                let right = Form::equiv((**q).clone(), (**s).clone());
                let axiom = src.clone().iff(left.and(right));
                let imp = self.from_iff(axiom, &src, &e);
                self.chain(self.lines[i], &src, imp, &e)
            }
        };
        self.lines.push(line);
    }

    // `(E_i & E_j) -> e` is an axiom instance (transitivity or occurrence
    // substitution).
    fn from_two(&mut self, i: usize, j: usize, e: &Form) -> usize {
        let (ei, ej) = (self.eq(i), self.eq(j));
        let conj = self.both(self.lines[i], &ei, self.lines[j], &ej);
        let both = ei.and(ej);
        let ax = self.proof.push(both.clone().implies(e.clone()), Justification::Axiom);
        self.chain(conj, &both, ax, e)
    }
}
