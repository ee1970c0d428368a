//! Random instances of every axiom schema.

use rand::seq::SliceRandom;
use rand::Rng;

use paldef::proof::Axiom;
use paldef::random::{bool_form, form, FormShape};
use paldef::syntax::OccSubst;
use paldef::{Agent, Atom, BoolForm, Form};

pub struct Vocab {
    pub atoms: Vec<Atom>,
    pub agents: Vec<Agent>,
}

impl Vocab {
    pub fn standard() -> Self {
        Vocab {
            atoms: ["p", "q", "r", "s"].iter().map(|n| Atom::new(n).unwrap()).collect(),
            agents: ["i", "j"].iter().map(|n| Agent::new(n).unwrap()).collect(),
        }
    }

    /// Any formula of modest size, `kd` and `:=` included.
    pub fn any<R: Rng>(&self, rng: &mut R) -> Form {
        let mut shape = FormShape::new(&self.atoms, &self.agents, 2);
        shape.definitions = true;
        shape.bool_len = 4;
        form(rng, &shape)
    }

    /// Short boolean formulas, so that random `==` facts often hold.
    pub fn short<R: Rng>(&self, rng: &mut R) -> BoolForm {
        bool_form(rng, &self.atoms[..2], 4)
    }

    pub fn atom<R: Rng>(&self, rng: &mut R) -> Atom {
        self.atoms.choose(rng).unwrap().clone()
    }

    pub fn agent<R: Rng>(&self, rng: &mut R) -> Agent {
        self.agents.choose(rng).unwrap().clone()
    }
}

pub fn instance<R: Rng>(axiom: Axiom, v: &Vocab, rng: &mut R) -> Form {
    let e = Form::equiv;
    match axiom {
        Axiom::Tautology => {
            let (a, b, c) = (v.any(rng), v.any(rng), v.any(rng));
            match rng.gen_range(0..6) {
                0 => a.clone().implies(b.implies(a)),
                1 => a.clone().and(b).implies(a),
                2 => a.clone().or(a.not()),
                3 => a.clone().implies(b.clone()).and(b.implies(c.clone())).implies(a.implies(c)),
                4 => a.clone().not().not().iff(a),
                _ => a.clone().and(b.clone()).iff(b.and(a)),
            }
        }
        Axiom::K => {
            let (i, a, b) = (v.agent(rng), v.any(rng), v.any(rng));
            Form::modal(i.clone(), a.clone().implies(b.clone()))
                .implies(Form::modal(i.clone(), a).implies(Form::modal(i, b)))
        }
        Axiom::RedAtom => {
            let (phi, p) = (v.any(rng), Form::Atom(v.atom(rng)));
            Form::ann(phi.clone(), p.clone()).iff(phi.implies(p))
        }
        Axiom::RedEquiv => {
            let (phi, eq) = (v.any(rng), e(v.short(rng), v.short(rng)));
            Form::ann(phi.clone(), eq.clone()).iff(phi.implies(eq))
        }
        Axiom::RedNeg => {
            let (phi, psi) = (v.any(rng), v.any(rng));
            Form::ann(phi.clone(), psi.clone().not()).iff(phi.clone().implies(Form::ann(phi, psi).not()))
        }
        Axiom::RedAnd => {
            let (phi, psi, theta) = (v.any(rng), v.any(rng), v.any(rng));
            Form::ann(phi.clone(), psi.clone().and(theta.clone()))
                .iff(Form::ann(phi.clone(), psi).and(Form::ann(phi, theta)))
        }
        Axiom::RedBox => {
            let (i, phi, psi) = (v.agent(rng), v.any(rng), v.any(rng));
            let inner = phi.clone().implies(Form::ann(phi.clone(), psi.clone()));
            Form::ann(phi.clone(), Form::modal(i.clone(), psi)).iff(phi.implies(Form::modal(i, inner)))
        }
        Axiom::RedAnn => {
            let (phi, psi, chi) = (v.any(rng), v.any(rng), v.any(rng));
            let announced = phi.clone().and(Form::ann(phi.clone(), psi.clone()));
            Form::ann(phi, Form::ann(psi, chi.clone())).iff(Form::ann(announced, chi))
        }
        Axiom::Refl => {
            let p = v.short(rng);
            e(p.clone(), p)
        }
        Axiom::Sym => {
            let (p, q) = (v.short(rng), v.short(rng));
            e(p.clone(), q.clone()).implies(e(q, p))
        }
        Axiom::Trans => {
            let (p, q, r) = (v.short(rng), v.short(rng), v.short(rng));
            e(p.clone(), q.clone()).and(e(q, r.clone())).implies(e(p, r))
        }
        Axiom::Equivalence => {
            let (p, q) = (v.short(rng), v.short(rng));
            e(p.clone(), q.clone()).implies(Form::from(p).iff(Form::from(q)))
        }
        Axiom::OccSubst => {
            let p = v.atom(rng);
            let (q, r) = (v.short(rng), v.short(rng));
            let mut s = bool_form(rng, &v.atoms, 7);
            if !s.contains(&p) {
                s = s.and(BoolForm::Atom(p.clone()));
            }
            let k = rng.gen_range(1..=s.occurrences(&p));
            let s2 = OccSubst::new(k, p.clone(), q.clone()).apply(&s).unwrap();
            e(BoolForm::Atom(p), q).and(e(r.clone(), s)).implies(e(r, s2))
        }
        Axiom::PatternNeg => {
            let (p, q) = (v.short(rng), v.short(rng));
            e(p.clone().not(), q.clone().not()).iff(e(p, q))
        }
        Axiom::PatternAnd => {
            let (p, q, r, s) = (v.short(rng), v.short(rng), v.short(rng), v.short(rng));
            e(p.clone().and(q.clone()), r.clone().and(s.clone())).iff(e(p, r).and(e(q, s)))
        }
        Axiom::PatternMismatch => {
            let (p, q, r) = (v.short(rng), v.short(rng), v.short(rng));
            e(p.not(), q.and(r)).not()
        }
        Axiom::NonCircularity => {
            let p = v.atom(rng);
            let mut q = bool_form(rng, &v.atoms, 7);
            if !q.contains(&p) || q.is_atom() {
                q = q.and(BoolForm::Atom(p.clone()));
            }
            e(BoolForm::Atom(p), q).not()
        }
    }
}

/// [`Axiom::SCHEMAS`] plus tautologies.
pub fn all_axioms() -> Vec<Axiom> {
    let mut out = vec![Axiom::Tautology];
    out.extend(Axiom::SCHEMAS);
    out
}
