//! Exhaustive enumeration of small formulas over `p`, `q` with one agent and
//! modal depth at most 1, and a brute-force satisfiability oracle for them.

use std::collections::{BTreeSet, HashMap};

use paldef::checker::eval_global;
use paldef::models::{validate, Model, PreModel, World};
use paldef::{Agent, Atom, BoolForm, Form};

#[derive(Clone, Copy)]
enum Node {
    Atom(u8),
    Equiv(u32, u32),
    Neg(u32),
    And(u32, u32),
    Box(u32),
}

/// Every formula of the class with at most `max_size` nodes, stored as a DAG
/// so millions of them fit in memory.
pub struct SmallForms {
    atoms: [Atom; 2],
    agent: Agent,
    bools: Vec<BoolForm>,
    nodes: Vec<Node>,
    /// Ids of modal-free formulas by size.
    flat: Vec<Vec<u32>>,
    /// Ids of modal depth 1 formulas by size.
    modal: Vec<Vec<u32>>,
}

impl SmallForms {
    pub fn new(max_size: usize) -> Self {
        let atoms = [Atom::new("p").unwrap(), Atom::new("q").unwrap()];
        // Boolean formulas by size; an `==` needs two of them and a node.
        let mut bools_by_size: Vec<Vec<BoolForm>> = vec![Vec::new(); max_size.max(2)];
        bools_by_size[1] = atoms.iter().cloned().map(BoolForm::Atom).collect();
        for n in 2..bools_by_size.len() {
            let mut here = Vec::new();
            for p in &bools_by_size[n - 1] {
                here.push(p.clone().not());
            }
            for a in 1..n - 1 {
                for p in &bools_by_size[a] {
                    for q in &bools_by_size[n - 1 - a] {
                        here.push(p.clone().and(q.clone()));
                    }
                }
            }
            bools_by_size[n] = here;
        }
        let mut bools = Vec::new();
        let mut bool_ids: Vec<Vec<u32>> = Vec::new();
        for layer in bools_by_size {
            let start = bools.len() as u32;
            bool_ids.push((start..start + layer.len() as u32).collect());
            bools.extend(layer);
        }

        let mut s = SmallForms {
            atoms,
            agent: Agent::new("i").unwrap(),
            bools,
            nodes: Vec::new(),
            flat: vec![Vec::new(); max_size + 1],
            modal: vec![Vec::new(); max_size + 1],
        };
        for n in 1..=max_size {
            let mut flat = Vec::new();
            let mut modal = Vec::new();
            if n == 1 {
                flat.push(s.add(Node::Atom(0)));
                flat.push(s.add(Node::Atom(1)));
            }
            for a in 1..n.saturating_sub(1) {
                let b = n - 1 - a;
                if a < bool_ids.len() && b < bool_ids.len() {
                    for &x in &bool_ids[a] {
                        for &y in &bool_ids[b] {
                            flat.push(s.add(Node::Equiv(x, y)));
                        }
                    }
                }
            }
            if n >= 2 {
                for x in s.flat[n - 1].clone() {
                    flat.push(s.add(Node::Neg(x)));
                    modal.push(s.add(Node::Box(x)));
                }
                for x in s.modal[n - 1].clone() {
                    modal.push(s.add(Node::Neg(x)));
                }
            }
            for a in 1..n.saturating_sub(1) {
                let b = n - 1 - a;
                let (fa, ma, fb, mb) = (s.flat[a].clone(), s.modal[a].clone(), s.flat[b].clone(), s.modal[b].clone());
                for &x in &fa {
                    for &y in &fb {
                        flat.push(s.add(Node::And(x, y)));
                    }
                    for &y in &mb {
                        modal.push(s.add(Node::And(x, y)));
                    }
                }
                for &x in &ma {
                    for &y in fb.iter().chain(&mb) {
                        modal.push(s.add(Node::And(x, y)));
                    }
                }
            }
            s.flat[n] = flat;
            s.modal[n] = modal;
        }
        s
    }

    fn add(&mut self, n: Node) -> u32 {
        self.nodes.push(n);
        (self.nodes.len() - 1) as u32
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Number of formulas with exactly `n` nodes.
    pub fn count_of_size(&self, n: usize) -> usize {
        self.flat[n].len() + self.modal[n].len()
    }

    pub fn form(&self, id: usize) -> Form {
        match self.nodes[id] {
            Node::Atom(a) => Form::Atom(self.atoms[a as usize].clone()),
            Node::Equiv(x, y) => Form::equiv(self.bools[x as usize].clone(), self.bools[y as usize].clone()),
            Node::Neg(x) => self.form(x as usize).not(),
            Node::And(x, y) => self.form(x as usize).and(self.form(y as usize)),
            Node::Box(x) => Form::modal(self.agent.clone(), self.form(x as usize)),
        }
    }
}

/// Satisfiability by brute force over bounded models: worlds are drawn from a
/// fixed catalogue of world types (valuation plus definitions, with
/// definitions of length at most 6) and, because the modal depth is at most
/// 1, a model is a root type together with the set of its successors' types.
/// A formula satisfiable here is satisfiable; the converse needs longer
/// definitions than the catalogue offers.
pub struct ModalOracle {
    universe: Model,
    leaves: HashMap<Form, u64>,
}

impl ModalOracle {
    pub fn new() -> Self {
        let p = Atom::new("p").unwrap();
        let q = Atom::new("q").unwrap();
        let vocab = vec![p.clone(), q.clone()];
        let mut worlds = Vec::new();
        let push = |mut w: World, worlds: &mut Vec<World>| {
            w.id = format!("t{}", worlds.len());
            worlds.push(w);
        };
        for vp in [false, true] {
            for vq in [false, true] {
                let mut w = World::blank("", &vocab);
                w.valuation.insert(p.clone(), vp);
                w.valuation.insert(q.clone(), vq);
                push(w, &mut worlds);
            }
        }
        for (defined, base) in [(&p, &q), (&q, &p)] {
            for image in paldef::syntax::enumerate_bool(std::slice::from_ref(base), 6) {
                for v in [false, true] {
                    let mut w = World::blank("", &vocab);
                    w.valuation.insert(base.clone(), v);
                    w.valuation.insert(defined.clone(), image.eval(&mut |_| v));
                    w.def.insert(defined.clone(), image.clone());
                    push(w, &mut worlds);
                }
            }
        }
        assert!(worlds.len() <= 64);
        let pre = PreModel {
            vocabulary: vocab,
            agents: vec![Agent::new("i").unwrap()],
            relations: [(Agent::new("i").unwrap(), Vec::new())].into_iter().collect(),
            worlds,
            actual: Some(0),
        };
        ModalOracle {
            universe: validate(pre).expect("world types are valid"),
            leaves: HashMap::new(),
        }
    }

    pub fn type_count(&self) -> usize {
        self.universe.world_count()
    }

    fn all(&self) -> u64 {
        (1u64 << self.type_count()) - 1
    }

    fn leaf(&mut self, f: &Form) -> u64 {
        if let Some(&m) = self.leaves.get(f) {
            return m;
        }
        let ext: BTreeSet<usize> = eval_global(&self.universe, f).expect("leaf over p, q");
        let m = ext.iter().fold(0u64, |m, &t| m | 1 << t);
        self.leaves.insert(f.clone(), m);
        m
    }

    // Types satisfying `f`, where the k-th boxed body counts as true exactly
    // when bit k of `boxes` is set.
    fn ext(&mut self, f: &Form, bodies: &[&Form], boxes: u32) -> u64 {
        match f {
            Form::Atom(_) | Form::Equiv(..) => self.leaf(f),
            Form::Neg(x) => !self.ext(x, bodies, boxes) & self.all(),
            Form::And(x, y) => self.ext(x, bodies, boxes) & self.ext(y, bodies, boxes),
            Form::Modal(_, x) => {
                let k = bodies.iter().position(|b| *b == &**x).expect("body collected");
                if boxes >> k & 1 == 1 {
                    self.all()
                } else {
                    0
                }
            }
            other => panic!("outside the enumerated class: {other}"),
        }
    }

    pub fn satisfiable(&mut self, f: &Form) -> bool {
        let mut bodies: Vec<&Form> = Vec::new();
        collect_bodies(f, &mut bodies);
        assert!(bodies.len() < 32);
        let ext: Vec<u64> = bodies.iter().map(|b| self.ext(b, &[], 0)).collect();
        // For each world type, the set of bodies it satisfies.
        let mut profiles = BTreeSet::new();
        for t in 0..self.type_count() {
            let u = ext.iter().enumerate().fold(0u32, |u, (k, m)| u | (((m >> t) & 1) as u32) << k);
            profiles.insert(u);
        }
        // Box vectors realizable by some finite set of successors.
        let full = if bodies.is_empty() { 0 } else { u32::MAX >> (32 - bodies.len()) };
        let mut reachable: BTreeSet<u32> = [full].into_iter().collect();
        loop {
            let next: BTreeSet<u32> =
                reachable.iter().flat_map(|v| profiles.iter().map(move |u| v & u)).collect();
            if next.is_subset(&reachable) {
                break;
            }
            reachable.extend(next);
        }
        reachable.into_iter().any(|v| self.ext(f, &bodies, v) != 0)
    }
}

fn collect_bodies<'a>(f: &'a Form, out: &mut Vec<&'a Form>) {
    match f {
        Form::Neg(x) => collect_bodies(x, out),
        Form::And(x, y) => {
            collect_bodies(x, out);
            collect_bodies(y, out);
        }
        Form::Modal(_, x) => {
            if !out.contains(&&**x) {
                out.push(x);
            }
        }
        _ => {}
    }
}
