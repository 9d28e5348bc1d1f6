//! Shared support for the integration tests: a seeded formula generator,
//! a truth-table oracle and the NK proof corpus.
#![allow(dead_code)]

use ndk_core::checker::check_fragment;
use ndk_core::derivations::*;
use ndk_core::{check, parse_formula, parse_proof_file, Formula, Judgment, Label, LabelSupply, Mode, Proof, Term};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

pub fn f(s: &str) -> Formula {
    parse_formula(s).unwrap_or_else(|e| panic!("`{s}`: {e}"))
}

/// Random formulas over the atoms `a`, `b`, `p(t)` and the quantified
/// variables `x`, `y`. Terms are bound variables, the free variable `z`, the
/// constant `c()` or `g(t)`.
pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn formula(&mut self, max_depth: usize) -> Formula {
        self.formula_in(max_depth, &mut Vec::new())
    }

    fn formula_in(&mut self, depth: usize, bound: &mut Vec<&'static str>) -> Formula {
        if depth == 0 || self.rng.gen_bool(0.15) {
            return self.leaf(bound);
        }
        match self.rng.gen_range(0..7) {
            0 => Formula::not(self.formula_in(depth - 1, bound)),
            1 => Formula::and(self.formula_in(depth - 1, bound), self.formula_in(depth - 1, bound)),
            2 => Formula::or(self.formula_in(depth - 1, bound), self.formula_in(depth - 1, bound)),
            3 => Formula::implies(self.formula_in(depth - 1, bound), self.formula_in(depth - 1, bound)),
            q => {
                let x = *["x", "y"].choose(&mut self.rng).unwrap();
                bound.push(x);
                let body = self.formula_in(depth - 1, bound);
                bound.pop();
                if q % 2 == 0 { Formula::forall(x, body) } else { Formula::exists(x, body) }
            }
        }
    }

    fn leaf(&mut self, bound: &[&'static str]) -> Formula {
        match self.rng.gen_range(0..7) {
            0 => Formula::Bottom,
            1 | 2 => Formula::prop("a"),
            3 => Formula::prop("b"),
            _ => {
                let t = self.term(bound, 1);
                Formula::atom("p", vec![t])
            }
        }
    }

    pub fn term(&mut self, bound: &[&'static str], depth: usize) -> Term {
        let roll = self.rng.gen_range(0..6);
        match roll {
            0 if depth > 0 => Term::app("g", vec![self.term(bound, depth - 1)]),
            1 => Term::constant("c"),
            2 => Term::var("z"),
            _ if !bound.is_empty() => Term::var(*bound.choose(&mut self.rng).unwrap()),
            _ => Term::var(*["x", "y", "z"].choose(&mut self.rng).unwrap()),
        }
    }

    pub fn any_term(&mut self) -> Term {
        self.term(&["x", "y"], 2)
    }

    pub fn var(&mut self) -> &'static str {
        ["x", "y", "z"].choose(&mut self.rng).copied().unwrap()
    }
}

/// Atomic subformulas of a quantifier-free formula.
fn atoms_of(f: &Formula, out: &mut BTreeSet<Formula>) {
    match f {
        Formula::Bottom => {}
        Formula::Atom(..) => {
            out.insert(f.clone());
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            atoms_of(a, out);
            atoms_of(b, out);
        }
        Formula::Forall(_, a) | Formula::Exists(_, a) => atoms_of(a, out),
    }
}

fn eval(f: &Formula, v: &BTreeMap<Formula, bool>) -> bool {
    match f {
        Formula::Bottom => false,
        Formula::Atom(..) => v[f],
        Formula::And(a, b) => eval(a, v) && eval(b, v),
        Formula::Or(a, b) => eval(a, v) || eval(b, v),
        Formula::Implies(a, b) => !eval(a, v) || eval(b, v),
        Formula::Forall(..) | Formula::Exists(..) => unreachable!("quantifier-free input"),
    }
}

pub const ORACLE_MAX_ATOMS: usize = 6;

/// Whether a quantifier-free formula holds under every valuation of its
/// atoms. `None` when the formula has quantifiers or too many atoms.
pub fn tautology(f: &Formula) -> Option<bool> {
    if !f.is_quantifier_free() {
        return None;
    }
    let mut atoms = BTreeSet::new();
    atoms_of(f, &mut atoms);
    if atoms.len() > ORACLE_MAX_ATOMS {
        return None;
    }
    let atoms: Vec<Formula> = atoms.into_iter().collect();
    Some((0u32..1 << atoms.len()).all(|bits| {
        let v = atoms.iter().enumerate().map(|(i, a)| (a.clone(), bits >> i & 1 == 1)).collect();
        eval(f, &v)
    }))
}

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("corpus")
}

/// The hand-encoded proofs with their stated judgments, sorted by name.
pub fn hand_corpus() -> Vec<(String, Proof, Judgment)> {
    let mut out = Vec::new();
    let mut entries: Vec<_> = std::fs::read_dir(corpus_dir()).unwrap().map(|e| e.unwrap().path()).collect();
    entries.sort();
    for path in entries {
        if path.extension().is_some_and(|e| e == "proof") {
            let text = std::fs::read_to_string(&path).unwrap();
            let file = parse_proof_file(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            let name = path.file_stem().unwrap().to_string_lossy().into_owned();
            let expect = file.expect.unwrap_or_else(|| panic!("{name} has no :expect header"));
            out.push((name, file.proof, expect));
        }
    }
    out
}

/// Formulas the builders are instantiated at.
pub fn builder_inputs() -> Vec<Formula> {
    [
        "a",
        "b",
        "bot",
        "a & b",
        "a | ~b",
        "a -> b",
        "~a",
        "forall x. p(x)",
        "(exists x. p(x)) | a",
        "p(c())",
    ]
    .iter()
    .map(|s| f(s))
    .collect()
}

pub fn builder_outputs() -> Vec<(String, Proof)> {
    let mut out = Vec::new();
    let q = f("b");
    for a in builder_inputs() {
        out.push((format!("raa_rule_to_axiom({a})"), raa_axiom_from_rule(&a)));
        out.push((format!("raa_to_tnd({a})"), raa_implies_tnd(&a)));
        out.push((format!("tnd_to_peirce({a}, {q})"), tnd_implies_peirce(&a, &q)));
        out.push((format!("peirce_to_raa({a})"), peirce_implies_raa(&a)));
        let body = Proof::implies_e(Proof::hyp(a.clone()), Proof::assumption(Formula::not(a.clone()), Label::new(1)));
        out.push((format!("raa_from_rule_body({a})"), raa_rule_from_axiom(&a, body, Label::new(1)).unwrap()));
    }
    out
}

/// `C1 & C2` from two closed proofs, detoured through `bot` and the rule
/// form of raa, then rewritten with the raa axiom.
pub fn graft(p1: &Proof, p2: &Proof) -> Proof {
    let c1 = check(p1, &Mode::nk()).unwrap().conclusion;
    let c2 = check(p2, &Mode::nk()).unwrap().conclusion;
    let mut supply = LabelSupply::above(p1);
    let p2 = p2.relabeled(&mut supply);
    let k = supply.fresh();
    let both = Formula::and(c1, c2);
    let body = Proof::implies_e(Proof::and_i(p1.clone(), p2), Proof::assumption(Formula::not(both.clone()), k));
    assert!(check_fragment(&body, &Mode::nk()).is_ok());
    raa_rule_from_axiom(&both, body, k).unwrap()
}

/// Every NK proof of the corpus: hand-encoded proofs, builder outputs and
/// pairwise grafts of builder outputs.
pub fn nk_corpus() -> Vec<(String, Proof)> {
    let mut out: Vec<(String, Proof)> = hand_corpus().into_iter().map(|(n, p, _)| (n, p)).collect();
    let built = builder_outputs();
    let sample: Vec<&(String, Proof)> = built.iter().step_by(4).collect();
    for (i, (n1, p1)) in sample.iter().enumerate() {
        for (n2, p2) in &sample[i + 1..] {
            out.push((format!("graft({n1}, {n2})"), graft(p1, p2)));
        }
    }
    out.extend(built);
    out
}

/// Rule constructor names with how often each occurs.
pub fn rule_counts<'a>(proofs: impl IntoIterator<Item = &'a Proof>) -> BTreeMap<&'static str, usize> {
    let mut counts = BTreeMap::new();
    for p in proofs {
        p.visit(&mut |q| *counts.entry(q.rule.name()).or_insert(0) += 1);
    }
    counts
}

pub const ALL_RULES: [&str; 18] = [
    "hyp", "impl_i", "impl_e", "and_i", "and_e_l", "and_e_r", "or_i_l", "or_i_r", "or_e", "bot_e", "forall_i",
    "forall_e", "exists_i", "exists_e", "tnd", "raa", "raa_rule", "peirce",
];
