//! Compilation between classical and intuitionistic proofs.
//!
//! [`nk_to_nj`] turns a classical proof of `G |- F` into an intuitionistic
//! proof of `G' |- F'` (primes denote the double-negation translation), by
//! recursion on the proof. Introduction and elimination rules for `->`, `&`
//! and `forall` map to themselves; `|` and `exists` go through a `~~` wrapper
//! and use the stability proof to get back out of it; `tnd` and `raa`
//! instances become intuitionistic proofs of their translations.
//!
//! [`nj_translation_to_nk`] goes the other way: classically, every formula
//! and its translation are interderivable ([`add_dn_proof`],
//! [`drop_dn_proof`]), so an NJ proof of the translated sequent can be
//! wrapped into an NK proof of the original one.

use crate::checker::{check, infer_step, CheckError, Mode};
use crate::derivations::tnd_implies_peirce_with;
use crate::proof::{Classical, Label, LabelSupply, Proof, Rule};
use crate::syntax::{fresh_var, Formula, Judgment, Term};
use crate::translation::{nn_translate, stability_from};
use thiserror::Error;

/// Default cap on the node count of a compiled proof.
pub const DEFAULT_MAX_PROOF_SIZE: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CompileError {
    #[error("input does not check: {0}")]
    Check(#[from] CheckError),
    #[error("compiled proof exceeds {limit} nodes")]
    SizeLimit { limit: usize },
    #[error("{0}")]
    Precondition(String),
}

/// Compiles an NK proof into an NJ proof of the translated sequent, with the
/// default size cap.
pub fn nk_to_nj(p: &Proof) -> Result<Proof, CompileError> {
    nk_to_nj_with_limit(p, DEFAULT_MAX_PROOF_SIZE)
}

pub fn nk_to_nj_with_limit(p: &Proof, max_size: usize) -> Result<Proof, CompileError> {
    check(p, &Mode::nk())?;
    let mut c = Compiler { supply: LabelSupply::above(p), max_size };
    Ok(c.compile(p)?.proof)
}

struct Compiled {
    proof: Proof,
    size: usize,
    /// Conclusion of the source subproof.
    source: Formula,
}

struct Compiler {
    supply: LabelSupply,
    max_size: usize,
}

impl Compiler {
    fn capped(&self, proof: Proof, size: usize, source: Formula) -> Result<Compiled, CompileError> {
        if size > self.max_size {
            return Err(CompileError::SizeLimit { limit: self.max_size });
        }
        Ok(Compiled { proof, size, source })
    }

    fn graft_size(&self, proof: Proof, source: Formula) -> Result<Compiled, CompileError> {
        let size = proof.size();
        self.capped(proof, size, source)
    }

    fn compile(&mut self, p: &Proof) -> Result<Compiled, CompileError> {
        match &p.rule {
            // Peirce: expand into the derivation from tnd and compile that.
            Rule::Peirce { p: pf, q } => {
                let expanded = tnd_implies_peirce_with(pf, q, &mut self.supply);
                return self.compile(&expanded);
            }
            // Rule form: rewritten to `(->i ~a body) raa`, compiled in place
            // so the body is not copied.
            Rule::RaaRule { a, label } => {
                let body = self.compile(&p.premises[0])?;
                let axiom = self.raa_axiom(a)?;
                let source = a.clone();
                let size = body.size + axiom.size + 2;
                let proof = Proof::implies_e(
                    Proof::implies_i(nn_translate(&Formula::not(a.clone())), *label, body.proof),
                    axiom.proof,
                );
                return self.capped(proof, size, source);
            }
            Rule::Raa { a } => return self.raa_axiom(a),
            Rule::Tnd { a } => return self.tnd_axiom(a),
            _ => {}
        }

        let mut premises = Vec::with_capacity(p.premises.len());
        for q in &p.premises {
            premises.push(self.compile(q)?);
        }
        let sources: Vec<Formula> = premises.iter().map(|c| c.source.clone()).collect();
        let refs: Vec<&Formula> = sources.iter().collect();
        let source = infer_step(&p.rule, &refs).map_err(|(kind, detail)| {
            CheckError::new(kind, crate::checker::Path::root(), detail)
        })?;
        let sum: usize = premises.iter().map(|c| c.size).sum();
        let mut outs = premises.into_iter().map(|c| c.proof);
        let mut next = || outs.next().expect("arity checked");

        match &p.rule {
            Rule::Hyp { formula, label } => {
                let proof = Proof::new(Rule::Hyp { formula: nn_translate(formula), label: *label }, vec![]);
                self.capped(proof, 1, source)
            }
            Rule::ImpliesI { assume, label } => {
                let proof = Proof::implies_i(nn_translate(assume), *label, next());
                self.capped(proof, sum + 1, source)
            }
            Rule::BotE { target } => {
                let proof = Proof::bot_e(nn_translate(target), next());
                self.capped(proof, sum + 1, source)
            }
            Rule::ImpliesE | Rule::AndI => {
                let (a, b) = (next(), next());
                self.capped(Proof::new(p.rule.clone(), vec![a, b]), sum + 1, source)
            }
            Rule::AndEL | Rule::AndER | Rule::ForallI { .. } | Rule::ForallE { .. } => {
                self.capped(Proof::new(p.rule.clone(), vec![next()]), sum + 1, source)
            }
            Rule::OrIL { .. } | Rule::OrIR { .. } => {
                // inject, then wrap in ~~ by refuting the negation
                let Formula::Or(a, b) = &source else { unreachable!() };
                let disj = Formula::or(nn_translate(a), nn_translate(b));
                let inject = match &p.rule {
                    Rule::OrIL { .. } => Proof::or_i_l(nn_translate(b), next()),
                    _ => Proof::or_i_r(nn_translate(a), next()),
                };
                let proof = not_not_intro(disj, inject, &mut self.supply);
                self.capped(proof, sum + 4, source)
            }
            Rule::ExistsI { witness, target } => {
                let Formula::Exists(x, a) = target else { unreachable!() };
                let ex = Formula::exists(x.clone(), nn_translate(a));
                let intro = Proof::exists_i(witness.clone(), ex.clone(), next());
                let proof = not_not_intro(ex, intro, &mut self.supply);
                self.capped(proof, sum + 4, source)
            }
            Rule::OrE { label } => {
                let Formula::Or(a, b) = &sources[0] else { unreachable!() };
                let disj = Formula::or(nn_translate(a), nn_translate(b));
                let (major, left, right) = (next(), next(), next());
                let (l, m) = (self.supply.fresh(), self.supply.fresh());
                let inner = Proof::or_e(*label, Proof::assumption(disj.clone(), l), left, right);
                let proof = self.escape_not_not(&source, disj, l, m, inner, major);
                self.graft_size(proof, source)
            }
            Rule::ExistsE { label, eigen } => {
                let Formula::Exists(x, a) = &sources[0] else { unreachable!() };
                let ex = Formula::exists(x.clone(), nn_translate(a));
                let (major, minor) = (next(), next());
                let (l, m) = (self.supply.fresh(), self.supply.fresh());
                let inner = Proof::exists_e(*label, eigen.clone(), Proof::assumption(ex.clone(), l), minor);
                let proof = self.escape_not_not(&source, ex, l, m, inner, major);
                self.graft_size(proof, source)
            }
            Rule::Tnd { .. } | Rule::Raa { .. } | Rule::RaaRule { .. } | Rule::Peirce { .. } => {
                unreachable!("handled above")
            }
        }
    }

    /// Shared tail of the `|` and `exists` elimination cases.
    ///
    /// `inner` proves `C'` from `[D]^l`; `major` proves `~~D`. Builds
    /// `~~C'` by discharging `[~C']^m` and `[D]^l`, then applies stability.
    fn escape_not_not(
        &mut self,
        concl: &Formula,
        wrapped: Formula,
        l: Label,
        m: Label,
        inner: Proof,
        major: Proof,
    ) -> Proof {
        let tc = nn_translate(concl);
        let not_d = Proof::implies_i(
            wrapped,
            l,
            Proof::implies_e(inner, Proof::assumption(Formula::not(tc.clone()), m)),
        );
        let not_not_c = Proof::implies_i(Formula::not(tc), m, Proof::implies_e(not_d, major));
        stability_from(concl, not_not_c, &mut self.supply)
    }

    /// `|- ~~A' -> A'`, the translation of an `raa` instance.
    fn raa_axiom(&mut self, a: &Formula) -> Result<Compiled, CompileError> {
        let k = self.supply.fresh();
        let dneg = Formula::not_not(nn_translate(a));
        let stable = stability_from(a, Proof::assumption(dneg.clone(), k), &mut self.supply);
        let proof = Proof::implies_i(dneg, k, stable);
        let source = Formula::implies(Formula::not_not(a.clone()), a.clone());
        self.graft_size(proof, source)
    }

    /// `|- ~~(A' | ~A')`, the translation of a `tnd` instance.
    fn tnd_axiom(&mut self, a: &Formula) -> Result<Compiled, CompileError> {
        let (l_a, l_neg) = (self.supply.fresh(), self.supply.fresh());
        let ta = nn_translate(a);
        let not_ta = Formula::not(ta.clone());
        let disj = Formula::or(ta.clone(), not_ta.clone());
        let not_disj = Formula::not(disj.clone());
        let refute_a = Proof::implies_i(
            ta.clone(),
            l_a,
            Proof::implies_e(
                Proof::or_i_l(not_ta.clone(), Proof::assumption(ta.clone(), l_a)),
                Proof::assumption(not_disj.clone(), l_neg),
            ),
        );
        let bot = Proof::implies_e(
            Proof::or_i_r(ta, refute_a),
            Proof::assumption(not_disj.clone(), l_neg),
        );
        let proof = Proof::implies_i(not_disj, l_neg, bot);
        let source = Formula::or(a.clone(), Formula::not(a.clone()));
        self.capped(proof, 9, source)
    }
}

/// `~~f` from a proof of `f`: `[~f]` and `f` give bot.
fn not_not_intro(f: Formula, proof: Proof, supply: &mut LabelSupply) -> Proof {
    let l = supply.fresh();
    let not_f = Formula::not(f);
    Proof::implies_i(not_f.clone(), l, Proof::implies_e(proof, Proof::assumption(not_f, l)))
}

/// Returns `p` after checking it in NJ. Every NJ rule is an NK rule, so
/// the same tree is an NK proof with the same judgment.
pub fn nj_embed(p: &Proof) -> Result<Proof, CompileError> {
    check(p, &Mode::nj())?;
    Ok(p.clone())
}

/// The mode in which [`add_dn_proof`] and [`drop_dn_proof`] check.
pub fn dn_mode() -> Mode {
    Mode::only(&[Classical::Raa])
}

/// Proof of `a |- a'`.
pub fn add_dn_proof(a: &Formula) -> Proof {
    let mut supply = LabelSupply::new();
    add_from(a, Proof::hyp(a.clone()), &mut supply)
}

/// Proof of `a' |- a`.
pub fn drop_dn_proof(a: &Formula) -> Proof {
    let mut supply = LabelSupply::new();
    drop_from(a, Proof::hyp(nn_translate(a)), &mut supply)
}

/// Eigenvariable for a quantifier case: `x` unless it clashes with the
/// hypotheses of `d` or the free variables of `f`.
fn eigen_for(x: &str, f: &Formula, d: &Proof) -> String {
    let mut avoid = d.hypothesis_vars();
    avoid.extend(f.free_vars());
    fresh_var(x, &avoid)
}

/// From `d : f`, a proof of `f'`.
fn add_from(f: &Formula, d: Proof, supply: &mut LabelSupply) -> Proof {
    supply.reserve(&d);
    match f {
        Formula::Bottom => d,
        Formula::Atom(..) => not_not_intro(f.clone(), d, supply),
        Formula::And(a, b) => {
            let second = d.relabeled(supply);
            let l = add_from(a, Proof::and_e_l(d), supply);
            let r = add_from(b, Proof::and_e_r(second), supply);
            Proof::and_i(l, r)
        }
        Formula::Or(a, b) => {
            let k = supply.fresh();
            let (ta, tb) = (nn_translate(a), nn_translate(b));
            let left = Proof::or_i_l(tb.clone(), add_from(a, Proof::assumption((**a).clone(), k), supply));
            let right = Proof::or_i_r(ta.clone(), add_from(b, Proof::assumption((**b).clone(), k), supply));
            let cases = Proof::or_e(k, d, left, right);
            not_not_intro(Formula::or(ta, tb), cases, supply)
        }
        Formula::Implies(a, b) => {
            let k = supply.fresh();
            let ta = nn_translate(a);
            let back = drop_from(a, Proof::assumption(ta.clone(), k), supply);
            let body = add_from(b, Proof::implies_e(back, d), supply);
            Proof::implies_i(ta, k, body)
        }
        Formula::Forall(x, a) => {
            let y = eigen_for(x, f, &d);
            let inst = a.substitute(x, &Term::Var(y.clone()));
            let body = add_from(&inst, Proof::forall_e(Term::Var(y.clone()), d), supply);
            Proof::forall_i(y, body)
        }
        Formula::Exists(x, a) => {
            let y = eigen_for(x, f, &d);
            let k = supply.fresh();
            let inst = a.substitute(x, &Term::Var(y.clone()));
            let ex = Formula::exists(x.clone(), nn_translate(a));
            let witness = add_from(&inst, Proof::assumption(inst.clone(), k), supply);
            let cases = Proof::exists_e(k, y.clone(), d, Proof::exists_i(Term::Var(y), ex.clone(), witness));
            not_not_intro(ex, cases, supply)
        }
    }
}

/// From `d : f'`, a proof of `f`.
fn drop_from(f: &Formula, d: Proof, supply: &mut LabelSupply) -> Proof {
    supply.reserve(&d);
    match f {
        Formula::Bottom => d,
        Formula::Atom(..) => Proof::implies_e(d, Proof::raa(f.clone())),
        Formula::And(a, b) => {
            let second = d.relabeled(supply);
            let l = drop_from(a, Proof::and_e_l(d), supply);
            let r = drop_from(b, Proof::and_e_r(second), supply);
            Proof::and_i(l, r)
        }
        Formula::Or(a, b) => {
            let (k, l) = (supply.fresh(), supply.fresh());
            let (ta, tb) = (nn_translate(a), nn_translate(b));
            let left = Proof::or_i_l((**b).clone(), drop_from(a, Proof::assumption(ta.clone(), k), supply));
            let right = Proof::or_i_r((**a).clone(), drop_from(b, Proof::assumption(tb.clone(), k), supply));
            let cases = Proof::or_e(k, Proof::assumption(Formula::or(ta.clone(), tb.clone()), l), left, right);
            under_not_not(f, Formula::or(ta, tb), l, cases, d, supply)
        }
        Formula::Implies(a, b) => {
            let k = supply.fresh();
            let forward = add_from(a, Proof::assumption((**a).clone(), k), supply);
            let body = drop_from(b, Proof::implies_e(forward, d), supply);
            Proof::implies_i((**a).clone(), k, body)
        }
        Formula::Forall(x, a) => {
            let y = eigen_for(x, f, &d);
            let inst = a.substitute(x, &Term::Var(y.clone()));
            let body = drop_from(&inst, Proof::forall_e(Term::Var(y.clone()), d), supply);
            Proof::forall_i(y, body)
        }
        Formula::Exists(x, a) => {
            let y = eigen_for(x, f, &d);
            let (k, l) = (supply.fresh(), supply.fresh());
            let inst = a.substitute(x, &Term::Var(y.clone()));
            let ex = Formula::exists(x.clone(), nn_translate(a));
            let witness = drop_from(&inst, Proof::assumption(nn_translate(&inst), k), supply);
            let cases = Proof::exists_e(
                k,
                y.clone(),
                Proof::assumption(ex.clone(), l),
                Proof::exists_i(Term::Var(y), f.clone(), witness),
            );
            under_not_not(f, ex, l, cases, d, supply)
        }
    }
}

/// `cases` proves `f` from `[g]^l`; `d` proves `~~g`. Derives `~~f`
/// intuitionistically and finishes with `~~f -> f`.
fn under_not_not(f: &Formula, g: Formula, l: Label, cases: Proof, d: Proof, supply: &mut LabelSupply) -> Proof {
    let m = supply.fresh();
    let not_f = Formula::not(f.clone());
    let not_g = Proof::implies_i(g, l, Proof::implies_e(cases, Proof::assumption(not_f.clone(), m)));
    let not_not_f = Proof::implies_i(not_f, m, Proof::implies_e(not_g, d));
    Proof::implies_e(not_not_f, Proof::raa(f.clone()))
}

/// Lifts an NJ proof of `G' |- F'` to an NK proof of `G |- F`: each open
/// hypothesis `A'` is replaced by a proof of it from `A`, and the conclusion
/// `F'` is lowered back to `F`.
pub fn nj_translation_to_nk(p: &Proof, gamma: &[Formula], f: &Formula) -> Result<Proof, CompileError> {
    let j = check(p, &Mode::nj())?;
    let expected = Judgment::new(gamma.iter().map(nn_translate).collect(), nn_translate(f));
    if !j.matches_as_set(&expected) {
        return Err(CompileError::Precondition(format!(
            "proof establishes {} but the translated sequent is {}",
            j, expected
        )));
    }
    let embedded = nj_embed(p)?;
    let mut supply = LabelSupply::above(&embedded);
    let translated: Vec<(Formula, &Formula)> = gamma.iter().map(|a| (nn_translate(a), a)).collect();
    let lifted = embedded.replace_open_hypotheses(&mut |h| {
        translated
            .iter()
            .find(|(t, _)| t.alpha_eq(h))
            .map(|(_, a)| add_from(a, Proof::hyp((*a).clone()), &mut supply))
    });
    Ok(drop_from(f, lifted, &mut supply))
}

#[cfg(test)]
mod tests;
