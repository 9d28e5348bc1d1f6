//! Builders for the derivations relating the classical rule families.
//!
//! Each builder takes arbitrary formulas and returns a proof that checks in
//! the smallest mode containing the family it starts from:
//!
//! | builder                  | uses       | proves                  |
//! |--------------------------|------------|-------------------------|
//! | [`raa_rule_from_axiom`]  | `raa`      | `A` from `bot` under `~A` |
//! | [`raa_axiom_from_rule`]  | `raa_rule` | `~~A -> A`              |
//! | [`raa_implies_tnd`]      | `raa`      | `A \| ~A`               |
//! | [`tnd_implies_peirce`]   | `tnd`      | `((P -> Q) -> P) -> P`  |
//! | [`peirce_implies_raa`]   | `peirce`   | `~~P -> P`              |

use crate::checker::{check_fragment, CheckError, Mode};
use crate::proof::{Label, LabelSupply, Proof};
use crate::syntax::Formula;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("expected a proof of bot, found a proof of {0}")]
    NotBottom(Formula),
    #[error("label {0} is already declared inside the body")]
    LabelClash(Label),
    #[error(transparent)]
    Check(#[from] CheckError),
}

/// Replaces a use of the rule form by the axiom: discharges the `~a`
/// hypotheses of `body` with `->i`, then applies `~~a -> a`.
///
/// `body` proves `bot`; its leaves `~a` carrying `label` are discharged.
pub fn raa_rule_from_axiom(a: &Formula, body: Proof, label: Label) -> Result<Proof, BuildError> {
    let fragment = check_fragment(&body, &Mode::nk())?;
    if !fragment.conclusion.is_bottom() {
        return Err(BuildError::NotBottom(fragment.conclusion));
    }
    if body.declared_labels().contains(&label) {
        return Err(BuildError::LabelClash(label));
    }
    Ok(raa_rule_as_axiom(a, body, label))
}

/// [`raa_rule_from_axiom`] without validating `body`.
pub(crate) fn raa_rule_as_axiom(a: &Formula, body: Proof, label: Label) -> Proof {
    Proof::implies_e(
        Proof::implies_i(Formula::not(a.clone()), label, body),
        Proof::raa(a.clone()),
    )
}

/// `|- ~~a -> a` from one use of the rule form.
pub fn raa_axiom_from_rule(a: &Formula) -> Proof {
    raa_axiom_from_rule_with(a, &mut LabelSupply::new())
}

pub(crate) fn raa_axiom_from_rule_with(a: &Formula, supply: &mut LabelSupply) -> Proof {
    let (neg, dneg) = (supply.fresh(), supply.fresh());
    let not_a = Formula::not(a.clone());
    let bot = Proof::implies_e(
        Proof::assumption(not_a.clone(), neg),
        Proof::assumption(Formula::not(not_a), dneg),
    );
    Proof::implies_i(Formula::not_not(a.clone()), dneg, Proof::raa_rule(a.clone(), neg, bot))
}

/// `|- a | ~a` from the axiom `~~(a | ~a) -> (a | ~a)`.
///
/// Under `~(a | ~a)`, both `~a` and `~~a` are derivable by injecting into
/// the disjunction; together they give `bot`.
pub fn raa_implies_tnd(a: &Formula) -> Proof {
    raa_implies_tnd_with(a, &mut LabelSupply::new())
}

pub(crate) fn raa_implies_tnd_with(a: &Formula, supply: &mut LabelSupply) -> Proof {
    let (l_neg, l_pos, l_out) = (supply.fresh(), supply.fresh(), supply.fresh());
    let not_a = Formula::not(a.clone());
    let tnd = Formula::or(a.clone(), not_a.clone());
    let not_tnd = Formula::not(tnd.clone());

    // [a] |- a | ~a, contradiction, so ~a
    let not_a_proof = Proof::implies_i(
        a.clone(),
        l_pos,
        Proof::implies_e(
            Proof::or_i_l(not_a.clone(), Proof::assumption(a.clone(), l_pos)),
            Proof::assumption(not_tnd.clone(), l_out),
        ),
    );
    // [~a] |- a | ~a, contradiction, so ~~a
    let not_not_a_proof = Proof::implies_i(
        not_a.clone(),
        l_neg,
        Proof::implies_e(
            Proof::or_i_r(a.clone(), Proof::assumption(not_a, l_neg)),
            Proof::assumption(not_tnd.clone(), l_out),
        ),
    );
    let bot = Proof::implies_e(not_a_proof, not_not_a_proof);
    Proof::implies_e(Proof::implies_i(not_tnd, l_out, bot), Proof::raa(tnd))
}

/// `|- ((p -> q) -> p) -> p` by cases on `p | ~p`.
pub fn tnd_implies_peirce(p: &Formula, q: &Formula) -> Proof {
    tnd_implies_peirce_with(p, q, &mut LabelSupply::new())
}

pub(crate) fn tnd_implies_peirce_with(p: &Formula, q: &Formula, supply: &mut LabelSupply) -> Proof {
    let (l_p, l_hyp, l_case, l_vacuous) = (supply.fresh(), supply.fresh(), supply.fresh(), supply.fresh());
    let p_to_q = Formula::implies(p.clone(), q.clone());
    let premise = Formula::implies(p_to_q.clone(), p.clone());
    let not_p = Formula::not(p.clone());

    // case p: discharge the antecedent vacuously
    let left = Proof::implies_i(premise.clone(), l_vacuous, Proof::assumption(p.clone(), l_case));

    // case ~p: [p] and ~p give bot, hence q, hence p -> q, hence p
    let p_implies_q = Proof::implies_i(
        p.clone(),
        l_p,
        Proof::bot_e(
            q.clone(),
            Proof::implies_e(Proof::assumption(p.clone(), l_p), Proof::assumption(not_p, l_case)),
        ),
    );
    let right = Proof::implies_i(
        premise.clone(),
        l_hyp,
        Proof::implies_e(p_implies_q, Proof::assumption(premise, l_hyp)),
    );
    Proof::or_e(l_case, Proof::tnd(p.clone()), left, right)
}

/// `|- ~~p -> p` from Peirce's law with `q = bot`.
pub fn peirce_implies_raa(p: &Formula) -> Proof {
    peirce_implies_raa_with(p, &mut LabelSupply::new())
}

pub(crate) fn peirce_implies_raa_with(p: &Formula, supply: &mut LabelSupply) -> Proof {
    let (l_neg, l_dneg) = (supply.fresh(), supply.fresh());
    let not_p = Formula::not(p.clone());
    let not_p_implies_p = Proof::implies_i(
        not_p.clone(),
        l_neg,
        Proof::bot_e(
            p.clone(),
            Proof::implies_e(
                Proof::assumption(not_p.clone(), l_neg),
                Proof::assumption(Formula::not(not_p), l_dneg),
            ),
        ),
    );
    Proof::implies_i(
        Formula::not_not(p.clone()),
        l_dneg,
        Proof::implies_e(not_p_implies_p, Proof::peirce(p.clone(), Formula::Bottom)),
    )
}

#[cfg(test)]
mod tests;
