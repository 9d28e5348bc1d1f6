//! The double-negation translation and its intuitionistic companions.
//!
//! [`nn_translate`] prefixes atoms, disjunctions and existentials with `~~`
//! and commutes with the other connectives. Translated formulas are stable:
//! [`stability_proof`] derives `F'` from `~~F'` in NJ for every `F`, where
//! `F'` is the translation of `F`.

use crate::proof::{LabelSupply, Proof};
use crate::syntax::{fresh_var, Formula, Term};

/// Double-negation translation of a formula.
pub fn nn_translate(f: &Formula) -> Formula {
    match f {
        Formula::Bottom => Formula::Bottom,
        Formula::Atom(..) => Formula::not_not(f.clone()),
        Formula::And(a, b) => Formula::and(nn_translate(a), nn_translate(b)),
        Formula::Implies(a, b) => Formula::implies(nn_translate(a), nn_translate(b)),
        Formula::Forall(x, a) => Formula::forall(x.clone(), nn_translate(a)),
        Formula::Or(a, b) => Formula::not_not(Formula::or(nn_translate(a), nn_translate(b))),
        Formula::Exists(x, a) => Formula::not_not(Formula::exists(x.clone(), nn_translate(a))),
    }
}

/// Pointwise translation of a multiset of hypotheses.
pub fn nn_translate_context(context: &[Formula]) -> Vec<Formula> {
    context.iter().map(nn_translate).collect()
}

/// NJ proof of `~~~a |- ~a`.
pub fn triple_neg_proof(a: &Formula) -> Proof {
    let hyp = Proof::hyp(Formula::not(Formula::not_not(a.clone())));
    triple_neg_from(a, hyp, &mut LabelSupply::new())
}

/// `~a` from a proof of `~~~a`.
pub(crate) fn triple_neg_from(a: &Formula, triple: Proof, supply: &mut LabelSupply) -> Proof {
    let (l_neg, l_a) = (supply.fresh(), supply.fresh());
    let not_a = Formula::not(a.clone());
    // [a] and [~a] give bot, so ~~a; with ~~~a, bot; so ~a
    let not_not_a = Proof::implies_i(
        not_a.clone(),
        l_neg,
        Proof::implies_e(Proof::assumption(a.clone(), l_a), Proof::assumption(not_a, l_neg)),
    );
    Proof::implies_i(a.clone(), l_a, Proof::implies_e(not_not_a, triple))
}

/// NJ proof of `~~F' |- F'` where `F'` is the translation of `f`.
pub fn stability_proof(f: &Formula) -> Proof {
    let hyp = Proof::hyp(Formula::not_not(nn_translate(f)));
    stability_from(f, hyp, &mut LabelSupply::new())
}

/// The stability proof with `dneg`, a proof of `~~F'`, grafted in place of
/// the hypothesis. `dneg` may be copied (the conjunction case uses it once
/// per conjunct); copies get fresh labels from `supply`.
pub(crate) fn stability_from(f: &Formula, dneg: Proof, supply: &mut LabelSupply) -> Proof {
    supply.reserve(&dneg);
    match f {
        // ~~bot |- bot: discharge [bot] to get ~bot, then apply ~~bot
        Formula::Bottom => {
            let l = supply.fresh();
            Proof::implies_e(
                Proof::implies_i(Formula::Bottom, l, Proof::assumption(Formula::Bottom, l)),
                dneg,
            )
        }
        // F' = ~~G for some G: a case of ~~~A |- ~A with A = ~G
        Formula::Atom(..) | Formula::Or(..) | Formula::Exists(..) => {
            let translated = nn_translate(f);
            let inner = translated.negated().expect("translation starts with ~").clone();
            triple_neg_from(&inner, dneg, supply)
        }
        Formula::Implies(a, b) => {
            let (l_imp, l_neg, l_ant) = (supply.fresh(), supply.fresh(), supply.fresh());
            let (ta, tb) = (nn_translate(a), nn_translate(b));
            let imp = Formula::implies(ta.clone(), tb.clone());
            // [A'] [A' -> B'] give B', with [~B'] bot, so ~(A' -> B')
            let refute = Proof::implies_i(
                imp.clone(),
                l_imp,
                Proof::implies_e(
                    Proof::implies_e(Proof::assumption(ta.clone(), l_ant), Proof::assumption(imp, l_imp)),
                    Proof::assumption(Formula::not(tb.clone()), l_neg),
                ),
            );
            let not_not_b = Proof::implies_i(Formula::not(tb), l_neg, Proof::implies_e(refute, dneg));
            Proof::implies_i(ta, l_ant, stability_from(b, not_not_b, supply))
        }
        Formula::And(a, b) => {
            let second = dneg.relabeled(supply);
            let left = conjunct_stability(f, a, true, dneg, supply);
            let right = conjunct_stability(f, b, false, second, supply);
            Proof::and_i(left, right)
        }
        Formula::Forall(x, a) => {
            // The eigenvariable must not occur free in the hypotheses of the
            // grafted proof; keep `x` when possible.
            let mut avoid = dneg.hypothesis_vars();
            avoid.extend(f.free_vars());
            let y = fresh_var(x, &avoid);
            let body = a.substitute(x, &Term::Var(y.clone()));
            let tbody = nn_translate(&body);
            let forall = nn_translate(f);
            let (l_all, l_neg) = (supply.fresh(), supply.fresh());
            let refute = Proof::implies_i(
                forall.clone(),
                l_all,
                Proof::implies_e(
                    Proof::forall_e(Term::Var(y.clone()), Proof::assumption(forall, l_all)),
                    Proof::assumption(Formula::not(tbody.clone()), l_neg),
                ),
            );
            let not_not_body = Proof::implies_i(Formula::not(tbody), l_neg, Proof::implies_e(refute, dneg));
            Proof::forall_i(y, stability_from(&body, not_not_body, supply))
        }
    }
}

/// One half of the conjunction case: from `~~(A' & B')` derive a conjunct.
fn conjunct_stability(
    f: &Formula,
    part: &Formula,
    left: bool,
    dneg: Proof,
    supply: &mut LabelSupply,
) -> Proof {
    let (l_conj, l_neg) = (supply.fresh(), supply.fresh());
    let conj = nn_translate(f);
    let tpart = nn_translate(part);
    let project = if left { Proof::and_e_l } else { Proof::and_e_r };
    let refute = Proof::implies_i(
        conj.clone(),
        l_conj,
        Proof::implies_e(
            project(Proof::assumption(conj, l_conj)),
            Proof::assumption(Formula::not(tpart.clone()), l_neg),
        ),
    );
    let not_not_part = Proof::implies_i(Formula::not(tpart), l_neg, Proof::implies_e(refute, dneg));
    stability_from(part, not_not_part, supply)
}
