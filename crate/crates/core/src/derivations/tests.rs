use super::*;
use crate::checker::{check, check_sequent, ErrorKind};
use crate::proof::{Classical, Rule};
use crate::syntax::tests::arb_formula;
use crate::syntax::{parse_formula, Judgment};
use proptest::prelude::*;

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn l(n: u32) -> Label {
    Label::new(n)
}

fn theorem(c: Formula) -> Judgment {
    Judgment::new(vec![], c)
}

#[test]
fn raa_rule_from_axiom_detour() {
    let body = Proof::implies_e(Proof::hyp(f("p")), Proof::assumption(f("~p"), l(1)));
    let p = raa_rule_from_axiom(&f("p"), body, l(1)).unwrap();
    let r = check(&p, &Mode::only(&[Classical::Raa])).unwrap();
    assert_eq!(r.to_string(), "p ⊢ p");
}

#[test]
fn raa_rule_from_axiom_vacuous() {
    let p = raa_rule_from_axiom(&f("p"), Proof::hyp(Formula::Bottom), l(1)).unwrap();
    assert_eq!(check(&p, &Mode::nk()).unwrap().to_string(), "bot ⊢ p");
}

#[test]
fn raa_rule_from_axiom_discharges_every_occurrence() {
    let bot = Proof::implies_e(Proof::hyp(f("q")), Proof::assumption(f("~q"), l(1)));
    let two = Proof::implies_e(Proof::bot_e(f("q"), bot), Proof::assumption(f("~q"), l(1)));
    let p = raa_rule_from_axiom(&f("q"), two, l(1)).unwrap();
    let open = p.open_hypotheses().unwrap();
    assert_eq!(open, vec![f("q")]);
}

#[test]
fn raa_rule_from_axiom_errors() {
    assert_eq!(
        raa_rule_from_axiom(&f("p"), Proof::hyp(f("a")), l(1)).unwrap_err(),
        BuildError::NotBottom(f("a"))
    );
    let body = Proof::implies_e(
        Proof::implies_i(f("a"), l(1), Proof::assumption(f("a"), l(1))),
        Proof::hyp(f("(a -> a) -> bot")),
    );
    assert_eq!(raa_rule_from_axiom(&f("p"), body, l(1)).unwrap_err(), BuildError::LabelClash(l(1)));
    let bad = Proof::and_e_l(Proof::hyp(f("a")));
    assert!(matches!(raa_rule_from_axiom(&f("p"), bad, l(1)), Err(BuildError::Check(_))));
}

#[test]
fn raa_axiom_from_rule_examples() {
    let m = Mode::only(&[Classical::RaaRule]);
    for (a, c) in [("p", "~~p -> p"), ("bot", "~~bot -> bot"), ("p & q", "~~(p & q) -> p & q")] {
        let p = raa_axiom_from_rule(&f(a));
        assert!(check_sequent(&p, &m, &theorem(f(c)), false).unwrap());
    }
}

#[test]
fn raa_implies_tnd_examples() {
    let m = Mode::only(&[Classical::Raa]);
    let p = raa_implies_tnd(&f("a"));
    assert_eq!(check(&p, &m).unwrap().to_string(), "⊢ a | ~a");
    assert_eq!(p.size(), 14);
    let p = raa_implies_tnd(&f("p -> q"));
    assert!(check_sequent(&p, &m, &theorem(f("(p -> q) | ~(p -> q)")), false).unwrap());
}

#[test]
fn tnd_implies_peirce_examples() {
    let m = Mode::only(&[Classical::Tnd]);
    let p = tnd_implies_peirce(&f("p"), &f("q"));
    assert_eq!(check(&p, &m).unwrap().to_string(), "⊢ ((p -> q) -> p) -> p");
    let p = tnd_implies_peirce(&Formula::Bottom, &Formula::Bottom);
    assert!(check_sequent(&p, &m, &theorem(f("((bot -> bot) -> bot) -> bot")), false).unwrap());
    let Rule::OrE { label } = p.rule else { panic!("root is a case split") };
    let bound: Vec<_> = p.premises[1..]
        .iter()
        .flat_map(|q| q.pending_hypotheses())
        .filter(|(_, l)| *l == Some(label))
        .collect();
    assert_eq!(bound.len(), 2);
}

#[test]
fn peirce_implies_raa_examples() {
    let m = Mode::only(&[Classical::Peirce]);
    let p = peirce_implies_raa(&f("p"));
    assert_eq!(check(&p, &m).unwrap().to_string(), "⊢ ~~p -> p");
    let p = peirce_implies_raa(&f("a | b"));
    assert!(check_sequent(&p, &m, &theorem(f("~~(a | b) -> a | b")), false).unwrap());
    assert_eq!(p.classical_axioms_used(), [Classical::Peirce].into());
}

fn stated(a: &Formula, b: &Formula) -> Vec<(Proof, Classical, Formula)> {
    let dneg = |x: &Formula| Formula::implies(Formula::not_not(x.clone()), x.clone());
    vec![
        (raa_axiom_from_rule(a), Classical::RaaRule, dneg(a)),
        (raa_implies_tnd(a), Classical::Raa, Formula::or(a.clone(), Formula::not(a.clone()))),
        (
            tnd_implies_peirce(a, b),
            Classical::Tnd,
            Formula::implies(Formula::implies(Formula::implies(a.clone(), b.clone()), a.clone()), a.clone()),
        ),
        (peirce_implies_raa(a), Classical::Peirce, dneg(a)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn builders_check_in_their_minimal_mode(a in arb_formula(), b in arb_formula()) {
        let inputs = &a.free_vars() | &b.free_vars();
        for (p, family, concl) in stated(&a, &b) {
            prop_assert!(check_sequent(&p, &Mode::only(&[family]), &theorem(concl.clone()), false).unwrap());
            prop_assert_eq!(check(&p, &Mode::nj()).unwrap_err().kind, ErrorKind::ClassicalRuleNotAdmitted);
            prop_assert!(concl.free_vars().is_subset(&inputs));
        }
    }

    #[test]
    fn cycle_closes(a in arb_formula()) {
        let from_peirce = check(&peirce_implies_raa(&a), &Mode::nk()).unwrap();
        let from_rule = check(&raa_axiom_from_rule(&a), &Mode::nk()).unwrap();
        prop_assert!(from_peirce.matches(&from_rule));
    }
}
