use super::*;
use crate::checker::{check_sequent, ErrorKind};
use crate::derivations::*;
use crate::syntax::tests::arb_formula;
use crate::syntax::{parse_formula, parse_judgment};
use crate::translation::{nn_translate_context, stability_proof, triple_neg_proof};
use proptest::prelude::*;

fn f(s: &str) -> Formula {
    parse_formula(s).unwrap()
}

fn l(n: u32) -> Label {
    Label::new(n)
}

/// Checks the forward statement for `p` and returns the compiled proof.
fn compiles(p: &Proof) -> Proof {
    let source = check(p, &Mode::nk()).unwrap();
    let out = nk_to_nj(p).unwrap();
    let expected = Judgment::new(nn_translate_context(&source.context), nn_translate(&source.conclusion));
    let got = check(&out, &Mode::nj()).unwrap();
    assert!(got.matches_as_set(&expected), "{} compiled to {}", source, got);
    assert!(out.classical_axioms_used().is_empty());
    assert_eq!(got.free_vars(), source.free_vars());
    out
}

/// Round trip back to NK with the original sequent.
fn round_trips(p: &Proof) {
    let source = check(p, &Mode::nk()).unwrap();
    let back = nj_translation_to_nk(&nk_to_nj(p).unwrap(), &source.context, &source.conclusion).unwrap();
    assert!(check_sequent(&back, &Mode::nk(), &source, true).unwrap(), "{}", source);
}

#[test]
fn hypothesis_case() {
    let out = compiles(&Proof::hyp(f("a")));
    assert_eq!(out, Proof::hyp(f("~~a")));
}

#[test]
fn tnd_case() {
    let out = compiles(&Proof::tnd(f("a")));
    let r = check(&out, &Mode::nj()).unwrap();
    assert_eq!(r.to_string(), "⊢ ~~(~~a | ~~~a)");
    assert_eq!(out.size(), 9);
}

#[test]
fn raa_rule_style_proof() {
    let out = compiles(&raa_axiom_from_rule(&f("a")));
    let r = check(&out, &Mode::nj()).unwrap();
    assert!(r.matches(&parse_judgment("|- ~~~~a -> ~~a").unwrap()));
}

#[test]
fn every_builder_compiles() {
    for a in ["a", "p(x) | q", "exists x. p(x)", "forall x. p(x) -> a", "bot", "a & ~b"] {
        let a = f(a);
        for p in [
            raa_axiom_from_rule(&a),
            raa_implies_tnd(&a),
            tnd_implies_peirce(&a, &f("b")),
            peirce_implies_raa(&a),
            Proof::peirce(a.clone(), f("b")),
            Proof::raa(a.clone()),
            triple_neg_proof(&a),
            stability_proof(&a),
        ] {
            compiles(&p);
            round_trips(&p);
        }
    }
}

#[test]
fn elimination_cases() {
    // or_e
    let p = Proof::or_e(
        l(1),
        Proof::hyp(f("a | b")),
        Proof::or_i_r(f("b"), Proof::assumption(f("a"), l(1))),
        Proof::or_i_l(f("a"), Proof::assumption(f("b"), l(1))),
    );
    compiles(&p);
    round_trips(&p);
    // exists_e with an exists_i inside
    let p = Proof::exists_e(
        l(1),
        "y",
        Proof::hyp(f("exists x. p(x) & a")),
        Proof::exists_i(
            crate::syntax::Term::var("y"),
            f("exists z. p(z)"),
            Proof::and_e_l(Proof::assumption(f("p(y) & a"), l(1))),
        ),
    );
    compiles(&p);
    round_trips(&p);
    // forall_i over forall_e
    let p = Proof::forall_i(
        "z",
        Proof::forall_e(crate::syntax::Term::var("z"), Proof::hyp(f("forall x. p(x)"))),
    );
    compiles(&p);
    round_trips(&p);
}

#[test]
fn homomorphic_cases_keep_the_height() {
    let p = Proof::implies_i(
        f("a & forall x. p(x)"),
        l(1),
        Proof::and_i(
            Proof::forall_e(
                crate::syntax::Term::constant("c"),
                Proof::and_e_r(Proof::assumption(f("a & forall x. p(x)"), l(1))),
            ),
            Proof::implies_e(Proof::hyp(f("b")), Proof::hyp(f("b -> bot"))),
        ),
    );
    let out = compiles(&p);
    assert_eq!(out.height(), p.height());
}

#[test]
fn bot_e_case() {
    let p = Proof::bot_e(f("a | b"), Proof::hyp(Formula::Bottom));
    let out = compiles(&p);
    assert_eq!(out.height(), 1);
}

#[test]
fn rejects_unchecked_input() {
    let bad = Proof::and_e_l(Proof::hyp(f("a")));
    let e = nk_to_nj(&bad).unwrap_err();
    assert!(matches!(e, CompileError::Check(ref c) if c.kind == ErrorKind::RuleMismatch));
}

#[test]
fn size_cap() {
    let p = raa_implies_tnd(&f("a & b & c"));
    assert_eq!(nk_to_nj_with_limit(&p, 10).unwrap_err(), CompileError::SizeLimit { limit: 10 });
    assert!(nk_to_nj_with_limit(&p, DEFAULT_MAX_PROOF_SIZE).is_ok());
}

#[test]
fn embed_is_identity() {
    let p = triple_neg_proof(&f("a"));
    assert_eq!(nj_embed(&p).unwrap(), p);
    let nk = Mode::only(&[Classical::Tnd, Classical::Raa, Classical::Peirce]);
    assert_eq!(check(&p, &nk).unwrap(), check(&p, &Mode::nj()).unwrap());
    assert!(nj_embed(&Proof::tnd(f("a"))).is_err());
    let s = stability_proof(&f("a | b"));
    assert!(check(&nj_embed(&s).unwrap(), &Mode::nk()).is_ok());
}

#[test]
fn dn_examples() {
    let add = add_dn_proof(&f("a"));
    assert!(add.classical_axioms_used().is_empty());
    assert!(check_sequent(&add, &Mode::nj(), &parse_judgment("a |- ~~a").unwrap(), false).unwrap());
    let drop = drop_dn_proof(&f("a"));
    assert_eq!(drop, Proof::implies_e(Proof::hyp(f("~~a")), Proof::raa(f("a"))));
    let drop = drop_dn_proof(&f("p | q"));
    assert!(check_sequent(&drop, &dn_mode(), &parse_judgment("~~(~~p | ~~q) |- p | q").unwrap(), false).unwrap());
}

#[test]
fn lifting_examples() {
    let compiled = nk_to_nj(&Proof::tnd(f("a"))).unwrap();
    let back = nj_translation_to_nk(&compiled, &[], &f("a | ~a")).unwrap();
    assert!(check_sequent(&back, &Mode::nk(), &parse_judgment("|- a | ~a").unwrap(), false).unwrap());

    let back = nj_translation_to_nk(&Proof::hyp(f("~~a")), &[f("a")], &f("a")).unwrap();
    assert!(check_sequent(&back, &Mode::nk(), &parse_judgment("a |- a").unwrap(), false).unwrap());

    round_trips(&raa_implies_tnd(&f("a")));

    let e = nj_translation_to_nk(&Proof::hyp(f("~~a")), &[f("b")], &f("a")).unwrap_err();
    assert!(matches!(e, CompileError::Precondition(_)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dn_proofs_check(a in arb_formula()) {
        let t = nn_translate(&a);
        let add = Judgment::new(vec![a.clone()], t.clone());
        let drop = Judgment::new(vec![t], a.clone());
        prop_assert!(check_sequent(&add_dn_proof(&a), &dn_mode(), &add, true).unwrap());
        prop_assert!(check_sequent(&drop_dn_proof(&a), &dn_mode(), &drop, true).unwrap());
    }

    #[test]
    fn builders_compile_and_round_trip(a in arb_formula(), b in arb_formula()) {
        for p in [raa_implies_tnd(&a), tnd_implies_peirce(&a, &b), peirce_implies_raa(&b), raa_axiom_from_rule(&a)] {
            compiles(&p);
            round_trips(&p);
        }
    }
}
