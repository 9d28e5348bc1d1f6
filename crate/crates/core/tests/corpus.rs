mod common;

use common::*;
use ndk_core::compiler::nk_to_nj;
use ndk_core::{check, parse_proof_file, write_proof_file, Mode};

#[test]
fn hand_corpus_matches_its_headers() {
    for (name, proof, expected) in hand_corpus() {
        let j = check(&proof, &Mode::nk()).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(j.matches(&expected), "{name}: proves {j}");
    }
}

#[test]
fn written_files_reload_with_the_same_judgment() {
    for (name, proof) in nk_corpus() {
        let j = check(&proof, &Mode::nk()).unwrap();
        let compiled = nk_to_nj(&proof).unwrap();
        let cj = check(&compiled, &Mode::nj()).unwrap();
        for (p, judgment, mode) in [(&proof, &j, Mode::nk()), (&compiled, &cj, Mode::nj())] {
            let text = write_proof_file(p, Some(judgment));
            let file = parse_proof_file(&text).unwrap_or_else(|e| panic!("{name}: {e}\n{text}"));
            let again = check(&file.proof, &mode).unwrap();
            assert_eq!(&again, judgment, "{name}");
            assert!(file.expect.unwrap().matches(judgment), "{name}");
        }
    }
}

#[test]
fn corpus_is_deterministic() {
    let a: Vec<_> = nk_corpus().into_iter().map(|(_, p)| nk_to_nj(&p).unwrap()).collect();
    let b: Vec<_> = nk_corpus().into_iter().map(|(_, p)| nk_to_nj(&p).unwrap()).collect();
    assert_eq!(a, b);
}
