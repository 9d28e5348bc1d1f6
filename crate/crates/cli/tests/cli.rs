use std::path::Path;
use std::process::{Command, Output};

const PROP2: &str = r#":expect "~~~a |- ~a"
(impl_i :assume "a" :label 2
  (impl_e
    (impl_i :assume "~a" :label 1
      (impl_e (hyp "a" :label 2) (hyp "~a" :label 1)))
    (hyp "~~~a")))
"#;

const OR_SWAP: &str = r#"(impl_i :assume "a | b" :label 1
  (or_e :label 2 (hyp "a | b" :label 1)
    (or_i_r :other "b" (hyp "a" :label 2))
    (or_i_l :other "a" (hyp "b" :label 2))))
"#;

fn ndk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ndk")).args(args).output().expect("run ndk")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn check_prints_the_judgment() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "prop2.proof", PROP2);
    let o = ndk(&["check", &file, "--mode", "nj"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "~~~a ⊢ ~a\n");
}

#[test]
fn check_gates_classical_rules() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "tnd.proof", "(tnd \"a\")\n");
    let o = ndk(&["check", &file, "--mode", "nj"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ClassicalRuleNotAdmitted"));
    let o = ndk(&["check", &file, "--mode", "nk-tnd"]);
    assert_eq!(stdout(&o), "⊢ a | ~a\n");
}

#[test]
fn check_reports_the_error_path() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "bad.proof", "(and_i (hyp \"a\") (and_e_l (hyp \"a | b\")))");
    let o = ndk(&["check", &file]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("/1: RuleMismatch"));
}

#[test]
fn stale_expect_header_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "stale.proof", ":expect \"b |- a\"\n(hyp \"a\")\n");
    let o = ndk(&["check", &file]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ConclusionMismatch"));
}

#[test]
fn usage_and_parse_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "broken.proof", "(hyp \"a\"");
    assert_eq!(ndk(&["check", &file]).status.code(), Some(2));
    assert_eq!(ndk(&["check", &file, "--mode", "nx"]).status.code(), Some(2));
    assert_eq!(ndk(&["translate", "a &"]).status.code(), Some(2));
    assert_eq!(ndk(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ndk(&["derive", "tnd-to-peirce", "p"]).status.code(), Some(2));
    assert!(stdout(&ndk(&["--help"])).contains("forall x. A"));
}

#[test]
fn check_many_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.proof", PROP2);
    let b = write(dir.path(), "b.proof", "(tnd \"a\")");
    let o = ndk(&["check", &a, &b, "--mode", "nj"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("a.proof: ~~~a ⊢ ~a"));
}

#[test]
fn translate() {
    let o = ndk(&["translate", "a | ~a"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "~~(~~a | ~~~a)\n");
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "batch.txt", "a\n\nexists x. p(x)\n");
    assert_eq!(stdout(&ndk(&["translate", "--file", &file])), "~~a\n~~exists x. ~~p(x)\n");
}

/// Emitted proof files re-load and re-check with the judgment they state.
fn reloads(file: &str, mode: &str, judgment: &str) {
    let o = ndk(&["check", file, "--mode", mode]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), judgment);
}

#[test]
fn emitted_files_reload() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.proof");
    let out = out.to_str().unwrap();

    let o = ndk(&["stability", "a -> b", "-o", out]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "~~(~~a -> ~~b) ⊢ ~~a -> ~~b");
    reloads(out, "nj", "~~(~~a -> ~~b) ⊢ ~~a -> ~~b");

    for (name, args, mode, judgment) in [
        ("raa-to-tnd", vec!["a"], "nk-raa", "⊢ a | ~a"),
        ("tnd-to-peirce", vec!["p", "q"], "nk-tnd", "⊢ ((p -> q) -> p) -> p"),
        ("peirce-to-raa", vec!["p"], "nk-peirce", "⊢ ~~p -> p"),
        ("raa-rule-to-axiom", vec!["p & q"], "nk-raa-rule", "⊢ ~~(p & q) -> p & q"),
    ] {
        let mut a = vec!["derive", name];
        a.extend(args);
        a.extend(["-o", out]);
        assert_eq!(ndk(&a).status.code(), Some(0), "{name}");
        reloads(out, mode, judgment);
    }

    let src = write(dir.path(), "swap.proof", OR_SWAP);
    let o = ndk(&["compile", &src, "-o", out]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let compiled = stdout(&o).trim().to_owned();
    assert_eq!(compiled, "⊢ ~~(~~a | ~~b) -> ~~(~~b | ~~a)");
    reloads(out, "nj", &compiled);

    let o = ndk(&["roundtrip", &src, "-o", out]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    reloads(out, "nk-raa", "⊢ a | b -> b | a");
}

#[test]
fn compile_to_stdout_prints_a_proof_file() {
    let dir = tempfile::tempdir().unwrap();
    let src = write(dir.path(), "tnd.proof", "(tnd \"a\")");
    let o = ndk(&["compile", &src]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with(":expect \"⊢ ~~(~~a | ~~~a)\"\n(impl_i"));
    assert_eq!(stderr(&o).trim(), "⊢ ~~(~~a | ~~~a)");
}

#[test]
fn compile_size_cap() {
    let dir = tempfile::tempdir().unwrap();
    let src = write(dir.path(), "swap.proof", OR_SWAP);
    let o = ndk(&["compile", &src, "--max-proof-size", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("exceeds 5 nodes"));
    let o = Command::new(env!("CARGO_BIN_EXE_ndk"))
        .args(["compile", &src])
        .env("NDK_MAX_PROOF_SIZE", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn render_styles() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "prop2.proof", PROP2);
    let o = ndk(&["render", &file]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with('─')).count(), 4);
    assert!(text.contains("→i(1)") && text.contains("→i(2)"));

    let o = ndk(&["render", &file, "--style", "latex"]);
    let text = stdout(&o);
    assert!(text.contains("\\BinaryInfC") && text.contains("[a]^{2}"));
    let o = ndk(&["render", &file, "--style", "latex", "--standalone"]);
    assert!(stdout(&o).starts_with("\\documentclass"));

    let hyp = write(dir.path(), "hyp.proof", "(hyp \"a\")");
    assert_eq!(stdout(&ndk(&["render", &hyp])), "a\n");

    let bad = write(dir.path(), "bad.proof", "(and_e_l (hyp \"a\"))");
    assert_eq!(ndk(&["render", &bad]).status.code(), Some(1));
}
