use clap::{Parser, Subcommand, ValueEnum};
use ndk_core::compiler::{nj_translation_to_nk, nk_to_nj_with_limit, DEFAULT_MAX_PROOF_SIZE};
use ndk_core::derivations::{peirce_implies_raa, raa_axiom_from_rule, raa_implies_tnd, tnd_implies_peirce};
use ndk_core::render::{render_ascii, render_latex, render_latex_document};
use ndk_core::{
    check, nn_translate, parse_formula, parse_proof_file, stability_proof, write_proof_file, CheckError, Formula,
    Judgment, Mode, Proof,
};
use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const GRAMMAR: &str = "\
Formulas:
  bot | p | p(t1, ..., tn) | ~A | A & B | A | B | A -> B | forall x. A | exists x. A
  Precedence ~ > & > | > ->; -> is right-associative; quantifier bodies extend
  as far right as possible. Terms are variables `x` or applications `f(t1, ...)`;
  constants are written `c()`. Unicode ¬ ∧ ∨ → ⊥ ∀ ∃ is accepted too.

Proof files:
  One s-expression per node, e.g. (impl_i :assume \"a\" :label 1 (hyp \"a\" :label 1)),
  optionally preceded by :expect \"G |- C\".

Exit status: 0 success, 1 check failure, 2 usage or parse error.";

#[derive(Parser)]
#[command(name = "ndk", version, about = "Natural deduction kernel and double-negation proof compiler", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check proof files and print the judgment each one establishes.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// nj, nk, nk-tnd, nk-raa, nk-raa-rule or nk-peirce.
        #[arg(long, default_value = "nk")]
        mode: String,
    },
    /// Print the double-negation translation of a formula.
    Translate {
        #[arg(required_unless_present = "file", conflicts_with = "file")]
        formula: Option<String>,
        /// Translate every non-empty line of a file.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Emit the NJ proof of `~~F' |- F'`.
    Stability {
        formula: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit one of the derivations between classical principles.
    Derive {
        name: Derivation,
        #[arg(required = true)]
        formulas: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compile an NK proof into an NJ proof of the translated sequent.
    Compile {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, env = "NDK_MAX_PROOF_SIZE", default_value_t = DEFAULT_MAX_PROOF_SIZE)]
        max_proof_size: usize,
    },
    /// Compile to NJ and lift the result back to an NK proof of the original sequent.
    Roundtrip {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, env = "NDK_MAX_PROOF_SIZE", default_value_t = DEFAULT_MAX_PROOF_SIZE)]
        max_proof_size: usize,
    },
    /// Draw a proof tree.
    Render {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ascii")]
        style: Style,
        /// With latex: wrap the tree in a complete document.
        #[arg(long)]
        standalone: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Derivation {
    /// `a | ~a` from raa (one formula).
    RaaToTnd,
    /// Peirce's law from tnd (two formulas).
    TndToPeirce,
    /// `~~p -> p` from Peirce's law (one formula).
    PeirceToRaa,
    /// `~~a -> a` from the rule form of raa (one formula).
    RaaRuleToAxiom,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Ascii,
    Latex,
}

/// A failed command: message and exit status.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Display) -> Failure {
    Failure { code: 2, message: message.to_string() }
}

fn failed(message: impl Display) -> Failure {
    Failure { code: 1, message: message.to_string() }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {}", path.display(), e)))
}

fn formula(text: &str) -> Result<Formula, Failure> {
    parse_formula(text).map_err(|e| usage(format!("`{}`: {}", text, e)))
}

fn load(path: &Path) -> Result<(Proof, Option<Judgment>), Failure> {
    let text = read(path)?;
    let file = parse_proof_file(&text).map_err(|e| usage(format!("{}: {}", path.display(), e)))?;
    Ok((file.proof, file.expect))
}

fn check_error(path: &Path, e: &CheckError) -> Failure {
    failed(format!("{}: {}", path.display(), e))
}

/// Checks a loaded proof and its `:expect` header, if any.
fn check_loaded(path: &Path, p: &Proof, expect: Option<&Judgment>, mode: &Mode) -> Result<Judgment, Failure> {
    let j = check(p, mode).map_err(|e| check_error(path, &e))?;
    if let Some(e) = expect {
        if !j.matches(e) {
            return Err(failed(format!(
                "{}: /: ConclusionMismatch: the proof establishes {} but the header expects {}",
                path.display(),
                j,
                e
            )));
        }
    }
    Ok(j)
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| failed(format!("{}: {}", path.display(), e))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Writes a proof file; its judgment goes to stdout, or to stderr when the
/// proof itself is printed there.
fn emit_proof(p: &Proof, mode: &Mode, output: Option<&Path>) -> Result<(), Failure> {
    let j = check(p, mode).map_err(|e| failed(format!("internal error, emitted proof does not check: {e}")))?;
    emit(&write_proof_file(p, Some(&j)), output)?;
    if output.is_some() {
        println!("{j}");
    } else {
        eprintln!("{j}");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { files, mode } => {
            let mode = Mode::from_name(&mode)
                .ok_or_else(|| usage(format!("unknown mode `{mode}`; expected nj, nk, nk-tnd, nk-raa, nk-raa-rule or nk-peirce")))?;
            let mut worst: Option<Failure> = None;
            for path in &files {
                let result = load(path).and_then(|(p, e)| check_loaded(path, &p, e.as_ref(), &mode));
                match result {
                    Ok(j) if files.len() == 1 => println!("{j}"),
                    Ok(j) => println!("{}: {j}", path.display()),
                    Err(f) => {
                        eprintln!("{}", f.message);
                        if worst.as_ref().is_none_or(|w| f.code > w.code) {
                            worst = Some(Failure { code: f.code, message: String::new() });
                        }
                    }
                }
            }
            worst.map_or(Ok(()), Err)
        }
        Command::Translate { formula: text, file } => {
            let lines: Vec<String> = match (&text, &file) {
                (Some(t), _) => vec![t.clone()],
                (None, Some(path)) => read(path)?.lines().map(str::to_owned).collect(),
                (None, None) => return Err(usage("give a formula or --file")),
            };
            for line in lines.iter().map(|l| l.trim()).filter(|l| !l.is_empty()) {
                println!("{}", nn_translate(&formula(line)?));
            }
            Ok(())
        }
        Command::Stability { formula: text, output } => {
            emit_proof(&stability_proof(&formula(&text)?), &Mode::nj(), output.as_deref())
        }
        Command::Derive { name, formulas, output } => {
            let fs = formulas.iter().map(|t| formula(t)).collect::<Result<Vec<_>, _>>()?;
            let want = if matches!(name, Derivation::TndToPeirce) { 2 } else { 1 };
            if fs.len() != want {
                return Err(usage(format!("this derivation takes {} formula(s), got {}", want, fs.len())));
            }
            let p = match name {
                Derivation::RaaToTnd => raa_implies_tnd(&fs[0]),
                Derivation::TndToPeirce => tnd_implies_peirce(&fs[0], &fs[1]),
                Derivation::PeirceToRaa => peirce_implies_raa(&fs[0]),
                Derivation::RaaRuleToAxiom => raa_axiom_from_rule(&fs[0]),
            };
            emit_proof(&p, &Mode::nk(), output.as_deref())
        }
        Command::Compile { file, output, max_proof_size } => {
            let (p, expect) = load(&file)?;
            check_loaded(&file, &p, expect.as_ref(), &Mode::nk())?;
            let out = nk_to_nj_with_limit(&p, max_proof_size).map_err(|e| failed(format!("{}: {}", file.display(), e)))?;
            emit_proof(&out, &Mode::nj(), output.as_deref())
        }
        Command::Roundtrip { file, output, max_proof_size } => {
            let (p, expect) = load(&file)?;
            let j = check_loaded(&file, &p, expect.as_ref(), &Mode::nk())?;
            let nj = nk_to_nj_with_limit(&p, max_proof_size).map_err(|e| failed(format!("{}: {}", file.display(), e)))?;
            let back = nj_translation_to_nk(&nj, &j.context, &j.conclusion)
                .map_err(|e| failed(format!("{}: {}", file.display(), e)))?;
            emit_proof(&back, &Mode::nk(), output.as_deref())
        }
        Command::Render { file, style, standalone, output } => {
            let (p, expect) = load(&file)?;
            check_loaded(&file, &p, expect.as_ref(), &Mode::nk())?;
            let text = match (style, standalone) {
                (Style::Ascii, _) => render_ascii(&p),
                (Style::Latex, false) => render_latex(&p),
                (Style::Latex, true) => render_latex_document(&p),
            }
            .map_err(|e| check_error(&file, &e))?;
            emit(&text, output.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // deep proofs recurse deeply; run on a thread with room for it
    let handle = std::thread::Builder::new()
        .stack_size(256 << 20)
        .spawn(move || run(cli))
        .expect("spawn worker thread");
    match handle.join().expect("worker thread panicked") {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("{}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
