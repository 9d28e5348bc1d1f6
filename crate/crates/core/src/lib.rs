//! A kernel for first-order natural deduction.
//!
//! Formulas and sequents live in [`syntax`], proof trees and their file
//! format in [`proof`]. [`checker`] validates proofs in NJ or NK with a
//! chosen set of classical principles. [`derivations`] relates the classical
//! principles to each other, [`translation`] implements the double-negation
//! translation, and [`compiler`] turns NK proofs into NJ proofs of the
//! translated sequent and back.
pub mod checker;
pub mod compiler;
pub mod derivations;
pub mod proof;
pub mod render;
pub mod syntax;
pub mod translation;

pub use checker::{check, check_fragment, check_sequent, CheckError, ErrorKind, Mode};
pub use compiler::{nj_embed, nj_translation_to_nk, nk_to_nj, CompileError};
pub use proof::format::{parse_proof, parse_proof_file, write_proof, write_proof_file, ProofFile};
pub use proof::{Classical, Label, LabelSupply, Proof, Rule};
pub use syntax::{parse_formula, parse_judgment, parse_term, Formula, Judgment, Notation, Term};
pub use translation::{nn_translate, stability_proof, triple_neg_proof};
