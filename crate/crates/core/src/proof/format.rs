//! Proof files: one s-expression per node.
//!
//! ```text
//! :expect "~~~a |- ~a"
//! (impl_i :assume "a" :label 2
//!   (impl_e
//!     (impl_i :assume "~a" :label 1
//!       (impl_e (hyp "a" :label 2) (hyp "~a" :label 1)))
//!     (hyp "~~~a")))
//! ```
//!
//! Formulas and terms are quoted strings in the formula grammar. The
//! optional `:expect` header states the judgment the proof is supposed to
//! establish; callers cross-check it after checking. `;` starts a comment.

use super::{Label, Proof, Rule};
use crate::syntax::{parse_formula, parse_judgment, parse_term, Formula, Judgment, Term};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A parsed proof file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofFile {
    pub expect: Option<Judgment>,
    pub proof: Proof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Str(String),
    Key(String),
    Int(u32),
    Sym(String),
    End,
}

struct Reader<'a> {
    text: &'a str,
    toks: Vec<(usize, Tok)>,
    at: usize,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, (usize, String)> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b';' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'(' => {
                out.push((i, Tok::Open));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::Close));
                i += 1;
            }
            b'"' => {
                let start = i;
                i += 1;
                let mut s = String::new();
                loop {
                    let Some(ch) = text[i..].chars().next() else {
                        return Err((start, "unterminated string".into()));
                    };
                    i += ch.len_utf8();
                    match ch {
                        '"' => break,
                        '\\' => {
                            let Some(esc) = text[i..].chars().next() else {
                                return Err((start, "unterminated string".into()));
                            };
                            i += esc.len_utf8();
                            s.push(esc);
                        }
                        _ => s.push(ch),
                    }
                }
                out.push((start, Tok::Str(s)));
            }
            _ => {
                let start = i;
                while i < bytes.len() && !matches!(bytes[i], b' ' | b'\t' | b'\r' | b'\n' | b'(' | b')' | b'"' | b';') {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = if let Some(k) = word.strip_prefix(':') {
                    Tok::Key(k.to_string())
                } else if word.bytes().all(|b| b.is_ascii_digit()) {
                    Tok::Int(word.parse().map_err(|_| (start, format!("number `{}` out of range", word)))?)
                } else {
                    Tok::Sym(word.to_string())
                };
                out.push((start, tok));
            }
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

/// What a rule head expects: positional strings, keyword attributes, premises.
struct Attrs {
    strings: Vec<(usize, String)>,
    keys: Vec<(usize, String, Tok)>,
    premises: Vec<Proof>,
}

impl<'a> Reader<'a> {
    fn error(&self, pos: usize, message: impl Into<String>) -> FormatError {
        let before = &self.text[..pos.min(self.text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(before.chars().count(), |nl| before[nl + 1..].chars().count()) + 1;
        FormatError { line, column, message: message.into() }
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn file(&mut self) -> Result<ProofFile, FormatError> {
        let mut expect = None;
        if *self.peek() == Tok::Key("expect".into()) {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Str(s) => {
                    let j = parse_judgment(&s).map_err(|e| self.error(pos, format!("in :expect: {}", e)))?;
                    expect = Some(j);
                }
                _ => return Err(self.error(pos, "`:expect` needs a quoted judgment")),
            }
        }
        let proof = self.node()?;
        if *self.peek() != Tok::End {
            return Err(self.error(self.pos(), "trailing input after the proof"));
        }
        Ok(ProofFile { expect, proof })
    }

    fn node(&mut self) -> Result<Proof, FormatError> {
        let open = self.pos();
        if self.bump() != Tok::Open {
            return Err(self.error(open, "expected `(`"));
        }
        let head_pos = self.pos();
        let head = match self.bump() {
            Tok::Sym(s) => s,
            _ => return Err(self.error(head_pos, "expected a rule name")),
        };
        let mut attrs = Attrs { strings: Vec::new(), keys: Vec::new(), premises: Vec::new() };
        loop {
            let pos = self.pos();
            match self.peek().clone() {
                Tok::Close => {
                    self.bump();
                    break;
                }
                Tok::Open => attrs.premises.push(self.node()?),
                Tok::Str(s) => {
                    self.bump();
                    attrs.strings.push((pos, s));
                }
                Tok::Key(k) => {
                    self.bump();
                    let vpos = self.pos();
                    let v = self.bump();
                    if matches!(v, Tok::Open | Tok::Close | Tok::End) {
                        return Err(self.error(vpos, format!("`:{}` needs a value", k)));
                    }
                    attrs.keys.push((pos, k, v));
                }
                Tok::End => return Err(self.error(open, "unclosed `(`")),
                Tok::Int(_) | Tok::Sym(_) => return Err(self.error(pos, "unexpected atom")),
            }
        }
        let rule = self.rule(&head, head_pos, &mut attrs)?;
        if let Some((pos, k, _)) = attrs.keys.first() {
            return Err(self.error(*pos, format!("`{}` does not take `:{}`", head, k)));
        }
        if let Some((pos, _)) = attrs.strings.first() {
            return Err(self.error(*pos, format!("too many arguments for `{}`", head)));
        }
        Ok(Proof::new(rule, attrs.premises))
    }

    fn formula_at(&self, pos: usize, s: &str) -> Result<Formula, FormatError> {
        parse_formula(s).map_err(|e| self.error(pos, format!("bad formula {:?}: {}", s, e)))
    }

    fn positional(&self, attrs: &mut Attrs, head: &str, head_pos: usize, what: &str) -> Result<Formula, FormatError> {
        if attrs.strings.is_empty() {
            return Err(self.error(head_pos, format!("`{}` needs {}", head, what)));
        }
        let (pos, s) = attrs.strings.remove(0);
        self.formula_at(pos, &s)
    }

    fn take_key(&self, attrs: &mut Attrs, key: &str) -> Option<(usize, Tok)> {
        let i = attrs.keys.iter().position(|(_, k, _)| k == key)?;
        let (pos, _, v) = attrs.keys.remove(i);
        Some((pos, v))
    }

    fn key_formula(&self, attrs: &mut Attrs, head: &str, head_pos: usize, key: &str) -> Result<Formula, FormatError> {
        match self.take_key(attrs, key) {
            Some((pos, Tok::Str(s))) => self.formula_at(pos, &s),
            Some((pos, _)) => Err(self.error(pos, format!("`:{}` needs a quoted formula", key))),
            None => Err(self.error(head_pos, format!("`{}` needs `:{}`", head, key))),
        }
    }

    fn key_term(&self, attrs: &mut Attrs, head: &str, head_pos: usize, key: &str) -> Result<Term, FormatError> {
        match self.take_key(attrs, key) {
            Some((pos, Tok::Str(s))) => {
                parse_term(&s).map_err(|e| self.error(pos, format!("bad term {:?}: {}", s, e)))
            }
            Some((pos, _)) => Err(self.error(pos, format!("`:{}` needs a quoted term", key))),
            None => Err(self.error(head_pos, format!("`{}` needs `:{}`", head, key))),
        }
    }

    fn key_var(&self, attrs: &mut Attrs, head: &str, head_pos: usize, key: &str) -> Result<String, FormatError> {
        match self.take_key(attrs, key) {
            Some((pos, Tok::Str(s))) => match parse_term(&s) {
                Ok(Term::Var(x)) => Ok(x),
                _ => Err(self.error(pos, format!("`:{}` must be a variable name", key))),
            },
            Some((pos, _)) => Err(self.error(pos, format!("`:{}` needs a quoted variable", key))),
            None => Err(self.error(head_pos, format!("`{}` needs `:{}`", head, key))),
        }
    }

    fn key_label(&self, attrs: &mut Attrs, head: &str, head_pos: usize, required: bool) -> Result<Option<Label>, FormatError> {
        match self.take_key(attrs, "label") {
            Some((_, Tok::Int(n))) if n > 0 => Ok(Some(Label::new(n))),
            Some((pos, _)) => Err(self.error(pos, "`:label` needs a positive integer")),
            None if required => Err(self.error(head_pos, format!("`{}` needs `:label`", head))),
            None => Ok(None),
        }
    }

    fn rule(&self, head: &str, hp: usize, attrs: &mut Attrs) -> Result<Rule, FormatError> {
        let label = |r: &Self, attrs: &mut Attrs| -> Result<Label, FormatError> {
            Ok(r.key_label(attrs, head, hp, true)?.expect("required"))
        };
        Ok(match head {
            "hyp" => {
                let formula = self.positional(attrs, head, hp, "a formula")?;
                Rule::Hyp { formula, label: self.key_label(attrs, head, hp, false)? }
            }
            "impl_i" => Rule::ImpliesI {
                assume: self.key_formula(attrs, head, hp, "assume")?,
                label: label(self, attrs)?,
            },
            "impl_e" => Rule::ImpliesE,
            "and_i" => Rule::AndI,
            "and_e_l" => Rule::AndEL,
            "and_e_r" => Rule::AndER,
            "or_i_l" => Rule::OrIL { other: self.key_formula(attrs, head, hp, "other")? },
            "or_i_r" => Rule::OrIR { other: self.key_formula(attrs, head, hp, "other")? },
            "or_e" => Rule::OrE { label: label(self, attrs)? },
            "bot_e" => Rule::BotE { target: self.key_formula(attrs, head, hp, "target")? },
            "forall_i" => Rule::ForallI { eigen: self.key_var(attrs, head, hp, "eigen")? },
            "forall_e" => Rule::ForallE { term: self.key_term(attrs, head, hp, "term")? },
            "exists_i" => Rule::ExistsI {
                witness: self.key_term(attrs, head, hp, "witness")?,
                target: self.key_formula(attrs, head, hp, "target")?,
            },
            "exists_e" => Rule::ExistsE {
                label: label(self, attrs)?,
                eigen: self.key_var(attrs, head, hp, "eigen")?,
            },
            "tnd" => Rule::Tnd { a: self.positional(attrs, head, hp, "a formula")? },
            "raa" => Rule::Raa { a: self.positional(attrs, head, hp, "a formula")? },
            "raa_rule" => Rule::RaaRule {
                a: self.positional(attrs, head, hp, "a formula")?,
                label: label(self, attrs)?,
            },
            "peirce" => {
                let p = self.positional(attrs, head, hp, "two formulas")?;
                let q = self.positional(attrs, head, hp, "two formulas")?;
                Rule::Peirce { p, q }
            }
            other => return Err(self.error(hp, format!("unknown rule `{}`", other))),
        })
    }
}

/// Parses a proof file. Premise counts are not validated here; the checker
/// reports them as arity errors.
pub fn parse_proof_file(text: &str) -> Result<ProofFile, FormatError> {
    let toks = lex(text).map_err(|(pos, msg)| {
        Reader { text, toks: vec![(0, Tok::End)], at: 0 }.error(pos, msg)
    })?;
    Reader { text, toks, at: 0 }.file()
}

pub fn parse_proof(text: &str) -> Result<Proof, FormatError> {
    parse_proof_file(text).map(|f| f.proof)
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

fn head(rule: &Rule) -> String {
    let mut s = format!("({}", rule.name());
    let mut push = |k: &str, v: String| {
        s.push(' ');
        if !k.is_empty() {
            s.push(':');
            s.push_str(k);
            s.push(' ');
        }
        s.push_str(&v);
    };
    match rule {
        Rule::Hyp { formula, label } => {
            push("", quote(&formula.to_string()));
            if let Some(l) = label {
                push("label", l.to_string());
            }
        }
        Rule::ImpliesI { assume, label } => {
            push("assume", quote(&assume.to_string()));
            push("label", label.to_string());
        }
        Rule::ImpliesE | Rule::AndI | Rule::AndEL | Rule::AndER => {}
        Rule::OrIL { other } | Rule::OrIR { other } => push("other", quote(&other.to_string())),
        Rule::OrE { label } => push("label", label.to_string()),
        Rule::BotE { target } => push("target", quote(&target.to_string())),
        Rule::ForallI { eigen } => push("eigen", quote(eigen)),
        Rule::ForallE { term } => push("term", quote(&term.to_string())),
        Rule::ExistsI { witness, target } => {
            push("witness", quote(&witness.to_string()));
            push("target", quote(&target.to_string()));
        }
        Rule::ExistsE { label, eigen } => {
            push("label", label.to_string());
            push("eigen", quote(eigen));
        }
        Rule::Tnd { a } | Rule::Raa { a } => push("", quote(&a.to_string())),
        Rule::RaaRule { a, label } => {
            push("", quote(&a.to_string()));
            push("label", label.to_string());
        }
        Rule::Peirce { p, q } => {
            push("", quote(&p.to_string()));
            push("", quote(&q.to_string()));
        }
    }
    s
}

fn write_node(p: &Proof, indent: usize, out: &mut String) {
    let h = head(&p.rule);
    out.push_str(&h);
    if p.premises.is_empty() {
        out.push(')');
        return;
    }
    // Short nodes whose premises are all leaves go on one line.
    if p.premises.iter().all(|q| q.premises.is_empty()) && p.premises.len() <= 2 {
        let mut flat = String::new();
        for q in &p.premises {
            flat.push(' ');
            write_node(q, 0, &mut flat);
        }
        if indent + h.len() + flat.len() <= 100 {
            out.push_str(&flat);
            out.push(')');
            return;
        }
    }
    for q in &p.premises {
        out.push('\n');
        out.push_str(&" ".repeat(indent + 2));
        write_node(q, indent + 2, out);
    }
    out.push(')');
}

/// Serializes a proof, one node per line for inner nodes.
pub fn write_proof(p: &Proof) -> String {
    let mut out = String::new();
    write_node(p, 0, &mut out);
    out
}

/// Serializes a proof with an `:expect` header.
pub fn write_proof_file(p: &Proof, expect: Option<&Judgment>) -> String {
    let mut out = String::new();
    if let Some(j) = expect {
        out.push_str(":expect ");
        out.push_str(&quote(&j.to_string()));
        out.push('\n');
    }
    out.push_str(&write_proof(p));
    out.push('\n');
    out
}
