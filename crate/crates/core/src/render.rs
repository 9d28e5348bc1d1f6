//! Proof trees as text: a stacked-fraction layout and bussproofs LaTeX.
//!
//! Both renderers check the proof first (in NK, so any checked proof is
//! accepted) and refuse to draw one that fails.

use crate::checker::{check, infer_step, CheckError, Mode};
use crate::proof::{Proof, Rule};
use crate::syntax::{Formula, Notation};
use std::fmt::Write;

/// A proof tree with the conclusion of every node filled in.
struct Annotated<'a> {
    proof: &'a Proof,
    conclusion: Formula,
    premises: Vec<Annotated<'a>>,
}

fn annotate(p: &Proof) -> Result<Annotated<'_>, CheckError> {
    check(p, &Mode::nk())?;
    Ok(annotate_checked(p))
}

fn annotate_checked(p: &Proof) -> Annotated<'_> {
    let premises: Vec<Annotated> = p.premises.iter().map(annotate_checked).collect();
    let refs: Vec<&Formula> = premises.iter().map(|a| &a.conclusion).collect();
    let conclusion = infer_step(&p.rule, &refs).expect("proof was checked");
    Annotated { proof: p, conclusion, premises }
}

/// Rule label as drawn next to an inference line; `None` for hypotheses.
fn rule_label(rule: &Rule) -> Option<String> {
    let with = |name: &str, l: &crate::proof::Label| format!("{name}({l})");
    Some(match rule {
        Rule::Hyp { .. } => return None,
        Rule::ImpliesI { label, .. } => with("→i", label),
        Rule::ImpliesE => "→e".into(),
        Rule::AndI => "∧i".into(),
        Rule::AndEL | Rule::AndER => "∧e".into(),
        Rule::OrIL { .. } | Rule::OrIR { .. } => "∨i".into(),
        Rule::OrE { label } => with("∨e", label),
        Rule::BotE { .. } => "⊥e".into(),
        Rule::ForallI { .. } => "∀i".into(),
        Rule::ForallE { .. } => "∀e".into(),
        Rule::ExistsI { .. } => "∃i".into(),
        Rule::ExistsE { label, .. } => with("∃e", label),
        Rule::Tnd { .. } => "tnd".into(),
        Rule::Raa { .. } => "raa".into(),
        Rule::RaaRule { label, .. } => with("raa′", label),
        Rule::Peirce { .. } => "Peirce".into(),
    })
}

struct Block {
    lines: Vec<String>,
    width: usize,
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn pad_to(s: &str, left: usize, total: usize) -> String {
    let mut out = " ".repeat(left);
    out.push_str(s);
    let w = width(&out);
    out.extend(std::iter::repeat_n(' ', total.saturating_sub(w)));
    out
}

fn layout(node: &Annotated) -> Block {
    let concl = node.conclusion.printed(Notation::Unicode).to_string();
    let label = rule_label(&node.proof.rule);
    let Some(label) = label else {
        let text = match &node.proof.rule {
            Rule::Hyp { label: Some(l), .. } => format!("[{concl}]^{l}"),
            _ => concl,
        };
        let w = width(&text);
        return Block { lines: vec![text], width: w };
    };

    // premises side by side, bottom-aligned, separated by three spaces
    let blocks: Vec<Block> = node.premises.iter().map(layout).collect();
    let height = blocks.iter().map(|b| b.lines.len()).max().unwrap_or(0);
    let gap = 3;
    let above_width = blocks.iter().map(|b| b.width).sum::<usize>() + gap * blocks.len().saturating_sub(1);
    let mut above = vec![String::new(); height];
    for (i, b) in blocks.iter().enumerate() {
        let offset = height - b.lines.len();
        for (row, line) in above.iter_mut().enumerate() {
            if i > 0 {
                line.push_str(&" ".repeat(gap));
            }
            let text = if row >= offset { b.lines[row - offset].as_str() } else { "" };
            line.push_str(&pad_to(text, 0, b.width));
        }
    }

    let bar = above_width.max(width(&concl)).max(1);
    let total = bar + 1 + width(&label);
    let mut lines = Vec::with_capacity(height + 2);
    let above_left = (bar - above_width) / 2;
    for line in above {
        lines.push(pad_to(&line, above_left, total));
    }
    lines.push(format!("{} {}", "─".repeat(bar), label));
    lines.push(pad_to(&concl, (bar - width(&concl)) / 2, total));
    Block { lines, width: total }
}

/// Stacked-fraction rendering with Unicode formulas.
pub fn render_ascii(p: &Proof) -> Result<String, CheckError> {
    let tree = annotate(p)?;
    let block = layout(&tree);
    let mut out = String::new();
    for line in block.lines {
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

/// A formula in LaTeX math notation.
pub fn latex_formula(f: &Formula) -> String {
    let unicode = f.printed(Notation::Unicode).to_string();
    let mut out = String::with_capacity(unicode.len() * 2);
    for c in unicode.chars() {
        match c {
            '¬' => out.push_str("\\neg "),
            '∧' => out.push_str("\\land"),
            '∨' => out.push_str("\\lor"),
            '→' => out.push_str("\\to"),
            '⊥' => out.push_str("\\bot "),
            '∀' => out.push_str("\\forall "),
            '∃' => out.push_str("\\exists "),
            '_' => out.push_str("\\_"),
            _ => out.push(c),
        }
    }
    out
}

fn latex_label(rule: &Rule) -> Option<String> {
    let text = rule_label(rule)?;
    let mut out = String::from("$");
    for c in text.chars() {
        match c {
            '→' => out.push_str("\\to "),
            '∧' => out.push_str("\\land "),
            '∨' => out.push_str("\\lor "),
            '⊥' => out.push_str("\\bot "),
            '∀' => out.push_str("\\forall "),
            '∃' => out.push_str("\\exists "),
            '′' => out.push('\''),
            _ => out.push(c),
        }
    }
    out.push('$');
    Some(out)
}

fn latex_node(node: &Annotated, out: &mut String) {
    let concl = latex_formula(&node.conclusion);
    let Some(label) = latex_label(&node.proof.rule) else {
        match &node.proof.rule {
            Rule::Hyp { label: Some(l), .. } => writeln!(out, "\\AxiomC{{$[{concl}]^{{{l}}}$}}").unwrap(),
            _ => writeln!(out, "\\AxiomC{{${concl}$}}").unwrap(),
        }
        return;
    };
    for q in &node.premises {
        latex_node(q, out);
    }
    let inf = match node.premises.len() {
        0 => {
            out.push_str("\\AxiomC{}\n");
            "UnaryInfC"
        }
        1 => "UnaryInfC",
        2 => "BinaryInfC",
        _ => "TrinaryInfC",
    };
    writeln!(out, "\\RightLabel{{\\scriptsize {label}}}").unwrap();
    writeln!(out, "\\{inf}{{${concl}$}}").unwrap();
}

/// bussproofs source for the proof, wrapped in a `prooftree` environment.
pub fn render_latex(p: &Proof) -> Result<String, CheckError> {
    let tree = annotate(p)?;
    let mut out = String::from("\\begin{prooftree}\n");
    latex_node(&tree, &mut out);
    out.push_str("\\end{prooftree}\n");
    Ok(out)
}

/// A complete LaTeX document around [`render_latex`].
pub fn render_latex_document(p: &Proof) -> Result<String, CheckError> {
    let body = render_latex(p)?;
    Ok(format!(
        "\\documentclass{{article}}\n\\usepackage{{amssymb}}\n\\usepackage{{bussproofs}}\n\\begin{{document}}\n{body}\\end{{document}}\n"
    ))
}
