use super::Formula;
use std::fmt;

/// Connective spelling used when printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Notation {
    /// `~ & | -> forall exists bot`; what the parser reads back.
    Ascii,
    /// `¬ ∧ ∨ → ∀ ∃ ⊥`; used by the renderer.
    Unicode,
}

struct Symbols {
    not: &'static str,
    and: &'static str,
    or: &'static str,
    arrow: &'static str,
    forall: &'static str,
    exists: &'static str,
    bot: &'static str,
}

const ASCII: Symbols = Symbols {
    not: "~",
    and: " & ",
    or: " | ",
    arrow: " -> ",
    forall: "forall ",
    exists: "exists ",
    bot: "bot",
};

const UNICODE: Symbols = Symbols {
    not: "¬",
    and: " ∧ ",
    or: " ∨ ",
    arrow: " → ",
    forall: "∀",
    exists: "∃",
    bot: "⊥",
};

// Binding strength; a subformula is parenthesized when it binds looser
// than its context requires.
const IMPLIES: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const UNARY: u8 = 4;

/// A formula paired with a notation, for `Display`.
pub struct Printed<'a> {
    formula: &'a Formula,
    notation: Notation,
}

impl Formula {
    pub fn printed(&self, notation: Notation) -> Printed<'_> {
        Printed { formula: self, notation }
    }
}

impl fmt::Display for Printed<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = match self.notation {
            Notation::Ascii => &ASCII,
            Notation::Unicode => &UNICODE,
        };
        write_formula(f, self.formula, sym, 0, true)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_formula(f, self, &ASCII, 0, true)
    }
}

/// `open_right` is true when nothing follows this subformula before the
/// enclosing parenthesis or the end of input; a quantifier may only be
/// printed bare in that position since its body extends rightwards.
fn write_formula(
    out: &mut fmt::Formatter<'_>,
    f: &Formula,
    sym: &Symbols,
    ctx: u8,
    open_right: bool,
) -> fmt::Result {
    if let Some(a) = f.negated() {
        out.write_str(sym.not)?;
        return write_formula(out, a, sym, UNARY, open_right);
    }
    match f {
        Formula::Bottom => out.write_str(sym.bot),
        Formula::Atom(p, args) => {
            out.write_str(p)?;
            if !args.is_empty() {
                out.write_str("(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.write_str(",")?;
                    }
                    write!(out, "{}", a)?;
                }
                out.write_str(")")?;
            }
            Ok(())
        }
        Formula::And(l, r) => binary(out, l, r, sym.and, AND, (AND, UNARY), sym, ctx, open_right),
        Formula::Or(l, r) => binary(out, l, r, sym.or, OR, (OR, AND), sym, ctx, open_right),
        Formula::Implies(l, r) => {
            binary(out, l, r, sym.arrow, IMPLIES, (OR, IMPLIES), sym, ctx, open_right)
        }
        Formula::Forall(x, b) | Formula::Exists(x, b) => {
            let q = if matches!(f, Formula::Forall(..)) { sym.forall } else { sym.exists };
            if !open_right {
                out.write_str("(")?;
            }
            write!(out, "{}{}. ", q, x)?;
            write_formula(out, b, sym, 0, true)?;
            if !open_right {
                out.write_str(")")?;
            }
            Ok(())
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn binary(
    out: &mut fmt::Formatter<'_>,
    l: &Formula,
    r: &Formula,
    op: &str,
    level: u8,
    (lctx, rctx): (u8, u8),
    sym: &Symbols,
    ctx: u8,
    open_right: bool,
) -> fmt::Result {
    let parens = level < ctx;
    if parens {
        out.write_str("(")?;
    }
    write_formula(out, l, sym, lctx, false)?;
    out.write_str(op)?;
    write_formula(out, r, sym, rctx, parens || open_right)?;
    if parens {
        out.write_str(")")?;
    }
    Ok(())
}
