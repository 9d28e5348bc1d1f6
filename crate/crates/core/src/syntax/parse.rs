use super::{Formula, Term};
use std::collections::HashMap;
use thiserror::Error;

/// Syntax error in a formula, with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at position {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(pos: usize, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into() }
    }

    pub(crate) fn shifted(mut self, by: usize) -> Self {
        self.pos += by;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Not,
    And,
    Or,
    Arrow,
    Bot,
    Forall,
    Exists,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{}`", s),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Bot => "`bot`".into(),
            Tok::Forall => "`forall`".into(),
            Tok::Exists => "`exists`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_alphabetic() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &text[i..end];
            let tok = match word {
                "bot" => Tok::Bot,
                "forall" => Tok::Forall,
                "exists" => Tok::Exists,
                _ => Tok::Ident(word.to_string()),
            };
            out.push((i, tok));
            continue;
        }
        chars.next();
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '.' => Tok::Dot,
            '~' | '¬' => Tok::Not,
            '&' | '∧' => Tok::And,
            '|' | '∨' => Tok::Or,
            '→' => Tok::Arrow,
            '⊥' => Tok::Bot,
            '∀' => Tok::Forall,
            '∃' => Tok::Exists,
            '-' => match chars.next() {
                Some((_, '>')) => Tok::Arrow,
                _ => return Err(ParseError::new(i, "expected `->`")),
            },
            other => return Err(ParseError::new(i, format!("unexpected character `{}`", other))),
        };
        out.push((i, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    functions: HashMap<String, usize>,
    predicates: HashMap<String, usize>,
}

impl Parser {
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

    fn expect(&mut self, want: Tok) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&want.describe()))
        }
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::new(self.pos(), format!("expected {}, found {}", wanted, self.peek().describe()))
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            Ok(Formula::implies(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        let start = self.at;
        let pos = self.pos();
        match self.bump() {
            Tok::Bot => Ok(Formula::Bottom),
            Tok::LParen => {
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            q @ (Tok::Forall | Tok::Exists) => {
                let var_at = self.at;
                let var = match self.bump() {
                    Tok::Ident(x) => x,
                    _ => {
                        self.at = var_at;
                        return Err(self.unexpected("a variable after the quantifier"));
                    }
                };
                self.expect(Tok::Dot)?;
                // The body extends as far right as possible.
                let body = self.formula()?;
                Ok(if q == Tok::Forall {
                    Formula::forall(var, body)
                } else {
                    Formula::exists(var, body)
                })
            }
            Tok::Ident(p) => {
                let args = if *self.peek() == Tok::LParen {
                    self.bump();
                    self.term_list()?
                } else {
                    Vec::new()
                };
                check_arity(&mut self.predicates, "predicate", &p, args.len(), pos)?;
                Ok(Formula::Atom(p, args))
            }
            _ => {
                self.at = start;
                Err(self.unexpected("a formula"))
            }
        }
    }

    /// Arguments after an opening parenthesis, through the closing one.
    fn term_list(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut args = Vec::new();
        if *self.peek() == Tok::RParen {
            self.bump();
            return Ok(args);
        }
        loop {
            args.push(self.term()?);
            let sep_at = self.at;
            match self.bump() {
                Tok::Comma => continue,
                Tok::RParen => return Ok(args),
                _ => {
                    self.at = sep_at;
                    return Err(self.unexpected("`,` or `)`"));
                }
            }
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let start = self.at;
        let pos = self.pos();
        match self.bump() {
            Tok::Ident(name) => {
                if *self.peek() == Tok::LParen {
                    self.bump();
                    let args = self.term_list()?;
                    check_arity(&mut self.functions, "function", &name, args.len(), pos)?;
                    Ok(Term::App(name, args))
                } else {
                    Ok(Term::Var(name))
                }
            }
            _ => {
                self.at = start;
                Err(self.unexpected("a term"))
            }
        }
    }
}

fn check_arity(
    seen: &mut HashMap<String, usize>,
    kind: &str,
    name: &str,
    arity: usize,
    pos: usize,
) -> Result<(), ParseError> {
    match seen.get(name) {
        Some(&n) if n != arity => Err(ParseError::new(
            pos,
            format!("{} `{}` used with arity {} and {}", kind, name, n, arity),
        )),
        Some(_) => Ok(()),
        None => {
            seen.insert(name.to_string(), arity);
            Ok(())
        }
    }
}

fn parser(text: &str) -> Result<Parser, ParseError> {
    Ok(Parser {
        toks: lex(text)?,
        at: 0,
        functions: HashMap::new(),
        predicates: HashMap::new(),
    })
}

/// Parses a formula.
///
/// Precedence from tightest: `~`, `&`, `|`, `->`. `&` and `|` associate to
/// the left, `->` to the right, and a quantifier body extends as far right
/// as possible. A bare identifier in term position is a variable; a
/// constant is written with an empty argument list, `c()`.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = parser(text)?;
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(f)
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = parser(text)?;
    let t = p.term()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("end of input"));
    }
    Ok(t)
}
