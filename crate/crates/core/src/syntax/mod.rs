//! First-order terms and formulas.
//!
//! Negation has no node of its own: `~A` is stored as `A -> bot` and only
//! the printer turns it back into `~A`.

mod parse;
mod print;

pub use parse::{parse_formula, parse_term, ParseError};
pub use print::{Notation, Printed};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

/// A first-order term. Constants are 0-ary applications.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(String),
    App(String, Vec<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Term::App(name.into(), Vec::new())
    }

    pub fn app(symbol: impl Into<String>, args: Vec<Term>) -> Self {
        Term::App(symbol.into(), args)
    }

    /// Variables occurring in the term.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Var(x) => {
                out.insert(x.clone());
            }
            Term::App(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    fn has_var(&self, x: &str) -> bool {
        match self {
            Term::Var(y) => x == y,
            Term::App(_, args) => args.iter().any(|a| a.has_var(x)),
        }
    }

    /// Replaces every occurrence of variable `x` by `t`.
    pub fn substitute(&self, x: &str, t: &Term) -> Term {
        match self {
            Term::Var(y) if x == y => t.clone(),
            Term::Var(_) => self.clone(),
            Term::App(f, args) => {
                Term::App(f.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(x) => f.write_str(x),
            Term::App(s, args) => {
                write!(f, "{}(", s)?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}", a)?;
                }
                f.write_str(")")
            }
        }
    }
}

/// A first-order formula over `bot`, atoms, `&`, `|`, `->`, `forall`, `exists`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Bottom,
    Atom(String, Vec<Term>),
    And(Arc<Formula>, Arc<Formula>),
    Or(Arc<Formula>, Arc<Formula>),
    Implies(Arc<Formula>, Arc<Formula>),
    Forall(String, Arc<Formula>),
    Exists(String, Arc<Formula>),
}

impl Formula {
    pub fn bottom() -> Self {
        Formula::Bottom
    }

    /// A 0-ary atom, i.e. a propositional letter.
    pub fn prop(name: impl Into<String>) -> Self {
        Formula::Atom(name.into(), Vec::new())
    }

    pub fn atom(name: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Atom(name.into(), args)
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Arc::new(l), Arc::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Arc::new(l), Arc::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::Implies(Arc::new(l), Arc::new(r))
    }

    /// `~a`, stored as `a -> bot`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Self {
        Formula::implies(a, Formula::Bottom)
    }

    /// `~~a`.
    pub fn not_not(a: Formula) -> Self {
        Formula::not(Formula::not(a))
    }

    pub fn forall(x: impl Into<String>, body: Formula) -> Self {
        Formula::Forall(x.into(), Arc::new(body))
    }

    pub fn exists(x: impl Into<String>, body: Formula) -> Self {
        Formula::Exists(x.into(), Arc::new(body))
    }

    /// If the formula is `A -> bot`, returns `A`.
    pub fn negated(&self) -> Option<&Formula> {
        match self {
            Formula::Implies(a, b) if **b == Formula::Bottom => Some(a),
            _ => None,
        }
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, Formula::Bottom)
    }

    /// True when the formula contains no quantifier.
    pub fn is_quantifier_free(&self) -> bool {
        match self {
            Formula::Bottom | Formula::Atom(..) => true,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.is_quantifier_free() && r.is_quantifier_free()
            }
            Formula::Forall(..) | Formula::Exists(..) => false,
        }
    }

    /// Connective nesting depth; atoms and `bot` have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Bottom | Formula::Atom(..) => 0,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                1 + l.depth().max(r.depth())
            }
            Formula::Forall(_, b) | Formula::Exists(_, b) => 1 + b.depth(),
        }
    }

    /// Variables with at least one occurrence outside a binder for them.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Bottom => {}
            Formula::Atom(_, args) => {
                for x in args.iter().flat_map(Term::vars) {
                    if !bound.contains(&x.as_str()) {
                        out.insert(x);
                    }
                }
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            Formula::Forall(x, b) | Formula::Exists(x, b) => {
                bound.push(x);
                b.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn has_free(&self, x: &str) -> bool {
        match self {
            Formula::Bottom => false,
            Formula::Atom(_, args) => args.iter().any(|a| a.has_var(x)),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.has_free(x) || r.has_free(x)
            }
            Formula::Forall(y, b) | Formula::Exists(y, b) => y != x && b.has_free(x),
        }
    }

    /// Capture-avoiding substitution `self[x := t]`.
    pub fn substitute(&self, x: &str, t: &Term) -> Formula {
        if !self.has_free(x) {
            return self.clone();
        }
        let tvars = t.vars();
        self.subst(x, t, &tvars)
    }

    fn subst(&self, x: &str, t: &Term, tvars: &BTreeSet<String>) -> Formula {
        match self {
            Formula::Bottom => Formula::Bottom,
            Formula::Atom(p, args) => {
                Formula::Atom(p.clone(), args.iter().map(|a| a.substitute(x, t)).collect())
            }
            Formula::And(l, r) => Formula::And(sub_arc(l, x, t, tvars), sub_arc(r, x, t, tvars)),
            Formula::Or(l, r) => Formula::Or(sub_arc(l, x, t, tvars), sub_arc(r, x, t, tvars)),
            Formula::Implies(l, r) => {
                Formula::Implies(sub_arc(l, x, t, tvars), sub_arc(r, x, t, tvars))
            }
            Formula::Forall(y, _) | Formula::Exists(y, _) if y == x => self.clone(),
            Formula::Forall(y, b) | Formula::Exists(y, b) => {
                let (y, b) = if b.has_free(x) && tvars.contains(y) {
                    let mut avoid = b.free_vars();
                    avoid.extend(tvars.iter().cloned());
                    avoid.insert(x.to_string());
                    let z = fresh_var(y, &avoid);
                    let renamed = b.substitute(y, &Term::Var(z.clone()));
                    (z, Arc::new(renamed.subst(x, t, tvars)))
                } else {
                    (y.clone(), sub_arc(b, x, t, tvars))
                };
                match self {
                    Formula::Forall(..) => Formula::Forall(y, b),
                    _ => Formula::Exists(y, b),
                }
            }
        }
    }

    /// Equality up to consistent renaming of bound variables.
    pub fn alpha_eq(&self, other: &Formula) -> bool {
        let mut env = Vec::new();
        alpha(self, other, &mut env)
    }

    /// Representative of the alpha-class: bound variables renamed to `#0`, `#1`, ...
    /// by binder depth. `#` cannot occur in a parsed identifier, so the
    /// renaming never collides with a free variable.
    pub fn canonical(&self) -> Formula {
        let mut scope = Vec::new();
        self.canon(&mut scope)
    }

    fn canon(&self, scope: &mut Vec<(String, String)>) -> Formula {
        match self {
            Formula::Bottom => Formula::Bottom,
            Formula::Atom(p, args) => {
                let map: BTreeMap<&str, &str> = scope
                    .iter()
                    .map(|(a, b)| (a.as_str(), b.as_str()))
                    .collect();
                Formula::Atom(p.clone(), args.iter().map(|a| rename_term(a, &map)).collect())
            }
            Formula::And(l, r) => Formula::and(l.canon(scope), r.canon(scope)),
            Formula::Or(l, r) => Formula::or(l.canon(scope), r.canon(scope)),
            Formula::Implies(l, r) => Formula::implies(l.canon(scope), r.canon(scope)),
            Formula::Forall(x, b) | Formula::Exists(x, b) => {
                let name = format!("#{}", scope.len());
                scope.push((x.clone(), name.clone()));
                let body = b.canon(scope);
                scope.pop();
                match self {
                    Formula::Forall(..) => Formula::forall(name, body),
                    _ => Formula::exists(name, body),
                }
            }
        }
    }

    /// Atoms occurring in the formula, deduplicated.
    pub fn atoms(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<Formula>) {
        match self {
            Formula::Bottom => {}
            Formula::Atom(..) => {
                out.insert(self.clone());
            }
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
            Formula::Forall(_, b) | Formula::Exists(_, b) => b.collect_atoms(out),
        }
    }
}

fn sub_arc(f: &Arc<Formula>, x: &str, t: &Term, tvars: &BTreeSet<String>) -> Arc<Formula> {
    if f.has_free(x) {
        Arc::new(f.subst(x, t, tvars))
    } else {
        Arc::clone(f)
    }
}

fn rename_term(t: &Term, map: &BTreeMap<&str, &str>) -> Term {
    match t {
        // Inner binders shadow outer ones: the map is built from the scope
        // stack in push order, so later (inner) entries overwrite earlier.
        Term::Var(x) => Term::Var(map.get(x.as_str()).map_or_else(|| x.clone(), |s| s.to_string())),
        Term::App(f, args) => Term::App(f.clone(), args.iter().map(|a| rename_term(a, map)).collect()),
    }
}

fn alpha<'a>(f: &'a Formula, g: &'a Formula, env: &mut Vec<(&'a str, &'a str)>) -> bool {
    match (f, g) {
        (Formula::Bottom, Formula::Bottom) => true,
        (Formula::Atom(p, xs), Formula::Atom(q, ys)) => {
            p == q && xs.len() == ys.len() && xs.iter().zip(ys).all(|(s, t)| alpha_term(s, t, env))
        }
        (Formula::And(a, b), Formula::And(c, d))
        | (Formula::Or(a, b), Formula::Or(c, d))
        | (Formula::Implies(a, b), Formula::Implies(c, d)) => alpha(a, c, env) && alpha(b, d, env),
        (Formula::Forall(x, a), Formula::Forall(y, b))
        | (Formula::Exists(x, a), Formula::Exists(y, b)) => {
            env.push((x, y));
            let eq = alpha(a, b, env);
            env.pop();
            eq
        }
        _ => false,
    }
}

fn alpha_term(s: &Term, t: &Term, env: &[(&str, &str)]) -> bool {
    match (s, t) {
        (Term::Var(x), Term::Var(y)) => {
            let bx = env.iter().rposition(|(l, _)| l == x);
            let by = env.iter().rposition(|(_, r)| r == y);
            match (bx, by) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            }
        }
        (Term::App(f, xs), Term::App(g, ys)) => {
            f == g && xs.len() == ys.len() && xs.iter().zip(ys).all(|(a, b)| alpha_term(a, b, env))
        }
        _ => false,
    }
}

/// A variable name based on `base` that is not in `avoid`.
pub fn fresh_var(base: &str, avoid: &BTreeSet<String>) -> String {
    if !avoid.contains(base) {
        return base.to_string();
    }
    (1..)
        .map(|i| format!("{}_{}", base, i))
        .find(|name| !avoid.contains(name))
        .expect("unbounded supply of names")
}

/// A multiset of hypotheses together with a conclusion, `G |- C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Judgment {
    pub context: Vec<Formula>,
    pub conclusion: Formula,
}

impl Judgment {
    pub fn new(context: Vec<Formula>, conclusion: Formula) -> Self {
        Judgment { context, conclusion }
    }

    /// Same conclusion up to alpha, same context as a multiset of alpha-classes.
    pub fn matches(&self, other: &Judgment) -> bool {
        self.conclusion.alpha_eq(&other.conclusion)
            && same_multiset(&self.context, &other.context)
    }

    /// Same conclusion up to alpha, same context as a set of alpha-classes.
    pub fn matches_as_set(&self, other: &Judgment) -> bool {
        self.conclusion.alpha_eq(&other.conclusion) && same_set(&self.context, &other.context)
    }

    /// Free variables of the context and the conclusion.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = self.conclusion.free_vars();
        for h in &self.context {
            out.extend(h.free_vars());
        }
        out
    }

    pub fn printed(&self, notation: Notation) -> String {
        let ctx: Vec<String> = self
            .context
            .iter()
            .map(|h| h.printed(notation).to_string())
            .collect();
        let turnstile = match notation {
            Notation::Ascii => "|-",
            Notation::Unicode => "⊢",
        };
        let concl = self.conclusion.printed(notation).to_string();
        if ctx.is_empty() {
            format!("{} {}", turnstile, concl)
        } else {
            format!("{} {} {}", ctx.join(", "), turnstile, concl)
        }
    }
}

/// Renders as `G ⊢ C` with ASCII formulas.
impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx: Vec<String> = self.context.iter().map(|h| h.to_string()).collect();
        if ctx.is_empty() {
            write!(f, "⊢ {}", self.conclusion)
        } else {
            write!(f, "{} ⊢ {}", ctx.join(", "), self.conclusion)
        }
    }
}

/// Parses `A, B |- C` (or with `⊢`). Commas inside parentheses do not split.
pub fn parse_judgment(text: &str) -> Result<Judgment, ParseError> {
    let (lhs, rhs, offset) = if let Some(i) = text.find('⊢') {
        (&text[..i], &text[i + '⊢'.len_utf8()..], i + '⊢'.len_utf8())
    } else if let Some(i) = text.find("|-") {
        (&text[..i], &text[i + 2..], i + 2)
    } else {
        return Err(ParseError::new(0, "expected a turnstile `|-` or `⊢`"));
    };
    let conclusion = parse_formula(rhs).map_err(|e| e.shifted(offset))?;
    let mut context = Vec::new();
    if lhs.trim().is_empty() {
        return Ok(Judgment { context, conclusion });
    }
    let mut depth = 0i32;
    let mut start = 0;
    let mut pieces = Vec::new();
    for (i, c) in lhs.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push((start, &lhs[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push((start, &lhs[start..]));
    for (at, piece) in pieces {
        if piece.trim().is_empty() {
            return Err(ParseError::new(at, "empty hypothesis"));
        }
        context.push(parse_formula(piece).map_err(|e| e.shifted(at))?);
    }
    Ok(Judgment { context, conclusion })
}

pub fn same_multiset(xs: &[Formula], ys: &[Formula]) -> bool {
    if xs.len() != ys.len() {
        return false;
    }
    let mut a: Vec<Formula> = xs.iter().map(Formula::canonical).collect();
    let mut b: Vec<Formula> = ys.iter().map(Formula::canonical).collect();
    a.sort();
    b.sort();
    a == b
}

pub fn same_set(xs: &[Formula], ys: &[Formula]) -> bool {
    let a: BTreeSet<Formula> = xs.iter().map(Formula::canonical).collect();
    let b: BTreeSet<Formula> = ys.iter().map(Formula::canonical).collect();
    a == b
}
