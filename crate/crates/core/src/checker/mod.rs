//! The trusted kernel.
//!
//! [`check`] validates a proof tree node by node, recomputing every
//! conclusion, and returns its judgment. Formula matching is up to
//! alpha-equivalence. Classical rules are only accepted when the [`Mode`]
//! admits their family.

use crate::proof::{Classical, Label, Proof, Rule};
use crate::syntax::{Formula, Judgment};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    RuleMismatch,
    DanglingLabel,
    DuplicateLabel,
    EigenvariableViolation,
    ClassicalRuleNotAdmitted,
    ArityError,
    ConclusionMismatch,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Position of a node: premise indices from the root. Printed as `/0/2`,
/// the root as `/`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn root() -> Self {
        Path(Vec::new())
    }

    /// The node this path addresses in `p`, if any.
    pub fn resolve<'a>(&self, p: &'a Proof) -> Option<&'a Proof> {
        self.0.iter().try_fold(p, |node, &i| node.premises.get(i))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("/");
        }
        for i in &self.0 {
            write!(f, "/{}", i)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{path}: {kind}: {detail}")]
pub struct CheckError {
    pub kind: ErrorKind,
    pub path: Path,
    pub detail: String,
}

impl CheckError {
    pub fn new(kind: ErrorKind, path: Path, detail: impl Into<String>) -> Self {
        CheckError { kind, path, detail: detail.into() }
    }
}

/// Which classical rule families are admitted. Empty is NJ.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Mode {
    admitted: BTreeSet<Classical>,
}

impl Mode {
    pub fn nj() -> Self {
        Mode::default()
    }

    /// NK with every classical family admitted.
    pub fn nk() -> Self {
        Mode::only(&Classical::ALL)
    }

    pub fn only(families: &[Classical]) -> Self {
        Mode { admitted: families.iter().copied().collect() }
    }

    pub fn admits(&self, c: Classical) -> bool {
        self.admitted.contains(&c)
    }

    pub fn admitted(&self) -> &BTreeSet<Classical> {
        &self.admitted
    }

    pub fn is_intuitionistic(&self) -> bool {
        self.admitted.is_empty()
    }

    /// `nj`, `nk`, `nk-tnd`, `nk-raa`, `nk-raa-rule`, `nk-peirce`.
    pub fn from_name(name: &str) -> Option<Mode> {
        Some(match name {
            "nj" => Mode::nj(),
            "nk" => Mode::nk(),
            "nk-tnd" => Mode::only(&[Classical::Tnd]),
            "nk-raa" => Mode::only(&[Classical::Raa]),
            "nk-raa-rule" => Mode::only(&[Classical::RaaRule]),
            "nk-peirce" => Mode::only(&[Classical::Peirce]),
            _ => return None,
        })
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.admitted.is_empty() {
            return f.write_str("NJ");
        }
        let names: Vec<String> = self.admitted.iter().map(|c| c.to_string()).collect();
        write!(f, "NK{{{}}}", names.join(","))
    }
}

/// Result of checking a tree that may still contain labelled hypotheses
/// bound outside of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fragment {
    pub conclusion: Formula,
    pub pending: Vec<(Formula, Option<Label>)>,
}

/// Checks a complete proof and returns the judgment it establishes.
pub fn check(p: &Proof, mode: &Mode) -> Result<Judgment, CheckError> {
    p.check_labels(false)?;
    let mut path = Vec::new();
    let (conclusion, hyps) = check_node(p, mode, &mut path)?;
    debug_assert!(hyps.iter().all(|(_, l)| l.is_none()));
    Ok(Judgment::new(hyps.into_iter().map(|(f, _)| f).collect(), conclusion))
}

/// Checks a proof fragment: labelled hypotheses without a binder inside the
/// tree are allowed and returned as pending.
pub fn check_fragment(p: &Proof, mode: &Mode) -> Result<Fragment, CheckError> {
    p.check_labels(true)?;
    let mut path = Vec::new();
    let (conclusion, pending) = check_node(p, mode, &mut path)?;
    Ok(Fragment { conclusion, pending })
}

/// Checks `p` and compares its judgment with `expected`: the conclusion up
/// to alpha-equivalence, the context as a multiset of alpha-classes, or as a
/// set when `context_as_set`.
pub fn check_sequent(
    p: &Proof,
    mode: &Mode,
    expected: &Judgment,
    context_as_set: bool,
) -> Result<bool, CheckError> {
    let j = check(p, mode)?;
    Ok(if context_as_set { j.matches_as_set(expected) } else { j.matches(expected) })
}

type Hyps = Vec<(Formula, Option<Label>)>;

fn check_node(p: &Proof, mode: &Mode, path: &mut Vec<usize>) -> Result<(Formula, Hyps), CheckError> {
    let err = |kind, path: &Vec<usize>, detail: String| CheckError::new(kind, Path(path.clone()), detail);

    let want = p.rule.arity();
    if p.premises.len() != want {
        return Err(err(
            ErrorKind::ArityError,
            path,
            format!("`{}` takes {} premise(s), found {}", p.rule.name(), want, p.premises.len()),
        ));
    }
    if let Some(c) = p.rule.classical() {
        if !mode.admits(c) {
            return Err(err(
                ErrorKind::ClassicalRuleNotAdmitted,
                path,
                format!("{} is not admitted in {}", c, mode),
            ));
        }
    }

    let mut concls = Vec::with_capacity(want);
    let mut hyps: Vec<Hyps> = Vec::with_capacity(want);
    for (i, q) in p.premises.iter().enumerate() {
        path.push(i);
        let r = check_node(q, mode, path);
        path.pop();
        let (c, h) = r?;
        concls.push(c);
        hyps.push(h);
    }
    let refs: Vec<&Formula> = concls.iter().collect();
    let conclusion = infer_step(&p.rule, &refs).map_err(|(kind, detail)| err(kind, path, detail))?;

    if let Rule::Hyp { formula, label } = &p.rule {
        return Ok((conclusion, vec![(formula.clone(), *label)]));
    }

    // Discharge.
    if let Some(k) = p.rule.declared_label() {
        for (i, h) in hyps.iter_mut().enumerate() {
            if !p.rule.binds_in(i) {
                if let Some((f, _)) = h.iter().find(|(_, l)| *l == Some(k)) {
                    return Err(err(
                        ErrorKind::DanglingLabel,
                        path,
                        format!("hypothesis {} [{}] in premise {} is outside the scope of its label", f, k, i),
                    ));
                }
                continue;
            }
            let expected = discharged_formula(&p.rule, &refs, i);
            let mut kept = Vec::with_capacity(h.len());
            for (f, l) in h.drain(..) {
                if l == Some(k) {
                    if !f.alpha_eq(&expected) {
                        return Err(err(
                            ErrorKind::RuleMismatch,
                            path,
                            format!("label {} discharges {} but the hypothesis is {}", k, expected, f),
                        ));
                    }
                } else {
                    kept.push((f, l));
                }
            }
            *h = kept;
        }
    }

    // Eigenvariable conditions.
    match &p.rule {
        Rule::ForallI { eigen } => {
            if let Some((f, _)) = hyps[0].iter().find(|(f, _)| f.has_free(eigen)) {
                return Err(err(
                    ErrorKind::EigenvariableViolation,
                    path,
                    format!("eigenvariable {} is free in the open hypothesis {}", eigen, f),
                ));
            }
        }
        Rule::ExistsE { eigen, .. } => {
            if concls[0].has_free(eigen) {
                return Err(err(
                    ErrorKind::EigenvariableViolation,
                    path,
                    format!("eigenvariable {} is free in the major premise {}", eigen, concls[0]),
                ));
            }
            if conclusion.has_free(eigen) {
                return Err(err(
                    ErrorKind::EigenvariableViolation,
                    path,
                    format!("eigenvariable {} is free in the conclusion {}", eigen, conclusion),
                ));
            }
            if let Some((f, _)) = hyps[1].iter().find(|(f, _)| f.has_free(eigen)) {
                return Err(err(
                    ErrorKind::EigenvariableViolation,
                    path,
                    format!("eigenvariable {} is free in the open hypothesis {}", eigen, f),
                ));
            }
        }
        _ => {}
    }

    Ok((conclusion, hyps.into_iter().flatten().collect()))
}

/// The formula a declaring rule discharges in premise `i`.
fn discharged_formula(rule: &Rule, concls: &[&Formula], i: usize) -> Formula {
    match (rule, concls[0]) {
        (Rule::ImpliesI { assume, .. }, _) => assume.clone(),
        (Rule::RaaRule { a, .. }, _) => Formula::not(a.clone()),
        (Rule::OrE { .. }, Formula::Or(a, b)) => if i == 1 { (**a).clone() } else { (**b).clone() },
        (Rule::ExistsE { eigen, .. }, Formula::Exists(x, a)) => {
            a.substitute(x, &crate::syntax::Term::Var(eigen.clone()))
        }
        _ => unreachable!("infer_step validated the premise shape"),
    }
}

fn mismatch(detail: String) -> (ErrorKind, String) {
    (ErrorKind::RuleMismatch, detail)
}

/// Conclusion of one inference from its premises' conclusions, checking the
/// premise shapes. Hypothesis bookkeeping is the caller's business.
pub(crate) fn infer_step(rule: &Rule, c: &[&Formula]) -> Result<Formula, (ErrorKind, String)> {
    Ok(match rule {
        Rule::Hyp { formula, .. } => formula.clone(),
        Rule::ImpliesI { assume, .. } => Formula::implies(assume.clone(), c[0].clone()),
        Rule::ImpliesE => match c[1] {
            Formula::Implies(a, b) if a.alpha_eq(c[0]) => (**b).clone(),
            Formula::Implies(a, _) => {
                return Err(mismatch(format!("implication expects {} but the minor premise is {}", a, c[0])))
            }
            other => return Err(mismatch(format!("major premise {} is not an implication", other))),
        },
        Rule::AndI => Formula::and(c[0].clone(), c[1].clone()),
        Rule::AndEL | Rule::AndER => match c[0] {
            Formula::And(l, r) => {
                if matches!(rule, Rule::AndEL) { (**l).clone() } else { (**r).clone() }
            }
            other => return Err(mismatch(format!("premise {} is not a conjunction", other))),
        },
        Rule::OrIL { other } => Formula::or(c[0].clone(), other.clone()),
        Rule::OrIR { other } => Formula::or(other.clone(), c[0].clone()),
        Rule::OrE { .. } => match c[0] {
            Formula::Or(..) if c[1].alpha_eq(c[2]) => c[1].clone(),
            Formula::Or(..) => {
                return Err(mismatch(format!("case branches conclude {} and {}", c[1], c[2])))
            }
            other => return Err(mismatch(format!("major premise {} is not a disjunction", other))),
        },
        Rule::BotE { target } => {
            if !c[0].is_bottom() {
                return Err(mismatch(format!("premise {} is not bot", c[0])));
            }
            target.clone()
        }
        Rule::ForallI { eigen } => Formula::forall(eigen.clone(), c[0].clone()),
        Rule::ForallE { term } => match c[0] {
            Formula::Forall(x, a) => a.substitute(x, term),
            other => return Err(mismatch(format!("premise {} is not universal", other))),
        },
        Rule::ExistsI { witness, target } => match target {
            Formula::Exists(x, a) => {
                let inst = a.substitute(x, witness);
                if !inst.alpha_eq(c[0]) {
                    return Err(mismatch(format!(
                        "premise {} is not the instance {} of {}",
                        c[0], inst, target
                    )));
                }
                target.clone()
            }
            other => return Err(mismatch(format!("target {} is not existential", other))),
        },
        Rule::ExistsE { .. } => match c[0] {
            Formula::Exists(..) => c[1].clone(),
            other => return Err(mismatch(format!("major premise {} is not existential", other))),
        },
        Rule::Tnd { a } => Formula::or(a.clone(), Formula::not(a.clone())),
        Rule::Raa { a } => Formula::implies(Formula::not_not(a.clone()), a.clone()),
        Rule::RaaRule { a, .. } => {
            if !c[0].is_bottom() {
                return Err(mismatch(format!("premise {} is not bot", c[0])));
            }
            a.clone()
        }
        Rule::Peirce { p, q } => Formula::implies(
            Formula::implies(Formula::implies(p.clone(), q.clone()), p.clone()),
            p.clone(),
        ),
    })
}
