//! Proof trees.
//!
//! A proof is a rule-labelled tree. Conclusions are not stored; the checker
//! recomputes them. Rules that discharge hypotheses carry a [`Label`], and a
//! discharged leaf is a [`Rule::Hyp`] carrying the same label.

pub mod format;

use crate::checker::{CheckError, ErrorKind, Path};
use crate::syntax::{Formula, Term};
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

/// Discharge index. Positive, unique per declaring node within one tree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(u32);

impl Label {
    /// Panics on zero.
    pub fn new(value: u32) -> Self {
        assert!(value > 0, "discharge labels are positive");
        Label(value)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Source of fresh discharge labels.
#[derive(Clone, Debug)]
pub struct LabelSupply {
    next: u32,
}

impl Default for LabelSupply {
    fn default() -> Self {
        LabelSupply { next: 1 }
    }
}

impl LabelSupply {
    pub fn new() -> Self {
        Self::default()
    }

    /// A supply whose labels are all unused in `p`.
    pub fn above(p: &Proof) -> Self {
        LabelSupply { next: p.max_label() + 1 }
    }

    pub fn fresh(&mut self) -> Label {
        let l = Label(self.next);
        self.next += 1;
        l
    }

    /// Makes sure future labels do not collide with any label in `p`.
    pub fn reserve(&mut self, p: &Proof) {
        self.next = self.next.max(p.max_label() + 1);
    }
}

/// The classical rule families a proof may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Classical {
    /// `A | ~A`
    Tnd,
    /// `~~A -> A`
    Raa,
    /// From `bot` under hypotheses `~A`, conclude `A`.
    RaaRule,
    /// `((P -> Q) -> P) -> P`
    Peirce,
}

impl Classical {
    pub const ALL: [Classical; 4] =
        [Classical::Tnd, Classical::Raa, Classical::RaaRule, Classical::Peirce];
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classical::Tnd => "TND",
            Classical::Raa => "RAA",
            Classical::RaaRule => "RAA_RULE",
            Classical::Peirce => "PEIRCE",
        })
    }
}

/// An inference rule with the annotations needed to recompute its conclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    /// A hypothesis leaf; labelled when it is discharged by an ancestor.
    Hyp { formula: Formula, label: Option<Label> },
    ImpliesI { assume: Formula, label: Label },
    /// Premises: `A`, then `A -> B`.
    ImpliesE,
    AndI,
    AndEL,
    AndER,
    /// From `A` infer `A | other`.
    OrIL { other: Formula },
    /// From `A` infer `other | A`.
    OrIR { other: Formula },
    /// Premises: `A | B`, `C` under `[A]`, `C` under `[B]`.
    OrE { label: Label },
    BotE { target: Formula },
    ForallI { eigen: String },
    ForallE { term: Term },
    ExistsI { witness: Term, target: Formula },
    /// Premises: `exists x. A`, then `C` under `[A[x := eigen]]`.
    ExistsE { label: Label, eigen: String },
    Tnd { a: Formula },
    Raa { a: Formula },
    RaaRule { a: Formula, label: Label },
    Peirce { p: Formula, q: Formula },
}

impl Rule {
    /// Number of premises the rule takes.
    pub fn arity(&self) -> usize {
        match self {
            Rule::Hyp { .. } | Rule::Tnd { .. } | Rule::Raa { .. } | Rule::Peirce { .. } => 0,
            Rule::ImpliesI { .. }
            | Rule::AndEL
            | Rule::AndER
            | Rule::OrIL { .. }
            | Rule::OrIR { .. }
            | Rule::BotE { .. }
            | Rule::ForallI { .. }
            | Rule::ForallE { .. }
            | Rule::ExistsI { .. }
            | Rule::RaaRule { .. } => 1,
            Rule::ImpliesE | Rule::AndI | Rule::ExistsE { .. } => 2,
            Rule::OrE { .. } => 3,
        }
    }

    /// The label this node declares, if it discharges hypotheses.
    pub fn declared_label(&self) -> Option<Label> {
        match self {
            Rule::ImpliesI { label, .. }
            | Rule::OrE { label }
            | Rule::ExistsE { label, .. }
            | Rule::RaaRule { label, .. } => Some(*label),
            _ => None,
        }
    }

    /// Whether the declared label scopes over premise `i`.
    pub fn binds_in(&self, i: usize) -> bool {
        match self {
            Rule::ImpliesI { .. } | Rule::RaaRule { .. } => i == 0,
            Rule::OrE { .. } => i == 1 || i == 2,
            Rule::ExistsE { .. } => i == 1,
            _ => false,
        }
    }

    pub fn classical(&self) -> Option<Classical> {
        match self {
            Rule::Tnd { .. } => Some(Classical::Tnd),
            Rule::Raa { .. } => Some(Classical::Raa),
            Rule::RaaRule { .. } => Some(Classical::RaaRule),
            Rule::Peirce { .. } => Some(Classical::Peirce),
            _ => None,
        }
    }

    /// Short name, as used in the proof file format.
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Hyp { .. } => "hyp",
            Rule::ImpliesI { .. } => "impl_i",
            Rule::ImpliesE => "impl_e",
            Rule::AndI => "and_i",
            Rule::AndEL => "and_e_l",
            Rule::AndER => "and_e_r",
            Rule::OrIL { .. } => "or_i_l",
            Rule::OrIR { .. } => "or_i_r",
            Rule::OrE { .. } => "or_e",
            Rule::BotE { .. } => "bot_e",
            Rule::ForallI { .. } => "forall_i",
            Rule::ForallE { .. } => "forall_e",
            Rule::ExistsI { .. } => "exists_i",
            Rule::ExistsE { .. } => "exists_e",
            Rule::Tnd { .. } => "tnd",
            Rule::Raa { .. } => "raa",
            Rule::RaaRule { .. } => "raa_rule",
            Rule::Peirce { .. } => "peirce",
        }
    }

    fn with_label(&self, new: Label) -> Rule {
        let mut r = self.clone();
        match &mut r {
            Rule::ImpliesI { label, .. }
            | Rule::OrE { label }
            | Rule::ExistsE { label, .. }
            | Rule::RaaRule { label, .. } => *label = new,
            Rule::Hyp { label, .. } => *label = Some(new),
            _ => {}
        }
        r
    }
}

/// A natural deduction proof tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub rule: Rule,
    pub premises: Vec<Proof>,
}

impl Proof {
    pub fn new(rule: Rule, premises: Vec<Proof>) -> Self {
        Proof { rule, premises }
    }

    fn leaf(rule: Rule) -> Self {
        Proof { rule, premises: Vec::new() }
    }

    pub fn hyp(formula: Formula) -> Self {
        Self::leaf(Rule::Hyp { formula, label: None })
    }

    pub fn assumption(formula: Formula, label: Label) -> Self {
        Self::leaf(Rule::Hyp { formula, label: Some(label) })
    }

    pub fn implies_i(assume: Formula, label: Label, body: Proof) -> Self {
        Proof::new(Rule::ImpliesI { assume, label }, vec![body])
    }

    /// `minor` proves `A`, `major` proves `A -> B`.
    pub fn implies_e(minor: Proof, major: Proof) -> Self {
        Proof::new(Rule::ImpliesE, vec![minor, major])
    }

    pub fn and_i(l: Proof, r: Proof) -> Self {
        Proof::new(Rule::AndI, vec![l, r])
    }

    pub fn and_e_l(p: Proof) -> Self {
        Proof::new(Rule::AndEL, vec![p])
    }

    pub fn and_e_r(p: Proof) -> Self {
        Proof::new(Rule::AndER, vec![p])
    }

    pub fn or_i_l(other: Formula, p: Proof) -> Self {
        Proof::new(Rule::OrIL { other }, vec![p])
    }

    pub fn or_i_r(other: Formula, p: Proof) -> Self {
        Proof::new(Rule::OrIR { other }, vec![p])
    }

    pub fn or_e(label: Label, disj: Proof, left: Proof, right: Proof) -> Self {
        Proof::new(Rule::OrE { label }, vec![disj, left, right])
    }

    pub fn bot_e(target: Formula, p: Proof) -> Self {
        Proof::new(Rule::BotE { target }, vec![p])
    }

    pub fn forall_i(eigen: impl Into<String>, p: Proof) -> Self {
        Proof::new(Rule::ForallI { eigen: eigen.into() }, vec![p])
    }

    pub fn forall_e(term: Term, p: Proof) -> Self {
        Proof::new(Rule::ForallE { term }, vec![p])
    }

    pub fn exists_i(witness: Term, target: Formula, p: Proof) -> Self {
        Proof::new(Rule::ExistsI { witness, target }, vec![p])
    }

    pub fn exists_e(label: Label, eigen: impl Into<String>, major: Proof, minor: Proof) -> Self {
        Proof::new(Rule::ExistsE { label, eigen: eigen.into() }, vec![major, minor])
    }

    pub fn tnd(a: Formula) -> Self {
        Self::leaf(Rule::Tnd { a })
    }

    pub fn raa(a: Formula) -> Self {
        Self::leaf(Rule::Raa { a })
    }

    pub fn raa_rule(a: Formula, label: Label, body: Proof) -> Self {
        Proof::new(Rule::RaaRule { a, label }, vec![body])
    }

    pub fn peirce(p: Formula, q: Formula) -> Self {
        Self::leaf(Rule::Peirce { p, q })
    }

    /// Node count.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Proof::size).sum::<usize>()
    }

    /// Longest root-to-leaf path, counted in edges.
    pub fn height(&self) -> usize {
        self.premises.iter().map(|p| p.height() + 1).max().unwrap_or(0)
    }

    pub fn classical_axioms_used(&self) -> BTreeSet<Classical> {
        let mut out = BTreeSet::new();
        self.visit(&mut |p| {
            if let Some(c) = p.rule.classical() {
                out.insert(c);
            }
        });
        out
    }

    /// Preorder traversal.
    pub fn visit<'a>(&'a self, f: &mut impl FnMut(&'a Proof)) {
        f(self);
        for p in &self.premises {
            p.visit(f);
        }
    }

    pub fn max_label(&self) -> u32 {
        let mut m = 0;
        self.visit(&mut |p| {
            let l = match &p.rule {
                Rule::Hyp { label, .. } => *label,
                r => r.declared_label(),
            };
            if let Some(l) = l {
                m = m.max(l.0);
            }
        });
        m
    }

    /// Free variables of every hypothesis leaf, discharged or not.
    pub fn hypothesis_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.visit(&mut |p| {
            if let Rule::Hyp { formula, .. } = &p.rule {
                out.extend(formula.free_vars());
            }
        });
        out
    }

    /// Verifies label discipline: no label declared twice, and every labelled
    /// hypothesis sits inside the scope of a node declaring that label.
    /// With `allow_pending`, labels with no binder in this tree are tolerated
    /// (the tree is a fragment to be grafted under its binder).
    pub fn check_labels(&self, allow_pending: bool) -> Result<(), CheckError> {
        let mut declared = HashSet::new();
        let mut scope = Vec::new();
        let mut path = Vec::new();
        self.scan_labels(&mut declared, &mut scope, &mut path, allow_pending)
    }

    fn scan_labels(
        &self,
        declared: &mut HashSet<Label>,
        scope: &mut Vec<Label>,
        path: &mut Vec<usize>,
        allow_pending: bool,
    ) -> Result<(), CheckError> {
        if let Rule::Hyp { label: Some(l), .. } = &self.rule {
            if !allow_pending && !scope.contains(l) {
                return Err(CheckError::new(
                    ErrorKind::DanglingLabel,
                    Path(path.clone()),
                    format!("hypothesis label {} is not discharged by any ancestor", l),
                ));
            }
            if allow_pending && !scope.contains(l) && declared.contains(l) {
                return Err(CheckError::new(
                    ErrorKind::DanglingLabel,
                    Path(path.clone()),
                    format!("hypothesis label {} is used outside the scope that declares it", l),
                ));
            }
        }
        let own = self.rule.declared_label();
        if let Some(l) = own {
            if !declared.insert(l) {
                return Err(CheckError::new(
                    ErrorKind::DuplicateLabel,
                    Path(path.clone()),
                    format!("label {} is declared more than once", l),
                ));
            }
        }
        for (i, p) in self.premises.iter().enumerate() {
            let binds = own.is_some() && self.rule.binds_in(i);
            if binds {
                scope.push(own.unwrap());
            }
            path.push(i);
            let r = p.scan_labels(declared, scope, path, allow_pending);
            path.pop();
            if binds {
                scope.pop();
            }
            r?;
        }
        Ok(())
    }

    /// The multiset of undischarged hypotheses, leaves in left-to-right order.
    pub fn open_hypotheses(&self) -> Result<Vec<Formula>, CheckError> {
        self.check_labels(false)?;
        let mut out = Vec::new();
        self.visit(&mut |p| {
            if let Rule::Hyp { formula, label: None } = &p.rule {
                out.push(formula.clone());
            }
        });
        Ok(out)
    }

    /// Hypotheses not discharged inside this tree, with their labels.
    /// Unlike [`Proof::open_hypotheses`] this accepts fragments whose
    /// labelled leaves are bound further up.
    pub fn pending_hypotheses(&self) -> Vec<(Formula, Option<Label>)> {
        let mut out = Vec::new();
        let mut scope = Vec::new();
        self.collect_pending(&mut scope, &mut out);
        out
    }

    fn collect_pending(&self, scope: &mut Vec<Label>, out: &mut Vec<(Formula, Option<Label>)>) {
        if let Rule::Hyp { formula, label } = &self.rule {
            if label.is_none_or(|l| !scope.contains(&l)) {
                out.push((formula.clone(), *label));
            }
            return;
        }
        let own = self.rule.declared_label();
        for (i, p) in self.premises.iter().enumerate() {
            let binds = own.is_some() && self.rule.binds_in(i);
            if binds {
                scope.push(own.unwrap());
            }
            p.collect_pending(scope, out);
            if binds {
                scope.pop();
            }
        }
    }

    /// Labels declared by nodes of this tree.
    pub fn declared_labels(&self) -> HashSet<Label> {
        let mut out = HashSet::new();
        self.visit(&mut |p| {
            if let Some(l) = p.rule.declared_label() {
                out.insert(l);
            }
        });
        out
    }

    /// Copy with every label declared inside the tree replaced by a fresh
    /// one; labels bound outside the tree are kept.
    pub fn relabeled(&self, supply: &mut LabelSupply) -> Proof {
        let mut map = HashMap::new();
        self.visit(&mut |p| {
            if let Some(l) = p.rule.declared_label() {
                map.entry(l).or_insert_with(|| supply.fresh());
            }
        });
        self.rename_labels(&map)
    }

    fn rename_labels(&self, map: &HashMap<Label, Label>) -> Proof {
        let label = match &self.rule {
            Rule::Hyp { label, .. } => *label,
            r => r.declared_label(),
        };
        let rule = match label.and_then(|l| map.get(&l)) {
            Some(&new) => self.rule.with_label(new),
            None => self.rule.clone(),
        };
        Proof {
            rule,
            premises: self.premises.iter().map(|p| p.rename_labels(map)).collect(),
        }
    }

    /// Replaces unlabelled hypothesis leaves for which `f` returns a proof.
    pub fn replace_open_hypotheses(&self, f: &mut impl FnMut(&Formula) -> Option<Proof>) -> Proof {
        if let Rule::Hyp { formula, label: None } = &self.rule {
            return f(formula).unwrap_or_else(|| self.clone());
        }
        Proof {
            rule: self.rule.clone(),
            premises: self.premises.iter().map(|p| p.replace_open_hypotheses(f)).collect(),
        }
    }
}

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::write_proof(self))
    }
}
