//! The classification search: maximal-subgroup candidates, the inequality
//! filters, the Diophantine solvers and the end-to-end run that rebuilds the
//! list of absolutely irreducible representations with vanishing
//! homogeneity rank.

mod axioms;
mod diophantine;
mod dynkin;
mod filters;
mod run;

pub use axioms::{Axiom, RigidityMethod, RigidityRule, RuleBook, RULES_ENV};
pub use diophantine::{
    solve_eq10, solve_eq9, solve_even_with, solve_odd_with, Branch, DiophantineSolution, Equation,
};
pub use dynkin::{dynkin_candidates, dynkin_candidates_in, DynkinClass, IrrepEntry, IrrepIndex};
pub use filters::*;
pub use run::{
    rep_key, run_classification, run_classification_with, CaseCounts, ClassificationReport,
    ClassifyOptions, Filter, ReportExample, REPORT_SCHEMA, REPORT_VERSION,
};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homrank::HomrankError;
use crate::parse::ParseError;
use crate::repcalc::RepError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("max_dim must be at least 8, got {0}")]
    MaxDimTooSmall(u64),
    #[error("ambient degree {0} is too small")]
    DegreeTooSmall(u64),
    #[error("inconsistent verdict for {candidate}: {detail}")]
    Inconsistent { candidate: String, detail: String },
    #[error("rules: {0}")]
    Rules(String),
    #[error(transparent)]
    Homrank(#[from] HomrankError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AmbientKind {
    SO,
    SU,
    Sp,
}

/// The classical group whose subgroups are being searched, `SO(n)`, `SU(n)`
/// or `Sp(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ambient {
    pub kind: AmbientKind,
    pub degree: u64,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.kind, self.degree)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Example,
    Pruned,
    Deferred,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Example => "example",
            Verdict::Pruned => "pruned",
            Verdict::Deferred => "deferred",
        })
    }
}

/// How an example relates to symmetric spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExampleTag {
    /// orbit equivalent to the isotropy representation of a non-Hermitian
    /// symmetric space of inner type
    SymmetricOrbitEquivalent,
    /// one of the three families that are not
    Exceptional,
}

/// One step of a subgroup descent: a group and, when it is a concrete
/// representation, its text in the input grammar.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChainLink {
    pub group: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<String>,
}

impl ChainLink {
    pub fn new(group: impl Into<String>, rep: Option<String>) -> Self {
        ChainLink {
            group: group.into(),
            rep,
        }
    }
}

/// A node of the search with its verdict and the rule that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateCase {
    pub ambient: Ambient,
    /// from the ambient group down to this candidate
    pub chain: Vec<ChainLink>,
    /// position in the case tree
    pub step: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<DynkinClass>,
    pub abs_irreducible: bool,
    /// dimension of the representation space
    pub d: u64,
    pub verdict: Verdict,
    pub rule_fired: String,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub record: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homrank: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tag: Option<ExampleTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric_space: Option<String>,
    pub notes: String,
}

impl CandidateCase {
    pub(crate) fn new(ambient: Ambient, chain: Vec<ChainLink>, step: &str, d: u64) -> Self {
        CandidateCase {
            ambient,
            chain,
            step: step.into(),
            class: None,
            abs_irreducible: true,
            d,
            verdict: Verdict::Deferred,
            rule_fired: String::new(),
            citation: String::new(),
            record: None,
            homrank: None,
            tag: None,
            symmetric_space: None,
            notes: String::new(),
        }
    }

    pub(crate) fn prune(mut self, rule: &str, citation: impl Into<String>) -> Self {
        self.verdict = Verdict::Pruned;
        self.rule_fired = rule.into();
        self.citation = citation.into();
        self
    }

    pub(crate) fn noted(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }

    /// The candidate itself, the last link of the chain.
    pub fn group(&self) -> &str {
        self.chain.last().map(|c| c.group.as_str()).unwrap_or("")
    }

    pub fn rep(&self) -> Option<&str> {
        self.chain.last().and_then(|c| c.rep.as_deref())
    }

    /// Canonical sort key: ambient degree, then the chain.
    pub fn sort_key(&self) -> (u64, AmbientKind, &[ChainLink], &str) {
        (
            self.ambient.degree,
            self.ambient.kind,
            &self.chain,
            &self.step,
        )
    }
}
