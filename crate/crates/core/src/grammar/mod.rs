//! Weighted context-free grammars for the four transduction tasks.
//!
//! Grammars are loaded from a small text format (see [`Grammar::parse`]),
//! validated, and sampled top-down into [`DerivationTree`]s that keep the
//! constituency structure. [`query_structure`] extracts the hierarchical
//! facts (main auxiliary, subject head, clause order, ...) that the task
//! oracles and the withheld-case predicates are defined over.

mod lexicon;
mod parse;
mod sample;
mod structure;
mod tree;

pub use lexicon::{Gender, LexEntry, Lexicon, Number, Token, TokenKind, VerbForms};
pub use sample::{sample_tree, SampleError};
pub use structure::{query_structure, ObjectKind, PpFact, StructFacts, StructureError};
pub use tree::{DerivationTree, TreeNode};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// One item on the right-hand side of a production.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RhsItem {
    /// Reference to another nonterminal.
    Nonterminal(String),
    /// Reference to a lexical category, with an optional feature filter
    /// (e.g. `noun[m]` restricts the choice to masculine entries).
    Category { name: String, filter: Option<String> },
    /// A literal token spelled out in the production.
    Literal(Token),
}

/// A weighted production `lhs -> rhs @weight`.
#[derive(Debug, Clone, PartialEq)]
pub struct Production {
    pub lhs: String,
    pub rhs: Vec<RhsItem>,
    pub weight: f64,
}

/// A task grammar: productions plus the lexicon they draw terminals from.
#[derive(Debug, Clone)]
pub struct Grammar {
    /// Task name this grammar belongs to (`question`, `tense`, ...).
    pub task: String,
    pub start: String,
    pub max_depth: usize,
    pub resample_limit: usize,
    pub productions: Vec<Production>,
    pub lexicon: Lexicon,
    /// Source text the grammar was parsed from; hashed into dataset manifests.
    source: String,
}

pub const DEFAULT_MAX_DEPTH: usize = 12;
pub const DEFAULT_RESAMPLE_LIMIT: usize = 100;

/// Shipped grammar for a task, embedded in the binary.
pub fn builtin(task: &str) -> Option<Grammar> {
    let src = match task {
        "question" => include_str!("../../assets/question.gr"),
        "tense" => include_str!("../../assets/tense.gr"),
        "negation" => include_str!("../../assets/negation.gr"),
        "anaphora" => include_str!("../../assets/anaphora.gr"),
        _ => return None,
    };
    Some(Grammar::parse(src).expect("shipped grammar must parse"))
}

impl Grammar {
    /// Parse a grammar from the text format. See `assets/*.gr` for examples:
    /// one production per line `LHS -> item item ... @weight`, lexicon lines
    /// `lexicon category: entry entry ...`, plus `task`, `start` and
    /// `max_depth` directives.
    pub fn parse(src: &str) -> Result<Grammar, GrammarError> {
        parse::parse_grammar(src)
    }

    /// Raw source text, exactly as parsed.
    pub fn source(&self) -> &str {
        &self.source
    }

    /// SHA-256 of the grammar source, hex-encoded. Recorded in dataset
    /// manifests so datasets can be tied to the grammar that produced them.
    pub fn hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let digest = Sha256::digest(self.source.as_bytes());
        let mut out = String::with_capacity(64);
        for b in digest {
            out.push_str(&format!("{b:02x}"));
        }
        out
    }

    pub fn productions_for(&self, lhs: &str) -> Vec<&Production> {
        self.productions.iter().filter(|p| p.lhs == lhs).collect()
    }

    /// Static validation: report issues that would make sampling unsafe.
    /// An empty report means the grammar is sampleable.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let lhs_set: BTreeSet<&str> = self.productions.iter().map(|p| p.lhs.as_str()).collect();

        if !lhs_set.contains(self.start.as_str()) {
            report
                .issues
                .push(format!("start symbol has no productions: {}", self.start));
        }

        for p in &self.productions {
            if !(p.weight > 0.0) {
                report
                    .issues
                    .push(format!("zero-weight rule: {} -> ...", p.lhs));
            }
            if p.rhs.is_empty() {
                report.issues.push(format!("empty rhs: {}", p.lhs));
            }
            for item in &p.rhs {
                match item {
                    RhsItem::Nonterminal(nt) => {
                        if !lhs_set.contains(nt.as_str()) {
                            report
                                .issues
                                .push(format!("undefined nonterminal: {nt} (used by {})", p.lhs));
                        }
                    }
                    RhsItem::Category { name, filter } => {
                        let entries = self.lexicon.entries(name);
                        if entries.is_empty() {
                            report.issues.push(format!("missing category: {name}"));
                        } else if let Some(f) = filter {
                            if !entries.iter().any(|e| e.matches_filter(f)) {
                                report
                                    .issues
                                    .push(format!("no {name} entry matches filter [{f}]"));
                            }
                        }
                    }
                    RhsItem::Literal(_) => {}
                }
            }
        }

        // Reachability from the start symbol.
        let mut reachable: BTreeSet<String> = BTreeSet::new();
        let mut stack = vec![self.start.clone()];
        while let Some(nt) = stack.pop() {
            if !reachable.insert(nt.clone()) {
                continue;
            }
            for p in self.productions.iter().filter(|p| p.lhs == nt) {
                for item in &p.rhs {
                    if let RhsItem::Nonterminal(child) = item {
                        if !reachable.contains(child) {
                            stack.push(child.clone());
                        }
                    }
                }
            }
        }
        for nt in &lhs_set {
            if !reachable.contains(*nt) {
                report.issues.push(format!("unreachable: {nt}"));
            }
        }

        // Productivity: a nonterminal is productive if some production's rhs
        // consists only of terminals and productive nonterminals.
        let mut productive: BTreeSet<String> = BTreeSet::new();
        loop {
            let mut changed = false;
            for p in &self.productions {
                if productive.contains(&p.lhs) {
                    continue;
                }
                let ok = p.rhs.iter().all(|item| match item {
                    RhsItem::Nonterminal(nt) => productive.contains(nt),
                    _ => true,
                });
                if ok {
                    productive.insert(p.lhs.clone());
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for nt in &lhs_set {
            if !productive.contains(*nt) {
                report.issues.push(format!("unproductive: {nt}"));
            }
        }

        report.issues.sort();
        report
    }
}

/// Outcome of [`Grammar::validate`].
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub issues: Vec<String>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            write!(f, "ok")
        } else {
            write!(f, "{}", self.issues.join("; "))
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum GrammarError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("grammar failed validation: {0}")]
    Invalid(String),
}

/// Frequency of each optional construction over a sample batch; used by the
/// coverage tests and the `verify` subcommand.
pub fn construction_counts(trees: &[DerivationTree]) -> BTreeMap<&'static str, usize> {
    let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    for key in [
        "subject_rc",
        "object_rc",
        "subject_pp",
        "object_pp",
        "adverbial_initial",
        "reflexive_object",
    ] {
        counts.insert(key, 0);
    }
    for t in trees {
        if let Ok(facts) = query_structure(t) {
            let mut bump = |key: &'static str, on: bool| {
                if on {
                    *counts.get_mut(key).unwrap() += 1;
                }
            };
            bump("subject_rc", facts.has_subject_rc);
            bump("object_rc", facts.has_object_rc);
            bump("subject_pp", facts.has_subject_pp);
            bump("object_pp", facts.has_object_pp);
            bump("adverbial_initial", facts.adverbial_initial);
            bump("reflexive_object", facts.reflexive.is_some());
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_grammars_validate() {
        for task in ["question", "tense", "negation", "anaphora"] {
            let g = builtin(task).unwrap();
            let report = g.validate();
            assert!(report.is_empty(), "{task}: {report}");
        }
    }

    #[test]
    fn unproductive_nonterminal_is_reported() {
        let g = Grammar::parse(
            "task question\nstart S\nS -> S @1\nlexicon noun: boy/sg\n",
        )
        .unwrap();
        let report = g.validate();
        assert!(
            report.issues.iter().any(|i| i == "unproductive: S"),
            "{report}"
        );
    }

    #[test]
    fn missing_category_is_reported() {
        let g = Grammar::parse(
            "task question\nstart S\nS -> adj @1\nlexicon noun: boy/sg\n",
        )
        .unwrap();
        let report = g.validate();
        assert!(
            report.issues.iter().any(|i| i == "missing category: adj"),
            "{report}"
        );
    }

    #[test]
    fn question_lexicon_has_three_auxiliaries() {
        // The GEN split needs distinct auxiliaries in main and relative
        // clauses, which requires at least three to keep variety.
        let g = builtin("question").unwrap();
        assert!(g.lexicon.entries("aux").len() >= 3);
    }

    #[test]
    fn grammar_hash_is_stable() {
        let a = builtin("question").unwrap();
        let b = builtin("question").unwrap();
        assert_eq!(a.hash(), b.hash());
        assert_eq!(a.hash().len(), 64);
    }
}
