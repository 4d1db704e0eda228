//! Tokens and the lexicon: surface forms plus the features (number, gender,
//! verb forms, stems) the transformation oracles need.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Punct,
    Transform,
    Special,
}

/// A surface token. Text is always lowercase; "." and "?" are the only
/// punctuation tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Token {
    pub text: String,
    pub kind: TokenKind,
}

impl Token {
    pub fn word(text: &str) -> Token {
        Token {
            text: text.to_string(),
            kind: TokenKind::Word,
        }
    }

    pub fn punct(text: &str) -> Token {
        debug_assert!(text == "." || text == "?");
        Token {
            text: text.to_string(),
            kind: TokenKind::Punct,
        }
    }

    pub fn transform(text: &str) -> Token {
        Token {
            text: text.to_string(),
            kind: TokenKind::Transform,
        }
    }

    /// Classify a literal spelled in a grammar file.
    pub fn literal(text: &str) -> Token {
        if text == "." || text == "?" {
            Token::punct(text)
        } else {
            Token::word(text)
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Number {
    Sg,
    Pl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gender {
    M,
    F,
}

/// Tense paradigm for verbs in the reinflection task.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbForms {
    pub past: String,
    pub pres_sg: String,
    pub pres_pl: String,
}

/// One lexicon entry: a surface form plus whatever features its category
/// carries. Only the features a task's oracles use are populated.
#[derive(Debug, Clone, PartialEq)]
pub struct LexEntry {
    pub surface: String,
    pub number: Option<Number>,
    pub gender: Option<Gender>,
    /// Predicate stem for the semantic-parsing task (e.g. "sees" -> "see").
    pub stem: Option<String>,
    /// Tense paradigm; surface form is the past tense when present.
    pub forms: Option<VerbForms>,
}

impl LexEntry {
    pub fn bare(surface: &str) -> LexEntry {
        LexEntry {
            surface: surface.to_string(),
            number: None,
            gender: None,
            stem: None,
            forms: None,
        }
    }

    pub fn matches_filter(&self, filter: &str) -> bool {
        match filter {
            "sg" => self.number == Some(Number::Sg),
            "pl" => self.number == Some(Number::Pl),
            "m" => self.gender == Some(Gender::M),
            "f" => self.gender == Some(Gender::F),
            _ => false,
        }
    }
}

/// Category label -> entries. Categories follow the conventional labels the
/// tree walkers expect: noun, propernoun, aux, verb_intrans, verb_trans,
/// prep, rel_pron, subordinator, det, reflexive.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    categories: BTreeMap<String, Vec<LexEntry>>,
}

impl Lexicon {
    pub fn insert(&mut self, category: &str, entry: LexEntry) {
        self.categories
            .entry(category.to_string())
            .or_default()
            .push(entry);
    }

    pub fn entries(&self, category: &str) -> &[LexEntry] {
        self.categories
            .get(category)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn categories(&self) -> impl Iterator<Item = (&str, &[LexEntry])> {
        self.categories
            .iter()
            .map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    /// Look up an entry by category and surface form. Used by tests to build
    /// derivation trees for specific sentences.
    pub fn find(&self, category: &str, surface: &str) -> Option<&LexEntry> {
        self.entries(category).iter().find(|e| e.surface == surface)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_matching() {
        let e = LexEntry {
            surface: "boy".into(),
            number: Some(Number::Sg),
            gender: Some(Gender::M),
            stem: None,
            forms: None,
        };
        assert!(e.matches_filter("sg"));
        assert!(e.matches_filter("m"));
        assert!(!e.matches_filter("f"));
        assert!(!e.matches_filter("pl"));
    }

    #[test]
    fn token_literal_classifies_punct() {
        assert_eq!(Token::literal(".").kind, TokenKind::Punct);
        assert_eq!(Token::literal("those").kind, TokenKind::Word);
    }
}
