//! Parser for the grammar text format.
//!
//! ```text
//! # comment
//! task question
//! start S
//! max_depth 12
//!
//! S -> NP_S VP "." @1
//! NP_S -> det noun @3
//! NP_S -> det noun RC @1
//!
//! lexicon det: the some my
//! lexicon noun: president/sg boy/sg/m
//! lexicon verb_intrans: ran>runs>run sees=see smile
//! ```
//!
//! Rhs items: uppercase-initial identifiers are nonterminals, lowercase
//! identifiers are lexical categories (optionally filtered, `noun[m]`),
//! quoted strings are literal tokens. Lexicon entries carry slash-separated
//! features (`sg`/`pl`, `m`/`f`); `past>pres_sg>pres_pl` spells a verb
//! paradigm (surface = past) and `surface=stem` attaches a predicate stem.

use super::lexicon::{Gender, LexEntry, Lexicon, Number, Token, VerbForms};
use super::{Grammar, GrammarError, Production, RhsItem, DEFAULT_MAX_DEPTH, DEFAULT_RESAMPLE_LIMIT};

pub fn parse_grammar(src: &str) -> Result<Grammar, GrammarError> {
    let mut task: Option<String> = None;
    let mut start: Option<String> = None;
    let mut max_depth = DEFAULT_MAX_DEPTH;
    let mut resample_limit = DEFAULT_RESAMPLE_LIMIT;
    let mut productions = Vec::new();
    let mut lexicon = Lexicon::default();

    for (i, raw) in src.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| GrammarError::Parse { line: lineno, msg };

        if let Some(rest) = line.strip_prefix("task ") {
            task = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("start ") {
            start = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("max_depth ") {
            max_depth = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad max_depth: {rest}")))?;
        } else if let Some(rest) = line.strip_prefix("resample_limit ") {
            resample_limit = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad resample_limit: {rest}")))?;
        } else if let Some(rest) = line.strip_prefix("lexicon ") {
            let (category, entries) = rest
                .split_once(':')
                .ok_or_else(|| err("lexicon line missing ':'".to_string()))?;
            let category = category.trim();
            for word in entries.split_whitespace() {
                lexicon.insert(category, parse_entry(word).map_err(&err)?);
            }
        } else if line.contains("->") {
            productions.push(parse_production(line).map_err(&err)?);
        } else {
            return Err(err(format!("unrecognized line: {line}")));
        }
    }

    let task = task.ok_or(GrammarError::Parse {
        line: 0,
        msg: "missing 'task' directive".to_string(),
    })?;
    let start = start.ok_or(GrammarError::Parse {
        line: 0,
        msg: "missing 'start' directive".to_string(),
    })?;

    Ok(Grammar {
        task,
        start,
        max_depth,
        resample_limit,
        productions,
        lexicon,
        source: src.to_string(),
    })
}

fn parse_production(line: &str) -> Result<Production, String> {
    let (lhs, rest) = line
        .split_once("->")
        .ok_or_else(|| "production missing '->'".to_string())?;
    let lhs = lhs.trim().to_string();
    if lhs.is_empty() {
        return Err("empty lhs".to_string());
    }

    let (rhs_text, weight) = match rest.rsplit_once('@') {
        Some((r, w)) => {
            let weight: f64 = w
                .trim()
                .parse()
                .map_err(|_| format!("bad weight: {}", w.trim()))?;
            (r, weight)
        }
        None => (rest, 1.0),
    };

    let mut rhs = Vec::new();
    for item in rhs_text.split_whitespace() {
        if let Some(text) = item.strip_prefix('"').and_then(|s| s.strip_suffix('"')) {
            rhs.push(RhsItem::Literal(Token::literal(text)));
        } else if item.starts_with(|c: char| c.is_ascii_uppercase()) {
            rhs.push(RhsItem::Nonterminal(item.to_string()));
        } else if let Some((name, filt)) = item.split_once('[') {
            let filter = filt
                .strip_suffix(']')
                .ok_or_else(|| format!("unterminated filter in {item}"))?;
            rhs.push(RhsItem::Category {
                name: name.to_string(),
                filter: Some(filter.to_string()),
            });
        } else {
            rhs.push(RhsItem::Category {
                name: item.to_string(),
                filter: None,
            });
        }
    }
    if rhs.is_empty() {
        return Err(format!("empty rhs for {lhs}"));
    }
    Ok(Production { lhs, rhs, weight })
}

fn parse_entry(word: &str) -> Result<LexEntry, String> {
    let mut parts = word.split('/');
    let head = parts.next().unwrap();

    let mut entry = if head.contains('>') {
        let forms: Vec<&str> = head.split('>').collect();
        if forms.len() != 3 {
            return Err(format!("verb paradigm needs past>pres_sg>pres_pl: {head}"));
        }
        LexEntry {
            surface: forms[0].to_string(),
            number: None,
            gender: None,
            stem: None,
            forms: Some(VerbForms {
                past: forms[0].to_string(),
                pres_sg: forms[1].to_string(),
                pres_pl: forms[2].to_string(),
            }),
        }
    } else if let Some((surface, stem)) = head.split_once('=') {
        LexEntry {
            surface: surface.to_string(),
            number: None,
            gender: None,
            stem: Some(stem.to_string()),
            forms: None,
        }
    } else {
        LexEntry::bare(head)
    };

    for feat in parts {
        match feat {
            "sg" => entry.number = Some(Number::Sg),
            "pl" => entry.number = Some(Number::Pl),
            "m" => entry.gender = Some(Gender::M),
            "f" => entry.gender = Some(Gender::F),
            other => return Err(format!("unknown feature '{other}' in {word}")),
        }
    }
    if entry.surface.is_empty() {
        return Err(format!("empty surface form in {word}"));
    }
    Ok(entry)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_directives_productions_and_lexicon() {
        let g = parse_grammar(
            "task question\nstart S\nmax_depth 9\n\n# a comment\nS -> NP_S \"(\" noun[m] @2.5\nlexicon noun: boy/sg/m girls/pl/f\nlexicon verb_trans: sees=see loved>loves>love\nNP_S -> det noun\nlexicon det: the\n",
        )
        .unwrap();
        assert_eq!(g.task, "question");
        assert_eq!(g.start, "S");
        assert_eq!(g.max_depth, 9);
        assert_eq!(g.productions.len(), 2);
        let p = &g.productions[0];
        assert_eq!(p.weight, 2.5);
        assert_eq!(p.rhs.len(), 3);
        assert!(matches!(&p.rhs[0], RhsItem::Nonterminal(nt) if nt == "NP_S"));
        assert!(matches!(&p.rhs[1], RhsItem::Literal(t) if t.text == "("));
        assert!(
            matches!(&p.rhs[2], RhsItem::Category { name, filter } if name == "noun" && filter.as_deref() == Some("m"))
        );
        // implicit weight
        assert_eq!(g.productions[1].weight, 1.0);

        let boy = g.lexicon.find("noun", "boy").unwrap();
        assert_eq!(boy.number, Some(Number::Sg));
        assert_eq!(boy.gender, Some(Gender::M));
        let sees = g.lexicon.find("verb_trans", "sees").unwrap();
        assert_eq!(sees.stem.as_deref(), Some("see"));
        let loved = g.lexicon.find("verb_trans", "loved").unwrap();
        let forms = loved.forms.as_ref().unwrap();
        assert_eq!(forms.pres_sg, "loves");
        assert_eq!(forms.pres_pl, "love");
    }

    #[test]
    fn error_carries_line_number() {
        let e = parse_grammar("task q\nstart S\nS -> @oops\n").unwrap_err();
        match e {
            GrammarError::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
