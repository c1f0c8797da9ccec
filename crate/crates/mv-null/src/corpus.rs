//! The fixed corpus of one-variable term functions used by the
//! Nullstellensatz and Galois checks on `[0, 1]`. It covers the zero-set
//! shapes that matter: no zeros, boundary zeros, isolated interior zeros
//! (dyadic and not), single intervals touching either endpoint, and a
//! point-plus-interval union; it also contains distinct terms realising
//! the same function, which exercise term-function equality.

use mv_terms::{parse_term, to_pl1, Pl1, Term};

use crate::error::NullError;

/// Contents of the shipped fixture, one term per line.
pub const DEFAULT_CORPUS_TEXT: &str = include_str!("../fixtures/f1_corpus.txt");

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub source: String,
    pub term: Term,
    pub pl: Pl1,
}

/// Parses a corpus file: one term per line, blank lines ignored.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, NullError> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let term = parse_term(line)?;
        let pl = to_pl1(&term)?;
        out.push(CorpusEntry { source: line.to_string(), term, pl });
    }
    Ok(out)
}

pub fn default_corpus() -> Vec<CorpusEntry> {
    parse_corpus(DEFAULT_CORPUS_TEXT).expect("the shipped corpus parses")
}
