//! Deterministic text cleaning, tokenization, n-gram machinery, keyword
//! extraction, and length statistics shared by the rest of the crate.
//!
//! Every operation here is a pure function; none of them touch global
//! state beyond lazily parsed word lists shipped as data files.

pub mod stem;

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// English stopwords, one token per line.
pub const STOPWORDS: &str = include_str!("../../data/stopwords.txt");
/// Verb-ish tokens used by the keyword extraction heuristic, one per line.
pub const VERBS: &str = include_str!("../../data/verbs.txt");

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TextError {
    #[error("n-gram order must be at least 1")]
    ZeroNgramOrder,
    #[error("cannot compute statistics over an empty list")]
    EmptyInput,
}

fn word_set(data: &'static str) -> HashSet<&'static str> {
    data.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect()
}

pub fn stopwords() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| word_set(STOPWORDS))
}

pub fn verbs() -> &'static HashSet<&'static str> {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| word_set(VERBS))
}

fn url_regex() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"(?i)\b(?:https?://|www\.)\S+").expect("valid url regex"))
}

/// An ordered sequence of lowercase tokens. Empty tokens never occur.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TokenSeq {
    tokens: Vec<String>,
}

impl TokenSeq {
    /// Builds a sequence from pre-split tokens, lowercasing and dropping empties.
    pub fn from_tokens<I, S>(tokens: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        TokenSeq {
            tokens: tokens
                .into_iter()
                .map(|t| t.as_ref().to_lowercase())
                .filter(|t| !t.is_empty())
                .collect(),
        }
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, String> {
        self.tokens.iter()
    }
}

/// An ordered, deduplicated keyword list (subjects and objects).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct KeywordSet {
    keywords: Vec<String>,
}

impl KeywordSet {
    pub fn keywords(&self) -> &[String] {
        &self.keywords
    }

    pub fn len(&self) -> usize {
        self.keywords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keywords.is_empty()
    }

    fn insert(&mut self, word: &str) {
        if !self.keywords.iter().any(|k| k == word) {
            self.keywords.push(word.to_string());
        }
    }
}

/// Five-number summary of token counts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoxStats {
    pub min: f64,
    pub q1: f64,
    pub median: f64,
    pub q3: f64,
    pub max: f64,
}

/// Removes URLs, strips `#`/`@` sigils while keeping their tokens, drops
/// non-alphanumeric characters other than whitespace, periods, commas,
/// apostrophes, and hyphens, and collapses whitespace.
///
/// The pass repeats until a fixpoint so the operation is idempotent even
/// when sigil removal uncovers a new URL-shaped substring.
pub fn clean_text(raw: &str) -> String {
    let mut current = raw.to_string();
    loop {
        let next = clean_pass(&current);
        if next == current {
            return next;
        }
        current = next;
    }
}

fn clean_pass(text: &str) -> String {
    let without_urls = url_regex().replace_all(text, " ");
    let mut out = String::with_capacity(without_urls.len());
    for ch in without_urls.chars() {
        match ch {
            '#' | '@' => {}
            '.' | ',' | '\'' | '-' => out.push(ch),
            c if c.is_alphanumeric() => out.push(c),
            _ => out.push(' '),
        }
    }
    out.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Lowercases, splits on whitespace, and strips non-alphanumeric characters
/// from token edges. Interior punctuation (as in "isn't" or "b-12") survives.
pub fn tokenize(text: &str) -> TokenSeq {
    let tokens = text
        .to_lowercase()
        .split_whitespace()
        .map(|w| w.trim_matches(|c: char| !c.is_alphanumeric()).to_string())
        .filter(|w| !w.is_empty())
        .collect();
    TokenSeq { tokens }
}

/// N-gram multiset represented as counts per n-gram.
pub type NgramCounts = HashMap<Vec<String>, usize>;

/// Counts n-grams without the order-zero guard; `n` must be >= 1.
pub fn ngram_counts(tokens: &[String], n: usize) -> NgramCounts {
    debug_assert!(n >= 1);
    let mut counts = NgramCounts::new();
    if tokens.len() >= n {
        for window in tokens.windows(n) {
            *counts.entry(window.to_vec()).or_insert(0) += 1;
        }
    }
    counts
}

/// The n-gram multiset of a token sequence; `|ngrams| = max(0, len - n + 1)`.
pub fn ngrams(seq: &TokenSeq, n: usize) -> Result<NgramCounts, TextError> {
    if n < 1 {
        return Err(TextError::ZeroNgramOrder);
    }
    Ok(ngram_counts(seq.tokens(), n))
}

/// Heuristic subject/object keyword extraction.
///
/// Per cleaned sentence, the first token found in the shipped verb list
/// splits the sentence; non-stopword, non-verb tokens before it become
/// subjects and those after it become objects. Keywords are collected in
/// order of first appearance, subjects before objects within a sentence.
pub fn extract_svo_keywords(text: &str) -> KeywordSet {
    let cleaned = clean_text(text);
    let mut set = KeywordSet::default();
    for sentence in cleaned.split(['.', '!', '?']) {
        let seq = tokenize(sentence);
        let toks = seq.tokens();
        let Some(verb_pos) = toks.iter().position(|t| verbs().contains(t.as_str())) else {
            continue;
        };
        for word in &toks[..verb_pos] {
            if is_nounish(word) {
                set.insert(word);
            }
        }
        for word in &toks[verb_pos + 1..] {
            if is_nounish(word) {
                set.insert(word);
            }
        }
    }
    set
}

fn is_nounish(word: &str) -> bool {
    !stopwords().contains(word) && !verbs().contains(word)
}

/// Box-plot statistics over the token counts of `claims`.
///
/// Quartiles use linear interpolation between closest ranks: the p-quantile
/// of n sorted values sits at position `(n - 1) * p`.
pub fn token_length_stats<S: AsRef<str>>(claims: &[S]) -> Result<BoxStats, TextError> {
    if claims.is_empty() {
        return Err(TextError::EmptyInput);
    }
    let mut lengths: Vec<f64> = claims
        .iter()
        .map(|c| tokenize(c.as_ref()).len() as f64)
        .collect();
    lengths.sort_by(|a, b| a.partial_cmp(b).expect("token counts are finite"));
    Ok(BoxStats {
        min: lengths[0],
        q1: quantile(&lengths, 0.25),
        median: quantile(&lengths, 0.5),
        q3: quantile(&lengths, 0.75),
        max: lengths[lengths.len() - 1],
    })
}

fn quantile(sorted: &[f64], p: f64) -> f64 {
    let pos = (sorted.len() - 1) as f64 * p;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    if lo == hi {
        sorted[lo]
    } else {
        sorted[lo] + (pos - lo as f64) * (sorted[hi] - sorted[lo])
    }
}
