//! Feed parsing and the filter/merge stage that turns raw entries into
//! claim records.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::textproc::{clean_text, stopwords, tokenize};

use super::{ClaimRecord, CorpusError, IngestReport, Modality, RawEntry, Source, Split};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RejectReason {
    MissingReviewedItems,
    NonTextModality,
    NonEnglish,
    PostUnavailable,
    DuplicateTitleReview,
}

/// One rejected input with its position in the feed and the reason.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub index: usize,
    pub reason: RejectReason,
    pub detail: String,
}

/// Outcome of parsing a ClaimReview feed: accepted entries plus the
/// rejected list (objects without a reviewed-items field or without the
/// required schema keys).
#[derive(Debug, Clone, Default)]
pub struct ClaimReviewParse {
    pub entries: Vec<RawEntry>,
    pub rejected: Vec<Rejection>,
}

/// Outcome of parsing a batch of fact-check API export records.
#[derive(Debug, Clone, Default)]
pub struct GfcParse {
    pub entries: Vec<RawEntry>,
    pub rejected: Vec<Rejection>,
}

/// Parses a ClaimReview JSON-LD document (a single object, an array, or a
/// feed carrying `@graph` / `dataFeedElement`).
///
/// Objects lacking the reviewed-items field (`itemReviewed`) or the other
/// required schema keys are returned in the rejected list; malformed JSON
/// is the only global failure.
pub fn parse_claimreview(document: &[u8]) -> Result<ClaimReviewParse, CorpusError> {
    let root: Value = serde_json::from_slice(document)
        .map_err(|e| json_error_with_offset(document, &e))?;
    let candidates = collect_candidates(&root);
    let mut parse = ClaimReviewParse::default();
    for (index, object) in candidates.into_iter().enumerate() {
        match claimreview_entry(object) {
            Ok(entry) => parse.entries.push(entry),
            Err(detail) => parse.rejected.push(Rejection {
                index,
                reason: RejectReason::MissingReviewedItems,
                detail,
            }),
        }
    }
    Ok(parse)
}

fn json_error_with_offset(document: &[u8], error: &serde_json::Error) -> CorpusError {
    let line = error.line().max(1);
    let column = error.column().max(1);
    let mut offset = 0usize;
    for (i, text_line) in document.split(|&b| b == b'\n').enumerate() {
        if i + 1 == line {
            offset += column - 1;
            break;
        }
        offset += text_line.len() + 1;
    }
    CorpusError::Json {
        offset,
        message: error.to_string(),
    }
}

fn collect_candidates(root: &Value) -> Vec<&Value> {
    match root {
        Value::Array(items) => items.iter().collect(),
        Value::Object(map) => {
            if let Some(Value::Array(items)) = map.get("@graph") {
                items.iter().collect()
            } else if let Some(Value::Array(items)) = map.get("dataFeedElement") {
                items
                    .iter()
                    .map(|element| element.get("item").unwrap_or(element))
                    .collect()
            } else {
                vec![root]
            }
        }
        _ => Vec::new(),
    }
}

fn claimreview_entry(object: &Value) -> Result<RawEntry, String> {
    let map = object.as_object().ok_or("not a JSON object")?;
    if !type_matches(map.get("@type"), "ClaimReview") {
        return Err("not a ClaimReview object".to_string());
    }
    let item_reviewed = map
        .get("itemReviewed")
        .filter(|v| !v.is_null())
        .ok_or("missing itemReviewed")?;
    let fact_check_url = string_field(map.get("url")).ok_or("missing url")?;
    let title = string_field(map.get("name")).or_else(|| string_field(map.get("headline")));
    let claim_review = string_field(map.get("claimReviewed"));
    if title.is_none() && claim_review.is_none() {
        return Err("missing both name and claimReviewed".to_string());
    }
    Ok(RawEntry {
        source: Source::ClaimReview,
        title,
        claim_review,
        post_text: string_field(item_reviewed.get("text")),
        fact_check_url,
        post_url: appearance_url(item_reviewed),
        modality: item_modality(item_reviewed),
        language_tag: string_field(map.get("inLanguage")),
    })
}

fn type_matches(type_value: Option<&Value>, expected: &str) -> bool {
    match type_value {
        Some(Value::String(s)) => s == expected,
        Some(Value::Array(items)) => items.iter().any(|v| v.as_str() == Some(expected)),
        _ => false,
    }
}

fn string_field(value: Option<&Value>) -> Option<String> {
    value
        .and_then(Value::as_str)
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
}

fn appearance_url(item: &Value) -> Option<String> {
    for key in ["appearance", "firstAppearance"] {
        let Some(appearance) = item.get(key) else {
            continue;
        };
        let candidate = match appearance {
            Value::String(s) => Some(s.clone()),
            Value::Object(o) => string_field(o.get("url")),
            Value::Array(items) => items.first().and_then(|first| match first {
                Value::String(s) => Some(s.clone()),
                Value::Object(o) => string_field(o.get("url")),
                _ => None,
            }),
            _ => None,
        };
        if candidate.is_some() {
            return candidate;
        }
    }
    None
}

fn item_modality(item: &Value) -> Modality {
    let types: Vec<&str> = match item.get("@type") {
        Some(Value::String(s)) => vec![s.as_str()],
        Some(Value::Array(items)) => items.iter().filter_map(Value::as_str).collect(),
        _ => Vec::new(),
    };
    let image = types.iter().any(|t| t.contains("Image"));
    let video = types.iter().any(|t| t.contains("Video"));
    match (image, video) {
        (true, true) => Modality::Mixed,
        (true, false) => Modality::Image,
        (false, true) => Modality::Video,
        (false, false) => Modality::Text,
    }
}

/// Parses one fact-check API export record: `title` and `url` are required,
/// the rest optional.
pub fn parse_gfc(record: &Value, index: usize) -> Result<RawEntry, Rejection> {
    let reject = |detail: &str| Rejection {
        index,
        reason: RejectReason::MissingReviewedItems,
        detail: detail.to_string(),
    };
    let map = record.as_object().ok_or_else(|| reject("not a JSON object"))?;
    let title = string_field(map.get("title")).ok_or_else(|| reject("missing title"))?;
    let fact_check_url = string_field(map.get("url")).ok_or_else(|| reject("missing url"))?;
    let modality = match string_field(map.get("modality")).as_deref() {
        Some("image") => Modality::Image,
        Some("video") => Modality::Video,
        Some("mixed") => Modality::Mixed,
        _ => Modality::Text,
    };
    Ok(RawEntry {
        source: Source::Gfc,
        title: Some(title),
        claim_review: string_field(map.get("claim_review")),
        post_text: string_field(map.get("post_text")),
        fact_check_url,
        post_url: string_field(map.get("post_url")),
        modality,
        language_tag: string_field(map.get("language")),
    })
}

/// Parses a JSON array of export records; malformed records are rejected
/// individually.
pub fn parse_gfc_batch(document: &[u8]) -> Result<GfcParse, CorpusError> {
    let root: Value = serde_json::from_slice(document)
        .map_err(|e| json_error_with_offset(document, &e))?;
    let records = match &root {
        Value::Array(items) => items.iter().collect::<Vec<_>>(),
        other => vec![other],
    };
    let mut parse = GfcParse::default();
    for (index, record) in records.into_iter().enumerate() {
        match parse_gfc(record, index) {
            Ok(entry) => parse.entries.push(entry),
            Err(rejection) => parse.rejected.push(rejection),
        }
    }
    Ok(parse)
}

/// Knobs for the filter stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FilterOptions {
    /// Minimum fraction of stopword tokens for a text to count as English
    /// when no language tag is present.
    pub english_stopword_threshold: f64,
    /// Use the per-entry language tag when present instead of the heuristic.
    pub trust_language_tag: bool,
}

impl Default for FilterOptions {
    fn default() -> Self {
        FilterOptions {
            english_stopword_threshold: 0.12,
            trust_language_tag: true,
        }
    }
}

fn is_english(entry: &RawEntry, opts: &FilterOptions) -> bool {
    if opts.trust_language_tag {
        if let Some(tag) = &entry.language_tag {
            return tag.to_lowercase().starts_with("en");
        }
    }
    let combined = [
        entry.title.as_deref().unwrap_or(""),
        entry.claim_review.as_deref().unwrap_or(""),
        entry.post_text.as_deref().unwrap_or(""),
    ]
    .join(" ");
    let tokens = tokenize(&clean_text(&combined));
    if tokens.is_empty() {
        return false;
    }
    let stops = stopwords();
    let hits = tokens.iter().filter(|t| stops.contains(t.as_str())).count();
    hits as f64 / tokens.len() as f64 >= opts.english_stopword_threshold
}

/// Normalization used for the title-vs-claim-review identity check:
/// case-fold, collapse whitespace, strip terminal punctuation.
fn identity_key(text: &str) -> String {
    let folded = text.to_lowercase();
    let collapsed = folded.split_whitespace().collect::<Vec<_>>().join(" ");
    collapsed
        .trim_end_matches(|c: char| c.is_ascii_punctuation())
        .trim_end()
        .to_string()
}

/// Drops non-text and non-English entries, merges identical title /
/// claim-review pairs into a single reference, rejects entries without a
/// post, and deduplicates by content id. Output is ordered by id.
///
/// Entries whose title and claim review both clean to nothing are counted
/// under `missing_reviewed_items`; every other failure maps to its own
/// reason, checked in the order modality, language, post, references, dedup.
pub fn filter_and_merge(
    entries: &[RawEntry],
    opts: &FilterOptions,
) -> (Vec<ClaimRecord>, IngestReport) {
    let mut report = IngestReport {
        input: entries.len(),
        ..Default::default()
    };
    let mut records: Vec<ClaimRecord> = Vec::new();
    let mut seen_ids: std::collections::HashSet<String> = std::collections::HashSet::new();

    for entry in entries {
        if entry.modality != Modality::Text {
            report.non_text_modality += 1;
            continue;
        }
        if !is_english(entry, opts) {
            report.non_english += 1;
            continue;
        }
        let post = clean_text(entry.post_text.as_deref().unwrap_or(""));
        if post.is_empty() {
            report.post_unavailable += 1;
            continue;
        }
        let title = entry
            .title
            .as_deref()
            .map(clean_text)
            .filter(|t| !t.is_empty());
        let review = entry
            .claim_review
            .as_deref()
            .map(clean_text)
            .filter(|r| !r.is_empty());
        let references = match (title, review) {
            (Some(t), Some(r)) => {
                if identity_key(&t) == identity_key(&r) {
                    vec![t]
                } else {
                    vec![t, r]
                }
            }
            (Some(t), None) => vec![t],
            (None, Some(r)) => vec![r],
            (None, None) => {
                report.missing_reviewed_items += 1;
                continue;
            }
        };
        let id = ClaimRecord::content_id(&post, &references);
        if !seen_ids.insert(id.clone()) {
            report.duplicate_title_review += 1;
            continue;
        }
        let mut urls = vec![entry.fact_check_url.clone()];
        if let Some(post_url) = &entry.post_url {
            urls.push(post_url.clone());
        }
        records.push(ClaimRecord {
            id,
            post,
            references,
            split: Split::Train,
            source: entry.source,
            urls,
        });
    }

    records.sort_by(|a, b| a.id.cmp(&b.id));
    report.accepted = records.len();
    (records, report)
}

/// Full filter stage over parsed entries, folding parse-stage rejections
/// into the report so the counts reconcile with the original feed size.
pub fn ingest_entries(
    entries: &[RawEntry],
    parse_rejections: usize,
    opts: &FilterOptions,
) -> (Vec<ClaimRecord>, IngestReport) {
    let (records, mut report) = filter_and_merge(entries, opts);
    report.add_rejections(RejectReason::MissingReviewedItems, parse_rejections);
    (records, report)
}
