//! Dataset ingestion: parsing fact-check feeds, filtering and merging
//! entries into claim records, split assignment, statistics, and JSONL
//! persistence.

mod ingest;
mod io;
mod split;
mod stats;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub use ingest::{
    filter_and_merge, ingest_entries, parse_claimreview, parse_gfc, parse_gfc_batch,
    ClaimReviewParse, FilterOptions, GfcParse, RejectReason, Rejection,
};
pub use io::{read_jsonl, read_jsonl_as, write_jsonl, write_jsonl_as};
pub use split::{assign_splits, SplitConfig};
pub use stats::{compute_stats, DatasetStats, SplitStats};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("malformed JSON at byte offset {offset}: {message}")]
    Json { offset: usize, message: String },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("dataset is empty")]
    EmptyDataset,
    #[error("test split needs {requested} two-reference records, only {available} available")]
    TestShortfall { requested: usize, available: usize },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Where a record came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Gfc,
    ClaimReview,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Modality {
    #[default]
    Text,
    Image,
    Video,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Val,
    Test,
}

impl std::str::FromStr for Split {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_lowercase().as_str() {
            "train" => Ok(Split::Train),
            "val" | "validation" => Ok(Split::Val),
            "test" => Ok(Split::Test),
            other => Err(format!("unknown split {other:?}")),
        }
    }
}

/// One raw feed entry before filtering. At least one of `title` /
/// `claim_review` is present and `fact_check_url` is non-empty; the parsers
/// enforce both.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawEntry {
    pub source: Source,
    pub title: Option<String>,
    pub claim_review: Option<String>,
    pub post_text: Option<String>,
    pub fact_check_url: String,
    pub post_url: Option<String>,
    #[serde(default)]
    pub modality: Modality,
    pub language_tag: Option<String>,
}

/// One post paired with its gold normalized claims.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub post: String,
    pub references: Vec<String>,
    pub split: Split,
    pub source: Source,
    pub urls: Vec<String>,
}

impl ClaimRecord {
    /// Stable content id: hash of the post and the sorted references.
    pub fn content_id(post: &str, references: &[String]) -> String {
        let mut sorted: Vec<&String> = references.iter().collect();
        sorted.sort();
        let mut hasher = Sha256::new();
        hasher.update(post.as_bytes());
        for reference in sorted {
            hasher.update([0x1f]);
            hasher.update(reference.as_bytes());
        }
        let digest = hasher.finalize();
        let mut id = String::with_capacity(16);
        for byte in digest.iter().take(8) {
            id.push_str(&format!("{byte:02x}"));
        }
        id
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.post.is_empty() {
            return Err("post is empty".to_string());
        }
        if self.references.is_empty() || self.references.iter().any(|r| r.is_empty()) {
            return Err("references must be non-empty".to_string());
        }
        if self.split == Split::Test && self.references.len() != 2 {
            return Err(format!(
                "test record has {} references, expected 2",
                self.references.len()
            ));
        }
        Ok(())
    }
}

/// Per-reason rejection counts for an ingestion run. `accepted` plus the
/// rejection counts always equals `input`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub input: usize,
    pub accepted: usize,
    pub missing_reviewed_items: usize,
    pub non_text_modality: usize,
    pub non_english: usize,
    pub post_unavailable: usize,
    pub duplicate_title_review: usize,
}

impl IngestReport {
    pub fn rejected(&self) -> usize {
        self.missing_reviewed_items
            + self.non_text_modality
            + self.non_english
            + self.post_unavailable
            + self.duplicate_title_review
    }

    pub fn reconciles(&self) -> bool {
        self.accepted + self.rejected() == self.input
    }

    /// Counts `n` additional rejections of `reason`, bumping `input` too so
    /// the report keeps reconciling when parse-stage rejections are folded in.
    pub fn add_rejections(&mut self, reason: RejectReason, n: usize) {
        self.input += n;
        match reason {
            RejectReason::MissingReviewedItems => self.missing_reviewed_items += n,
            RejectReason::NonTextModality => self.non_text_modality += n,
            RejectReason::NonEnglish => self.non_english += n,
            RejectReason::PostUnavailable => self.post_unavailable += n,
            RejectReason::DuplicateTitleReview => self.duplicate_title_review += n,
        }
    }
}
