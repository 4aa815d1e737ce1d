//! Scoring: ROUGE-1/2/L, BLEU-4, METEOR, abstractness, TF-IDF cosine
//! similarity, multi-reference aggregation, retrieval precision@k, and
//! human-rating aggregation.

pub mod human_eval;
pub mod retrieval;
pub mod tfidf;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::textproc::{ngram_counts, stem::porter_stem, TokenSeq};

pub use human_eval::{aggregate_human_eval, AspectMeans, HumanRatings};
pub use retrieval::{precision_at_k, InputKind, RelevanceJudgment};
pub use tfidf::{cosine_similarity, TfIdf};

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("reference list is empty")]
    EmptyReferences,
    #[error("claim is empty")]
    EmptyClaim,
    #[error("cannot aggregate an empty score list")]
    EmptyScores,
    #[error("cannot mix triple and scalar scores in one aggregation")]
    MixedScoreKinds,
    #[error("precision@k requires k in 1..=5, got {0}")]
    KOutOfRange(usize),
    #[error("judgment {instance} has {ranks} ranks, need at least {k}")]
    NotEnoughRanks {
        instance: String,
        ranks: usize,
        k: usize,
    },
    #[error("no judgments with input kind {0:?}")]
    NoJudgmentsForKind(InputKind),
    #[error("invalid judgment {instance}: {message}")]
    InvalidJudgment { instance: String, message: String },
    #[error("invalid ratings for instance {instance}, aspect {aspect}: {message}")]
    InvalidRating {
        instance: String,
        aspect: &'static str,
        message: String,
    },
    #[error("unknown metric {0:?}")]
    UnknownMetric(String),
}

/// Precision, recall, and their harmonic mean.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct ScoreTriple {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl ScoreTriple {
    /// F1 is zero when precision + recall is zero.
    pub fn from_pr(precision: f64, recall: f64) -> Self {
        let f1 = if precision + recall > 0.0 {
            2.0 * precision * recall / (precision + recall)
        } else {
            0.0
        };
        ScoreTriple {
            precision,
            recall,
            f1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RougeVariant {
    R1,
    R2,
    RL,
}

/// ROUGE score of a hypothesis against a single reference.
///
/// R1/R2 use clipped n-gram multiset overlap, RL uses the longest common
/// subsequence. Precision normalizes by the hypothesis size, recall by the
/// reference size; an empty side yields zeros.
pub fn rouge(hyp: &TokenSeq, reference: &TokenSeq, variant: RougeVariant) -> ScoreTriple {
    match variant {
        RougeVariant::R1 => rouge_n(hyp, reference, 1),
        RougeVariant::R2 => rouge_n(hyp, reference, 2),
        RougeVariant::RL => {
            let lcs = lcs_length(hyp.tokens(), reference.tokens()) as f64;
            let p = lcs / hyp.len().max(1) as f64;
            let r = lcs / reference.len().max(1) as f64;
            ScoreTriple::from_pr(p, r)
        }
    }
}

fn rouge_n(hyp: &TokenSeq, reference: &TokenSeq, n: usize) -> ScoreTriple {
    let hyp_counts = ngram_counts(hyp.tokens(), n);
    let ref_counts = ngram_counts(reference.tokens(), n);
    let overlap: usize = hyp_counts
        .iter()
        .map(|(gram, count)| (*count).min(ref_counts.get(gram).copied().unwrap_or(0)))
        .sum();
    let hyp_total: usize = hyp_counts.values().sum();
    let ref_total: usize = ref_counts.values().sum();
    let p = overlap as f64 / hyp_total.max(1) as f64;
    let r = overlap as f64 / ref_total.max(1) as f64;
    ScoreTriple::from_pr(p, r)
}

/// Longest common subsequence length over token slices.
pub fn lcs_length(a: &[String], b: &[String]) -> usize {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y {
                prev[j] + 1
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Numerator substituted for zero n-gram match counts in BLEU.
pub const BLEU_EPSILON: f64 = 0.1;

/// Sentence BLEU-4 with multi-reference clipping, brevity penalty against
/// the closest reference length (ties toward the shorter one), and
/// add-epsilon smoothing: orders with zero matches score `0.1 / denominator`.
/// A hypothesis with no unigram match at all scores 0.
pub fn bleu4(hyp: &TokenSeq, refs: &[TokenSeq]) -> Result<f64, MetricsError> {
    if refs.is_empty() {
        return Err(MetricsError::EmptyReferences);
    }
    if hyp.is_empty() {
        return Ok(0.0);
    }
    let mut numerators = [0usize; 4];
    let mut denominators = [0usize; 4];
    for (i, n) in (1..=4).enumerate() {
        let hyp_counts = ngram_counts(hyp.tokens(), n);
        let mut max_ref: HashMap<&Vec<String>, usize> = HashMap::new();
        for reference in refs {
            let ref_counts = ngram_counts(reference.tokens(), n);
            for gram in hyp_counts.keys() {
                let seen = ref_counts.get(gram).copied().unwrap_or(0);
                let entry = max_ref.entry(gram).or_insert(0);
                *entry = (*entry).max(seen);
            }
        }
        numerators[i] = hyp_counts
            .iter()
            .map(|(gram, count)| (*count).min(max_ref.get(gram).copied().unwrap_or(0)))
            .sum();
        denominators[i] = hyp_counts.values().sum::<usize>().max(1);
    }
    if numerators[0] == 0 {
        return Ok(0.0);
    }
    let hyp_len = hyp.len();
    let ref_len = refs
        .iter()
        .map(|r| r.len())
        .min_by_key(|&rl| (rl.abs_diff(hyp_len), rl))
        .expect("refs is non-empty");
    let bp = if hyp_len > ref_len {
        1.0
    } else {
        (1.0 - ref_len as f64 / hyp_len as f64).exp()
    };
    let log_sum: f64 = numerators
        .iter()
        .zip(&denominators)
        .map(|(&num, &den)| {
            let matched = if num > 0 { num as f64 } else { BLEU_EPSILON };
            0.25 * (matched / den as f64).ln()
        })
        .sum();
    Ok(bp * log_sum.exp())
}

const METEOR_ALPHA: f64 = 0.9;
const METEOR_BETA: f64 = 3.0;
const METEOR_GAMMA: f64 = 0.5;

/// METEOR with exact and Porter-stem alignment stages (no synonym stage),
/// F-mean alpha 0.9, fragmentation penalty gamma (chunks/matches)^beta with
/// gamma 0.5 and beta 3. No matches scores 0.
pub fn meteor(hyp: &TokenSeq, reference: &TokenSeq) -> f64 {
    let hyp_len = hyp.len();
    let ref_len = reference.len();
    let mut enum_hyp: Vec<(usize, String)> = hyp.iter().cloned().enumerate().collect();
    let mut enum_ref: Vec<(usize, String)> = reference.iter().cloned().enumerate().collect();

    let exact = align_stage(&mut enum_hyp, &mut enum_ref);

    let mut stemmed_hyp: Vec<(usize, String)> = enum_hyp
        .iter()
        .map(|(i, w)| (*i, porter_stem(w)))
        .collect();
    let mut stemmed_ref: Vec<(usize, String)> = enum_ref
        .iter()
        .map(|(j, w)| (*j, porter_stem(w)))
        .collect();
    let stems = align_stage(&mut stemmed_hyp, &mut stemmed_ref);

    let mut matches: Vec<(usize, usize)> = exact.into_iter().chain(stems).collect();
    matches.sort_by_key(|pair| pair.0);

    let m = matches.len();
    if m == 0 || hyp_len == 0 || ref_len == 0 {
        return 0.0;
    }
    let precision = m as f64 / hyp_len as f64;
    let recall = m as f64 / ref_len as f64;
    let fmean = precision * recall / (METEOR_ALPHA * precision + (1.0 - METEOR_ALPHA) * recall);
    let frag = count_chunks(&matches) as f64 / m as f64;
    (1.0 - METEOR_GAMMA * frag.powf(METEOR_BETA)) * fmean
}

/// Greedy right-to-left pairing; consumes matched entries from both lists.
fn align_stage(
    enum_hyp: &mut Vec<(usize, String)>,
    enum_ref: &mut Vec<(usize, String)>,
) -> Vec<(usize, usize)> {
    let mut matches = Vec::new();
    let mut i = enum_hyp.len();
    while i > 0 {
        i -= 1;
        let mut j = enum_ref.len();
        while j > 0 {
            j -= 1;
            if enum_hyp[i].1 == enum_ref[j].1 {
                matches.push((enum_hyp[i].0, enum_ref[j].0));
                enum_hyp.remove(i);
                enum_ref.remove(j);
                break;
            }
        }
    }
    matches
}

fn count_chunks(matches: &[(usize, usize)]) -> usize {
    let mut chunks = 1;
    for window in matches.windows(2) {
        if !(window[1].0 == window[0].0 + 1 && window[1].1 == window[0].1 + 1) {
            chunks += 1;
        }
    }
    chunks
}

/// Eq-style abstractness of a claim against its source post.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AbstractnessScore {
    /// 1 minus the harmonic mean of the defined components.
    pub a: f64,
    pub unigram_p: f64,
    /// None when the claim is too short to have bigrams.
    pub bigram_p: Option<f64>,
    pub lcs_p: f64,
}

/// Abstractness: 1 minus the harmonic mean of the claim-side unigram
/// precision, bigram precision, and LCS precision against the post.
///
/// The harmonic mean is 0 when any component is 0, making `a = 1` for a
/// fully novel claim and `a = 0` for a fully extractive one. A single-token
/// claim has no bigrams; that component is then left out of the mean.
pub fn abstractness(post: &TokenSeq, claim: &TokenSeq) -> Result<AbstractnessScore, MetricsError> {
    if claim.is_empty() {
        return Err(MetricsError::EmptyClaim);
    }
    let unigram_p = clipped_precision(claim, post, 1);
    let bigram_p = if claim.len() >= 2 {
        Some(clipped_precision(claim, post, 2))
    } else {
        None
    };
    let lcs_p = lcs_length(claim.tokens(), post.tokens()) as f64 / claim.len() as f64;

    let mut components = vec![unigram_p, lcs_p];
    if let Some(b) = bigram_p {
        components.push(b);
    }
    let x = if components.iter().any(|&c| c == 0.0) {
        0.0
    } else {
        components.len() as f64 / components.iter().map(|c| 1.0 / c).sum::<f64>()
    };
    Ok(AbstractnessScore {
        a: 1.0 - x,
        unigram_p,
        bigram_p,
        lcs_p,
    })
}

fn clipped_precision(claim: &TokenSeq, post: &TokenSeq, n: usize) -> f64 {
    let claim_counts = ngram_counts(claim.tokens(), n);
    let post_counts = ngram_counts(post.tokens(), n);
    let overlap: usize = claim_counts
        .iter()
        .map(|(gram, count)| (*count).min(post_counts.get(gram).copied().unwrap_or(0)))
        .sum();
    overlap as f64 / claim_counts.values().sum::<usize>().max(1) as f64
}

/// A metric value: either a P/R/F1 triple or a scalar.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MetricValue {
    Triple(ScoreTriple),
    Scalar(f64),
}

impl MetricValue {
    pub fn as_scalar(&self) -> Option<f64> {
        match self {
            MetricValue::Scalar(v) => Some(*v),
            MetricValue::Triple(_) => None,
        }
    }

    pub fn as_triple(&self) -> Option<ScoreTriple> {
        match self {
            MetricValue::Triple(t) => Some(*t),
            MetricValue::Scalar(_) => None,
        }
    }
}

/// The metrics the toolkit can score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricKind {
    Rouge1,
    Rouge2,
    #[serde(rename = "rougeL", alias = "rougel")]
    RougeL,
    Bleu4,
    Meteor,
}

impl MetricKind {
    pub const ALL: [MetricKind; 5] = [
        MetricKind::Rouge1,
        MetricKind::Rouge2,
        MetricKind::RougeL,
        MetricKind::Bleu4,
        MetricKind::Meteor,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MetricKind::Rouge1 => "rouge1",
            MetricKind::Rouge2 => "rouge2",
            MetricKind::RougeL => "rougeL",
            MetricKind::Bleu4 => "bleu4",
            MetricKind::Meteor => "meteor",
        }
    }

    /// Table label, e.g. "ROUGE-1".
    pub fn label(&self) -> &'static str {
        match self {
            MetricKind::Rouge1 => "ROUGE-1",
            MetricKind::Rouge2 => "ROUGE-2",
            MetricKind::RougeL => "ROUGE-L",
            MetricKind::Bleu4 => "BLEU-4",
            MetricKind::Meteor => "METEOR",
        }
    }

    pub fn is_triple(&self) -> bool {
        matches!(
            self,
            MetricKind::Rouge1 | MetricKind::Rouge2 | MetricKind::RougeL
        )
    }
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MetricKind {
    type Err = MetricsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_lowercase().replace('-', "").as_str() {
            "rouge1" => Ok(MetricKind::Rouge1),
            "rouge2" => Ok(MetricKind::Rouge2),
            "rougel" => Ok(MetricKind::RougeL),
            "bleu4" | "bleu" => Ok(MetricKind::Bleu4),
            "meteor" => Ok(MetricKind::Meteor),
            other => Err(MetricsError::UnknownMetric(other.to_string())),
        }
    }
}

/// Multi-reference aggregation: the per-metric maximum over references.
/// For triples, the triple with the maximal F1 wins; ties keep the first.
pub fn aggregate_multi_ref(values: &[MetricValue]) -> Result<MetricValue, MetricsError> {
    if values.is_empty() {
        return Err(MetricsError::EmptyScores);
    }
    match values[0] {
        MetricValue::Triple(_) => {
            let mut best = values[0]
                .as_triple()
                .ok_or(MetricsError::MixedScoreKinds)?;
            for value in &values[1..] {
                let triple = value.as_triple().ok_or(MetricsError::MixedScoreKinds)?;
                if triple.f1 > best.f1 {
                    best = triple;
                }
            }
            Ok(MetricValue::Triple(best))
        }
        MetricValue::Scalar(_) => {
            let mut best = values[0]
                .as_scalar()
                .ok_or(MetricsError::MixedScoreKinds)?;
            for value in &values[1..] {
                let scalar = value.as_scalar().ok_or(MetricsError::MixedScoreKinds)?;
                if scalar > best {
                    best = scalar;
                }
            }
            Ok(MetricValue::Scalar(best))
        }
    }
}

/// Arithmetic mean of per-example metric values, componentwise for triples.
pub fn corpus_average(values: &[MetricValue]) -> Result<MetricValue, MetricsError> {
    if values.is_empty() {
        return Err(MetricsError::EmptyScores);
    }
    let n = values.len() as f64;
    match values[0] {
        MetricValue::Triple(_) => {
            let mut sum = ScoreTriple::default();
            for value in values {
                let t = value.as_triple().ok_or(MetricsError::MixedScoreKinds)?;
                sum.precision += t.precision;
                sum.recall += t.recall;
                sum.f1 += t.f1;
            }
            Ok(MetricValue::Triple(ScoreTriple {
                precision: sum.precision / n,
                recall: sum.recall / n,
                f1: sum.f1 / n,
            }))
        }
        MetricValue::Scalar(_) => {
            let mut sum = 0.0;
            for value in values {
                sum += value.as_scalar().ok_or(MetricsError::MixedScoreKinds)?;
            }
            Ok(MetricValue::Scalar(sum / n))
        }
    }
}

/// Corpus-level aggregates per metric, with the example count they cover.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub n_examples: usize,
    pub corpus: BTreeMap<String, MetricValue>,
}

impl MetricReport {
    /// Averages per-example score maps. Examples are expected in a
    /// deterministic order (the runner orders them by id).
    pub fn from_examples(
        metrics: &[MetricKind],
        per_example: &[BTreeMap<String, MetricValue>],
    ) -> Result<Self, MetricsError> {
        if per_example.is_empty() {
            return Err(MetricsError::EmptyScores);
        }
        let mut corpus = BTreeMap::new();
        for metric in metrics {
            let values: Vec<MetricValue> = per_example
                .iter()
                .filter_map(|scores| scores.get(metric.name()).copied())
                .collect();
            corpus.insert(metric.name().to_string(), corpus_average(&values)?);
        }
        Ok(MetricReport {
            n_examples: per_example.len(),
            corpus,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textproc::tokenize;

    fn seq(text: &str) -> TokenSeq {
        tokenize(text)
    }

    #[test]
    fn rouge_identity_is_one() {
        for variant in [RougeVariant::R1, RougeVariant::R2, RougeVariant::RL] {
            let s = seq("the cat sat on the mat");
            let score = rouge(&s, &s, variant);
            assert_eq!(score, ScoreTriple::from_pr(1.0, 1.0));
        }
    }

    #[test]
    fn rouge1_hand_counted() {
        let score = rouge(&seq("the cat sat"), &seq("the cat ran"), RougeVariant::R1);
        let expected = 2.0 / 3.0;
        assert!((score.precision - expected).abs() < 1e-12);
        assert!((score.recall - expected).abs() < 1e-12);
        assert!((score.f1 - expected).abs() < 1e-12);
    }

    #[test]
    fn rouge2_disjoint_is_zero() {
        let score = rouge(&seq("a b c"), &seq("x y z"), RougeVariant::R2);
        assert_eq!(score, ScoreTriple::default());
    }

    #[test]
    fn rouge_empty_sides_are_zero() {
        let score = rouge(&seq(""), &seq(""), RougeVariant::R1);
        assert_eq!(score, ScoreTriple::default());
    }

    #[test]
    fn rouge_precision_recall_symmetry() {
        let h = seq("masks prevent the spread of virus");
        let r = seq("masks reportedly prevent virus spread");
        let forward = rouge(&h, &r, RougeVariant::R1);
        let backward = rouge(&r, &h, RougeVariant::R1);
        assert_eq!(forward.precision, backward.recall);
        assert_eq!(forward.recall, backward.precision);
    }

    #[test]
    fn rouge_f1_is_harmonic_mean() {
        let score = rouge(
            &seq("a b c d e f"),
            &seq("a b x y"),
            RougeVariant::R1,
        );
        let expected =
            2.0 * score.precision * score.recall / (score.precision + score.recall);
        assert!((score.f1 - expected).abs() < 1e-12);
    }

    #[test]
    fn bleu_identity_is_one() {
        let s = seq("honey cures corona completely");
        assert_eq!(bleu4(&s, &[s.clone()]).unwrap(), 1.0);
    }

    #[test]
    fn bleu_empty_hypothesis_is_zero() {
        assert_eq!(bleu4(&seq(""), &[seq("a b c")]).unwrap(), 0.0);
    }

    #[test]
    fn bleu_no_references_is_an_error() {
        assert_eq!(bleu4(&seq("a"), &[]), Err(MetricsError::EmptyReferences));
    }

    #[test]
    fn bleu_no_unigram_overlap_is_zero() {
        assert_eq!(bleu4(&seq("a b c d"), &[seq("x y z w")]).unwrap(), 0.0);
    }

    #[test]
    fn bleu_matches_reference_value() {
        // frozen from the reference implementation: (0.75 * 2/3 * 0.5 * 0.1)^0.25
        let got = bleu4(&seq("a b c d"), &[seq("a b c e")]).unwrap();
        assert!((got - 0.3976353643835253).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn meteor_identity_has_fragmentation_penalty() {
        let s = seq("a b c");
        let got = meteor(&s, &s);
        let expected = 1.0 - 0.5 * (1.0f64 / 3.0).powi(3);
        assert!((got - expected).abs() < 1e-9, "got {got}");
    }

    #[test]
    fn meteor_disjoint_is_zero() {
        assert_eq!(meteor(&seq("a b c"), &seq("x y z")), 0.0);
    }

    #[test]
    fn meteor_stem_stage_matches_inflections() {
        // frozen from the reference implementation
        let got = meteor(
            &seq("vaccines cause outbreaks worldwide"),
            &seq("vaccine causes outbreak worldwide"),
        );
        assert!((got - 0.9921875).abs() < 1e-12, "got {got}");
    }

    #[test]
    fn abstractness_identity_is_zero() {
        let s = seq("the cat sat on the mat");
        let score = abstractness(&s, &s).unwrap();
        assert_eq!(score.a, 0.0);
    }

    #[test]
    fn abstractness_disjoint_is_one() {
        let score = abstractness(&seq("a b c d"), &seq("x y z")).unwrap();
        assert_eq!(score.a, 1.0);
    }

    #[test]
    fn abstractness_hand_computed_case() {
        let score = abstractness(&seq("a b c d"), &seq("a b x y")).unwrap();
        assert!((score.unigram_p - 0.5).abs() < 1e-15);
        assert!((score.bigram_p.unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!((score.lcs_p - 0.5).abs() < 1e-15);
        assert!((score.a - 4.0 / 7.0).abs() < 1e-15);
    }

    #[test]
    fn abstractness_empty_claim_is_an_error() {
        assert_eq!(
            abstractness(&seq("a"), &seq("")),
            Err(MetricsError::EmptyClaim)
        );
    }

    #[test]
    fn abstractness_empty_post_is_one() {
        let score = abstractness(&seq(""), &seq("a b")).unwrap();
        assert_eq!(score.a, 1.0);
    }

    #[test]
    fn aggregate_takes_max_f1_triple() {
        let low = MetricValue::Triple(ScoreTriple::from_pr(0.2, 0.4));
        let high = MetricValue::Triple(ScoreTriple::from_pr(1.0, 1.0));
        let best = aggregate_multi_ref(&[low, high]).unwrap();
        assert_eq!(best.as_triple().unwrap().f1, 1.0);
    }

    #[test]
    fn aggregate_single_reference_is_identity() {
        let only = MetricValue::Scalar(0.42);
        assert_eq!(aggregate_multi_ref(&[only]).unwrap(), only);
    }

    #[test]
    fn aggregate_scalar_max() {
        let best = aggregate_multi_ref(&[MetricValue::Scalar(0.3), MetricValue::Scalar(0.7)])
            .unwrap();
        assert_eq!(best.as_scalar().unwrap(), 0.7);
    }

    #[test]
    fn aggregate_empty_is_an_error() {
        assert_eq!(aggregate_multi_ref(&[]), Err(MetricsError::EmptyScores));
    }

    #[test]
    fn aggregate_ties_keep_first_reference() {
        let first = MetricValue::Triple(ScoreTriple {
            precision: 0.9,
            recall: 0.3,
            f1: 0.5,
        });
        let second = MetricValue::Triple(ScoreTriple {
            precision: 0.4,
            recall: 0.7,
            f1: 0.5,
        });
        let best = aggregate_multi_ref(&[first, second]).unwrap();
        assert_eq!(best.as_triple().unwrap().precision, 0.9);
    }

    #[test]
    fn corpus_average_of_two_scalars() {
        let avg = corpus_average(&[MetricValue::Scalar(0.5), MetricValue::Scalar(0.7)]).unwrap();
        assert!((avg.as_scalar().unwrap() - 0.6).abs() < 1e-15);
    }

    #[test]
    fn corpus_average_single_is_identity() {
        let v = MetricValue::Scalar(0.25);
        assert_eq!(corpus_average(&[v]).unwrap(), v);
    }

    #[test]
    fn corpus_average_matches_independent_summation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(453);
        let values: Vec<f64> = (0..453).map(|_| rng.random_range(0.0..1.0)).collect();
        let wrapped: Vec<MetricValue> = values.iter().map(|&v| MetricValue::Scalar(v)).collect();
        let got = corpus_average(&wrapped).unwrap().as_scalar().unwrap();
        let mut sum = 0.0;
        for v in &values {
            sum += v;
        }
        assert!((got - sum / 453.0).abs() < 1e-12);
    }

    #[test]
    fn metric_kind_parses_common_spellings() {
        assert_eq!("rouge1".parse::<MetricKind>().unwrap(), MetricKind::Rouge1);
        assert_eq!("ROUGE-L".parse::<MetricKind>().unwrap(), MetricKind::RougeL);
        assert_eq!("bleu4".parse::<MetricKind>().unwrap(), MetricKind::Bleu4);
        assert!("rouge9".parse::<MetricKind>().is_err());
    }

    #[test]
    fn metric_value_serde_shapes() {
        let triple = MetricValue::Triple(ScoreTriple::from_pr(1.0, 0.5));
        let json = serde_json::to_string(&triple).unwrap();
        assert!(json.contains("precision"));
        let back: MetricValue = serde_json::from_str(&json).unwrap();
        assert_eq!(back, triple);
        let scalar: MetricValue = serde_json::from_str("0.25").unwrap();
        assert_eq!(scalar, MetricValue::Scalar(0.25));
    }
}
