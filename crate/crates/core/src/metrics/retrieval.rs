//! Retrieval precision@k over annotator relevance judgments.

use serde::{Deserialize, Serialize};

use super::MetricsError;

pub const ANNOTATORS: usize = 3;
pub const MAX_RANKS: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputKind {
    Post,
    NormalizedClaim,
}

/// Per-rank binary relevance votes from three annotators for one retrieval
/// query (an instance is a post or its normalized claim).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelevanceJudgment {
    pub instance_id: String,
    pub input_kind: InputKind,
    /// `votes[rank - 1]` holds the three 0/1 votes for that rank.
    pub votes: Vec<Vec<u8>>,
}

impl RelevanceJudgment {
    pub fn validate(&self) -> Result<(), MetricsError> {
        if self.votes.is_empty() || self.votes.len() > MAX_RANKS {
            return Err(MetricsError::InvalidJudgment {
                instance: self.instance_id.clone(),
                message: format!("expected 1..={} ranks, got {}", MAX_RANKS, self.votes.len()),
            });
        }
        for (rank, votes) in self.votes.iter().enumerate() {
            if votes.len() != ANNOTATORS {
                return Err(MetricsError::InvalidJudgment {
                    instance: self.instance_id.clone(),
                    message: format!(
                        "rank {} has {} votes, expected {}",
                        rank + 1,
                        votes.len(),
                        ANNOTATORS
                    ),
                });
            }
            if votes.iter().any(|&v| v > 1) {
                return Err(MetricsError::InvalidJudgment {
                    instance: self.instance_id.clone(),
                    message: format!("rank {} has a vote outside {{0, 1}}", rank + 1),
                });
            }
        }
        Ok(())
    }
}

/// Majority vote of three binary annotator votes.
pub fn majority(votes: &[u8]) -> bool {
    votes.iter().map(|&v| v as usize).sum::<usize>() * 2 > votes.len()
}

/// Mean precision@k over all judgments of the given input kind.
///
/// Per rank, relevance is the majority of the three votes; per instance,
/// P@k is the relevant count in the top k divided by k.
pub fn precision_at_k(
    judgments: &[RelevanceJudgment],
    k: usize,
    kind: InputKind,
) -> Result<f64, MetricsError> {
    if k == 0 || k > MAX_RANKS {
        return Err(MetricsError::KOutOfRange(k));
    }
    let mut sum = 0.0;
    let mut count = 0usize;
    for judgment in judgments.iter().filter(|j| j.input_kind == kind) {
        judgment.validate()?;
        if judgment.votes.len() < k {
            return Err(MetricsError::NotEnoughRanks {
                instance: judgment.instance_id.clone(),
                ranks: judgment.votes.len(),
                k,
            });
        }
        let relevant = judgment.votes[..k]
            .iter()
            .filter(|votes| majority(votes))
            .count();
        sum += relevant as f64 / k as f64;
        count += 1;
    }
    if count == 0 {
        return Err(MetricsError::NoJudgmentsForKind(kind));
    }
    Ok(sum / count as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn judgment(id: &str, kind: InputKind, ranks: &[[u8; 3]]) -> RelevanceJudgment {
        RelevanceJudgment {
            instance_id: id.to_string(),
            input_kind: kind,
            votes: ranks.iter().map(|r| r.to_vec()).collect(),
        }
    }

    #[test]
    fn all_relevant_scores_one_for_every_k() {
        let j = judgment(
            "i1",
            InputKind::Post,
            &[[1, 1, 1]; 5],
        );
        for k in 1..=5 {
            assert_eq!(precision_at_k(&[j.clone()], k, InputKind::Post).unwrap(), 1.0);
        }
    }

    #[test]
    fn alternating_relevance_counts_correctly() {
        // majority relevance per rank: 1 0 1 0 1
        let j = judgment(
            "i1",
            InputKind::NormalizedClaim,
            &[[1, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 0], [1, 1, 1]],
        );
        let p1 = precision_at_k(&[j.clone()], 1, InputKind::NormalizedClaim).unwrap();
        let p3 = precision_at_k(&[j.clone()], 3, InputKind::NormalizedClaim).unwrap();
        let p5 = precision_at_k(&[j], 5, InputKind::NormalizedClaim).unwrap();
        assert_eq!(p1, 1.0);
        assert!((p3 - 2.0 / 3.0).abs() < 1e-12);
        assert!((p5 - 3.0 / 5.0).abs() < 1e-12);
    }

    #[test]
    fn k_out_of_range_is_an_error() {
        let j = judgment("i1", InputKind::Post, &[[1, 1, 1]; 5]);
        assert!(matches!(
            precision_at_k(&[j.clone()], 0, InputKind::Post),
            Err(MetricsError::KOutOfRange(0))
        ));
        assert!(matches!(
            precision_at_k(&[j], 6, InputKind::Post),
            Err(MetricsError::KOutOfRange(6))
        ));
    }

    #[test]
    fn missing_kind_is_an_error() {
        let j = judgment("i1", InputKind::Post, &[[1, 1, 1]; 5]);
        assert!(matches!(
            precision_at_k(&[j], 1, InputKind::NormalizedClaim),
            Err(MetricsError::NoJudgmentsForKind(InputKind::NormalizedClaim))
        ));
    }

    #[test]
    fn majority_over_all_eight_vote_patterns() {
        let expectations = [
            ([0, 0, 0], false),
            ([0, 0, 1], false),
            ([0, 1, 0], false),
            ([1, 0, 0], false),
            ([0, 1, 1], true),
            ([1, 0, 1], true),
            ([1, 1, 0], true),
            ([1, 1, 1], true),
        ];
        for (votes, expected) in expectations {
            assert_eq!(majority(&votes), expected, "votes {votes:?}");
        }
    }

    #[test]
    fn mean_over_instances_matches_brute_force() {
        let judgments = vec![
            judgment("a", InputKind::Post, &[[1, 1, 1], [0, 0, 0], [1, 0, 1]]),
            judgment("b", InputKind::Post, &[[0, 1, 0], [1, 1, 0], [1, 1, 1]]),
            judgment("c", InputKind::NormalizedClaim, &[[1, 1, 0], [1, 0, 0], [0, 1, 1]]),
        ];
        // brute force recount for posts at k=3
        let mut total = 0.0;
        for j in judgments.iter().filter(|j| j.input_kind == InputKind::Post) {
            let mut relevant = 0;
            for votes in &j.votes[..3] {
                let ones: u8 = votes.iter().sum();
                if ones >= 2 {
                    relevant += 1;
                }
            }
            total += relevant as f64 / 3.0;
        }
        let expected = total / 2.0;
        let got = precision_at_k(&judgments, 3, InputKind::Post).unwrap();
        assert!((got - expected).abs() < 1e-12);
    }
}
