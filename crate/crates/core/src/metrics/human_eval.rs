//! Aggregation of human quality ratings.

use serde::{Deserialize, Serialize};

use super::MetricsError;

pub const EVALUATORS: usize = 5;
pub const ASPECTS: [&str; 5] = [
    "fluency",
    "coherence",
    "relevance",
    "consistency",
    "self_contextualization",
];

/// Five evaluators' 1-5 ratings of one generated claim, per aspect.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HumanRatings {
    pub instance_id: String,
    pub fluency: Vec<u8>,
    pub coherence: Vec<u8>,
    pub relevance: Vec<u8>,
    pub consistency: Vec<u8>,
    pub self_contextualization: Vec<u8>,
}

impl HumanRatings {
    fn aspects(&self) -> [(&'static str, &[u8]); 5] {
        [
            ("fluency", &self.fluency),
            ("coherence", &self.coherence),
            ("relevance", &self.relevance),
            ("consistency", &self.consistency),
            ("self_contextualization", &self.self_contextualization),
        ]
    }

    pub fn validate(&self) -> Result<(), MetricsError> {
        for (aspect, ratings) in self.aspects() {
            if ratings.len() != EVALUATORS {
                return Err(MetricsError::InvalidRating {
                    instance: self.instance_id.clone(),
                    aspect,
                    message: format!("expected {} ratings, got {}", EVALUATORS, ratings.len()),
                });
            }
            if ratings.iter().any(|&r| !(1..=5).contains(&r)) {
                return Err(MetricsError::InvalidRating {
                    instance: self.instance_id.clone(),
                    aspect,
                    message: "rating outside 1..=5".to_string(),
                });
            }
        }
        Ok(())
    }
}

/// Per-aspect means: evaluators averaged per instance, instances averaged
/// over the batch.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AspectMeans {
    pub fluency: f64,
    pub coherence: f64,
    pub relevance: f64,
    pub consistency: f64,
    pub self_contextualization: f64,
}

pub fn aggregate_human_eval(ratings: &[HumanRatings]) -> Result<AspectMeans, MetricsError> {
    if ratings.is_empty() {
        return Err(MetricsError::EmptyScores);
    }
    let mut sums = [0.0f64; 5];
    for instance in ratings {
        instance.validate()?;
        for (i, (_, values)) in instance.aspects().iter().enumerate() {
            let mean = values.iter().map(|&v| v as f64).sum::<f64>() / values.len() as f64;
            sums[i] += mean;
        }
    }
    let n = ratings.len() as f64;
    Ok(AspectMeans {
        fluency: sums[0] / n,
        coherence: sums[1] / n,
        relevance: sums[2] / n,
        consistency: sums[3] / n,
        self_contextualization: sums[4] / n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratings(id: &str, values: [u8; 5]) -> HumanRatings {
        HumanRatings {
            instance_id: id.to_string(),
            fluency: values.to_vec(),
            coherence: values.to_vec(),
            relevance: values.to_vec(),
            consistency: values.to_vec(),
            self_contextualization: values.to_vec(),
        }
    }

    #[test]
    fn single_instance_mean() {
        let means = aggregate_human_eval(&[ratings("i1", [4, 5, 4, 5, 5])]).unwrap();
        assert!((means.fluency - 4.6).abs() < 1e-12);
        assert!((means.self_contextualization - 4.6).abs() < 1e-12);
    }

    #[test]
    fn uniform_ratings_stay_uniform() {
        let batch = vec![ratings("i1", [3; 5]), ratings("i2", [3; 5])];
        let means = aggregate_human_eval(&batch).unwrap();
        assert_eq!(means.coherence, 3.0);
        assert_eq!(means.relevance, 3.0);
    }

    #[test]
    fn malformed_ratings_name_instance_and_aspect() {
        let mut bad = ratings("i9", [4, 5, 4, 5, 5]);
        bad.coherence = vec![4, 5];
        let err = aggregate_human_eval(&[bad]).unwrap_err();
        match err {
            MetricsError::InvalidRating {
                instance, aspect, ..
            } => {
                assert_eq!(instance, "i9");
                assert_eq!(aspect, "coherence");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn out_of_scale_rating_is_rejected() {
        let mut bad = ratings("i2", [4, 5, 4, 5, 5]);
        bad.relevance = vec![4, 5, 6, 5, 5];
        assert!(aggregate_human_eval(&[bad]).is_err());
    }
}
