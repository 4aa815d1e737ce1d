//! Corpus-level TF-IDF vectors and cosine similarity.

use std::collections::HashMap;

use crate::textproc::tokenize;

/// Document frequencies fitted over a corpus.
///
/// Weights are raw term count times a smoothed inverse document frequency,
/// `idf(t) = ln((1 + N) / (1 + df(t))) + 1`, so terms present in every
/// document still carry weight and identical texts score cosine 1.
#[derive(Debug, Clone)]
pub struct TfIdf {
    doc_count: usize,
    df: HashMap<String, usize>,
}

impl TfIdf {
    pub fn fit<I, S>(docs: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut doc_count = 0;
        let mut df: HashMap<String, usize> = HashMap::new();
        for doc in docs {
            doc_count += 1;
            let mut seen: Vec<&String> = Vec::new();
            let seq = tokenize(doc.as_ref());
            for token in seq.iter() {
                if !seen.contains(&token) {
                    seen.push(token);
                    *df.entry(token.clone()).or_insert(0) += 1;
                }
            }
        }
        TfIdf { doc_count, df }
    }

    fn idf(&self, term: &str) -> f64 {
        let df = self.df.get(term).copied().unwrap_or(0);
        ((1.0 + self.doc_count as f64) / (1.0 + df as f64)).ln() + 1.0
    }

    /// Sparse TF-IDF vector of a text under this corpus.
    pub fn vector(&self, text: &str) -> HashMap<String, f64> {
        let mut counts: HashMap<String, usize> = HashMap::new();
        for token in tokenize(text).iter() {
            *counts.entry(token.clone()).or_insert(0) += 1;
        }
        counts
            .into_iter()
            .map(|(term, count)| {
                let weight = count as f64 * self.idf(&term);
                (term, weight)
            })
            .collect()
    }

    /// Cosine of the two texts' TF-IDF vectors; 0 when either vector is zero.
    pub fn cosine(&self, a: &str, b: &str) -> f64 {
        let va = self.vector(a);
        let vb = self.vector(b);
        let dot: f64 = va
            .iter()
            .filter_map(|(term, wa)| vb.get(term).map(|wb| wa * wb))
            .sum();
        let na: f64 = va.values().map(|w| w * w).sum::<f64>().sqrt();
        let nb: f64 = vb.values().map(|w| w * w).sum::<f64>().sqrt();
        if na == 0.0 || nb == 0.0 {
            0.0
        } else {
            dot / (na * nb)
        }
    }
}

/// Cosine similarity of two texts over a corpus consisting of just the pair.
pub fn cosine_similarity(a: &str, b: &str) -> f64 {
    TfIdf::fit([a, b]).cosine(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_texts_score_one() {
        let sim = cosine_similarity("honey cures corona", "honey cures corona");
        assert!((sim - 1.0).abs() < 1e-12);
    }

    #[test]
    fn disjoint_texts_score_zero() {
        assert_eq!(cosine_similarity("honey cures corona", "masks are useless"), 0.0);
    }

    #[test]
    fn empty_text_scores_zero() {
        assert_eq!(cosine_similarity("", "honey"), 0.0);
        assert_eq!(cosine_similarity("", ""), 0.0);
    }

    #[test]
    fn matches_brute_force_vector_arithmetic() {
        let corpus = [
            "vaccines cause autism in children",
            "masks prevent the spread of the virus",
            "honey and ginger cure corona",
            "officials confirmed the new report",
        ];
        let model = TfIdf::fit(corpus);
        let a = corpus[0];
        let b = "vaccines reportedly cause the virus in adults";

        // brute force: same formula evaluated with plain loops
        let texts = [a, b];
        let mut dot = 0.0;
        let mut norms = [0.0f64; 2];
        let va = model.vector(a);
        let vb = model.vector(b);
        let mut terms: Vec<&String> = va.keys().chain(vb.keys()).collect();
        terms.sort();
        terms.dedup();
        for term in terms {
            let wa = va.get(term).copied().unwrap_or(0.0);
            let wb = vb.get(term).copied().unwrap_or(0.0);
            dot += wa * wb;
            norms[0] += wa * wa;
            norms[1] += wb * wb;
        }
        let expected = dot / (norms[0].sqrt() * norms[1].sqrt());
        let got = model.cosine(texts[0], texts[1]);
        assert!((got - expected).abs() < 1e-9, "got {got}, expected {expected}");
        assert!(got > 0.0 && got < 1.0);
    }
}
