//! Measurement apparatus: relation-tuple scoring, paired t-tests,
//! cross-validation folds, subsampling, a co-occurrence baseline and corpus
//! statistics.

mod baseline;
mod corpus_stats;
mod score;
mod split;
mod ttest;

pub use baseline::baseline_predict;
pub use corpus_stats::{corpus_stats, raw_corpus_stats, CorpusStats, StatsTable};
pub use score::{score, EvalReport, PairTypeScores};
pub use split::{kfold_split, subsample, SampleSize};
pub use ttest::{ln_gamma, paired_t_test, regularized_incomplete_beta, student_t_two_tailed, TTestResult};

use serde::{Deserialize, Serialize};

use crate::model::{CandidateInstance, ConceptPair, RelationLabel};

/// A scored unit: document, canonical pair and label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RelationTuple {
    pub doc_id: String,
    pub pair: ConceptPair,
    pub label: RelationLabel,
}

impl RelationTuple {
    pub fn new(doc_id: impl Into<String>, pair: ConceptPair, label: RelationLabel) -> Self {
        RelationTuple {
            doc_id: doc_id.into(),
            pair,
            label,
        }
    }
}

/// Gold tuples carried by instances (absence labels included; the scorer
/// filters them).
pub fn gold_tuples(instances: &[CandidateInstance]) -> Vec<RelationTuple> {
    instances
        .iter()
        .map(|i| RelationTuple::new(i.doc_id.clone(), i.pair.clone(), i.label.clone()))
        .collect()
}
