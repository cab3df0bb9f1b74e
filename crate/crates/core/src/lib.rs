//! Harmonization of heterogeneous biomedical relation-extraction corpora.
//!
//! The crate turns corpora with very different annotation conventions
//! (document- vs sentence-level, complete vs partial negatives, granular vs
//! coarse relation types, span-less repository triples) into one consistently
//! labeled dataset, then renders every entity pair as a tagged, prompted
//! classification instance.
//!
//! Pipeline overview:
//!
//! 1. [`formats`] parses PubTator-style corpora, repository triples, profiles
//!    and lexicons.
//! 2. [`harmonize`] applies a [`CorpusProfile`] (span recovery, context level,
//!    negative policy, label granularity, entity typing) and merges corpora.
//! 3. [`instances`] enumerates entity pairs and builds boundary-tagged
//!    contexts plus prompt questions.
//! 4. [`evaluate`] scores predictions, runs paired t-tests and produces
//!    cross-validation folds and subsamples.

pub mod error;
pub mod evaluate;
pub mod formats;
pub mod harmonize;
pub mod instances;
pub mod model;
pub mod profiles;
pub mod textspan;

#[cfg(any(test, feature = "testkit"))]
pub mod testkit;

pub use error::{Error, Result};
pub use model::{
    AllowedPairs, CandidateInstance, ConceptPair, ContextLevel, CorpusProfile, Document,
    EntityMention, EntityPolicy, EntityType, Granularity, LevelSolution, NegativePolicy,
    RawRelation, RelationLabel, SpanSolution, TextIndex, TextSpan,
};
