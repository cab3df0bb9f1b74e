//! Profile-driven adjustment of source corpora and merging into one dataset.
//!
//! A [`CorpusProfile`] places a corpus on five axes; each axis selects one
//! adjustment:
//!
//! | Axis | Codes | Effect |
//! |------|-------|--------|
//! | spans | a1 / a2 / a3 | keep spans / attach automatic spans, keep relations found in the abstract / ... found in one sentence |
//! | level | b1 / b2 | whole abstract / first co-occurring sentence as context |
//! | negatives | c1 / c2 / c3 | unannotated pairs get `None-<corpus>` / `None` / are omitted |
//! | granularity | d1 / d2 | map granular labels / everything is `Association` |
//! | entities | e1 / e2 | internal entity kinds / target-schema kinds |
//!
//! Every source relation ends up either as an annotated [`LabeledPair`] or as
//! a `dropped` [`ReportRecord`] with a reason.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::RepositoryRecord;
use crate::instances::enumerate_pairs;
use crate::model::{
    validate_corpus_name, AllowedPairs, ConceptPair, ContextLevel, CorpusProfile, Document, EntityMention,
    EntityPolicy, EntityType, Granularity, LevelSolution, NegativePolicy, RawRelation, RelationLabel, SpanSolution,
    TextSpan,
};
use crate::textspan::{attach_annotations, dictionary_match, document_sentences, find_cooccurrence_in, Lexicon, SentenceSpan};

pub const REASON_ENTITY_NOT_FOUND: &str = "entity not found";
pub const REASON_NO_COOCCURRENCE: &str = "no co-occurring sentence";
pub const REASON_SELF_PAIR: &str = "self pair";
pub const REASON_PAIR_NOT_ALLOWED: &str = "pair type not allowed";
pub const REASON_DUPLICATE: &str = "duplicate annotation";
pub const REASON_CONFLICT: &str = "conflicting annotations";
pub const REASON_NO_TEXT: &str = "document text unavailable";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportKind {
    /// One source relation removed from the dataset.
    Dropped,
    /// A document aborted because two annotations disagree on one pair.
    Conflict,
    /// An automatic mention rejected during span recovery.
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Ingest,
    Span,
    Context,
    Policy,
}

/// One line of the drop/conflict report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub kind: ReportKind,
    pub corpus: String,
    pub doc_id: String,
    pub pair: Option<[String; 2]>,
    pub stage: Stage,
    pub reason: String,
}

impl ReportRecord {
    fn dropped(corpus: &str, doc_id: &str, rel: &RawRelation, stage: Stage, reason: &str) -> Self {
        ReportRecord {
            kind: ReportKind::Dropped,
            corpus: corpus.to_string(),
            doc_id: doc_id.to_string(),
            pair: Some([rel.id1.clone(), rel.id2.clone()]),
            stage,
            reason: reason.to_string(),
        }
    }
}

/// Serializes report records as JSON lines.
pub fn write_report(records: &[ReportRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("report record serializes"));
        out.push('\n');
    }
    out
}

/// Number of `dropped` records, i.e. source relations that did not survive.
pub fn dropped_relations(records: &[ReportRecord]) -> usize {
    records.iter().filter(|r| r.kind == ReportKind::Dropped).count()
}

/// A labeled entity pair with its chosen context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledPair {
    pub pair: ConceptPair,
    pub label: RelationLabel,
    pub level: ContextLevel,
    pub context: TextSpan,
    /// True when the label comes from a source annotation rather than the
    /// negative policy.
    pub annotated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonizedDocument {
    pub corpus: String,
    pub document: Document,
    pub pairs: Vec<LabeledPair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonizedCorpus {
    pub tag: String,
    pub documents: Vec<HarmonizedDocument>,
}

impl HarmonizedCorpus {
    pub fn empty(tag: impl Into<String>) -> Self {
        HarmonizedCorpus {
            tag: tag.into(),
            documents: Vec::new(),
        }
    }

    pub fn pair_count(&self) -> usize {
        self.documents.iter().map(|d| d.pairs.len()).sum()
    }

    pub fn annotated_count(&self) -> usize {
        self.documents
            .iter()
            .flat_map(|d| &d.pairs)
            .filter(|p| p.annotated)
            .count()
    }

    /// Checks that both concepts of every labeled pair have a mention inside
    /// its context span.
    pub fn check_contexts(&self) -> Result<()> {
        for hd in &self.documents {
            for lp in &hd.pairs {
                for id in [&lp.pair.id1, &lp.pair.id2] {
                    let found = hd
                        .document
                        .mentions
                        .iter()
                        .any(|m| m.carries(id) && lp.context.contains(&m.span()));
                    if !found {
                        return Err(Error::invalid(
                            "harmonized corpus",
                            format!("{}/{}: {id} has no mention in its context", hd.corpus, hd.document.id),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("harmonized corpus serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let h: HarmonizedCorpus = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
        h.check_contexts()?;
        Ok(h)
    }
}

// ---------------------------------------------------------------------------
// Ingestion
// ---------------------------------------------------------------------------

/// Automatic annotations used by span recovery.
#[derive(Debug, Clone, Default)]
pub struct AnnotationSource {
    /// Mentions keyed by document id, e.g. from a PubTator-style dump.
    pub auto: BTreeMap<String, Vec<EntityMention>>,
    pub lexicon: Option<Lexicon>,
}

impl AnnotationSource {
    pub fn from_documents(docs: &[Document]) -> Self {
        AnnotationSource {
            auto: docs.iter().map(|d| (d.id.clone(), d.mentions.clone())).collect(),
            lexicon: None,
        }
    }

    pub fn with_lexicon(mut self, lexicon: Lexicon) -> Self {
        self.lexicon = Some(lexicon);
        self
    }

    fn is_empty(&self) -> bool {
        self.auto.is_empty() && self.lexicon.is_none()
    }
}

/// Builds span-less documents from repository triples, taking title and
/// abstract from `texts`. Records whose document has no text are reported.
pub fn documents_from_repository(
    records: &[RepositoryRecord],
    texts: &[Document],
    corpus: &str,
) -> (Vec<Document>, Vec<ReportRecord>) {
    let by_id: BTreeMap<&str, &Document> = texts.iter().map(|d| (d.id.as_str(), d)).collect();
    let mut order: Vec<&str> = Vec::new();
    let mut grouped: BTreeMap<&str, Vec<RawRelation>> = BTreeMap::new();
    let mut report = Vec::new();
    for rec in records {
        let rel = RawRelation {
            label: rec.label.clone(),
            id1: rec.concept_id1.clone(),
            id2: rec.concept_id2.clone(),
        };
        if !by_id.contains_key(rec.doc_id.as_str()) {
            report.push(ReportRecord::dropped(corpus, &rec.doc_id, &rel, Stage::Ingest, REASON_NO_TEXT));
            continue;
        }
        let entry = grouped.entry(rec.doc_id.as_str()).or_default();
        if entry.is_empty() {
            order.push(rec.doc_id.as_str());
        }
        entry.push(rel);
    }
    let docs = order
        .into_iter()
        .map(|id| {
            let text = by_id[id];
            Document {
                id: text.id.clone(),
                title: text.title.clone(),
                abstract_text: text.abstract_text.clone(),
                mentions: Vec::new(),
                relations: grouped.remove(id).unwrap_or_default(),
            }
        })
        .collect();
    (docs, report)
}

// ---------------------------------------------------------------------------
// Adjustment steps
// ---------------------------------------------------------------------------

fn recover_one(
    doc: &Document,
    source: &AnnotationSource,
    solution: SpanSolution,
    corpus: &str,
) -> (Document, Vec<ReportRecord>) {
    let mut report = Vec::new();
    let mut doc = doc.clone();
    let attach = |doc: &Document, mentions: &[EntityMention], report: &mut Vec<ReportRecord>| {
        let (d, warnings) = attach_annotations(doc, mentions);
        report.extend(warnings.into_iter().map(|w| ReportRecord {
            kind: ReportKind::Warning,
            corpus: corpus.to_string(),
            doc_id: w.doc_id,
            pair: None,
            stage: Stage::Span,
            reason: format!("auto mention [{}, {}) {:?} rejected: {}", w.start, w.end, w.text, w.reason),
        }));
        d
    };
    if let Some(auto) = source.auto.get(&doc.id) {
        doc = attach(&doc, auto, &mut report);
    }
    if let Some(lexicon) = &source.lexicon {
        let matched = dictionary_match(&doc.text(), lexicon);
        doc = attach(&doc, &matched, &mut report);
    }

    let sentences = document_sentences(&doc);
    let mut kept = Vec::with_capacity(doc.relations.len());
    for rel in std::mem::take(&mut doc.relations) {
        if !doc.has_concept(&rel.id1) || !doc.has_concept(&rel.id2) {
            report.push(ReportRecord::dropped(corpus, &doc.id, &rel, Stage::Span, REASON_ENTITY_NOT_FOUND));
        } else if solution == SpanSolution::A3 && find_cooccurrence_in(&doc, &sentences, &rel.id1, &rel.id2).is_none() {
            report.push(ReportRecord::dropped(corpus, &doc.id, &rel, Stage::Span, REASON_NO_COOCCURRENCE));
        } else {
            kept.push(rel);
        }
    }
    doc.relations = kept;
    (doc, report)
}

/// Span recovery. `a1` is the identity; `a2` attaches automatic annotations
/// and keeps relations whose concepts both occur in the text; `a3` keeps
/// relations whose concepts co-occur in one sentence.
pub fn recover_spans(
    docs: Vec<Document>,
    source: Option<&AnnotationSource>,
    solution: SpanSolution,
    corpus: &str,
) -> Result<(Vec<Document>, Vec<ReportRecord>)> {
    if solution == SpanSolution::A1 {
        return Ok((docs, Vec::new()));
    }
    let source = source.filter(|s| !s.is_empty()).ok_or_else(|| {
        Error::Config(format!("span solution {solution} requires automatic annotations or a lexicon"))
    })?;
    let results: Vec<(Document, Vec<ReportRecord>)> = docs
        .par_iter()
        .map(|d| recover_one(d, source, solution, corpus))
        .collect();
    let mut out_docs = Vec::with_capacity(results.len());
    let mut report = Vec::new();
    for (d, r) in results {
        out_docs.push(d);
        report.extend(r);
    }
    Ok((out_docs, report))
}

/// Applies the profile's entity-type map. Under e1 every target must be an
/// internal kind; types without an entry pass through unchanged.
pub fn retag_entities(docs: Vec<Document>, profile: &CorpusProfile) -> Result<Vec<Document>> {
    let mut mapping: BTreeMap<EntityType, (&str, &EntityType)> = BTreeMap::new();
    for (source, target) in &profile.entity_type_map {
        if profile.entity_policy == EntityPolicy::E1 && target.is_canonical() {
            return Err(Error::Config(format!(
                "profile {}: e1 must introduce internal kinds, but {source:?} maps to {target}",
                profile.name
            )));
        }
        if profile.entity_policy == EntityPolicy::E2 && !target.is_canonical() {
            return Err(Error::Config(format!(
                "profile {}: e2 must map onto canonical kinds, but {source:?} maps to {target}",
                profile.name
            )));
        }
        let key = EntityType::parse(source)?;
        if let Some((other, prev)) = mapping.insert(key.clone(), (source, target)) {
            if prev != target {
                return Err(Error::Config(format!(
                    "profile {}: {other:?} and {source:?} both denote {key} but map to {prev} and {target}",
                    profile.name
                )));
            }
        }
    }
    if mapping.is_empty() {
        return Ok(docs);
    }
    Ok(docs
        .into_iter()
        .map(|mut doc| {
            for m in &mut doc.mentions {
                if let Some((_, target)) = mapping.get(&m.entity_type) {
                    m.entity_type = (*target).clone();
                }
            }
            doc
        })
        .collect())
}

/// Maps source label text onto the unified schema.
pub fn map_label(label_text: &str, profile: &CorpusProfile) -> RelationLabel {
    if profile.granularity == Granularity::D2 {
        return RelationLabel::Association;
    }
    if let Some(l) = profile.label_map.get(label_text) {
        return l.clone();
    }
    if let Some((_, l)) = profile
        .label_map
        .iter()
        .find(|(k, _)| k.eq_ignore_ascii_case(label_text))
    {
        return l.clone();
    }
    RelationLabel::canonical_from_text(label_text).unwrap_or(RelationLabel::Association)
}

/// Context for a pair: the whole text (b1) or the first sentence in which
/// both concepts co-occur (b2).
pub fn delimit_context(
    doc: &Document,
    sentences: &[SentenceSpan],
    pair: &ConceptPair,
    level: LevelSolution,
) -> Option<(TextSpan, ContextLevel)> {
    match level {
        LevelSolution::B1 => Some((TextSpan::new(0, doc.text_len()), ContextLevel::Document)),
        LevelSolution::B2 => find_cooccurrence_in(doc, sentences, &pair.id1, &pair.id2)
            .map(|s| (s.span(), ContextLevel::Sentence)),
    }
}

/// Labels every allowed pair of a document according to the profile's
/// negative policy. Returns the labeled pairs and the relations dropped on
/// the way; two annotations that disagree on one pair are an error.
pub fn apply_negative_policy(
    doc: &Document,
    sentences: &[SentenceSpan],
    profile: &CorpusProfile,
    allowed: &AllowedPairs,
    corpus: &str,
) -> Result<(Vec<LabeledPair>, Vec<ReportRecord>)> {
    let mut report = Vec::new();
    let mut annotated: BTreeMap<ConceptPair, (RelationLabel, &RawRelation)> = BTreeMap::new();
    for rel in &doc.relations {
        let (t1, t2) = match (doc.concept_type(&rel.id1), doc.concept_type(&rel.id2)) {
            (Some(t1), Some(t2)) => (t1, t2),
            _ => {
                report.push(ReportRecord::dropped(corpus, &doc.id, rel, Stage::Policy, REASON_ENTITY_NOT_FOUND));
                continue;
            }
        };
        let pair = match ConceptPair::canonicalize(&rel.id1, t1, &rel.id2, t2) {
            Ok(p) => p,
            Err(_) => {
                report.push(ReportRecord::dropped(corpus, &doc.id, rel, Stage::Policy, REASON_SELF_PAIR));
                continue;
            }
        };
        if !allowed.permits(&pair.type1, &pair.type2) {
            report.push(ReportRecord::dropped(corpus, &doc.id, rel, Stage::Policy, REASON_PAIR_NOT_ALLOWED));
            continue;
        }
        let label = map_label(&rel.label, profile);
        match annotated.get(&pair) {
            Some((prev, _)) if *prev == label => {
                report.push(ReportRecord::dropped(corpus, &doc.id, rel, Stage::Policy, REASON_DUPLICATE));
            }
            Some((prev, _)) => {
                return Err(Error::Conflict {
                    doc_id: doc.id.clone(),
                    id1: pair.id1.clone(),
                    id2: pair.id2.clone(),
                    first: prev.to_string(),
                    second: label.to_string(),
                })
            }
            None => {
                annotated.insert(pair, (label, rel));
            }
        }
    }

    let negative = match profile.negative_policy {
        NegativePolicy::C1 => Some(RelationLabel::internal_none(corpus)?),
        NegativePolicy::C2 => Some(RelationLabel::None),
        NegativePolicy::C3 => None,
    };

    let mut pairs = Vec::new();
    for candidate in enumerate_pairs(doc, allowed) {
        let context = delimit_context(doc, sentences, &candidate.pair, profile.level);
        match (annotated.remove(&candidate.pair), context) {
            (Some((label, _)), Some((span, level))) => pairs.push(LabeledPair {
                pair: candidate.pair,
                label,
                level,
                context: span,
                annotated: true,
            }),
            (Some((_, rel)), None) => {
                report.push(ReportRecord::dropped(corpus, &doc.id, rel, Stage::Context, REASON_NO_COOCCURRENCE));
            }
            (None, Some((span, level))) => {
                if let Some(label) = &negative {
                    pairs.push(LabeledPair {
                        pair: candidate.pair,
                        label: label.clone(),
                        level,
                        context: span,
                        annotated: false,
                    });
                }
            }
            (None, None) => {}
        }
    }
    debug_assert!(annotated.is_empty(), "every annotated pair is an enumerated candidate");
    Ok((pairs, report))
}

/// Output of [`harmonize_corpus`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Harmonization {
    pub corpus: HarmonizedCorpus,
    pub report: Vec<ReportRecord>,
}

/// Runs span recovery, retagging and the per-pair steps for one corpus.
///
/// `tag` overrides the profile name as the corpus tag. Documents with
/// conflicting annotations are left out; the conflict and each of their
/// relations are reported.
pub fn harmonize_corpus(
    docs: Vec<Document>,
    profile: &CorpusProfile,
    aux: Option<&AnnotationSource>,
    tag: Option<&str>,
) -> Result<Harmonization> {
    profile.validate()?;
    let tag = tag.unwrap_or(&profile.name).to_string();
    validate_corpus_name(&tag)?;

    let (docs, mut report) = recover_spans(docs, aux, profile.span_solution, &tag)?;
    let docs = retag_entities(docs, profile)?;
    let allowed = profile.allowed();

    let results: Vec<(Document, Result<(Vec<LabeledPair>, Vec<ReportRecord>)>)> = docs
        .into_par_iter()
        .map(|doc| {
            let sentences = document_sentences(&doc);
            let r = apply_negative_policy(&doc, &sentences, profile, &allowed, &tag);
            (doc, r)
        })
        .collect();

    let mut documents = Vec::with_capacity(results.len());
    for (doc, result) in results {
        match result {
            Ok((pairs, drops)) => {
                report.extend(drops);
                documents.push(HarmonizedDocument {
                    corpus: tag.clone(),
                    document: doc,
                    pairs,
                });
            }
            Err(Error::Conflict { id1, id2, first, second, .. }) => {
                report.push(ReportRecord {
                    kind: ReportKind::Conflict,
                    corpus: tag.clone(),
                    doc_id: doc.id.clone(),
                    pair: Some([id1, id2]),
                    stage: Stage::Policy,
                    reason: format!("{REASON_CONFLICT}: {first} vs {second}"),
                });
                for rel in &doc.relations {
                    report.push(ReportRecord::dropped(&tag, &doc.id, rel, Stage::Policy, REASON_CONFLICT));
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Harmonization {
        corpus: HarmonizedCorpus { tag, documents },
        report,
    })
}

/// A source corpus as read from disk.
#[derive(Debug, Clone)]
pub enum CorpusInput {
    /// Documents with text (and spans, for a1 corpora).
    Annotated(Vec<Document>),
    /// Span-less triples; text comes from the annotation documents.
    Repository(Vec<RepositoryRecord>),
}

impl CorpusInput {
    pub fn relation_count(&self) -> usize {
        match self {
            CorpusInput::Annotated(docs) => docs.iter().map(|d| d.relations.len()).sum(),
            CorpusInput::Repository(records) => records.len(),
        }
    }
}

/// Ingests `input` and runs [`harmonize_corpus`]. `annotations` supplies
/// automatic mentions (and, for repository input, the document texts).
pub fn harmonize_input(
    input: CorpusInput,
    profile: &CorpusProfile,
    annotations: Option<Vec<Document>>,
    lexicon: Option<Lexicon>,
    tag: Option<&str>,
) -> Result<Harmonization> {
    let corpus = tag.unwrap_or(&profile.name);
    let (docs, ingest) = match input {
        CorpusInput::Annotated(docs) => (docs, Vec::new()),
        CorpusInput::Repository(records) => {
            let texts = annotations.as_deref().ok_or_else(|| {
                Error::Config("repository input needs annotated documents that supply the texts".into())
            })?;
            documents_from_repository(&records, texts, corpus)
        }
    };
    let source = match (annotations, lexicon) {
        (None, None) => None,
        (docs, lexicon) => {
            let mut s = docs.map(|d| AnnotationSource::from_documents(&d)).unwrap_or_default();
            s.lexicon = lexicon;
            Some(s)
        }
    };
    let mut h = harmonize_corpus(docs, profile, source.as_ref(), tag)?;
    if !ingest.is_empty() {
        let mut report = ingest;
        report.append(&mut h.report);
        h.report = report;
    }
    Ok(h)
}

/// Concatenates harmonized corpora. Documents keep their source corpus tag,
/// so equal document ids from different corpora stay separate.
pub fn merge_corpora(corpora: Vec<HarmonizedCorpus>) -> Result<HarmonizedCorpus> {
    if corpora.is_empty() {
        return Err(Error::Range("nothing to merge".into()));
    }
    let mut tags = BTreeSet::new();
    let mut sources: BTreeMap<&str, &str> = BTreeMap::new();
    for c in &corpora {
        if !tags.insert(c.tag.as_str()) {
            return Err(Error::Duplicate {
                what: "corpus tag",
                key: c.tag.clone(),
            });
        }
        for d in &c.documents {
            if let Some(prev) = sources.insert(d.corpus.as_str(), c.tag.as_str()) {
                if prev != c.tag {
                    return Err(Error::Duplicate {
                        what: "corpus tag",
                        key: d.corpus.clone(),
                    });
                }
            }
        }
    }
    if corpora.len() == 1 {
        return Ok(corpora.into_iter().next().expect("one corpus"));
    }
    let tag = corpora.iter().map(|c| c.tag.as_str()).collect::<Vec<_>>().join("+");
    let documents = corpora.into_iter().flat_map(|c| c.documents).collect();
    Ok(HarmonizedCorpus { tag, documents })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profiles;

    fn m(start: usize, end: usize, text: &str, t: EntityType, id: &str) -> EntityMention {
        EntityMention::new(start, end, text, t, vec![id.to_string()]).unwrap()
    }

    #[test]
    fn drugprot_granular_labels() {
        let p = profiles::drugprot();
        assert_eq!(map_label("INHIBITOR", &p), RelationLabel::NegativeCorrelation);
        assert_eq!(map_label("ACTIVATOR", &p), RelationLabel::PositiveCorrelation);
        assert_eq!(map_label("PRODUCT-OF", &p), RelationLabel::Association);
        assert_eq!(map_label("Bind", &p), RelationLabel::Bind);
    }

    #[test]
    fn d2_is_always_association() {
        let p = profiles::aimed();
        for t in ["interaction", "INHIBITOR", "Bind", ""] {
            assert_eq!(map_label(t, &p), RelationLabel::Association);
        }
    }

    #[test]
    fn retag_e1_and_e2() {
        let d = Document::new(
            "1",
            "x",
            "aspirin and COX",
            vec![m(2, 9, "aspirin", EntityType::Chemical, "C1"), m(14, 17, "COX", EntityType::Gene, "N1")],
            vec![],
        )
        .unwrap();
        let out = retag_entities(vec![d.clone()], &profiles::drugprot()).unwrap();
        assert_eq!(out[0].mentions[0].entity_type, EntityType::Internal("DrugProt-Chem".into()));
        assert_eq!(out[0].mentions[1].entity_type, EntityType::Gene);

        let protein = Document::new(
            "2",
            "x",
            "p53",
            vec![m(2, 5, "p53", EntityType::Internal("protein".into()), "P1")],
            vec![],
        )
        .unwrap();
        let out = retag_entities(vec![protein], &profiles::aimed()).unwrap();
        assert_eq!(out[0].mentions[0].entity_type, EntityType::Gene);

        let out = retag_entities(vec![d.clone()], &profiles::disgenet()).unwrap();
        assert_eq!(out, vec![d]);
    }

    #[test]
    fn retag_e1_with_canonical_target_is_config_error() {
        let mut p = profiles::drugprot();
        p.entity_type_map.insert("Disease".into(), EntityType::Gene);
        assert!(matches!(retag_entities(vec![], &p), Err(Error::Config(_))));
    }

    #[test]
    fn a2_a3_require_a_source() {
        assert!(matches!(recover_spans(vec![], None, SpanSolution::A2, "X"), Err(Error::Config(_))));
        let empty = AnnotationSource::default();
        assert!(matches!(recover_spans(vec![], Some(&empty), SpanSolution::A3, "X"), Err(Error::Config(_))));
        assert!(recover_spans(vec![], None, SpanSolution::A1, "X").unwrap().1.is_empty());
    }

    #[test]
    fn merge_rejects_duplicate_tags_and_adds_counts() {
        let a = HarmonizedCorpus::empty("A");
        assert!(matches!(
            merge_corpora(vec![a.clone(), a.clone()]),
            Err(Error::Duplicate { .. })
        ));
        let merged = merge_corpora(vec![a.clone(), HarmonizedCorpus::empty("B")]).unwrap();
        assert_eq!(merged.tag, "A+B");
        assert_eq!(merge_corpora(vec![a.clone()]).unwrap(), a);
    }
}
