//! Shared domain vocabulary: entity types, relation labels, mentions,
//! documents, corpus profiles and candidate instances.
//!
//! All character offsets are 0-based, half-open and counted in Unicode scalar
//! values over the combined document text `title + " " + abstract`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// Entity types
// ---------------------------------------------------------------------------

/// Entity type of a mention or concept.
///
/// Canonical kinds are the three target-schema types. `Internal` types are
/// corpus-scoped kinds (e.g. `DrugProt-Chem`) used when a source corpus
/// defines an entity class differently from the target schema.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum EntityType {
    Gene,
    Chemical,
    Disease,
    Internal(String),
}

/// Source type names (lowercased) recognized as canonical kinds at ingestion.
/// Variants and mutations are folded into genes.
const CANONICAL_ALIASES: &[(&str, EntityType)] = &[
    ("gene", EntityType::Gene),
    ("geneorgeneproduct", EntityType::Gene),
    ("variant", EntityType::Gene),
    ("sequencevariant", EntityType::Gene),
    ("mutation", EntityType::Gene),
    ("dnamutation", EntityType::Gene),
    ("proteinmutation", EntityType::Gene),
    ("snp", EntityType::Gene),
    ("chemical", EntityType::Chemical),
    ("chemicalentity", EntityType::Chemical),
    ("disease", EntityType::Disease),
    ("diseaseorphenotypicfeature", EntityType::Disease),
];

const RESERVED_TAG_CODES: &[&str] = &["G", "C", "D"];

impl EntityType {
    /// Parses a source type name. Canonical names and their aliases are
    /// matched case-insensitively; anything else becomes an internal kind.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some(kind) = Self::canonical_alias(text) {
            return Ok(kind);
        }
        Self::internal(text)
    }

    /// Builds an internal kind, rejecting names that would be ambiguous with
    /// a canonical kind or unusable as a boundary tag.
    pub fn internal(tag: &str) -> Result<Self> {
        if tag.is_empty() {
            return Err(Error::invalid("entity type", "internal type name is empty"));
        }
        if tag.chars().any(|c| c.is_whitespace() || c == '<' || c == '>' || c == '/' || c == ',') {
            return Err(Error::invalid(
                "entity type",
                format!("internal type name {tag:?} contains whitespace or reserved characters"),
            ));
        }
        if Self::canonical_alias(tag).is_some() || RESERVED_TAG_CODES.contains(&tag) {
            return Err(Error::invalid(
                "entity type",
                format!("internal type name {tag:?} collides with a canonical kind"),
            ));
        }
        Ok(EntityType::Internal(tag.to_string()))
    }

    fn canonical_alias(text: &str) -> Option<Self> {
        let lower = text.to_ascii_lowercase();
        CANONICAL_ALIASES
            .iter()
            .find(|(alias, _)| *alias == lower)
            .map(|(_, kind)| kind.clone())
    }

    /// Kind name; the primary key of canonical pair ordering.
    pub fn name(&self) -> &str {
        match self {
            EntityType::Gene => "Gene",
            EntityType::Chemical => "Chemical",
            EntityType::Disease => "Disease",
            EntityType::Internal(tag) => tag,
        }
    }

    /// Boundary-tag code: `G`, `C`, `D`, or the internal type name.
    pub fn tag_code(&self) -> &str {
        match self {
            EntityType::Gene => "G",
            EntityType::Chemical => "C",
            EntityType::Disease => "D",
            EntityType::Internal(tag) => tag,
        }
    }

    pub fn is_canonical(&self) -> bool {
        !matches!(self, EntityType::Internal(_))
    }
}

impl Ord for EntityType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.name().cmp(other.name())
    }
}

impl PartialOrd for EntityType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EntityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EntityType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        EntityType::parse(s)
    }
}

impl TryFrom<String> for EntityType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        EntityType::parse(&s)
    }
}

impl From<EntityType> for String {
    fn from(t: EntityType) -> String {
        t.name().to_string()
    }
}

// ---------------------------------------------------------------------------
// Relation labels
// ---------------------------------------------------------------------------

/// Relation label in the unified eight-type schema, plus the two
/// absence markers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum RelationLabel {
    PositiveCorrelation,
    NegativeCorrelation,
    Association,
    Bind,
    DrugInteraction,
    Cotreatment,
    Comparison,
    Conversion,
    /// Curated absence of a relation.
    None,
    /// Pair outside the named corpus's annotation scope (`None-<corpus>`).
    InternalNone(String),
}

const INTERNAL_NONE_PREFIX: &str = "None-";

impl RelationLabel {
    pub const CANONICAL: [RelationLabel; 8] = [
        RelationLabel::PositiveCorrelation,
        RelationLabel::NegativeCorrelation,
        RelationLabel::Association,
        RelationLabel::Bind,
        RelationLabel::DrugInteraction,
        RelationLabel::Cotreatment,
        RelationLabel::Comparison,
        RelationLabel::Conversion,
    ];

    pub fn internal_none(corpus: &str) -> Result<Self> {
        validate_corpus_name(corpus)?;
        Ok(RelationLabel::InternalNone(corpus.to_string()))
    }

    /// True for `None` and `InternalNone`, which denote absence of a relation.
    pub fn is_absent(&self) -> bool {
        matches!(self, RelationLabel::None | RelationLabel::InternalNone(_))
    }

    /// Recognizes one of the eight relation types, ignoring case and the
    /// separators `_`, `-` and space (`Positive_Correlation`,
    /// `positive correlation` and `PositiveCorrelation` are equivalent).
    pub fn canonical_from_text(text: &str) -> Option<Self> {
        let folded: String = text
            .chars()
            .filter(|c| !matches!(c, '_' | '-' | ' '))
            .map(|c| c.to_ascii_lowercase())
            .collect();
        Self::CANONICAL
            .iter()
            .find(|l| {
                l.to_string()
                    .chars()
                    .filter(|c| *c != '_')
                    .map(|c| c.to_ascii_lowercase())
                    .eq(folded.chars())
            })
            .cloned()
    }
}

impl fmt::Display for RelationLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationLabel::PositiveCorrelation => "Positive_Correlation",
            RelationLabel::NegativeCorrelation => "Negative_Correlation",
            RelationLabel::Association => "Association",
            RelationLabel::Bind => "Bind",
            RelationLabel::DrugInteraction => "Drug_Interaction",
            RelationLabel::Cotreatment => "Cotreatment",
            RelationLabel::Comparison => "Comparison",
            RelationLabel::Conversion => "Conversion",
            RelationLabel::None => "None",
            RelationLabel::InternalNone(corpus) => return write!(f, "{INTERNAL_NONE_PREFIX}{corpus}"),
        };
        f.write_str(s)
    }
}

impl FromStr for RelationLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Some(corpus) = s.strip_prefix(INTERNAL_NONE_PREFIX) {
            return RelationLabel::internal_none(corpus);
        }
        if s.eq_ignore_ascii_case("none") {
            return Ok(RelationLabel::None);
        }
        RelationLabel::canonical_from_text(s)
            .ok_or_else(|| Error::invalid("relation label", format!("unknown label {s:?}")))
    }
}

impl TryFrom<String> for RelationLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<RelationLabel> for String {
    fn from(l: RelationLabel) -> String {
        l.to_string()
    }
}

pub(crate) fn validate_corpus_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c.is_control()) {
        return Err(Error::invalid(
            "corpus name",
            format!("{name:?} must be non-empty without whitespace"),
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Text offsets
// ---------------------------------------------------------------------------

/// Half-open character span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TextSpan {
    pub start: usize,
    pub end: usize,
}

impl TextSpan {
    pub fn new(start: usize, end: usize) -> Self {
        TextSpan { start, end }
    }

    pub fn len(&self) -> usize {
        self.end.saturating_sub(self.start)
    }

    pub fn is_empty(&self) -> bool {
        self.end <= self.start
    }

    pub fn contains(&self, inner: &TextSpan) -> bool {
        self.start <= inner.start && inner.end <= self.end
    }
}

/// Character-offset index over a string.
pub struct TextIndex<'a> {
    text: &'a str,
    byte_offsets: Vec<usize>,
}

impl<'a> TextIndex<'a> {
    pub fn new(text: &'a str) -> Self {
        let mut byte_offsets: Vec<usize> = text.char_indices().map(|(b, _)| b).collect();
        byte_offsets.push(text.len());
        TextIndex { text, byte_offsets }
    }

    pub fn char_len(&self) -> usize {
        self.byte_offsets.len() - 1
    }

    pub fn slice(&self, start: usize, end: usize) -> Option<&'a str> {
        if start > end || end > self.char_len() {
            return None;
        }
        Some(&self.text[self.byte_offsets[start]..self.byte_offsets[end]])
    }
}

// ---------------------------------------------------------------------------
// Mentions, relations, documents
// ---------------------------------------------------------------------------

pub(crate) fn validate_token(what: &'static str, s: &str) -> Result<()> {
    if s.is_empty() {
        return Err(Error::invalid(what, "empty value"));
    }
    if s.chars().any(|c| c.is_whitespace() || c.is_control() || c == ',') {
        return Err(Error::invalid(
            what,
            format!("{s:?} contains whitespace, control characters or ','"),
        ));
    }
    Ok(())
}

/// One entity mention; `concept_ids` has more than one entry for composite
/// mentions such as "breast or ovarian cancer".
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EntityMention {
    pub start: usize,
    pub end: usize,
    pub text: String,
    pub entity_type: EntityType,
    pub concept_ids: Vec<String>,
}

impl EntityMention {
    pub fn new(
        start: usize,
        end: usize,
        text: impl Into<String>,
        entity_type: EntityType,
        concept_ids: Vec<String>,
    ) -> Result<Self> {
        let mention = EntityMention {
            start,
            end,
            text: text.into(),
            entity_type,
            concept_ids,
        };
        mention.validate_shape()?;
        Ok(mention)
    }

    fn validate_shape(&self) -> Result<()> {
        if self.start >= self.end {
            return Err(Error::invalid(
                "mention",
                format!("empty or inverted span [{}, {})", self.start, self.end),
            ));
        }
        if self.concept_ids.is_empty() {
            return Err(Error::invalid("mention", "no concept identifiers"));
        }
        for (i, id) in self.concept_ids.iter().enumerate() {
            validate_token("concept id", id)?;
            if self.concept_ids[..i].contains(id) {
                return Err(Error::invalid("mention", format!("repeated concept id {id}")));
            }
        }
        if self.text.contains(['\t', '\n', '\r']) {
            return Err(Error::invalid("mention", "surface text contains tab or newline"));
        }
        Ok(())
    }

    /// Checks that the mention's span slices exactly to its text.
    pub fn validate_in(&self, index: &TextIndex<'_>) -> Result<()> {
        self.validate_shape()?;
        match index.slice(self.start, self.end) {
            None => Err(Error::invalid(
                "mention",
                format!(
                    "span [{}, {}) outside text of length {}",
                    self.start,
                    self.end,
                    index.char_len()
                ),
            )),
            Some(slice) if slice != self.text => Err(Error::invalid(
                "mention",
                format!("text {:?} does not match span slice {:?}", self.text, slice),
            )),
            Some(_) => Ok(()),
        }
    }

    pub fn span(&self) -> TextSpan {
        TextSpan::new(self.start, self.end)
    }

    pub fn carries(&self, id: &str) -> bool {
        self.concept_ids.iter().any(|c| c == id)
    }

    /// Canonical ordering key: (start, end, concept ids).
    pub fn sort_key(&self) -> (usize, usize, &[String]) {
        (self.start, self.end, &self.concept_ids)
    }
}

/// A relation line as found in a source corpus: the label is raw text and is
/// mapped onto [`RelationLabel`] during harmonization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RawRelation {
    pub label: String,
    pub id1: String,
    pub id2: String,
}

impl RawRelation {
    pub fn new(label: impl Into<String>, id1: impl Into<String>, id2: impl Into<String>) -> Result<Self> {
        let rel = RawRelation {
            label: label.into(),
            id1: id1.into(),
            id2: id2.into(),
        };
        rel.validate()?;
        Ok(rel)
    }

    fn validate(&self) -> Result<()> {
        validate_token("concept id", &self.id1)?;
        validate_token("concept id", &self.id2)?;
        if self.label.is_empty() || self.label.contains(['\t', '\n', '\r']) {
            return Err(Error::invalid("relation label text", format!("{:?}", self.label)));
        }
        Ok(())
    }
}

/// A titled abstract with its mentions and source relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DocumentRepr")]
pub struct Document {
    pub id: String,
    pub title: String,
    pub abstract_text: String,
    pub mentions: Vec<EntityMention>,
    pub relations: Vec<RawRelation>,
}

#[derive(Deserialize)]
struct DocumentRepr {
    id: String,
    title: String,
    abstract_text: String,
    mentions: Vec<EntityMention>,
    relations: Vec<RawRelation>,
}

impl TryFrom<DocumentRepr> for Document {
    type Error = Error;
    fn try_from(r: DocumentRepr) -> Result<Self> {
        Document::new(r.id, r.title, r.abstract_text, r.mentions, r.relations)
    }
}

pub(crate) fn validate_doc_id(id: &str) -> Result<()> {
    if id.is_empty()
        || id.starts_with('#')
        || id.chars().any(|c| c.is_whitespace() || c.is_control() || c == '|')
    {
        return Err(Error::invalid("document id", format!("{id:?}")));
    }
    Ok(())
}

impl Document {
    /// Validates every invariant and sorts mentions into canonical order.
    pub fn new(
        id: impl Into<String>,
        title: impl Into<String>,
        abstract_text: impl Into<String>,
        mut mentions: Vec<EntityMention>,
        relations: Vec<RawRelation>,
    ) -> Result<Self> {
        let id = id.into();
        let title = title.into();
        let abstract_text = abstract_text.into();
        validate_doc_id(&id)?;
        if title.contains(['\n', '\r']) || abstract_text.contains(['\n', '\r']) {
            return Err(Error::invalid("document", format!("{id}: title or abstract contains a newline")));
        }
        let text = combine(&title, &abstract_text);
        let index = TextIndex::new(&text);
        for m in &mentions {
            m.validate_in(&index)
                .map_err(|e| Error::invalid("document", format!("{id}: {e}")))?;
        }
        for r in &relations {
            r.validate()?;
        }
        mentions.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(Document {
            id,
            title,
            abstract_text,
            mentions,
            relations,
        })
    }

    /// Combined text: title, one space, abstract.
    pub fn text(&self) -> String {
        combine(&self.title, &self.abstract_text)
    }

    /// Length of the title in characters; the separator sits at this offset.
    pub fn title_len(&self) -> usize {
        self.title.chars().count()
    }

    pub fn text_len(&self) -> usize {
        self.title_len() + 1 + self.abstract_text.chars().count()
    }

    /// Entity type of a concept: the type of its first mention in document order.
    pub fn concept_type(&self, id: &str) -> Option<&EntityType> {
        self.mentions.iter().find(|m| m.carries(id)).map(|m| &m.entity_type)
    }

    pub fn has_concept(&self, id: &str) -> bool {
        self.mentions.iter().any(|m| m.carries(id))
    }

    /// Distinct concept ids with their types, in order of first mention.
    pub fn concepts(&self) -> Vec<(&str, &EntityType)> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for m in &self.mentions {
            for id in &m.concept_ids {
                if seen.insert(id.as_str()) {
                    out.push((id.as_str(), &m.entity_type));
                }
            }
        }
        out
    }
}

fn combine(title: &str, abstract_text: &str) -> String {
    let mut s = String::with_capacity(title.len() + 1 + abstract_text.len());
    s.push_str(title);
    s.push(' ');
    s.push_str(abstract_text);
    s
}

// ---------------------------------------------------------------------------
// Concept pairs
// ---------------------------------------------------------------------------

/// Unordered concept pair stored in canonical order: entity-type name first,
/// concept id second.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConceptPair {
    pub id1: String,
    pub type1: EntityType,
    pub id2: String,
    pub type2: EntityType,
}

impl ConceptPair {
    pub fn canonicalize(id_a: &str, type_a: &EntityType, id_b: &str, type_b: &EntityType) -> Result<Self> {
        if id_a == id_b {
            return Err(Error::SelfPair(id_a.to_string()));
        }
        let a = (type_a.name(), id_a);
        let b = (type_b.name(), id_b);
        let ((id1, type1), (id2, type2)) = if a <= b {
            ((id_a, type_a), (id_b, type_b))
        } else {
            ((id_b, type_b), (id_a, type_a))
        };
        Ok(ConceptPair {
            id1: id1.to_string(),
            type1: type1.clone(),
            id2: id2.to_string(),
            type2: type2.clone(),
        })
    }

    fn key(&self) -> (&str, &str, &str, &str) {
        (self.type1.name(), &self.id1, self.type2.name(), &self.id2)
    }

    /// Type-kind pair label, e.g. `<Chemical,Disease>`.
    pub fn kind_label(&self) -> String {
        format!("<{},{}>", self.type1, self.type2)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.id1 == id || self.id2 == id
    }
}

impl Ord for ConceptPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for ConceptPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// ---------------------------------------------------------------------------
// Corpus profiles
// ---------------------------------------------------------------------------

macro_rules! axis_enum {
    ($(#[$meta:meta])* $name:ident, $axis:literal, { $($variant:ident => $code:literal),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const AXIS: &'static str = $axis;

            pub fn code(self) -> &'static str {
                match self { $($name::$variant => $code),+ }
            }

            pub fn from_code(code: &str) -> Result<Self> {
                match code {
                    $($code => Ok($name::$variant),)+
                    other => Err(Error::Profile {
                        axis: $axis,
                        message: format!("unknown code {other:?}"),
                    }),
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.code())
            }
        }
    };
}

axis_enum!(
    /// How entity spans are obtained.
    SpanSolution, "span_solution", { A1 => "a1", A2 => "a2", A3 => "a3" }
);
axis_enum!(
    /// Document (whole abstract) or sentence (co-occurring sentence) input.
    LevelSolution, "level", { B1 => "b1", B2 => "b2" }
);
axis_enum!(
    /// Treatment of pairs without a curated relation.
    NegativePolicy, "negative_policy", { C1 => "c1", C2 => "c2", C3 => "c3" }
);
axis_enum!(
    /// Whether granular labels are mapped (d1) or collapsed to Association (d2).
    Granularity, "granularity", { D1 => "d1", D2 => "d2" }
);
axis_enum!(
    /// Whether entity types become internal kinds (e1) or target kinds (e2).
    EntityPolicy, "entity_policy", { E1 => "e1", E2 => "e2" }
);

/// Unordered pair of entity types, stored sorted.
pub type KindPair = (EntityType, EntityType);

pub fn kind_pair(a: EntityType, b: EntityType) -> KindPair {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Allowed type-kind pairs together with the canonical base kind of every
/// internal type a profile introduces.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AllowedPairs {
    pub pairs: BTreeSet<KindPair>,
    pub internal_base: BTreeMap<String, EntityType>,
}

impl AllowedPairs {
    pub fn new(pairs: impl IntoIterator<Item = KindPair>) -> Self {
        AllowedPairs {
            pairs: pairs.into_iter().map(|(a, b)| kind_pair(a, b)).collect(),
            internal_base: BTreeMap::new(),
        }
    }

    /// Canonical kind used for pair admission; internal kinds resolve through
    /// their base, unknown internal kinds resolve to nothing.
    pub fn base_kind<'a>(&'a self, t: &'a EntityType) -> Option<&'a EntityType> {
        match t {
            EntityType::Internal(tag) => self.internal_base.get(tag),
            canonical => Some(canonical),
        }
    }

    pub fn permits(&self, a: &EntityType, b: &EntityType) -> bool {
        match (self.base_kind(a), self.base_kind(b)) {
            (Some(a), Some(b)) => self.pairs.contains(&kind_pair(a.clone(), b.clone())),
            _ => false,
        }
    }
}

/// A corpus's position on the five characteristic axes plus its label and
/// entity-type maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusProfile {
    pub name: String,
    pub span_solution: SpanSolution,
    pub level: LevelSolution,
    pub negative_policy: NegativePolicy,
    pub granularity: Granularity,
    pub entity_policy: EntityPolicy,
    pub label_map: BTreeMap<String, RelationLabel>,
    pub entity_type_map: BTreeMap<String, EntityType>,
    pub allowed_pairs: BTreeSet<KindPair>,
}

impl CorpusProfile {
    pub fn validate(&self) -> Result<()> {
        validate_corpus_name(&self.name).map_err(|e| Error::Profile {
            axis: "name",
            message: e.to_string(),
        })?;
        match self.granularity {
            Granularity::D2 if !self.label_map.is_empty() => {
                return Err(Error::Profile {
                    axis: Granularity::AXIS,
                    message: "d2 requires an empty label_map".into(),
                })
            }
            Granularity::D1 if self.label_map.is_empty() => {
                return Err(Error::Profile {
                    axis: Granularity::AXIS,
                    message: "d1 requires a non-empty label_map".into(),
                })
            }
            _ => {}
        }
        let internal_targets = self.entity_type_map.values().filter(|t| !t.is_canonical()).count();
        match self.entity_policy {
            EntityPolicy::E1 if internal_targets == 0 => {
                return Err(Error::Profile {
                    axis: EntityPolicy::AXIS,
                    message: "e1 requires at least one internal entity type target".into(),
                })
            }
            EntityPolicy::E2 if internal_targets > 0 => {
                return Err(Error::Profile {
                    axis: EntityPolicy::AXIS,
                    message: "e2 requires canonical entity type targets only".into(),
                })
            }
            _ => {}
        }
        if self.allowed_pairs.is_empty() {
            return Err(Error::Profile {
                axis: "allowed_pairs",
                message: "at least one allowed pair is required".into(),
            });
        }
        for (a, b) in &self.allowed_pairs {
            if !a.is_canonical() || !b.is_canonical() {
                return Err(Error::Profile {
                    axis: "allowed_pairs",
                    message: format!("pair <{a},{b}> must use canonical kinds"),
                });
            }
        }
        Ok(())
    }

    /// Allowed pairs with internal kinds resolved through the entity map: an
    /// entry `Chemical -> DrugProt-Chem` makes `DrugProt-Chem` count as a
    /// chemical for pair admission.
    pub fn allowed(&self) -> AllowedPairs {
        let mut allowed = AllowedPairs::new(self.allowed_pairs.iter().cloned());
        for (source, target) in &self.entity_type_map {
            if let (EntityType::Internal(tag), Ok(base)) = (target, EntityType::parse(source)) {
                if base.is_canonical() {
                    allowed.internal_base.entry(tag.clone()).or_insert(base);
                }
            }
        }
        allowed
    }
}

// ---------------------------------------------------------------------------
// Candidate instances
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContextLevel {
    Document,
    Sentence,
}

impl fmt::Display for ContextLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContextLevel::Document => "document",
            ContextLevel::Sentence => "sentence",
        })
    }
}

impl FromStr for ContextLevel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "document" => Ok(ContextLevel::Document),
            "sentence" => Ok(ContextLevel::Sentence),
            other => Err(Error::invalid("context level", format!("{other:?}"))),
        }
    }
}

/// One classifiable unit: tagged context, prompt question and label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateInstance {
    pub doc_id: String,
    pub corpus: String,
    pub pair: ConceptPair,
    pub prompt: String,
    pub context: String,
    pub label: RelationLabel,
    pub level: ContextLevel,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalize_orders_by_type_name_then_id() {
        let p = ConceptPair::canonicalize("N1", &EntityType::Gene, "D010051", &EntityType::Disease).unwrap();
        assert_eq!((p.id1.as_str(), &p.type1), ("D010051", &EntityType::Disease));
        assert_eq!((p.id2.as_str(), &p.type2), ("N1", &EntityType::Gene));
    }

    #[test]
    fn canonicalize_rejects_self_pair() {
        let err = ConceptPair::canonicalize("idX", &EntityType::Gene, "idX", &EntityType::Gene).unwrap_err();
        assert_eq!(err, Error::SelfPair("idX".into()));
    }

    #[test]
    fn variants_fold_into_gene() {
        assert_eq!(EntityType::parse("Variant").unwrap(), EntityType::Gene);
        assert_eq!(EntityType::parse("SequenceVariant").unwrap(), EntityType::Gene);
        assert_eq!(EntityType::parse("CHEMICAL").unwrap(), EntityType::Chemical);
        assert_eq!(
            EntityType::parse("DrugProt-Chem").unwrap(),
            EntityType::Internal("DrugProt-Chem".into())
        );
    }

    #[test]
    fn internal_type_rejects_canonical_and_blank_names() {
        assert!(EntityType::internal("Gene").is_err());
        assert!(EntityType::internal("gene").is_err());
        assert!(EntityType::internal("G").is_err());
        assert!(EntityType::internal("").is_err());
        assert!(EntityType::internal("two words").is_err());
    }

    #[test]
    fn label_text_forms() {
        assert_eq!("Positive_Correlation".parse::<RelationLabel>().unwrap(), RelationLabel::PositiveCorrelation);
        assert_eq!("drug interaction".parse::<RelationLabel>().unwrap(), RelationLabel::DrugInteraction);
        assert_eq!(
            "None-BC5CDR".parse::<RelationLabel>().unwrap(),
            RelationLabel::InternalNone("BC5CDR".into())
        );
        assert!("None-".parse::<RelationLabel>().is_err());
        assert!("CID".parse::<RelationLabel>().is_err());
    }

    #[test]
    fn mention_must_match_text() {
        let index = TextIndex::new("A. B binds C.");
        let ok = EntityMention::new(3, 4, "B", EntityType::Gene, vec!["N1".into()]).unwrap();
        assert!(ok.validate_in(&index).is_ok());
        let bad = EntityMention::new(3, 4, "X", EntityType::Gene, vec!["N1".into()]).unwrap();
        assert!(bad.validate_in(&index).is_err());
        let out = EntityMention::new(12, 14, "C.", EntityType::Gene, vec!["N1".into()]).unwrap();
        assert!(out.validate_in(&index).is_err());
        assert!(EntityMention::new(3, 4, "B", EntityType::Gene, vec![]).is_err());
        assert!(EntityMention::new(3, 4, "B", EntityType::Gene, vec!["a".into(), "a".into()]).is_err());
    }

    #[test]
    fn document_offsets_are_over_combined_text() {
        let doc = Document::new(
            "1",
            "A.",
            "B binds C.",
            vec![
                EntityMention::new(11, 12, "C", EntityType::Gene, vec!["N2".into()]).unwrap(),
                EntityMention::new(3, 4, "B", EntityType::Gene, vec!["N1".into()]).unwrap(),
            ],
            vec![],
        )
        .unwrap();
        assert_eq!(doc.text(), "A. B binds C.");
        assert_eq!(doc.mentions[0].start, 3);
        assert_eq!(doc.text_len(), 13);
    }

    #[test]
    fn internal_kinds_resolve_through_profile_entity_map() {
        let profile = CorpusProfile {
            name: "DrugProt".into(),
            span_solution: SpanSolution::A1,
            level: LevelSolution::B2,
            negative_policy: NegativePolicy::C1,
            granularity: Granularity::D1,
            entity_policy: EntityPolicy::E1,
            label_map: [("INHIBITOR".to_string(), RelationLabel::NegativeCorrelation)].into(),
            entity_type_map: [("CHEMICAL".to_string(), EntityType::Internal("DrugProt-Chem".into()))].into(),
            allowed_pairs: [kind_pair(EntityType::Gene, EntityType::Chemical)].into(),
        };
        profile.validate().unwrap();
        let allowed = profile.allowed();
        assert!(allowed.permits(&EntityType::Internal("DrugProt-Chem".into()), &EntityType::Gene));
        assert!(!allowed.permits(&EntityType::Internal("Other".into()), &EntityType::Gene));
        assert!(!allowed.permits(&EntityType::Gene, &EntityType::Gene));
    }
}
