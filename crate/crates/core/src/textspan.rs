//! Sentence segmentation, dictionary span recovery and co-occurrence search.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Document, EntityMention, EntityType, TextIndex, TextSpan};

/// Version of [`ABBREVIATIONS`]; bump whenever the list changes.
pub const ABBREVIATION_LIST_VERSION: u32 = 1;

/// Lowercased tokens (without the final period) that never end a sentence.
/// `al` only counts when preceded by `et`.
pub const ABBREVIATIONS: &[&str] = &[
    "e.g", "i.e", "fig", "figs", "vs", "cf", "ca", "approx", "dr", "mr", "mrs", "ms", "prof", "st",
    "no", "nos", "eq", "eqs", "ref", "refs", "resp", "al",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SentenceSpan {
    pub start: usize,
    pub end: usize,
    pub index: usize,
}

impl SentenceSpan {
    pub fn span(&self) -> TextSpan {
        TextSpan::new(self.start, self.end)
    }
}

fn token_before(chars: &[char], region_start: usize, period: usize) -> (String, Option<String>) {
    let mut s = period;
    while s > region_start && !chars[s - 1].is_whitespace() {
        s -= 1;
    }
    let token: String = chars[s..period]
        .iter()
        .skip_while(|c| !c.is_alphanumeric())
        .collect();
    // previous word, for two-word abbreviations like "et al."
    let mut e = s;
    while e > region_start && chars[e - 1].is_whitespace() {
        e -= 1;
    }
    let mut p = e;
    while p > region_start && !chars[p - 1].is_whitespace() {
        p -= 1;
    }
    let prev = (p < e).then(|| chars[p..e].iter().collect::<String>());
    (token, prev)
}

fn is_abbreviation(chars: &[char], region_start: usize, period: usize) -> bool {
    let (token, prev) = token_before(chars, region_start, period);
    let mut it = token.chars();
    if let (Some(c), None) = (it.next(), it.next()) {
        if c.is_uppercase() {
            return true;
        }
    }
    let lower = token.to_lowercase();
    if lower == "al" {
        return prev.is_some_and(|p| p.eq_ignore_ascii_case("et"));
    }
    ABBREVIATIONS.contains(&lower.as_str())
}

fn push_trimmed(chars: &[char], start: usize, end: usize, out: &mut Vec<SentenceSpan>) {
    let mut s = start;
    let mut e = end;
    while s < e && chars[s].is_whitespace() {
        s += 1;
    }
    while e > s && chars[e - 1].is_whitespace() {
        e -= 1;
    }
    if s < e {
        let index = out.len();
        out.push(SentenceSpan { start: s, end: e, index });
    }
}

fn segment_region(chars: &[char], start: usize, end: usize, out: &mut Vec<SentenceSpan>) {
    let mut sentence_start = start;
    let mut i = start;
    while i < end {
        let c = chars[i];
        if matches!(c, '.' | '!' | '?') && i + 1 < end && chars[i + 1].is_whitespace() {
            let mut j = i + 1;
            while j < end && chars[j].is_whitespace() {
                j += 1;
            }
            let opens_sentence = j < end && (chars[j].is_uppercase() || chars[j].is_ascii_digit());
            if opens_sentence && !(c == '.' && is_abbreviation(chars, start, i)) {
                push_trimmed(chars, sentence_start, i + 1, out);
                sentence_start = j;
                i = j;
                continue;
            }
        }
        i += 1;
    }
    push_trimmed(chars, sentence_start, end, out);
}

/// Rule-based segmentation of combined document text.
///
/// A boundary falls after `.`, `!` or `?` when followed by whitespace and
/// then an uppercase letter or digit, unless the period closes a known
/// abbreviation or a single uppercase initial. The first `title_len`
/// characters always form their own sentence.
pub fn segment_sentences(text: &str, title_len: usize) -> Vec<SentenceSpan> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let title_end = title_len.min(chars.len());
    if title_end > 0 {
        push_trimmed(&chars, 0, title_end, &mut out);
    }
    segment_region(&chars, title_end, chars.len(), &mut out);
    out
}

/// Sentences of a document's combined text.
pub fn document_sentences(doc: &Document) -> Vec<SentenceSpan> {
    segment_sentences(&doc.text(), doc.title_len())
}

// ---------------------------------------------------------------------------
// Lexicon matching
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexiconEntry {
    pub surface: String,
    pub entity_type: EntityType,
    pub concept_ids: Vec<String>,
}

/// Case-insensitive surface-form dictionary.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: Vec<(Vec<char>, LexiconEntry)>,
    by_key: HashMap<String, usize>,
    by_first: HashMap<char, Vec<usize>>,
}

fn fold(c: char) -> char {
    let mut lower = c.to_lowercase();
    match (lower.next(), lower.next()) {
        (Some(l), None) => l,
        _ => c,
    }
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, surface: &str, entity_type: EntityType, concept_ids: Vec<String>) -> Result<()> {
        let surface = surface.trim();
        if surface.is_empty() {
            return Err(Error::invalid("lexicon entry", "empty surface form"));
        }
        // reuse mention validation for the id list
        EntityMention::new(0, 1, "x", entity_type.clone(), concept_ids.clone())?;
        let folded: Vec<char> = surface.chars().map(fold).collect();
        let key: String = folded.iter().collect();
        if self.by_key.contains_key(&key) {
            return Err(Error::Duplicate {
                what: "lexicon surface form",
                key: surface.to_string(),
            });
        }
        let idx = self.entries.len();
        let first = folded[0];
        self.entries.push((
            folded,
            LexiconEntry {
                surface: surface.to_string(),
                entity_type,
                concept_ids,
            },
        ));
        self.by_key.insert(key, idx);
        let bucket = self.by_first.entry(first).or_default();
        bucket.push(idx);
        let entries = &self.entries;
        bucket.sort_by(|a, b| entries[*b].0.len().cmp(&entries[*a].0.len()).then(a.cmp(b)));
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.iter().map(|(_, e)| e)
    }
}

/// Greedy left-to-right, longest-match-first dictionary matching at token
/// boundaries. Output is sorted and non-overlapping.
pub fn dictionary_match(text: &str, lexicon: &Lexicon) -> Vec<EntityMention> {
    let chars: Vec<char> = text.chars().collect();
    let folded: Vec<char> = chars.iter().copied().map(fold).collect();
    let index = TextIndex::new(text);
    let n = chars.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        if i > 0 && chars[i - 1].is_alphanumeric() {
            i += 1;
            continue;
        }
        let hit = lexicon.by_first.get(&folded[i]).and_then(|bucket| {
            bucket.iter().find_map(|&idx| {
                let (form, entry) = &lexicon.entries[idx];
                let end = i + form.len();
                let fits = end <= n
                    && folded[i..end] == form[..]
                    && (end == n || !chars[end].is_alphanumeric());
                fits.then_some((end, entry))
            })
        });
        match hit {
            Some((end, entry)) => {
                let surface = index.slice(i, end).expect("match within text");
                out.push(EntityMention {
                    start: i,
                    end,
                    text: surface.to_string(),
                    entity_type: entry.entity_type.clone(),
                    concept_ids: entry.concept_ids.clone(),
                });
                i = end;
            }
            None => i += 1,
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Annotation attachment and co-occurrence
// ---------------------------------------------------------------------------

/// An automatic mention rejected during attachment.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachWarning {
    pub doc_id: String,
    pub start: usize,
    pub end: usize,
    pub text: String,
    pub reason: String,
}

/// Unions automatic mentions into a document, de-duplicated on
/// (start, end, ids). Mentions already present win on exact-span conflicts;
/// invalid automatic mentions are skipped with a warning.
pub fn attach_annotations(doc: &Document, auto: &[EntityMention]) -> (Document, Vec<AttachWarning>) {
    let text = doc.text();
    let index = TextIndex::new(&text);
    let mut spans: HashSet<(usize, usize)> = doc.mentions.iter().map(|m| (m.start, m.end)).collect();
    let mut mentions = doc.mentions.clone();
    let mut warnings = Vec::new();
    for m in auto {
        if let Err(e) = m.validate_in(&index) {
            warnings.push(AttachWarning {
                doc_id: doc.id.clone(),
                start: m.start,
                end: m.end,
                text: m.text.clone(),
                reason: e.to_string(),
            });
            continue;
        }
        if spans.insert((m.start, m.end)) {
            mentions.push(m.clone());
        }
    }
    let doc = Document::new(
        doc.id.clone(),
        doc.title.clone(),
        doc.abstract_text.clone(),
        mentions,
        doc.relations.clone(),
    )
    .expect("attached mentions were validated");
    (doc, warnings)
}

/// First sentence holding a mention of `id1` and a mention of `id2`; one
/// composite mention carrying both ids qualifies on its own.
pub fn find_cooccurrence_in(doc: &Document, sentences: &[SentenceSpan], id1: &str, id2: &str) -> Option<SentenceSpan> {
    sentences.iter().copied().find(|s| {
        let span = s.span();
        let inside = |id: &str| doc.mentions.iter().any(|m| m.carries(id) && span.contains(&m.span()));
        inside(id1) && inside(id2)
    })
}

pub fn find_cooccurrence(doc: &Document, id1: &str, id2: &str) -> Option<SentenceSpan> {
    find_cooccurrence_in(doc, &document_sentences(doc), id1, id2)
}
