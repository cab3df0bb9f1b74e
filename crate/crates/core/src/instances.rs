//! Candidate instance generation: pair enumeration with composite-id
//! expansion, boundary tags and the prompt question.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::harmonize::HarmonizedCorpus;
use crate::model::{AllowedPairs, CandidateInstance, ConceptPair, Document, EntityMention, TextIndex, TextSpan};

/// Corpus name used in prompts for the target task.
pub const DEFAULT_PROMPT_CORPUS: &str = "BioRED";

/// A candidate pair and the indices (into `Document::mentions`) of every
/// mention carrying either of its concepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCandidate {
    pub pair: ConceptPair,
    pub mentions: Vec<usize>,
}

/// All canonical pairs of distinct concepts whose type pair is allowed.
/// Composite mentions contribute one virtual mention per concept id, so a
/// span normalized to two diseases yields a separate pair for each.
pub fn enumerate_pairs(doc: &Document, allowed: &AllowedPairs) -> Vec<PairCandidate> {
    let concepts = doc.concepts();
    let mut out = Vec::new();
    for (i, (id_a, type_a)) in concepts.iter().enumerate() {
        for (id_b, type_b) in &concepts[i + 1..] {
            if !allowed.permits(type_a, type_b) {
                continue;
            }
            let pair = ConceptPair::canonicalize(id_a, type_a, id_b, type_b).expect("distinct concept ids");
            let mentions = doc
                .mentions
                .iter()
                .enumerate()
                .filter(|(_, m)| m.carries(id_a) || m.carries(id_b))
                .map(|(k, _)| k)
                .collect();
            out.push(PairCandidate { pair, mentions });
        }
    }
    out.sort_by(|a, b| a.pair.cmp(&b.pair));
    out
}

struct TagItem {
    start: usize,
    end: usize,
    member: u8,
    covers: [bool; 2],
    tag: String,
}

/// Wraps every mention of either pair member in `<T>`/`</T>` tags, where `T`
/// is the mention's type code. Offsets of `mentions` are over the document;
/// `context_offset` is the document offset of the first context character.
///
/// Nested mentions nest their tags (outer span first, ties broken by pair
/// order); a mention crossing an already tagged one is left untagged. A
/// span shared by both members is tagged once.
pub fn tag_context(
    context_text: &str,
    context_offset: usize,
    pair: &ConceptPair,
    mentions: &[&EntityMention],
) -> Result<String> {
    let len = context_text.chars().count();
    let mut items = Vec::new();
    for m in mentions {
        let covers = [m.carries(&pair.id1), m.carries(&pair.id2)];
        if !covers[0] && !covers[1] {
            continue;
        }
        if m.start < context_offset || m.end > context_offset + len {
            return Err(Error::invalid(
                "tag context",
                format!("mention [{}, {}) lies outside the context", m.start, m.end),
            ));
        }
        items.push(TagItem {
            start: m.start - context_offset,
            end: m.end - context_offset,
            member: if covers[0] { 0 } else { 1 },
            covers,
            tag: m.entity_type.tag_code().to_string(),
        });
    }
    if items.is_empty() {
        return Err(Error::invalid("tag context", "no mention of the pair in the context"));
    }
    items.sort_by(|a, b| {
        a.start
            .cmp(&b.start)
            .then(b.end.cmp(&a.end))
            .then(a.member.cmp(&b.member))
    });
    items.dedup_by(|later, kept| {
        let same = later.start == kept.start && later.end == kept.end;
        if same {
            kept.covers[0] |= later.covers[0];
            kept.covers[1] |= later.covers[1];
        }
        same
    });

    let mut open_ends: Vec<usize> = Vec::new();
    let mut accepted: Vec<TagItem> = Vec::new();
    for item in items {
        while open_ends.last().is_some_and(|&e| e <= item.start) {
            open_ends.pop();
        }
        if open_ends.last().is_some_and(|&e| item.end > e) {
            continue;
        }
        open_ends.push(item.end);
        accepted.push(item);
    }
    for (member, id) in [&pair.id1, &pair.id2].into_iter().enumerate() {
        if !accepted.iter().any(|i| i.covers[member]) {
            return Err(Error::invalid(
                "tag context",
                format!("no taggable mention of {id} in the context"),
            ));
        }
    }

    let mut opens: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut closes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, item) in accepted.iter().enumerate() {
        opens.entry(item.start).or_default().push(k);
        closes.entry(item.end).or_default().push(k);
    }
    let mut out = String::with_capacity(context_text.len() + accepted.len() * 8);
    let emit_boundary = |pos: usize, out: &mut String| {
        if let Some(ks) = closes.get(&pos) {
            for &k in ks.iter().rev() {
                out.push_str("</");
                out.push_str(&accepted[k].tag);
                out.push('>');
            }
        }
        if let Some(ks) = opens.get(&pos) {
            for &k in ks {
                out.push('<');
                out.push_str(&accepted[k].tag);
                out.push('>');
            }
        }
    };
    for (pos, c) in context_text.chars().enumerate() {
        emit_boundary(pos, &mut out);
        out.push(c);
    }
    emit_boundary(len, &mut out);
    Ok(out)
}

/// Removes `<T>`/`</T>` tags for the given tag names, returning the plain
/// text and the character spans (over the plain text) each tag pair wrapped.
pub fn untag(tagged: &str, tags: &[&str]) -> (String, Vec<(TextSpan, String)>) {
    let names: BTreeSet<&str> = tags.iter().copied().collect();
    let mut plain = String::with_capacity(tagged.len());
    let mut plain_len = 0usize;
    let mut stack: Vec<(String, usize)> = Vec::new();
    let mut spans = Vec::new();
    let mut rest = tagged;
    'outer: while let Some(c) = rest.chars().next() {
        if c == '<' {
            if let Some(close) = rest.find('>') {
                let inner = &rest[1..close];
                let (closing, name) = match inner.strip_prefix('/') {
                    Some(n) => (true, n),
                    None => (false, inner),
                };
                if names.contains(name) {
                    if !closing {
                        stack.push((name.to_string(), plain_len));
                        rest = &rest[close + 1..];
                        continue 'outer;
                    }
                    if stack.last().is_some_and(|(n, _)| n == name) {
                        let (n, start) = stack.pop().expect("non-empty");
                        spans.push((TextSpan::new(start, plain_len), n));
                        rest = &rest[close + 1..];
                        continue 'outer;
                    }
                }
            }
        }
        plain.push(c);
        plain_len += 1;
        rest = &rest[c.len_utf8()..];
    }
    spans.sort();
    (plain, spans)
}

/// The prompt question placed in front of every context.
pub fn build_prompt(corpus: &str, name1: &str, name2: &str) -> String {
    format!("What is the relation in {corpus} between {name1} and {name2}?")
}

fn instances_for(
    corpus: &str,
    doc: &Document,
    pairs: &[crate::harmonize::LabeledPair],
    prompt_corpus: Option<&str>,
) -> Result<Vec<CandidateInstance>> {
    let text = doc.text();
    let index = TextIndex::new(&text);
    let mut out = Vec::with_capacity(pairs.len());
    for lp in pairs {
        let context = index.slice(lp.context.start, lp.context.end).ok_or_else(|| {
            Error::invalid(
                "labeled pair",
                format!("{}: context [{}, {}) outside text", doc.id, lp.context.start, lp.context.end),
            )
        })?;
        let in_context: Vec<&EntityMention> = doc
            .mentions
            .iter()
            .filter(|m| (m.carries(&lp.pair.id1) || m.carries(&lp.pair.id2)) && lp.context.contains(&m.span()))
            .collect();
        let tagged = tag_context(context, lp.context.start, &lp.pair, &in_context)
            .map_err(|e| Error::invalid("labeled pair", format!("{}: {e}", doc.id)))?;
        let name = |id: &'_ str| -> String {
            doc.mentions
                .iter()
                .find(|m| m.carries(id))
                .map_or(id, |m| m.text.as_str())
                .to_string()
        };
        out.push(CandidateInstance {
            doc_id: doc.id.clone(),
            corpus: corpus.to_string(),
            pair: lp.pair.clone(),
            prompt: build_prompt(prompt_corpus.unwrap_or(corpus), &name(&lp.pair.id1), &name(&lp.pair.id2)),
            context: tagged,
            label: lp.label.clone(),
            level: lp.level,
        });
    }
    Ok(out)
}

/// One instance per labeled pair, sorted by (corpus, document, pair).
///
/// The prompt names the instance's source corpus unless `prompt_corpus`
/// overrides it (e.g. with [`DEFAULT_PROMPT_CORPUS`] for the target task).
pub fn generate_instances(h: &HarmonizedCorpus, prompt_corpus: Option<&str>) -> Result<Vec<CandidateInstance>> {
    let per_doc: Vec<Result<Vec<CandidateInstance>>> = h
        .documents
        .par_iter()
        .map(|hd| instances_for(&hd.corpus, &hd.document, &hd.pairs, prompt_corpus))
        .collect();
    let mut out = Vec::with_capacity(h.pair_count());
    for r in per_doc {
        out.extend(r?);
    }
    out.sort_by(|a, b| {
        (a.corpus.as_str(), a.doc_id.as_str(), &a.pair).cmp(&(b.corpus.as_str(), b.doc_id.as_str(), &b.pair))
    });
    Ok(out)
}
