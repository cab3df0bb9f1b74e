//! PubTator-style corpus files.
//!
//! ```text
//! ID|t|TITLE
//! ID|a|ABSTRACT
//! ID<TAB>START<TAB>END<TAB>TEXT<TAB>TYPE<TAB>ID1,ID2,...
//! ID<TAB>LABEL<TAB>CONCEPT1<TAB>CONCEPT2
//! <blank line>
//! ```
//!
//! Offsets are over `TITLE + " " + ABSTRACT`. Lines starting with `#` are
//! comments. A fifth column on relation lines (novelty) is accepted and
//! discarded.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::formats::numbered_lines;
use crate::model::{Document, EntityMention, EntityType, RawRelation, TextIndex};

/// Prefix of the comment line emitted before a relation whose concepts have
/// no mention in the document.
pub const UNRESOLVED_MARKER: &str = "# unresolved";

struct Block {
    id: String,
    title: String,
    abstract_text: Option<String>,
    mentions: Vec<(usize, EntityMention)>,
    relations: Vec<RawRelation>,
}

impl Block {
    fn finish(self, title_line: usize) -> Result<Document> {
        let abstract_text = self
            .abstract_text
            .ok_or_else(|| Error::parse(title_line, format!("document {} has no abstract line", self.id)))?;
        let mut text = String::with_capacity(self.title.len() + 1 + abstract_text.len());
        text.push_str(&self.title);
        text.push(' ');
        text.push_str(&abstract_text);
        let index = TextIndex::new(&text);
        let mut mentions = Vec::with_capacity(self.mentions.len());
        for (line, m) in self.mentions {
            m.validate_in(&index).map_err(|e| Error::parse(line, e.to_string()))?;
            mentions.push(m);
        }
        Document::new(self.id, self.title, abstract_text, mentions, self.relations)
            .map_err(|e| Error::parse(title_line, e.to_string()))
    }
}

fn header<'a>(line: &'a str, marker: &str) -> Option<(&'a str, &'a str)> {
    let (id, rest) = line.split_once('|')?;
    let body = rest.strip_prefix(marker)?.strip_prefix('|')?;
    Some((id, body))
}

fn parse_offset(field: &str, line: usize) -> Result<usize> {
    field
        .parse::<usize>()
        .map_err(|_| Error::parse(line, format!("invalid offset {field:?}")))
}

/// Parses a PubTator-style stream into documents, in input order.
pub fn parse_pubtator(stream: &str) -> Result<Vec<Document>> {
    let mut docs = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut current: Option<(usize, Block)> = None;

    for (ln, line) in numbered_lines(stream) {
        if line.trim().is_empty() {
            if let Some((title_line, block)) = current.take() {
                docs.push(block.finish(title_line)?);
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        match current.as_mut() {
            None => {
                let (id, title) = header(line, "t")
                    .ok_or_else(|| Error::parse(ln, "expected a title line `ID|t|TITLE`"))?;
                if !seen.insert(id.to_string()) {
                    return Err(Error::parse(ln, format!("duplicate document id {id}")));
                }
                current = Some((
                    ln,
                    Block {
                        id: id.to_string(),
                        title: title.to_string(),
                        abstract_text: None,
                        mentions: Vec::new(),
                        relations: Vec::new(),
                    },
                ));
            }
            Some((_, block)) if block.abstract_text.is_none() => {
                let (id, body) = header(line, "a")
                    .ok_or_else(|| Error::parse(ln, "expected an abstract line `ID|a|ABSTRACT`"))?;
                if id != block.id {
                    return Err(Error::parse(ln, format!("abstract id {id} does not match title id {}", block.id)));
                }
                block.abstract_text = Some(body.to_string());
            }
            Some((_, block)) => {
                let fields: Vec<&str> = line.split('\t').collect();
                if fields[0] != block.id {
                    return Err(Error::parse(
                        ln,
                        format!("line id {:?} does not match document id {}", fields[0], block.id),
                    ));
                }
                match fields.len() {
                    6 => {
                        let start = parse_offset(fields[1], ln)?;
                        let end = parse_offset(fields[2], ln)?;
                        let entity_type = EntityType::parse(fields[4]).map_err(|e| Error::parse(ln, e.to_string()))?;
                        let ids = fields[5].split(',').map(str::to_string).collect();
                        let mention = EntityMention::new(start, end, fields[3], entity_type, ids)
                            .map_err(|e| Error::parse(ln, e.to_string()))?;
                        block.mentions.push((ln, mention));
                    }
                    4 | 5 => {
                        let rel = RawRelation::new(fields[1], fields[2], fields[3])
                            .map_err(|e| Error::parse(ln, e.to_string()))?;
                        block.relations.push(rel);
                    }
                    n => {
                        return Err(Error::parse(
                            ln,
                            format!("expected 6 (annotation) or 4-5 (relation) columns, found {n}"),
                        ))
                    }
                }
            }
        }
    }
    if let Some((title_line, block)) = current.take() {
        docs.push(block.finish(title_line)?);
    }
    Ok(docs)
}

/// Serializes documents; annotation lines are sorted by (start, end, ids).
pub fn write_pubtator(docs: &[Document]) -> String {
    let mut out = String::new();
    for doc in docs {
        let _ = writeln!(out, "{}|t|{}", doc.id, doc.title);
        let _ = writeln!(out, "{}|a|{}", doc.id, doc.abstract_text);
        let mut mentions: Vec<&EntityMention> = doc.mentions.iter().collect();
        mentions.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        for m in mentions {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}",
                doc.id,
                m.start,
                m.end,
                m.text,
                m.entity_type,
                m.concept_ids.join(",")
            );
        }
        for r in &doc.relations {
            if !doc.has_concept(&r.id1) || !doc.has_concept(&r.id2) {
                let _ = writeln!(out, "{UNRESOLVED_MARKER}\t{}\t{}\t{}", doc.id, r.id1, r.id2);
            }
            let _ = writeln!(out, "{}\t{}\t{}\t{}", doc.id, r.label, r.id1, r.id2);
        }
        out.push('\n');
    }
    out
}
