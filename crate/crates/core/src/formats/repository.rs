//! Span-less repository triples: `DOCID<TAB>ID1<TAB>ID2[<TAB>LABEL]`.

use crate::error::{Error, Result};
use crate::formats::numbered_lines;
use crate::model::{validate_doc_id, validate_token, EntityType};

/// Label text assigned when the label column is absent.
pub const DEFAULT_REPOSITORY_LABEL: &str = "Association";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepositoryRecord {
    pub doc_id: String,
    pub concept_id1: String,
    pub concept_id2: String,
    pub type1: EntityType,
    pub type2: EntityType,
    /// Raw label text; mapped during harmonization.
    pub label: String,
}

/// Parses repository triples. `pair_types` gives the types of the first and
/// second concept columns.
pub fn parse_repository(stream: &str, pair_types: (EntityType, EntityType)) -> Result<Vec<RepositoryRecord>> {
    let mut records = Vec::new();
    for (ln, line) in numbered_lines(stream) {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if !(3..=4).contains(&fields.len()) {
            return Err(Error::parse(ln, format!("expected 3 or 4 columns, found {}", fields.len())));
        }
        validate_doc_id(fields[0]).map_err(|e| Error::parse(ln, e.to_string()))?;
        for id in &fields[1..3] {
            validate_token("concept id", id).map_err(|e| Error::parse(ln, e.to_string()))?;
        }
        let label = match fields.get(3) {
            Some(l) if !l.trim().is_empty() => l.to_string(),
            Some(_) => return Err(Error::parse(ln, "empty label column")),
            None => DEFAULT_REPOSITORY_LABEL.to_string(),
        };
        records.push(RepositoryRecord {
            doc_id: fields[0].to_string(),
            concept_id1: fields[1].to_string(),
            concept_id2: fields[2].to_string(),
            type1: pair_types.0.clone(),
            type2: pair_types.1.clone(),
            label,
        });
    }
    Ok(records)
}
