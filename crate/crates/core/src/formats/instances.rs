//! Instance stream: one JSON object per line with the keys `doc_id`,
//! `corpus`, `id1`, `type1`, `id2`, `type2`, `prompt`, `context`, `label`
//! and `level`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formats::numbered_lines;
use crate::model::{CandidateInstance, ConceptPair, ContextLevel, EntityType, RelationLabel};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceRecord {
    doc_id: String,
    corpus: String,
    id1: String,
    type1: EntityType,
    id2: String,
    type2: EntityType,
    prompt: String,
    context: String,
    label: RelationLabel,
    level: ContextLevel,
}

impl From<&CandidateInstance> for InstanceRecord {
    fn from(i: &CandidateInstance) -> Self {
        InstanceRecord {
            doc_id: i.doc_id.clone(),
            corpus: i.corpus.clone(),
            id1: i.pair.id1.clone(),
            type1: i.pair.type1.clone(),
            id2: i.pair.id2.clone(),
            type2: i.pair.type2.clone(),
            prompt: i.prompt.clone(),
            context: i.context.clone(),
            label: i.label.clone(),
            level: i.level,
        }
    }
}

pub fn write_instances(instances: &[CandidateInstance]) -> String {
    let mut out = String::new();
    for inst in instances {
        out.push_str(&serde_json::to_string(&InstanceRecord::from(inst)).expect("instance serializes"));
        out.push('\n');
    }
    out
}

pub fn parse_instances(stream: &str) -> Result<Vec<CandidateInstance>> {
    let body = stream.strip_suffix('\n').unwrap_or(stream);
    if body.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (ln, line) in numbered_lines(body) {
        let rec: InstanceRecord =
            serde_json::from_str(line).map_err(|e| Error::parse(ln, format!("malformed instance record: {e}")))?;
        let pair = ConceptPair::canonicalize(&rec.id1, &rec.type1, &rec.id2, &rec.type2)
            .map_err(|e| Error::parse(ln, e.to_string()))?;
        if pair.id1 != rec.id1 {
            return Err(Error::parse(ln, "pair is not in canonical order"));
        }
        out.push(CandidateInstance {
            doc_id: rec.doc_id,
            corpus: rec.corpus,
            pair,
            prompt: rec.prompt,
            context: rec.context,
            label: rec.label,
            level: rec.level,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(context: &str) -> CandidateInstance {
        CandidateInstance {
            doc_id: "1".into(),
            corpus: "BioRED".into(),
            pair: ConceptPair::canonicalize("N1", &EntityType::Gene, "N2", &EntityType::Gene).unwrap(),
            prompt: "What is the relation in BioRED between B and C?".into(),
            context: context.into(),
            label: RelationLabel::Bind,
            level: ContextLevel::Sentence,
        }
    }

    #[test]
    fn empty_round_trip() {
        assert_eq!(write_instances(&[]), "");
        assert!(parse_instances("").unwrap().is_empty());
    }

    #[test]
    fn tabs_and_newlines_escaped() {
        let inst = sample("<G>B</G>\tbinds\n<G>C</G>.");
        let text = write_instances(std::slice::from_ref(&inst));
        assert_eq!(text.lines().count(), 1);
        assert_eq!(parse_instances(&text).unwrap(), vec![inst]);
    }

    #[test]
    fn record_layout_is_fixed() {
        let text = write_instances(&[sample("x")]);
        assert_eq!(
            text,
            "{\"doc_id\":\"1\",\"corpus\":\"BioRED\",\"id1\":\"N1\",\"type1\":\"Gene\",\"id2\":\"N2\",\"type2\":\"Gene\",\"prompt\":\"What is the relation in BioRED between B and C?\",\"context\":\"x\",\"label\":\"Bind\",\"level\":\"sentence\"}\n"
        );
    }

    #[test]
    fn malformed_line_reports_number() {
        let good = write_instances(&[sample("x")]);
        let src = format!("{good}{{\"doc_id\":1}}\n");
        assert!(matches!(parse_instances(&src), Err(Error::Parse { line: 2, .. })));
    }
}
