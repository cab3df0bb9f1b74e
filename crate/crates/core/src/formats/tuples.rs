//! Gold and prediction tuples: `DOCID<TAB>ID1<TAB>TYPE1<TAB>ID2<TAB>TYPE2<TAB>LABEL`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::evaluate::RelationTuple;
use crate::formats::numbered_lines;
use crate::model::{validate_doc_id, ConceptPair, EntityType, RelationLabel};

pub fn parse_tuples(stream: &str) -> Result<Vec<RelationTuple>> {
    let mut out = Vec::new();
    for (ln, line) in numbered_lines(stream) {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 6 {
            return Err(Error::parse(ln, format!("expected 6 columns, found {}", f.len())));
        }
        let wrap = |e: Error| Error::parse(ln, e.to_string());
        validate_doc_id(f[0]).map_err(wrap)?;
        let t1 = EntityType::parse(f[2]).map_err(wrap)?;
        let t2 = EntityType::parse(f[4]).map_err(wrap)?;
        let pair = ConceptPair::canonicalize(f[1], &t1, f[3], &t2).map_err(wrap)?;
        let label: RelationLabel = f[5].parse().map_err(wrap)?;
        out.push(RelationTuple {
            doc_id: f[0].to_string(),
            pair,
            label,
        });
    }
    Ok(out)
}

pub fn write_tuples(tuples: &[RelationTuple]) -> String {
    let mut out = String::new();
    for t in tuples {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            t.doc_id, t.pair.id1, t.pair.type1, t.pair.id2, t.pair.type2, t.label
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reversed_columns_are_canonicalized() {
        let a = parse_tuples("7\tN1\tGene\tD1\tDisease\tAssociation\n").unwrap();
        let b = parse_tuples("7\tD1\tDisease\tN1\tGene\tAssociation\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(write_tuples(&a), "7\tD1\tDisease\tN1\tGene\tAssociation\n");
    }

    #[test]
    fn bad_label_reports_line() {
        let err = parse_tuples("7\tN1\tGene\tD1\tDisease\tAssociation\n7\tN1\tGene\tD2\tDisease\tCID\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
