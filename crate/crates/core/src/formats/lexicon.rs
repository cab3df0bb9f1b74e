//! Lexicon files: `SURFACE<TAB>TYPE<TAB>ID1,ID2,...`.

use crate::error::{Error, Result};
use crate::formats::numbered_lines;
use crate::model::EntityType;
use crate::textspan::Lexicon;

pub fn parse_lexicon(stream: &str) -> Result<Lexicon> {
    let mut lexicon = Lexicon::new();
    for (ln, line) in numbered_lines(stream) {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        if f.len() != 3 {
            return Err(Error::parse(ln, format!("expected 3 columns, found {}", f.len())));
        }
        let entity_type = EntityType::parse(f[1]).map_err(|e| Error::parse(ln, e.to_string()))?;
        let ids = f[2].split(',').map(str::to_string).collect();
        lexicon
            .insert(f[0], entity_type, ids)
            .map_err(|e| Error::parse(ln, e.to_string()))?;
    }
    Ok(lexicon)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_entries_and_rejects_duplicates() {
        let lex = parse_lexicon("aspirin\tChemical\tC1\ncox-1\tGene\tN9,N10\n").unwrap();
        assert_eq!(lex.len(), 2);
        let err = parse_lexicon("aspirin\tChemical\tC1\nAspirin\tChemical\tC2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_lexicon("  \tChemical\tC1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
