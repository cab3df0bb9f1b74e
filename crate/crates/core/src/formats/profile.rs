//! Corpus profile files (JSON).
//!
//! ```json
//! {
//!   "name": "DrugProt",
//!   "span_solution": "a1", "level": "b2", "negative_policy": "c1",
//!   "granularity": "d1", "entity_policy": "e1",
//!   "label_map": {"INHIBITOR": "Negative_Correlation"},
//!   "entity_type_map": {"Chemical": "DrugProt-Chem"},
//!   "allowed_pairs": [["Gene", "Chemical"]]
//! }
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    kind_pair, CorpusProfile, EntityPolicy, EntityType, Granularity, LevelSolution, NegativePolicy,
    RelationLabel, SpanSolution,
};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileRepr {
    name: String,
    span_solution: String,
    level: String,
    negative_policy: String,
    granularity: String,
    entity_policy: String,
    #[serde(default)]
    label_map: BTreeMap<String, String>,
    #[serde(default)]
    entity_type_map: BTreeMap<String, String>,
    allowed_pairs: Vec<[String; 2]>,
}

fn profile_err(axis: &'static str, e: Error) -> Error {
    Error::Profile {
        axis,
        message: e.to_string(),
    }
}

pub fn parse_profile(stream: &str) -> Result<CorpusProfile> {
    let repr: ProfileRepr = serde_json::from_str(stream).map_err(|e| Error::parse(e.line(), e.to_string()))?;

    let mut label_map = BTreeMap::new();
    for (source, target) in repr.label_map {
        let label: RelationLabel = target.parse().map_err(|e| profile_err("label_map", e))?;
        label_map.insert(source, label);
    }
    let mut entity_type_map = BTreeMap::new();
    for (source, target) in repr.entity_type_map {
        EntityType::parse(&source).map_err(|e| profile_err("entity_type_map", e))?;
        let target = EntityType::parse(&target).map_err(|e| profile_err("entity_type_map", e))?;
        entity_type_map.insert(source, target);
    }
    let mut allowed_pairs = std::collections::BTreeSet::new();
    for [a, b] in repr.allowed_pairs {
        let a = EntityType::parse(&a).map_err(|e| profile_err("allowed_pairs", e))?;
        let b = EntityType::parse(&b).map_err(|e| profile_err("allowed_pairs", e))?;
        allowed_pairs.insert(kind_pair(a, b));
    }

    let profile = CorpusProfile {
        name: repr.name,
        span_solution: SpanSolution::from_code(&repr.span_solution)?,
        level: LevelSolution::from_code(&repr.level)?,
        negative_policy: NegativePolicy::from_code(&repr.negative_policy)?,
        granularity: Granularity::from_code(&repr.granularity)?,
        entity_policy: EntityPolicy::from_code(&repr.entity_policy)?,
        label_map,
        entity_type_map,
        allowed_pairs,
    };
    profile.validate()?;
    Ok(profile)
}

pub fn write_profile(profile: &CorpusProfile) -> String {
    let repr = ProfileRepr {
        name: profile.name.clone(),
        span_solution: profile.span_solution.code().into(),
        level: profile.level.code().into(),
        negative_policy: profile.negative_policy.code().into(),
        granularity: profile.granularity.code().into(),
        entity_policy: profile.entity_policy.code().into(),
        label_map: profile.label_map.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
        entity_type_map: profile
            .entity_type_map
            .iter()
            .map(|(k, v)| (k.clone(), v.to_string()))
            .collect(),
        allowed_pairs: profile
            .allowed_pairs
            .iter()
            .map(|(a, b)| [a.to_string(), b.to_string()])
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&repr).expect("profile serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(overrides: &str) -> String {
        let mut v: serde_json::Value = serde_json::from_str(
            r#"{"name":"X","span_solution":"a1","level":"b1","negative_policy":"c2",
                "granularity":"d2","entity_policy":"e2","allowed_pairs":[["Gene","Disease"]]}"#,
        )
        .unwrap();
        let o: serde_json::Value = serde_json::from_str(overrides).unwrap();
        for (k, val) in o.as_object().unwrap() {
            v[k] = val.clone();
        }
        v.to_string()
    }

    #[test]
    fn unknown_axis_code_names_the_axis() {
        let err = parse_profile(&base(r#"{"span_solution":"a4"}"#)).unwrap_err();
        assert!(matches!(err, Error::Profile { axis: "span_solution", .. }), "{err}");
    }

    #[test]
    fn d2_with_label_map_rejected() {
        let err = parse_profile(&base(r#"{"label_map":{"x":"Bind"}}"#)).unwrap_err();
        assert!(matches!(err, Error::Profile { axis: "granularity", .. }));
    }

    #[test]
    fn d1_with_empty_label_map_rejected() {
        let err = parse_profile(&base(r#"{"granularity":"d1"}"#)).unwrap_err();
        assert!(matches!(err, Error::Profile { axis: "granularity", .. }));
    }

    #[test]
    fn e1_requires_internal_target() {
        let err = parse_profile(&base(r#"{"entity_policy":"e1","entity_type_map":{"protein":"Gene"}}"#)).unwrap_err();
        assert!(matches!(err, Error::Profile { axis: "entity_policy", .. }));
    }

    #[test]
    fn allowed_pairs_must_be_canonical() {
        let err = parse_profile(&base(r#"{"allowed_pairs":[["Gene","Foo"]]}"#)).unwrap_err();
        assert!(matches!(err, Error::Profile { axis: "allowed_pairs", .. }));
        let err = parse_profile(&base(r#"{"allowed_pairs":[]}"#)).unwrap_err();
        assert!(matches!(err, Error::Profile { axis: "allowed_pairs", .. }));
    }

    #[test]
    fn write_then_parse_is_identity() {
        let p = parse_profile(&base(r#"{"entity_type_map":{"protein":"Gene"}}"#)).unwrap();
        assert_eq!(parse_profile(&write_profile(&p)).unwrap(), p);
    }

    #[test]
    fn syntax_error_reports_line() {
        assert!(matches!(parse_profile("{\n\"name\": }"), Err(Error::Parse { line: 2, .. })));
    }
}
