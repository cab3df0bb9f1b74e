use biorel::evaluate::{baseline_predict, corpus_stats, gold_tuples, raw_corpus_stats, score};
use biorel::formats::parse_pubtator;
use biorel::harmonize::merge_corpora;
use biorel::instances::generate_instances;
use biorel::testkit::fixture_corpora;

fn fixture(dir: &str) -> biorel::testkit::FixtureCorpus {
    fixture_corpora().into_iter().find(|f| f.dir == dir).unwrap()
}

#[test]
fn baseline_on_biored_fixture_matches_hand_count() {
    let h = fixture("biored").harmonize().unwrap();
    let instances = generate_instances(&h.corpus, None).unwrap();
    let pred = baseline_predict(&instances);
    let predicted = pred.iter().filter(|t| !t.label.is_absent()).count();
    assert_eq!(predicted, 9);
    let r = score(&gold_tuples(&instances), &pred).unwrap();
    assert_eq!((r.true_positives, r.false_positives, r.false_negatives), (2, 7, 4));
    assert!((r.precision - 2.0 / 9.0).abs() < 1e-12);
    assert!((r.recall - 1.0 / 3.0).abs() < 1e-12);
    assert!((r.f1 - 4.0 / 15.0).abs() < 1e-12);
}

#[test]
fn sentence_level_fixtures_predict_association_everywhere() {
    let h = fixture("aimed").harmonize().unwrap();
    let instances = generate_instances(&h.corpus, None).unwrap();
    assert!(baseline_predict(&instances)
        .iter()
        .all(|t| t.label == biorel::RelationLabel::Association));
}

#[test]
fn stats_follow_corpus_table_columns() {
    let h = fixture("biored").harmonize().unwrap();
    let table = corpus_stats(&h.corpus);
    assert_eq!(table.rows.len(), 1);
    let row = &table.rows[0];
    assert_eq!((row.corpus.as_str(), row.documents, row.relations), ("BioRED", 2, 6));
    let kinds: Vec<(&str, usize)> = row.pair_types.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    assert_eq!(kinds, vec![("<Chemical,Disease>", 3), ("<Chemical,Gene>", 1), ("<Disease,Gene>", 2)]);
    assert_eq!(row.levels.get("document"), Some(&6));
    assert_eq!(row.labels.get("None"), Some(&5));
    let text = table.to_text();
    for column in ["corpus", "abstracts", "relations", "pair types", "levels", "labels"] {
        assert!(text.contains(column), "{column}");
    }
    let json: serde_json::Value = serde_json::from_str(&table.to_json()).unwrap();
    assert_eq!(json["rows"][0]["relations"], 6);
}

#[test]
fn merged_stats_are_additive() {
    let a = fixture("bc5cdr").harmonize().unwrap().corpus;
    let b = fixture("drugprot").harmonize().unwrap().corpus;
    let (sa, sb) = (corpus_stats(&a).total(), corpus_stats(&b).total());
    let merged = corpus_stats(&merge_corpora(vec![a, b]).unwrap());
    assert_eq!(merged.rows.len(), 2);
    let t = merged.total();
    assert_eq!(t.documents, sa.documents + sb.documents);
    assert_eq!(t.relations, sa.relations + sb.relations);
    assert_eq!(t.labels.values().sum::<usize>(), sa.labels.values().sum::<usize>() + sb.labels.values().sum::<usize>());
}

#[test]
fn raw_stats_count_source_relations() {
    let f = fixture("drugprot");
    let docs = parse_pubtator(f.input).unwrap();
    let t = raw_corpus_stats("DrugProt", &docs);
    assert_eq!((t.rows[0].documents, t.rows[0].relations), (2, 5));
    assert_eq!(t.rows[0].labels.get("INHIBITOR"), Some(&2));
}
