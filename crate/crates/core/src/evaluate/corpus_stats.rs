use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::harmonize::HarmonizedCorpus;
use crate::model::{ConceptPair, Document};

/// One row of the statistics table. Histograms other than `labels` count
/// relations only (absence labels excluded).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub corpus: String,
    pub documents: usize,
    pub relations: usize,
    pub pair_types: BTreeMap<String, usize>,
    pub levels: BTreeMap<String, usize>,
    pub labels: BTreeMap<String, usize>,
}

impl CorpusStats {
    fn absorb(&mut self, other: &CorpusStats) {
        self.documents += other.documents;
        self.relations += other.relations;
        for (dst, src) in [
            (&mut self.pair_types, &other.pair_types),
            (&mut self.levels, &other.levels),
            (&mut self.labels, &other.labels),
        ] {
            for (k, v) in src {
                *dst.entry(k.clone()).or_default() += v;
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsTable {
    pub rows: Vec<CorpusStats>,
}

fn histogram(h: &BTreeMap<String, usize>) -> String {
    if h.is_empty() {
        return "-".into();
    }
    h.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

impl StatsTable {
    /// Sum over all rows, named `total`.
    pub fn total(&self) -> CorpusStats {
        let mut t = CorpusStats {
            corpus: "total".into(),
            ..Default::default()
        };
        for r in &self.rows {
            t.absorb(r);
        }
        t
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<[String; 6]> = vec![[
            "corpus".into(),
            "abstracts".into(),
            "relations".into(),
            "pair types".into(),
            "levels".into(),
            "labels".into(),
        ]];
        let total = self.total();
        for r in self.rows.iter().chain(std::iter::once(&total)) {
            rows.push([
                r.corpus.clone(),
                r.documents.to_string(),
                r.relations.to_string(),
                histogram(&r.pair_types),
                histogram(&r.levels),
                histogram(&r.labels),
            ]);
        }
        let mut widths = [0usize; 6];
        for row in &rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        for row in &rows {
            let line: Vec<String> = row
                .iter()
                .zip(widths)
                .enumerate()
                .map(|(i, (cell, w))| {
                    if (1..=2).contains(&i) {
                        format!("{cell:>w$}")
                    } else {
                        format!("{cell:<w$}")
                    }
                })
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("stats serialize");
        s.push('\n');
        s
    }
}

/// Statistics of a harmonized corpus, one row per source corpus (sorted).
pub fn corpus_stats(h: &HarmonizedCorpus) -> StatsTable {
    let mut rows: BTreeMap<&str, CorpusStats> = BTreeMap::new();
    for hd in &h.documents {
        let row = rows.entry(hd.corpus.as_str()).or_insert_with(|| CorpusStats {
            corpus: hd.corpus.clone(),
            ..Default::default()
        });
        row.documents += 1;
        for lp in &hd.pairs {
            *row.labels.entry(lp.label.to_string()).or_default() += 1;
            if lp.label.is_absent() {
                continue;
            }
            row.relations += 1;
            *row.pair_types.entry(lp.pair.kind_label()).or_default() += 1;
            *row.levels.entry(lp.level.to_string()).or_default() += 1;
        }
    }
    StatsTable {
        rows: rows.into_values().collect(),
    }
}

/// Statistics of unharmonized documents: raw label text, and pair types
/// resolved from the mentions where both concepts are present.
pub fn raw_corpus_stats(corpus: &str, docs: &[Document]) -> StatsTable {
    let mut row = CorpusStats {
        corpus: corpus.to_string(),
        documents: docs.len(),
        ..Default::default()
    };
    for doc in docs {
        for rel in &doc.relations {
            row.relations += 1;
            *row.labels.entry(rel.label.clone()).or_default() += 1;
            let kind = match (doc.concept_type(&rel.id1), doc.concept_type(&rel.id2)) {
                (Some(t1), Some(t2)) => ConceptPair::canonicalize(&rel.id1, t1, &rel.id2, t2)
                    .map(|p| p.kind_label())
                    .unwrap_or_else(|_| "<self>".into()),
                _ => "<unresolved>".into(),
            };
            *row.pair_types.entry(kind).or_default() += 1;
        }
    }
    StatsTable { rows: vec![row] }
}
