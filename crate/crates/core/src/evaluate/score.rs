use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::RelationTuple;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PairTypeScores {
    pub true_positives: usize,
    pub false_positives: usize,
    pub false_negatives: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl PairTypeScores {
    fn finish(&mut self) -> (bool, bool) {
        let (p, p_undef) = ratio(self.true_positives, self.true_positives + self.false_positives);
        let (r, r_undef) = ratio(self.true_positives, self.true_positives + self.false_negatives);
        self.precision = p;
        self.recall = r;
        self.f1 = if p + r > 0.0 { 2.0 * p * r / (p + r) } else { 0.0 };
        (p_undef, r_undef)
    }
}

fn ratio(num: usize, den: usize) -> (f64, bool) {
    if den == 0 {
        (0.0, true)
    } else {
        (num as f64 / den as f64, false)
    }
}

/// Micro-averaged scores plus a per-pair-type breakdown.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub true_positives: usize,
    pub false_positives: usize,
    pub false_negatives: usize,
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
    /// No predictions: precision reported as 0.
    pub precision_undefined: bool,
    /// No gold tuples: recall reported as 0.
    pub recall_undefined: bool,
    pub per_pair_type: BTreeMap<String, PairTypeScores>,
}

fn check_unique(set: &[&RelationTuple], which: &str) -> Result<()> {
    let mut seen = HashSet::with_capacity(set.len());
    for t in set {
        if !seen.insert(*t) {
            return Err(Error::Duplicate {
                what: "tuple",
                key: format!("{which}: {} {} {} {}", t.doc_id, t.pair.id1, t.pair.id2, t.label),
            });
        }
    }
    Ok(())
}

/// Exact-match scoring on (document, pair, label). Tuples labeled `None` or
/// `None-<corpus>` denote absence and are ignored on both sides.
pub fn score(gold: &[RelationTuple], pred: &[RelationTuple]) -> Result<EvalReport> {
    let gold: Vec<&RelationTuple> = gold.iter().filter(|t| !t.label.is_absent()).collect();
    let pred: Vec<&RelationTuple> = pred.iter().filter(|t| !t.label.is_absent()).collect();
    check_unique(&gold, "gold")?;
    check_unique(&pred, "prediction")?;

    let gold_set: HashSet<&RelationTuple> = gold.iter().copied().collect();
    let pred_set: HashSet<&RelationTuple> = pred.iter().copied().collect();
    let mut per: BTreeMap<String, PairTypeScores> = BTreeMap::new();
    for t in &pred {
        let e = per.entry(t.pair.kind_label()).or_default();
        if gold_set.contains(t) {
            e.true_positives += 1;
        } else {
            e.false_positives += 1;
        }
    }
    for t in &gold {
        if !pred_set.contains(t) {
            per.entry(t.pair.kind_label()).or_default().false_negatives += 1;
        }
    }
    let mut micro = PairTypeScores::default();
    for s in per.values_mut() {
        s.finish();
        micro.true_positives += s.true_positives;
        micro.false_positives += s.false_positives;
        micro.false_negatives += s.false_negatives;
    }
    let (precision_undefined, recall_undefined) = micro.finish();
    Ok(EvalReport {
        true_positives: micro.true_positives,
        false_positives: micro.false_positives,
        false_negatives: micro.false_negatives,
        precision: micro.precision,
        recall: micro.recall,
        f1: micro.f1,
        precision_undefined,
        recall_undefined,
        per_pair_type: per,
    })
}

impl EvalReport {
    /// Aligned-column summary table.
    pub fn to_table(&self) -> String {
        let mut out = format!(
            "{:<28} {:>6} {:>6} {:>6} {:>7} {:>7} {:>7}\n",
            "pair type", "TP", "FP", "FN", "P", "R", "F"
        );
        let row = |name: &str, s: (usize, usize, usize, f64, f64, f64)| {
            format!(
                "{:<28} {:>6} {:>6} {:>6} {:>7.3} {:>7.3} {:>7.3}\n",
                name, s.0, s.1, s.2, s.3, s.4, s.5
            )
        };
        for (k, s) in &self.per_pair_type {
            out.push_str(&row(
                k,
                (s.true_positives, s.false_positives, s.false_negatives, s.precision, s.recall, s.f1),
            ));
        }
        out.push_str(&row(
            "micro",
            (
                self.true_positives,
                self.false_positives,
                self.false_negatives,
                self.precision,
                self.recall,
                self.f1,
            ),
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ConceptPair, EntityType, RelationLabel};

    fn t(doc: &str, a: &str, b: &str, label: RelationLabel) -> RelationTuple {
        RelationTuple::new(
            doc,
            ConceptPair::canonicalize(a, &EntityType::Gene, b, &EntityType::Disease).unwrap(),
            label,
        )
    }

    #[test]
    fn identical_sets_score_one() {
        let g: Vec<_> = (0..5).map(|i| t("1", &format!("N{i}"), "D", RelationLabel::Association)).collect();
        let r = score(&g, &g).unwrap();
        assert_eq!((r.precision, r.recall, r.f1), (1.0, 1.0, 1.0));
    }

    #[test]
    fn half_overlap() {
        let t1 = t("1", "N1", "D1", RelationLabel::Association);
        let t2 = t("1", "N2", "D1", RelationLabel::Association);
        let t3 = t("2", "N1", "D1", RelationLabel::Association);
        let r = score(&[t1.clone(), t2], &[t1, t3]).unwrap();
        assert_eq!((r.true_positives, r.false_positives, r.false_negatives), (1, 1, 1));
        assert_eq!((r.precision, r.recall, r.f1), (0.5, 0.5, 0.5));
    }

    #[test]
    fn empty_predictions_flag_precision() {
        let r = score(&[t("1", "N1", "D1", RelationLabel::Bind)], &[]).unwrap();
        assert_eq!((r.precision, r.recall, r.f1), (0.0, 0.0, 0.0));
        assert!(r.precision_undefined);
        assert!(!r.recall_undefined);
    }

    #[test]
    fn label_mismatch_is_fp_and_fn() {
        let r = score(
            &[t("1", "N1", "D1", RelationLabel::Association)],
            &[t("1", "N1", "D1", RelationLabel::PositiveCorrelation)],
        )
        .unwrap();
        assert_eq!((r.true_positives, r.false_positives, r.false_negatives), (0, 1, 1));
    }

    #[test]
    fn absence_labels_ignored_and_duplicates_rejected() {
        let none = t("1", "N1", "D1", RelationLabel::None);
        let internal = t("1", "N2", "D1", RelationLabel::InternalNone("BC5CDR".into()));
        let r = score(&[none.clone(), internal.clone()], &[none.clone(), internal]).unwrap();
        assert_eq!((r.true_positives, r.false_positives, r.false_negatives), (0, 0, 0));
        let a = t("1", "N1", "D1", RelationLabel::Bind);
        assert!(matches!(score(&[a.clone(), a.clone()], &[]), Err(Error::Duplicate { .. })));
        assert!(matches!(score(&[], &[a.clone(), a]), Err(Error::Duplicate { .. })));
    }
}
