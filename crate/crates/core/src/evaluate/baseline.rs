use super::RelationTuple;
use crate::instances::untag;
use crate::model::{CandidateInstance, ContextLevel, RelationLabel};
use crate::textspan::segment_sentences;

/// Whether the two pair members have tagged mentions inside one sentence of
/// a document-level context. For same-type pairs the tags cannot tell the
/// members apart, so two tagged spans in one sentence count as sharing.
fn members_share_sentence(inst: &CandidateInstance) -> bool {
    let t1 = inst.pair.type1.tag_code();
    let t2 = inst.pair.type2.tag_code();
    let (plain, spans) = untag(&inst.context, &[t1, t2]);
    segment_sentences(&plain, 0).iter().any(|s| {
        let inside: Vec<&str> = spans
            .iter()
            .filter(|(span, _)| s.span().contains(span))
            .map(|(_, tag)| tag.as_str())
            .collect();
        if t1 == t2 {
            inside.len() >= 2
        } else {
            inside.contains(&t1) && inside.contains(&t2)
        }
    })
}

/// Co-occurrence baseline: `Association` for sentence-level instances and for
/// document-level pairs sharing a sentence, `None` otherwise.
pub fn baseline_predict(instances: &[CandidateInstance]) -> Vec<RelationTuple> {
    instances
        .iter()
        .map(|inst| {
            let related = inst.level == ContextLevel::Sentence || members_share_sentence(inst);
            let label = if related {
                RelationLabel::Association
            } else {
                RelationLabel::None
            };
            RelationTuple::new(inst.doc_id.clone(), inst.pair.clone(), label)
        })
        .collect()
}
