//! Reference profiles for the nine corpora the toolkit ships support for.
//!
//! The JSON sources live in `crates/core/profiles/` and double as templates
//! for new corpora.

use crate::formats::parse_profile;
use crate::model::CorpusProfile;

macro_rules! reference_profile {
    ($fn_name:ident, $file:literal) => {
        pub fn $fn_name() -> CorpusProfile {
            parse_profile(include_str!(concat!("../profiles/", $file))).expect(concat!("valid profile ", $file))
        }
    };
}

reference_profile!(biored, "biored.json");
reference_profile!(aimed, "aimed.json");
reference_profile!(drugprot, "drugprot.json");
reference_profile!(ddi, "ddi.json");
reference_profile!(hprd50, "hprd50.json");
reference_profile!(bc5cdr, "bc5cdr.json");
reference_profile!(emu, "emu.json");
reference_profile!(pharmgkb, "pharmgkb.json");
reference_profile!(disgenet, "disgenet.json");

/// All nine reference profiles, target corpus first.
pub fn reference_profiles() -> Vec<CorpusProfile> {
    vec![
        biored(),
        aimed(),
        drugprot(),
        ddi(),
        hprd50(),
        bc5cdr(),
        emu(),
        pharmgkb(),
        disgenet(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axes(p: &CorpusProfile) -> String {
        [
            p.span_solution.code(),
            p.level.code(),
            p.negative_policy.code(),
            p.granularity.code(),
            p.entity_policy.code(),
        ]
        .join(" ")
    }

    #[test]
    fn axes_match_corpus_table() {
        let expected = [
            ("BioRED", "a1 b1 c2 d1 e2"),
            ("AIMed", "a1 b2 c1 d2 e2"),
            ("DrugProt", "a1 b2 c1 d1 e1"),
            ("DDI", "a1 b2 c1 d2 e2"),
            ("HPRD50", "a1 b2 c1 d2 e2"),
            ("BC5CDR", "a1 b1 c1 d1 e1"),
            ("EMU", "a2 b2 c3 d2 e2"),
            ("PharmGKB", "a3 b2 c3 d2 e2"),
            ("DisGeNet", "a3 b2 c3 d2 e2"),
        ];
        let profiles = reference_profiles();
        assert_eq!(profiles.len(), expected.len());
        for (p, (name, codes)) in profiles.iter().zip(expected) {
            assert_eq!(p.name, name);
            assert_eq!(axes(p), codes, "{name}");
        }
    }
}
