//! Fixture corpora and seeded generators of synthetic documents, shared by
//! the test suites and benchmarks.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::formats::{parse_pubtator, parse_repository};
use crate::harmonize::{harmonize_input, CorpusInput, Harmonization};
use crate::model::{CorpusProfile, Document, EntityMention, EntityType, RawRelation};
use crate::profiles;

macro_rules! fixture_file {
    ($path:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/testdata/", $path))
    };
}

/// Hand-built PubTator-style files, by name.
pub fn pubtator_fixtures() -> Vec<(&'static str, &'static str)> {
    vec![
        ("biored", fixture_file!("fixtures/biored/input.txt")),
        ("aimed", fixture_file!("fixtures/aimed/input.txt")),
        ("hprd50", fixture_file!("fixtures/hprd50/input.txt")),
        ("drugprot", fixture_file!("fixtures/drugprot/input.txt")),
        ("ddi", fixture_file!("fixtures/ddi/input.txt")),
        ("bc5cdr", fixture_file!("fixtures/bc5cdr/input.txt")),
        ("emu-annotations", fixture_file!("fixtures/emu/annotations.txt")),
        ("pharmgkb-annotations", fixture_file!("fixtures/pharmgkb/annotations.txt")),
        ("disgenet-annotations", fixture_file!("fixtures/disgenet/annotations.txt")),
        ("edge-cases", fixture_file!("pubtator/edge_cases.txt")),
    ]
}

/// One small corpus per reference profile, in the files' on-disk layout.
#[derive(Debug, Clone)]
pub struct FixtureCorpus {
    pub dir: &'static str,
    pub profile: CorpusProfile,
    pub profile_json: &'static str,
    /// PubTator text, or repository triples when `annotations` is set.
    pub input: &'static str,
    pub annotations: Option<&'static str>,
}

impl FixtureCorpus {
    pub fn corpus_input(&self) -> Result<CorpusInput> {
        if self.annotations.is_some() {
            let first = self.profile.allowed_pairs.iter().next().expect("validated profile").clone();
            Ok(CorpusInput::Repository(parse_repository(self.input, first)?))
        } else {
            Ok(CorpusInput::Annotated(parse_pubtator(self.input)?))
        }
    }

    pub fn annotation_documents(&self) -> Result<Option<Vec<Document>>> {
        self.annotations.map(parse_pubtator).transpose()
    }

    pub fn harmonize(&self) -> Result<Harmonization> {
        harmonize_input(
            self.corpus_input()?,
            &self.profile,
            self.annotation_documents()?,
            None,
            None,
        )
    }
}

pub fn fixture_corpora() -> Vec<FixtureCorpus> {
    macro_rules! fixture {
        ($dir:literal, $profile:ident, $json:literal) => {
            fixture!($dir, $profile, $json, None)
        };
        ($dir:literal, $profile:ident, $json:literal, $ann:expr) => {
            FixtureCorpus {
                dir: $dir,
                profile: profiles::$profile(),
                profile_json: include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/profiles/", $json)),
                input: include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/testdata/fixtures/", $dir, "/input.txt")),
                annotations: $ann,
            }
        };
    }
    vec![
        fixture!("biored", biored, "biored.json"),
        fixture!("aimed", aimed, "aimed.json"),
        fixture!("drugprot", drugprot, "drugprot.json"),
        fixture!("ddi", ddi, "ddi.json"),
        fixture!("hprd50", hprd50, "hprd50.json"),
        fixture!("bc5cdr", bc5cdr, "bc5cdr.json"),
        fixture!("emu", emu, "emu.json", Some(fixture_file!("fixtures/emu/annotations.txt"))),
        fixture!(
            "pharmgkb",
            pharmgkb,
            "pharmgkb.json",
            Some(fixture_file!("fixtures/pharmgkb/annotations.txt"))
        ),
        fixture!(
            "disgenet",
            disgenet,
            "disgenet.json",
            Some(fixture_file!("fixtures/disgenet/annotations.txt"))
        ),
    ]
}

const WORDS: &[&str] = &[
    "the", "protein", "levels", "were", "increased", "in", "patients", "with", "and", "of", "cells", "after",
    "treatment", "expression", "was", "reduced", "by", "naïve", "α-helix", "dose", "5", "µM", "study",
];
const TYPES: &[&str] = &["Gene", "Chemical", "Disease"];
const LABELS: &[&str] = &[
    "Association",
    "Positive_Correlation",
    "Negative_Correlation",
    "Bind",
    "INHIBITOR",
    "AGONIST",
    "CID",
    "interaction",
    "effect",
];

struct Concept {
    id: String,
    kind: EntityType,
    surface: String,
}

struct TextBuilder {
    text: String,
    chars: usize,
    mentions: Vec<EntityMention>,
}

impl TextBuilder {
    fn push(&mut self, s: &str) {
        self.text.push_str(s);
        self.chars += s.chars().count();
    }

    fn mention(&mut self, surface: &str, kind: &EntityType, ids: Vec<String>) {
        let start = self.chars;
        self.push(surface);
        self.mentions
            .push(EntityMention::new(start, self.chars, surface, kind.clone(), ids).expect("generated mention"));
    }

    fn sentence<R: Rng>(&mut self, rng: &mut R, concepts: &[Concept], terminal: bool) {
        let len = rng.random_range(3..10);
        for i in 0..len {
            if i > 0 {
                self.push(" ");
            }
            if !concepts.is_empty() && rng.random_bool(0.3) {
                let c = concepts.choose(rng).expect("non-empty");
                let partner = concepts
                    .iter()
                    .find(|o| o.kind == c.kind && o.id != c.id)
                    .filter(|_| rng.random_bool(0.2));
                match partner {
                    Some(p) => {
                        let surface = format!("{} and {}", c.surface, p.surface);
                        self.mention(&surface, &c.kind, vec![c.id.clone(), p.id.clone()]);
                    }
                    None => self.mention(&c.surface, &c.kind, vec![c.id.clone()]),
                }
            } else {
                let w = *WORDS.choose(rng).expect("non-empty");
                if i == 0 {
                    let mut cs = w.chars();
                    let first = cs.next().expect("non-empty word");
                    self.push(&format!("{}{}", first.to_uppercase(), cs.as_str()));
                } else {
                    self.push(w);
                }
            }
        }
        if terminal {
            self.push(".");
        }
    }
}

/// A random document with at most `max_concepts` concept ids. Mentions may
/// carry two ids of the same type (composite mentions); relations include
/// occasional self pairs, unresolved ids and duplicates.
pub fn random_document<R: Rng>(rng: &mut R, id: &str, max_concepts: usize) -> Document {
    let n = rng.random_range(0..=max_concepts);
    let concepts: Vec<Concept> = (0..n)
        .map(|i| {
            let kind = EntityType::parse(TYPES.choose(rng).expect("non-empty")).expect("canonical type");
            Concept {
                id: format!("{}{}", kind.tag_code(), i),
                surface: format!("{}x{}", kind.name().to_lowercase(), rng.random_range(0..1000)),
                kind,
            }
        })
        .collect();

    let mut title = TextBuilder {
        text: String::new(),
        chars: 0,
        mentions: Vec::new(),
    };
    let terminal = rng.random_bool(0.5);
    title.sentence(rng, &concepts, terminal);
    let mut body = TextBuilder {
        text: String::new(),
        chars: title.chars + 1,
        mentions: std::mem::take(&mut title.mentions),
    };
    let sentences = rng.random_range(1..6);
    for s in 0..sentences {
        if s > 0 {
            body.push(" ");
        }
        body.sentence(rng, &concepts, true);
    }

    let mentioned: Vec<&Concept> = concepts
        .iter()
        .filter(|c| body.mentions.iter().any(|m| m.carries(&c.id)))
        .collect();
    let mut relations = Vec::new();
    if mentioned.len() >= 2 {
        for _ in 0..rng.random_range(0..mentioned.len() * 2) {
            let a = mentioned.choose(rng).expect("non-empty");
            let b = mentioned.choose(rng).expect("non-empty");
            let label = *LABELS.choose(rng).expect("non-empty");
            relations.push(RawRelation::new(label, a.id.clone(), b.id.clone()).expect("generated relation"));
        }
    }
    if rng.random_bool(0.1) {
        relations.push(RawRelation::new("Association", "G0", "X404").expect("generated relation"));
    }
    Document::new(id, title.text, body.text, body.mentions, relations).expect("generated document")
}

pub fn random_corpus(seed: u64, docs: usize, max_concepts: usize) -> Vec<Document> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..docs)
        .map(|i| random_document(&mut rng, &format!("R{seed}-{i}"), max_concepts))
        .collect()
}
