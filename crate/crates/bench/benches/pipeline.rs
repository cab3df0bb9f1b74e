use std::hint::black_box;

use biorel::evaluate::{regularized_incomplete_beta, score};
use biorel::harmonize::harmonize_corpus;
use biorel::instances::{enumerate_pairs, generate_instances};
use biorel::profiles;
use biorel::testkit::random_corpus;
use biorel::textspan::{dictionary_match, Lexicon};
use biorel::EntityType;
use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

fn bench_dictionary_match(c: &mut Criterion) {
    let docs = random_corpus(1, 50, 8);
    let mut lexicon = Lexicon::new();
    for (i, doc) in docs.iter().enumerate() {
        for m in &doc.mentions {
            let _ = lexicon.insert(&m.text, EntityType::Gene, vec![format!("L{i}")]);
        }
    }
    let text: String = docs.iter().map(|d| d.text()).collect::<Vec<_>>().join(" ");
    c.bench_function("dictionary_match", |b| b.iter(|| dictionary_match(black_box(&text), &lexicon)));
}

fn bench_enumerate(c: &mut Criterion) {
    let docs = random_corpus(2, 100, 8);
    let allowed = profiles::biored().allowed();
    c.bench_function("enumerate_pairs_100_docs", |b| {
        b.iter(|| docs.iter().map(|d| enumerate_pairs(d, &allowed).len()).sum::<usize>())
    });
}

fn bench_harmonize(c: &mut Criterion) {
    let docs = random_corpus(3, 200, 8);
    let profile = profiles::biored();
    c.bench_function("harmonize_and_instances_200_docs", |b| {
        b.iter_batched(
            || docs.clone(),
            |docs| {
                let h = harmonize_corpus(docs, &profile, None, None).unwrap();
                black_box(generate_instances(&h.corpus, None).unwrap())
            },
            BatchSize::LargeInput,
        )
    });
}

fn bench_score(c: &mut Criterion) {
    let docs = random_corpus(4, 200, 8);
    let h = harmonize_corpus(docs, &profiles::biored(), None, None).unwrap();
    let instances = generate_instances(&h.corpus, None).unwrap();
    let gold = biorel::evaluate::gold_tuples(&instances);
    let pred = biorel::evaluate::baseline_predict(&instances);
    c.bench_function("score", |b| b.iter(|| score(black_box(&gold), black_box(&pred)).unwrap()));
}

fn bench_incomplete_beta(c: &mut Criterion) {
    c.bench_function("incomplete_beta", |b| {
        b.iter(|| regularized_incomplete_beta(black_box(14.5), black_box(0.5), black_box(0.37)))
    });
}

criterion_group!(
    benches,
    bench_dictionary_match,
    bench_enumerate,
    bench_harmonize,
    bench_score,
    bench_incomplete_beta
);
criterion_main!(benches);
