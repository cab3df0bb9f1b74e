use std::path::Path;

use biorel::evaluate::{
    baseline_predict, corpus_stats, gold_tuples, kfold_split, paired_t_test, raw_corpus_stats, subsample as sample_ids,
    SampleSize,
};
use biorel::formats::{
    parse_instances, parse_lexicon, parse_profile, parse_pubtator, parse_repository, parse_tuples, write_instances,
    write_tuples,
};
use biorel::harmonize::{
    dropped_relations, harmonize_input, merge_corpora, write_report, CorpusInput, HarmonizedCorpus, ReportKind,
};
use biorel::instances::generate_instances;

use crate::io::{create_dir, in_file, read, write_atomic, CliError, CliResult};
use crate::{
    BaselineArgs, HarmonizeArgs, InstancesArgs, MergeArgs, ScoreArgs, SplitArgs, StatsArgs, SubsampleArgs, TtestArgs,
};

fn is_pubtator(text: &str) -> bool {
    text.lines().any(|l| l.contains("|t|"))
}

fn load_harmonized(path: &Path) -> CliResult<HarmonizedCorpus> {
    in_file(path, HarmonizedCorpus::from_json(&read(path)?))
}

pub fn harmonize(a: HarmonizeArgs) -> CliResult<()> {
    let profile = in_file(&a.profile, parse_profile(&read(&a.profile)?))?;
    let text = read(&a.input)?;
    let input = if is_pubtator(&text) {
        CorpusInput::Annotated(in_file(&a.input, parse_pubtator(&text))?)
    } else {
        let first = profile.allowed_pairs.iter().next().cloned().expect("validated profile has a pair");
        CorpusInput::Repository(in_file(&a.input, parse_repository(&text, first))?)
    };
    let annotations = match &a.annotations {
        Some(p) => Some(in_file(p, parse_pubtator(&read(p)?))?),
        None => None,
    };
    let lexicon = match &a.lexicon {
        Some(p) => Some(in_file(p, parse_lexicon(&read(p)?))?),
        None => None,
    };
    let input_relations = input.relation_count();
    let h = harmonize_input(input, &profile, annotations, lexicon, a.corpus_tag.as_deref())?;

    write_atomic(&a.out, &h.corpus.to_json())?;
    if let Some(r) = &a.report {
        write_atomic(r, &write_report(&h.report))?;
    }
    let conflicts = h.report.iter().filter(|r| r.kind == ReportKind::Conflict).count();
    println!(
        "{}: {} documents, {} pairs ({} annotated); {} input relations, {} dropped, {} conflicts",
        h.corpus.tag,
        h.corpus.documents.len(),
        h.corpus.pair_count(),
        h.corpus.annotated_count(),
        input_relations,
        dropped_relations(&h.report),
        conflicts
    );
    Ok(())
}

pub fn merge(a: MergeArgs) -> CliResult<()> {
    let corpora = a.inputs.iter().map(|p| load_harmonized(p)).collect::<CliResult<Vec<_>>>()?;
    let merged = merge_corpora(corpora)?;
    write_atomic(&a.out, &merged.to_json())?;
    println!(
        "{}: {} documents, {} pairs",
        merged.tag,
        merged.documents.len(),
        merged.pair_count()
    );
    Ok(())
}

pub fn instances(a: InstancesArgs) -> CliResult<()> {
    let h = load_harmonized(&a.input)?;
    let instances = generate_instances(&h, a.corpus_tag.as_deref())?;
    write_atomic(&a.out, &write_instances(&instances))?;
    if let Some(g) = &a.gold {
        write_atomic(g, &write_tuples(&gold_tuples(&instances)))?;
    }
    println!("{} instances", instances.len());
    Ok(())
}

/// Document ids from an id list, a PubTator corpus or a harmonized corpus,
/// in first-appearance order.
fn load_ids(path: &Path) -> CliResult<Vec<String>> {
    let text = read(path)?;
    let mut ids: Vec<String> = if text.trim_start().starts_with('{') {
        in_file(path, HarmonizedCorpus::from_json(&text))?
            .documents
            .into_iter()
            .map(|d| d.document.id)
            .collect()
    } else if is_pubtator(&text) {
        in_file(path, parse_pubtator(&text))?.into_iter().map(|d| d.id).collect()
    } else {
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(str::to_string)
            .collect()
    };
    let mut seen = std::collections::HashSet::new();
    ids.retain(|id| seen.insert(id.clone()));
    Ok(ids)
}

fn id_lines(ids: &[String]) -> String {
    ids.iter().map(|id| format!("{id}\n")).collect()
}

pub fn split(a: SplitArgs) -> CliResult<()> {
    let ids = load_ids(&a.input)?;
    let folds = kfold_split(&ids, a.k, a.seed)?;
    create_dir(&a.out)?;
    let width = folds.len().to_string().len().max(2);
    for (i, fold) in folds.iter().enumerate() {
        write_atomic(&a.out.join(format!("fold-{:0width$}.txt", i + 1)), &id_lines(fold))?;
    }
    let sizes: Vec<String> = folds.iter().map(|f| f.len().to_string()).collect();
    println!("{} folds over {} documents: sizes {}", folds.len(), ids.len(), sizes.join(" "));
    Ok(())
}

pub fn subsample(a: SubsampleArgs) -> CliResult<()> {
    let ids = load_ids(&a.input)?;
    let size = match (a.fraction, a.count) {
        (Some(f), None) => SampleSize::Fraction(f),
        (None, Some(c)) => SampleSize::Count(c),
        _ => return Err(CliError::Usage("give exactly one of --fraction and --count".into())),
    };
    let picked = sample_ids(&ids, size, a.seed)?;
    write_atomic(&a.out, &id_lines(&picked))?;
    println!("{} of {} documents", picked.len(), ids.len());
    Ok(())
}

pub fn score(a: ScoreArgs) -> CliResult<()> {
    let gold = in_file(&a.gold, parse_tuples(&read(&a.gold)?))?;
    let pred = in_file(&a.pred, parse_tuples(&read(&a.pred)?))?;
    let report = biorel::evaluate::score(&gold, &pred)?;
    print!("{}", report.to_table());
    let mut summary = format!("P={:.3} R={:.3} F={:.3}", report.precision, report.recall, report.f1);
    if report.precision_undefined {
        summary.push_str(" (no predictions: precision undefined, reported as 0)");
    }
    if report.recall_undefined {
        summary.push_str(" (no gold relations: recall undefined, reported as 0)");
    }
    println!("{summary}");
    if let Some(out) = &a.out {
        let mut json = serde_json::to_string_pretty(&report).expect("report serializes");
        json.push('\n');
        write_atomic(out, &json)?;
    }
    Ok(())
}

pub fn stats(a: StatsArgs) -> CliResult<()> {
    let text = read(&a.input)?;
    let table = if text.trim_start().starts_with('{') {
        corpus_stats(&in_file(&a.input, HarmonizedCorpus::from_json(&text))?)
    } else {
        let docs = in_file(&a.input, parse_pubtator(&text))?;
        let name = a.corpus_tag.clone().unwrap_or_else(|| {
            a.input
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "corpus".into())
        });
        raw_corpus_stats(&name, &docs)
    };
    print!("{}", table.to_text());
    if let Some(out) = &a.out {
        write_atomic(out, &table.to_json())?;
    }
    Ok(())
}

pub fn baseline(a: BaselineArgs) -> CliResult<()> {
    let instances = in_file(&a.input, parse_instances(&read(&a.input)?))?;
    let pred = baseline_predict(&instances);
    write_atomic(&a.out, &write_tuples(&pred))?;
    let positive = pred.iter().filter(|t| !t.label.is_absent()).count();
    println!("{} predictions ({} related)", pred.len(), positive);
    Ok(())
}

fn load_scores(path: &Path) -> CliResult<Vec<f64>> {
    let text = read(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: f64 = line
            .parse()
            .map_err(|_| CliError::Usage(format!("{}: line {}: not a number: {line:?}", path.display(), i + 1)))?;
        out.push(v);
    }
    Ok(out)
}

pub fn ttest(a: TtestArgs) -> CliResult<()> {
    let xs = load_scores(&a.xs)?;
    let ys = load_scores(&a.ys)?;
    let r = paired_t_test(&xs, &ys)?;
    let mut line = format!("n={} df={} mean_diff={:.6} t={:.6} p={:.6e}", xs.len(), r.df, r.mean_difference, r.t, r.p);
    if r.degenerate_variance {
        line.push_str(" (constant nonzero differences: degenerate variance)");
    }
    println!("{line}");
    if let Some(out) = &a.out {
        let mut json = serde_json::to_string_pretty(&r).expect("result serializes");
        json.push('\n');
        write_atomic(out, &json)?;
    }
    Ok(())
}
