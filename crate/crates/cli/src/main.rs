//! `biorel`: harmonize relation-extraction corpora, generate instances and
//! evaluate predictions.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "biorel", version, about = "Biomedical relation corpus harmonization toolkit")]
struct Cli {
    /// Worker threads (default: all cores). Never changes outputs.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a corpus profile and write the harmonized corpus plus a drop report.
    Harmonize(HarmonizeArgs),
    /// Concatenate harmonized corpora with distinct tags.
    Merge(MergeArgs),
    /// Emit tagged, prompted candidate instances (JSON lines).
    Instances(InstancesArgs),
    /// Seeded k-fold split of document ids.
    Split(SplitArgs),
    /// Seeded subsample of document ids.
    Subsample(SubsampleArgs),
    /// Score predictions against gold tuples.
    Score(ScoreArgs),
    /// Corpus statistics table.
    Stats(StatsArgs),
    /// Co-occurrence baseline predictions for an instance file.
    Baseline(BaselineArgs),
    /// Paired two-sided t-test on two score vectors.
    Ttest(TtestArgs),
}

#[derive(Args)]
struct HarmonizeArgs {
    #[arg(long)]
    profile: PathBuf,
    /// PubTator-style corpus, or repository triples (DOCID ID1 ID2 [LABEL]).
    #[arg(long)]
    input: PathBuf,
    /// PubTator-style automatic annotations; also supplies texts for repository input.
    #[arg(long)]
    annotations: Option<PathBuf>,
    /// Surface-form lexicon (SURFACE TYPE IDS).
    #[arg(long)]
    lexicon: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
    /// Drop/conflict report (JSON lines).
    #[arg(long)]
    report: Option<PathBuf>,
    /// Corpus tag; defaults to the profile name.
    #[arg(long)]
    corpus_tag: Option<String>,
}

#[derive(Args)]
struct MergeArgs {
    /// Harmonized corpora (repeat the flag).
    #[arg(long = "input", required = true)]
    inputs: Vec<PathBuf>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct InstancesArgs {
    /// Harmonized corpus.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Also write the instances' labels as a gold tuple file.
    #[arg(long)]
    gold: Option<PathBuf>,
    /// Corpus named in every prompt (default: each instance's source corpus).
    #[arg(long)]
    corpus_tag: Option<String>,
}

#[derive(Args)]
struct SplitArgs {
    /// Id list (one per line), PubTator corpus or harmonized corpus.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    seed: u64,
    /// Output directory for fold-NN.txt files.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("size").required(true).args(["fraction", "count"])))]
struct SubsampleArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    fraction: Option<f64>,
    #[arg(long)]
    count: Option<usize>,
    #[arg(long)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ScoreArgs {
    #[arg(long)]
    gold: PathBuf,
    #[arg(long)]
    pred: PathBuf,
    /// Write the full report as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    /// Harmonized corpus or PubTator corpus.
    #[arg(long)]
    input: PathBuf,
    /// Write the table as JSON.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Row name for a raw corpus (default: file stem).
    #[arg(long)]
    corpus_tag: Option<String>,
}

#[derive(Args)]
struct BaselineArgs {
    /// Instance file.
    #[arg(long)]
    input: PathBuf,
    /// Prediction tuple file.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct TtestArgs {
    /// Scores of the first configuration, one per line.
    #[arg(long)]
    xs: PathBuf,
    /// Paired scores of the second configuration.
    #[arg(long)]
    ys: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match cli.command {
        Command::Harmonize(a) => commands::harmonize(a),
        Command::Merge(a) => commands::merge(a),
        Command::Instances(a) => commands::instances(a),
        Command::Split(a) => commands::split(a),
        Command::Subsample(a) => commands::subsample(a),
        Command::Score(a) => commands::score(a),
        Command::Stats(a) => commands::stats(a),
        Command::Baseline(a) => commands::baseline(a),
        Command::Ttest(a) => commands::ttest(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
