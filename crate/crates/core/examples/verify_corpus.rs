//! Enumerates small connected graphs and runs the verification campaigns,
//! writing JSON lines and a CSV summary to the temp directory.

use std::env;
use std::error::Error;
use std::fs::File;

use itline::harness::{
    corpus_of, enumerate_connected_graphs, run_bounds_campaign, verify_reductions,
    verify_theorem_main, write_summary_csv, CampaignConfig,
};

fn main() -> Result<(), Box<dyn Error>> {
    let max_vertices = env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let corpus = corpus_of(enumerate_connected_graphs(max_vertices)?);
    println!(
        "{} connected graphs on at most {max_vertices} vertices",
        corpus.len()
    );

    let cfg = CampaignConfig::default();
    let reports = [
        verify_theorem_main(&corpus, 2, &cfg),
        verify_reductions(&corpus, &cfg),
        run_bounds_campaign(&corpus, &cfg),
    ];
    let dir = env::temp_dir();
    for r in &reports {
        let s = r.summary();
        println!(
            "{}: {} agree, {} mismatch, {} unknown, {} skipped",
            s.campaign, s.agree, s.mismatch, s.unknown, s.skipped
        );
        r.write_jsonl(File::create(dir.join(format!("{}.jsonl", s.campaign)))?)?;
    }
    write_summary_csv(&reports, File::create(dir.join("summary.csv"))?)?;
    println!("reports written to {}", dir.display());
    Ok(())
}
