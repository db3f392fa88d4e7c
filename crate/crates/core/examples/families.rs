//! Runs the built-in family suite: the extremal constructions with their
//! pinned parameters and indices.

use itline::harness::{run_family_suite, CampaignConfig, Outcome};

fn main() {
    let report = run_family_suite(&CampaignConfig::default());
    for r in &report.records {
        let mark = if r.outcome == Outcome::Agree {
            "ok "
        } else {
            "BAD"
        };
        println!("{mark} {}", r.graph_id);
    }
    let s = report.summary();
    println!("{} of {} family checks agree", s.agree, s.total);
}
