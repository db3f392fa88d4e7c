//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itline::eup::{check_conditions, exists_by_enumeration, find_witness, Variant};
use itline::families;
use itline::graph::{MultiGraph, Trail};
use itline::hamilton::{lift_closed_trail_to_cycle, lift_trail_to_path};
use itline::harness::{
    connected_graphs_with_edges, corpus_of, enumerate_connected_graphs, run_bounds_campaign,
    verify_reductions, verify_theorem_induction, verify_theorem_main, CampaignConfig,
    CampaignReport,
};
use itline::indices::{
    bounds, hamiltonian_index, hamiltonian_path_index, thm_b2_witness, CrossCheckCaps, Method,
};
use itline::linegraph::{find_claw, line_graph};
use itline::search::{Search, SearchOptions};
use itline::structure::{branches, find_dominating_trail, max_trail};

const FIG1_LIMIT: Duration = Duration::from_secs(1);
const CORPUS_LIMIT: Duration = Duration::from_secs(600);
const FAMILY_LIMIT: Duration = Duration::from_secs(600);
const BUDGET: u64 = 2_000_000_000;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn opts() -> SearchOptions {
    SearchOptions::with_budget(BUDGET)
}

fn cfg() -> CampaignConfig {
    CampaignConfig {
        search: opts(),
        ..CampaignConfig::default()
    }
}

fn campaign_clean(r: &CampaignReport, expected_checked: usize) -> Result<String, String> {
    let s = r.summary();
    ensure(s.mismatch == 0, || {
        let ids: Vec<_> = r.mismatches().map(|m| m.graph_id.clone()).collect();
        format!("{} mismatches: {ids:?}", s.mismatch)
    })?;
    ensure(s.unknown == 0, || format!("{} unknowns", s.unknown))?;
    ensure(s.agree == expected_checked, || {
        format!("{} agreements, expected {expected_checked}", s.agree)
    })?;
    Ok(format!(
        "{}/{} agree, {} skipped",
        s.agree, s.total, s.skipped
    ))
}

/// Independent check that `seq` (edge ids of `g`) is a hamiltonian path of
/// `L(g)`: every edge once, consecutive edges share an endpoint.
fn edges_form_line_path(g: &MultiGraph, seq: &[usize], closed: bool) -> bool {
    let distinct: BTreeSet<_> = seq.iter().collect();
    let share = |a: usize, b: usize| {
        let (p, q) = g.edges()[a];
        let (r, s) = g.edges()[b];
        p == r || p == s || q == r || q == s
    };
    let body_ok = seq.len() == g.size()
        && distinct.len() == seq.len()
        && seq.windows(2).all(|w| share(w[0], w[1]));
    body_ok && (!closed || share(seq[0], seq[seq.len() - 1]))
}

fn criterion_1() -> Verdict {
    let start = Instant::now();
    let g = families::fig1();
    ensure((g.order(), g.size()) == (12, 13), || {
        format!("fig1 has {} vertices, {} edges", g.order(), g.size())
    })?;
    ensure(
        exists_by_enumeration(&g, 1, Variant::Eup)
            .map_err(|e| e.to_string())?
            .is_none(),
        || "EUP_1 is nonempty".into(),
    )?;
    let t = find_dominating_trail(&g, false, &opts())
        .map_err(|e| e.to_string())?
        .found()
        .ok_or("no dominating trail")?;
    ensure(t.vertices == (0..11).collect::<Vec<_>>(), || {
        format!("trail {:?}", t.vertices)
    })?;
    let lifted = lift_trail_to_path(&g, &t).map_err(|e| e.to_string())?;
    ensure(edges_form_line_path(&g, &lifted.vertices, false), || {
        "lifted path does not verify".into()
    })?;
    let hp = hamiltonian_path_index(&g, &opts()).map_err(|e| e.to_string())?;
    ensure(
        (hp.value, hp.method) == (1, Method::DominatingTrail),
        || format!("h_p = {}", hp.value),
    )?;
    let elapsed = start.elapsed();
    ensure(elapsed < FIG1_LIMIT, || {
        format!("took {elapsed:?}, limit {FIG1_LIMIT:?}")
    })?;
    Ok(format!(
        "EUP_1 empty over 2^13 candidates, trail v1..v11, lifted path of {} vertices, h_p = 1, {elapsed:.2?}",
        lifted.vertices.len()
    ))
}

fn criterion_2() -> Verdict {
    let start = Instant::now();
    let corpus: Vec<_> = corpus_of(enumerate_connected_graphs(6).map_err(|e| e.to_string())?)
        .into_iter()
        .filter(|c| c.graph.size() >= 3)
        .collect();
    ensure(corpus.len() == 140, || {
        format!("corpus has {} graphs, expected 140", corpus.len())
    })?;
    let r = verify_theorem_main(&corpus, 2, &cfg());
    let dp_runs = r
        .records
        .iter()
        .filter(|x| x.detail.get("dp_check").is_some_and(|v| !v.is_null()))
        .count();
    let line = campaign_clean(&r, 140)?;
    let elapsed = start.elapsed();
    ensure(elapsed < CORPUS_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{line}, DP confirmation on {dp_runs}, {elapsed:.2?}"
    ))
}

fn criterion_3() -> Verdict {
    let simple = corpus_of(connected_graphs_with_edges(7, false).map_err(|e| e.to_string())?);
    ensure(simple.len() == 131, || {
        format!("{} simple graphs, expected 131", simple.len())
    })?;
    let r = verify_theorem_induction(&simple, 2, &cfg());
    let line = campaign_clean(&r, 130)?;
    let multi = corpus_of(connected_graphs_with_edges(7, true).map_err(|e| e.to_string())?);
    let rm = verify_theorem_induction(&multi, 2, &cfg());
    let mline = campaign_clean(&rm, multi.len() - 1)?;
    Ok(format!("simple: {line}; with parallel edges: {mline}"))
}

fn criterion_4() -> Verdict {
    let corpus = corpus_of(enumerate_connected_graphs(6).map_err(|e| e.to_string())?);
    let r = verify_reductions(&corpus, &cfg());
    campaign_clean(&r, 140)
}

fn criterion_5() -> Verdict {
    let mut notes = Vec::new();
    for k in 1..=3 {
        let g = families::fig2(k).map_err(|e| e.to_string())?;
        let hp = hamiltonian_path_index(&g, &opts()).map_err(|e| e.to_string())?;
        let h = hamiltonian_index(&g, &opts()).map_err(|e| e.to_string())?;
        ensure(hp.value == k && h.value == k, || {
            format!("k = {k}: h_p = {}, h = {}", hp.value, h.value)
        })?;
        let (mp, mh) = if k == 1 {
            (Method::DominatingTrail, Method::DominatingTrail)
        } else {
            (Method::EupWitness, Method::EuWitness)
        };
        ensure(hp.method == mp && h.method == mh, || {
            format!("k = {k}: methods {} / {}", hp.method, h.method)
        })?;
        if k >= 2 {
            let below =
                exists_by_enumeration(&g, k - 1, Variant::Eup).map_err(|e| e.to_string())?;
            ensure(below.is_none(), || {
                format!("k = {k}: EUP_{} nonempty", k - 1)
            })?;
            notes.push(format!("EUP_{} empty over 2^{}", k - 1, g.size()));
        }
    }
    Ok(format!("h = h_p = k for k = 1, 2, 3; {}", notes.join(", ")))
}

fn criterion_6() -> Verdict {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (s, t) in [(1, 6), (2, 7)] {
        let g = families::fig3(s, t).map_err(|e| e.to_string())?;
        let mt = max_trail(&g, &opts()).map_err(|e| e.to_string())?;
        ensure(mt.mt_star == 2 * t + 1 && mt.d3_star == 4, || {
            format!(
                "(s, t) = ({s}, {t}): mt* = {}, d* = {}",
                mt.mt_star, mt.d3_star
            )
        })?;
        let b = bounds(&g, &opts()).map_err(|e| e.to_string())?;
        ensure(b.thm_b1 == s + 2, || format!("thm_b1 = {}", b.thm_b1))?;
        let above = find_witness(&g, s + 2, Variant::Eup, &opts()).map_err(|e| e.to_string())?;
        let w = above.found().ok_or(format!("no EUP_{} witness", s + 2))?;
        ensure(
            check_conditions(&g, &w, s + 2, Variant::Eup)
                .map_err(|e| e.to_string())?
                .passes(),
            || "witness fails its conditions".into(),
        )?;
        let below = find_witness(&g, s + 1, Variant::Eup, &opts()).map_err(|e| e.to_string())?;
        ensure(below.is_absent(), || {
            format!("EUP_{} not shown empty: {below:?}", s + 1)
        })?;
        let hp = hamiltonian_path_index(&g, &opts()).map_err(|e| e.to_string())?;
        ensure(hp.value == s + 2, || format!("h_p = {}", hp.value))?;
        notes.push(format!("({s},{t}): h_p = thm_b1 = {}", s + 2));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < FAMILY_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{}, {elapsed:.2?}", notes.join("; ")))
}

fn criterion_7() -> Verdict {
    let mut notes = Vec::new();
    for s in 1..=2 {
        let g = families::fig4b(s).map_err(|e| e.to_string())?;
        let b = bounds(&g, &opts()).map_err(|e| e.to_string())?;
        ensure(
            b.stats.delta_prime == 6 && b.stats.d3_doublestar == 13 && b.thm_b2 == s + 2,
            || format!("s = {s}: {:?}, thm_b2 = {}", b.stats, b.thm_b2),
        )?;
        let (k, h) = thm_b2_witness(&g)
            .map_err(|e| e.to_string())?
            .ok_or("no recipe witness")?;
        ensure(k == s + 2, || format!("recipe level {k}"))?;
        let report = check_conditions(&g, &h, k, Variant::Eup).map_err(|e| e.to_string())?;
        ensure(report.passes(), || {
            format!("recipe witness fails:\n{report}")
        })?;
        if s == 1 {
            match find_witness(&g, 2, Variant::Eup, &opts()).map_err(|e| e.to_string())? {
                Search::Absent => notes.push("s = 1: EUP_2 empty by search".to_string()),
                Search::Unknown(e) => notes.push(format!("s = 1: EUP_2 unknown ({e})")),
                Search::Found(h) => return Err(format!("s = 1: EUP_2 witness {h:?}")),
            }
        }
    }
    Ok(format!(
        "delta' = 6, d** = 13, thm_b2 = s + 2, recipe witnesses pass; {}",
        notes.join(", ")
    ))
}

fn criterion_8() -> Verdict {
    let corpus = corpus_of(enumerate_connected_graphs(6).map_err(|e| e.to_string())?);
    let config = CampaignConfig {
        cross_check: Some(CrossCheckCaps::default()),
        ..cfg()
    };
    let r = run_bounds_campaign(&corpus, &config);
    let line = campaign_clean(&r, corpus.len())?;
    let confirmed = r
        .records
        .iter()
        .filter(|x| x.detail["checks"]["hp_cross_check"]["outcome"] == "confirmed")
        .count();
    Ok(format!(
        "{line}, direct iteration confirms h_p on {confirmed}"
    ))
}

fn criterion_9() -> Verdict {
    let corpus = enumerate_connected_graphs(6).map_err(|e| e.to_string())?;
    let mut branch_checks = 0;
    let mut witness_checks = 0;
    let mut lifts = 0;
    for g in &corpus {
        if g.size() == 0 {
            continue;
        }
        let lg = line_graph(g).map_err(|e| e.to_string())?.graph;
        ensure(find_claw(&lg).is_none(), || {
            format!("claw in L of {:?}", g.edges())
        })?;
        let expected: usize = g
            .vertices()
            .map(|v| g.degree(v).unwrap())
            .map(|d| d * (d.saturating_sub(1)) / 2)
            .sum();
        ensure(lg.size() == expected && lg.order() == g.size(), || {
            "line graph size formula".into()
        })?;

        let lbranches: BTreeSet<Vec<usize>> = branches(&lg)
            .into_iter()
            .flat_map(|b| {
                let mut r = b.vertices.clone();
                r.reverse();
                [b.vertices, r]
            })
            .collect();
        for b in branches(g)
            .into_iter()
            .filter(|b| b.len() >= 2 && !b.is_closed)
        {
            ensure(lbranches.contains(&b.edges), || {
                format!("branch {:?} has no image", b.vertices)
            })?;
            branch_checks += 1;
        }

        for k in 1..=3 {
            for variant in [Variant::Eu, Variant::Eup] {
                if let Some(h) = find_witness(g, k, variant, &opts())
                    .map_err(|e| e.to_string())?
                    .found()
                {
                    let up = check_conditions(g, &h, k + 1, variant).map_err(|e| e.to_string())?;
                    ensure(up.passes(), || format!("not monotone at k = {k}"))?;
                    let wide =
                        check_conditions(g, &h, k, Variant::Eup).map_err(|e| e.to_string())?;
                    ensure(wide.passes(), || "EU witness outside EUP".into())?;
                    witness_checks += 1;
                }
            }
        }

        if g.size() >= 3 {
            for closed in [false, true] {
                if let Some(t) = find_dominating_trail(g, closed, &opts())
                    .map_err(|e| e.to_string())?
                    .found()
                {
                    let lifted: Trail = if closed {
                        lift_closed_trail_to_cycle(g, &t)
                    } else {
                        lift_trail_to_path(g, &t)
                    }
                    .map_err(|e| e.to_string())?;
                    let seq = if closed {
                        &lifted.vertices[..lifted.vertices.len() - 1]
                    } else {
                        &lifted.vertices[..]
                    };
                    ensure(edges_form_line_path(g, seq, closed), || {
                        "lift does not verify".into()
                    })?;
                    lifts += 1;
                }
            }
        }
    }
    Ok(format!(
        "{} graphs claw-free with |E(L)| = sum C(d,2); {branch_checks} branch images; {witness_checks} witnesses monotone and in EUP; {lifts} lifts verified",
        corpus.len() - 1
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict); 9] = [
        ("fig1 level-1 counterexample", criterion_1),
        ("main equivalence at n = 2 on <= 6 vertices", criterion_2),
        ("induction step at k = 2 on <= 7 edges", criterion_3),
        ("trail reductions on <= 6 vertices", criterion_4),
        ("fig2 family h = h_p = k", criterion_5),
        ("fig3 family sharpness of thm_b1", criterion_6),
        ("fig4b family sharpness of thm_b2", criterion_7),
        ("bounds validity on <= 6 vertices", criterion_8),
        ("structural properties", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("criterion {} PASS [{name}] {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL [{name}] {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
