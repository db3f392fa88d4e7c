use std::io::Write;
use std::process::{Command, Output, Stdio};

fn itline(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_itline"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn gen_output_feeds_other_commands() {
    let g = itline(&["gen", "fig2", "2"], None);
    let r = json(&itline(&["index", "--hp"], Some(&stdout(&g))));
    assert_eq!(r["value"], 2);
    assert_eq!(r["method"], "EUP-witness");
}

#[test]
fn graph6_round_trip_through_linegraph() {
    let g6 = stdout(&itline(&["--format", "g6", "gen", "cycle", "5"], None));
    let l = itline(
        &[
            "--format",
            "edgelist",
            "linegraph",
            "--g6",
            g6.trim(),
            "--iterate",
            "2",
        ],
        None,
    );
    assert!(l.status.success());
    assert_eq!(stdout(&l).lines().next(), Some("5 5"));
}

#[test]
fn check_eup_reports_emptiness() {
    let g6 = stdout(&itline(&["--format", "g6", "gen", "fig1"], None));
    let r = json(&itline(
        &[
            "check-eup",
            "--g6",
            g6.trim(),
            "--k",
            "1",
            "--variant",
            "eup",
        ],
        None,
    ));
    assert_eq!(r["nonempty"], false);
    let w = json(&itline(
        &[
            "check-eup",
            "--g6",
            g6.trim(),
            "--k",
            "2",
            "--variant",
            "eup",
            "--witness",
        ],
        None,
    ));
    assert_eq!(w["report"]["parity"]["verdict"], "pass");
}

#[test]
fn bounds_as_csv() {
    let g6 = stdout(&itline(&["--format", "g6", "gen", "fig3", "1", "6"], None));
    let o = itline(&["--format", "csv", "bounds", "--g6", g6.trim()], None);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "thm_b1,3"));
}

#[test]
fn verify_exit_codes() {
    let ok = itline(
        &[
            "--format",
            "csv",
            "verify",
            "--theorem",
            "main",
            "--max-vertices",
            "5",
        ],
        None,
    );
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains(",0,0,"));
    let bad = itline(&["index"], Some("not a graph"));
    assert_eq!(bad.status.code(), Some(2));
}
