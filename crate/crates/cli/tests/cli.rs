use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn cfconn(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfconn"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn setup(files: &[(&str, &str)]) -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in files {
        fs::write(dir.path().join(name), text).unwrap();
    }
    dir
}

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";

#[test]
fn verify_reports_verdicts() {
    let dir = setup(&[("g", P4), ("good", "2\n1\n2\n1\n"), ("bad", "1\n1\n1\n1\n"), ("short", "2\n1\n2\n")]);
    let o = cfconn(&["verify", "--graph", "g", "--coloring", "good", "--mode", "cfc"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "OK\nverdict=true witness=none\n");

    let o = cfconn(&["verify", "--graph", "g", "--coloring", "bad", "--mode", "cfc"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict=false witness=0,2"));

    let o = cfconn(&["verify", "--graph", "g", "--coloring", "short", "--mode", "cfc"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_subset_needs_pairs() {
    let dir = setup(&[("g", P4), ("c", "2\n1\n1\n2\n"), ("p", "p 0 1\np 2 3\n")]);
    let o = cfconn(&["verify", "--graph", "g", "--coloring", "c", "--mode", "scfc-subset"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    let args = ["verify", "--graph", "g", "--coloring", "c", "--mode", "scfc-subset", "--pairs", "p"];
    assert_eq!(cfconn(&args, dir.path()).status.code(), Some(0));
    let o = cfconn(&["verify", "--graph", "g", "--coloring", "c", "--mode", "scfc"], dir.path());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn solve_prints_values_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    assert!(cfconn(&["generate", "--family", "path", "--n", "8", "--out", "p8"], d).status.success());
    assert!(cfconn(&["generate", "--family", "cycle", "--n", "5", "--out", "c5"], d).status.success());
    let o = cfconn(&["solve", "--graph", "p8", "--mode", "cfc", "--out", "w"], d);
    assert_eq!(stdout(&o), "value=3\n");
    let o = cfconn(&["verify", "--graph", "p8", "--coloring", "w", "--mode", "cfc"], d);
    assert_eq!(o.status.code(), Some(0));
    for mode in ["scfc", "rc"] {
        let o = cfconn(&["solve", "--graph", "c5", "--mode", mode], d);
        assert_eq!(stdout(&o), "value=3\n", "{mode}");
    }
}

#[test]
fn exhausted_budget_is_inconclusive() {
    let dir = setup(&[("g", "8 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n")]);
    let o = cfconn(&["solve", "--graph", "g", "--mode", "cfc", "--budget", "3"], dir.path());
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("inconclusive bounds=["));
}

#[test]
fn disconnected_input_is_an_error() {
    let dir = setup(&[("g", "3 1\n0 1\n")]);
    let o = cfconn(&["solve", "--graph", "g", "--mode", "cfc"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_summaries() {
    let dir = setup(&[
        ("f.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n"),
        ("taut.cnf", "p cnf 2 1\n1 -1 2 0\n"),
        ("k3", "3 3\n0 1\n0 2\n1 2\n"),
        ("star", "4 3\n0 1\n0 2\n0 3\n"),
        ("p", "p 1 2\n"),
        ("partial", "0 0\n"),
    ]);
    let d = dir.path();
    let o = cfconn(&["reduce", "--kind", "sat2partial", "--cnf", "f.cnf", "--out", "sat"], d);
    assert_eq!(stdout(&o), "V'=6 E'=13 uncolored=3\n");
    assert!(d.join("sat/partial.txt").exists() && d.join("sat/maps.txt").exists());
    let o = cfconn(&["reduce", "--kind", "kcolor2subset", "--graph", "k3", "--out", "kc"], d);
    assert_eq!(stdout(&o), "V'=4 E'=3 P=3\n");
    let o = cfconn(&["reduce", "--kind", "star2scfc", "--graph", "star", "--pairs", "p", "--out", "st"], d);
    assert_eq!(stdout(&o), "V'=14 E'=40\n");
    let o = cfconn(&["reduce", "--kind", "partial2subset", "--graph", "k3", "--partial", "partial", "--out", "ps"], d);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("V'=10 "));
    let o = cfconn(&["reduce", "--kind", "sat2partial", "--cnf", "taut.cnf", "--out", "t"], d);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn extract_round_trip() {
    let dir = setup(&[("k3", "3 3\n0 1\n0 2\n1 2\n"), ("w", "3\n1\n2\n3\n")]);
    let d = dir.path();
    assert!(cfconn(&["reduce", "--kind", "kcolor2subset", "--graph", "k3", "--out", "kc"], d).status.success());
    let args = [
        "extract", "--kind", "kcolor2subset", "--graph", "kc/graph.txt", "--maps", "kc/maps.txt", "--coloring", "w",
        "--out", "vc",
    ];
    assert!(cfconn(&args, d).status.success());
    let o = cfconn(&["verify", "--graph", "k3", "--coloring", "vc", "--mode", "vcfc"], d);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn extract_sat_assignment() {
    let dir = setup(&[("f.cnf", "p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n")]);
    let d = dir.path();
    assert!(cfconn(&["reduce", "--kind", "sat2partial", "--cnf", "f.cnf", "--out", "sat"], d).status.success());
    // fixed colors from the partial file, links x1, x3 true and x2 false
    let partial = fs::read_to_string(d.join("sat/partial.txt")).unwrap();
    let mut ids = vec![0u32; 13];
    for line in partial.lines() {
        let mut it = line.split_whitespace().map(|x| x.parse::<u32>().unwrap());
        let (e, c) = (it.next().unwrap(), it.next().unwrap());
        ids[e as usize] = c + 1;
    }
    for (e, c) in [(6, 2), (7, 1), (8, 2)] {
        ids[e] = c;
    }
    let text: String = std::iter::once("2".to_string()).chain(ids.iter().map(u32::to_string)).map(|l| l + "\n").collect();
    fs::write(d.join("full"), text).unwrap();
    let args = [
        "extract", "--kind", "sat2partial", "--graph", "sat/graph.txt", "--maps", "sat/maps.txt", "--partial",
        "sat/partial.txt", "--coloring", "full",
    ];
    let o = cfconn(&args, d);
    assert_eq!(stdout(&o), "v 1 -2 3 0\n");
}

#[test]
fn generate_all_connected_writes_every_graph() {
    let dir = tempfile::tempdir().unwrap();
    let o = cfconn(&["generate", "--family", "all-connected", "--n", "4", "--out", "all"], dir.path());
    assert!(o.status.success());
    assert_eq!(fs::read_dir(dir.path().join("all")).unwrap().count(), 38);
    let o = cfconn(&["generate", "--family", "all-connected", "--n", "8"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn seeded_generation_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = || stdout(&cfconn(&["generate", "--family", "gnp", "--n", "6", "--seed", "7"], dir.path()));
    assert_eq!(run(), run());
}

#[test]
fn selftest_subset() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_cfconn"))
        .args(["selftest", "--scale", "quick", "--only", "1", "--only", "7"])
        .env("CFCONN_THREADS", "1")
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS criterion 1"));
    assert!(out.contains("2/2 criteria passed"));
    let o = cfconn(&["selftest", "--only", "9"], dir.path());
    assert_eq!(o.status.code(), Some(2));
}
