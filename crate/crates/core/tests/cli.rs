use std::path::Path;
use std::process::{Command, Output};

use pancyclic::constructions::gen_g1;
use pancyclic::format::{self, GraphFile};
use pancyclic::is_isomorphic;

fn pancyclic(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pancyclic"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn gen_then_check_longest_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let o = pancyclic(&["gen", "g1", "--delta", "3", "-o", "g1.bg"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("G1(3)"));
    assert!(!stdout(&o).contains("MISMATCH"));
    let text = std::fs::read_to_string(dir.path().join("g1.bg")).unwrap();
    let GraphFile::Bigraph(g) = format::parse(&text).unwrap() else {
        panic!("expected a bipartite graph");
    };
    assert!(is_isomorphic(&g, &gen_g1(3).unwrap()).unwrap());

    let o = pancyclic(&["check", "--in", "g1.bg", "--prop", "longest-cycle", "-o", "w.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ℓ=2 (length 4)\nwitness: "));
    let o = pancyclic(
        &["check", "--in", "g1.bg", "--prop", "validate-witness", "--witness", "w.json"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn witnesses_revalidate() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("k33.bg"), "bigraph 3 3\n0: 0 1 2\n1: 0 1 2\n2: 0 1 2\n").unwrap();
    std::fs::write(d.join("tri.hg"), "hypergraph 3\ne: 0 1\ne: 1 2\ne: 0 2\n").unwrap();
    for (file, prop) in [
        ("k33.bg", "spanning-x-cycle"),
        ("k33.bg", "longest-cycle"),
        ("tri.hg", "hamiltonian-berge"),
        ("tri.hg", "spanning-x-cycle"),
    ] {
        let o = pancyclic(&["check", "--in", file, "--prop", prop, "-o", "w.json"], d);
        assert_eq!(o.status.code(), Some(0), "{prop}: {}", stderr(&o));
        let o = pancyclic(&["check", "--in", file, "--prop", "validate-witness", "--witness", "w.json"], d);
        assert_eq!(o.status.code(), Some(0), "{prop}: {}", stderr(&o));
        assert!(stdout(&o).starts_with("valid"));
    }
    let o = pancyclic(&["check", "--in", "tri.hg", "--prop", "berge-with-edges", "--edges", "0,1,2", "--json"], d);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    let o = pancyclic(&["check", "--in", "tri.hg", "--prop", "codegree", "--set", "0,1"], d);
    assert_eq!(stdout(&o), "codegree of {0, 1}: 1\n");
}

#[test]
fn structural_checks() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let o = pancyclic(&["gen", "g2", "--a", "2", "--b", "1", "--delta", "3", "-o", "g2.bg"], d);
    assert_eq!(o.status.code(), Some(0));
    let o = pancyclic(&["check", "--in", "g2.bg", "--prop", "2connected"], d);
    assert!(stdout(&o).starts_with("2-connected: no\ncut vertices:"));
    let o = pancyclic(&["check", "--in", "g2.bg", "--prop", "lll"], d);
    assert_eq!(stdout(&o), "condition (2): fails for A = {0, 1, 2}\n");
    let o = pancyclic(&["check", "--in", "g2.bg", "--prop", "tight-pair"], d);
    assert!(stdout(&o).contains("t = 1"));
    let o = pancyclic(&["check", "--in", "g2.bg", "--prop", "super-pancyclic"], d);
    assert!(stdout(&o).starts_with("super-pancyclic: no"));

    std::fs::write(d.join("c8.bg"), "bigraph 4 4\n0: 0 1 2\n1: 1 2\n2: 2 3 1\n3: 3 0\n").unwrap();
    std::fs::write(d.join("c.json"), r#"{"kind": "cycle", "xs": [0, 1, 2, 3], "ys": [0, 1, 2, 3]}"#).unwrap();
    let o = pancyclic(
        &["check", "--in", "c8.bg", "--prop", "crossing", "--i", "1", "--j", "3", "--witness", "c.json"],
        d,
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains(": crossing\n"));
    assert!(stdout(&o).contains("y_3 ∈ N(x_1), y_2 ∈ N(x_3)"));
    let o = pancyclic(&["check", "--in", "c8.bg", "--prop", "crossing", "--i", "1"], d);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_reports_exceptions() {
    let dir = tempfile::tempdir().unwrap();
    let o = pancyclic(
        &["verify", "jackson2", "--n", "3", "--m", "5", "--delta", "3", "--dump-exceptions", "ex"],
        dir.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("iso-G1(3)") && out.contains("iso-G2(2,1)"));
    assert!(stderr(&o).starts_with("elapsed: "));
    assert_eq!(std::fs::read_dir(dir.path().join("ex")).unwrap().count(), 2);
    let o = pancyclic(&["verify", "jackson", "--n", "3", "--m", "4", "--delta", "3", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["exceptions"].as_array().unwrap().len(), 0);
    assert_eq!(v["box"]["theorem"], "jackson");
    assert!(v.get("elapsed").is_none());
}

#[test]
fn scan_lists_classes() {
    let dir = tempfile::tempdir().unwrap();
    let o = pancyclic(&["scan", "!spanning-x-cycle", "--n", "3", "--m", "5", "--delta", "3"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("2 classes\n"));
    let o = pancyclic(&["scan", "false", "--n", "2..3", "--m", "3..5", "--delta", "2"], dir.path());
    assert_eq!(stdout(&o), "0 classes\n");
}

#[test]
fn seeded_generation_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["gen", "random", "--n", "5", "--m", "8", "--delta", "3", "--seed", "42", "--format", "json"];
    let a = pancyclic(&args, dir.path());
    let b = pancyclic(&args, dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let GraphFile::Bigraph(g) = format::parse(&stdout(&a)).unwrap() else {
        panic!("expected a bipartite graph");
    };
    assert!(g.in_class(5, 8, 3));
}

#[test]
fn errors_exit_two_with_distinct_messages() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["explode"], "unrecognized subcommand"),
        (vec!["gen", "g1", "--colour", "red"], "unexpected argument"),
        (vec!["check", "--in", "missing.bg", "--prop", "lll"], "missing.bg"),
        (vec!["check", "--in", "bad.bg", "--prop", "lll"], "line 2: Y index 3 out of range"),
        (vec!["verify", "jackson", "--n", "9", "--m", "16", "--delta", "9"], "too large"),
        (vec!["verify", "mainj", "--n", "4", "--m", "8", "--delta", "4"], "box outside theorem hypotheses"),
        (vec!["scan", "2-connected and wobbly", "--n", "3", "--m", "4", "--delta", "3"], "unknown predicate"),
    ];
    std::fs::write(d.join("bad.bg"), "bigraph 2 2\n0: 0 3\n1: 0 1\n").unwrap();
    for (args, message) in cases {
        let o = pancyclic(&args, d);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(message), "{args:?}: {}", stderr(&o));
    }
}
