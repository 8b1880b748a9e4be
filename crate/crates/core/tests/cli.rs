use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn treeburn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treeburn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn gen_path_exact_bytes() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("p4.txt");
    let o = treeburn(&["gen", "path", "4", "--out", path_str(&out)]);
    assert!(o.status.success());
    assert_eq!(fs::read_to_string(&out).unwrap(), "4\n0 1\n1 2\n2 3\n");
}

#[test]
fn gen_double_star_shape() {
    let o = treeburn(&["gen", "double-star", "2", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("6\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn random_tree_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    for out in [&a, &b] {
        assert!(treeburn(&["gen", "random-tree", "50", "--seed", "7", "--out", path_str(out)]).status.success());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let c = dir.path().join("c.txt");
    treeburn(&["gen", "random-tree", "50", "--seed", "8", "--out", path_str(&c)]);
    assert_ne!(fs::read(&a).unwrap(), fs::read(&c).unwrap());
}

#[test]
fn simulate_path_of_four() {
    let dir = TempDir::new().unwrap();
    let p4 = dir.path().join("p4.txt");
    fs::write(&p4, "4\n0 1\n1 2\n2 3\n").unwrap();
    let o = treeburn(&["simulate", path_str(&p4), "1", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "rounds 2\n{1:1, 0:2, 2:2, 3:2}\n");

    let bad = treeburn(&["simulate", path_str(&p4), "1", "0", "2"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn bounds_for_fifty() {
    let o = treeburn(&["bounds", "50", "0", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["main1"], 7);
    assert_eq!(v["conjecture"], 8);
    let csv = stdout(&treeburn(&["bounds", "50", "0", "--format", "csv"]));
    assert_eq!(csv.lines().nth(1).unwrap(), "50,0,6,8,7,8,8,9,9,9.164965,15,true");
}

#[test]
fn construct_then_verify_and_tamper() {
    let dir = TempDir::new().unwrap();
    let tree = dir.path().join("t.txt");
    let cert = dir.path().join("c.json");
    assert!(treeburn(&["gen", "random-tree", "60", "--seed", "3", "--out", path_str(&tree)]).status.success());
    let o = treeburn(&["construct", path_str(&tree), "--out", path_str(&cert), "--seed", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let ok = treeburn(&["verify", path_str(&cert)]);
    assert!(ok.status.success(), "{}", stderr(&ok));

    let mut doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(doc["seed"], 3);
    // Swap the first two sources: still a permutation, but the labels move.
    let seq = doc["sequence"].as_array_mut().unwrap();
    seq.swap(0, 1);
    fs::write(&cert, serde_json::to_string(&doc).unwrap()).unwrap();
    let bad = treeburn(&["verify", path_str(&cert)]);
    assert_eq!(bad.status.code(), Some(1));
    let reason = stderr(&bad);
    assert!(
        reason.contains("labels mismatch") || reason.contains("invalid sequence"),
        "{reason}"
    );
}

#[test]
fn tampered_labels_report_labels_mismatch() {
    let dir = TempDir::new().unwrap();
    let tree = dir.path().join("p4.txt");
    let cert = dir.path().join("c.json");
    fs::write(&tree, "4\n0 1\n1 2\n2 3\n").unwrap();
    assert!(treeburn(&["construct", path_str(&tree), "--out", path_str(&cert)]).status.success());
    let mut doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    let seq = doc["sequence"].as_array().unwrap().clone();
    // A different valid burning sequence of P4 whose labels differ.
    let other = if seq == [serde_json::json!(1), serde_json::json!(3)] { [2, 0] } else { [1, 3] };
    doc["sequence"] = serde_json::json!(other);
    fs::write(&cert, serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    let bad = treeburn(&["verify", path_str(&cert)]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("labels mismatch"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3\n0 1\n1 x\n").unwrap();
    let o = treeburn(&["exact", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
    assert_eq!(treeburn(&["bounds", "0", "0"]).status.code(), Some(2));
    assert_eq!(treeburn(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(treeburn(&["bench", "cycle:1:2:3"]).status.code(), Some(2));

    let big = dir.path().join("p40.txt");
    treeburn(&["gen", "path", "40", "--out", path_str(&big)]);
    assert_eq!(treeburn(&["exact", path_str(&big)]).status.code(), Some(2));
    let o = treeburn(&["exact", path_str(&big), "--cap", "40", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["burning_number"], 7);
}

#[test]
fn bench_csv_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let strip = |p: &Path| -> Vec<String> {
        fs::read_to_string(p)
            .unwrap()
            .lines()
            .map(|l| l.rsplitn(4, ',').last().unwrap().to_string())
            .collect()
    };
    let spec = "random-tree:20:5:30,random-no-deg2:5:6:40";
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    assert!(treeburn(&["bench", spec, "--seed", "9", "--jobs", "1", "--out", path_str(&a)]).status.success());
    assert!(treeburn(&["bench", spec, "--seed", "9", "--jobs", "3", "--out", path_str(&b)]).status.success());
    assert_eq!(strip(&a), strip(&b));
    assert_eq!(strip(&a).len(), 26);
}
