use std::process::{Command, Output};

fn perfcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perfcode"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn decide_exit_codes() {
    let no = perfcode(&["decide", "c4", "2"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("not_perfect_code"));

    let yes = perfcode(&["decide", "d3", "b"]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).contains("witness:  transversal"));

    let gd = perfcode(&["decide", "gd(3)", "b"]);
    assert_eq!(gd.status.code(), Some(0));
}

#[test]
fn decide_json_record() {
    let o = perfcode(&["decide", "--json", "a(2,4)", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "not_perfect_code");
    assert!(v["witness"]["element"].is_u64());
    assert!(v["trace"].as_array().is_some_and(|t| !t.is_empty()));
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(perfcode(&["decide", "x9", "1"]).status.code(), Some(2));
    assert_eq!(perfcode(&["decide", "c4", "7"]).status.code(), Some(2));
    assert_eq!(perfcode(&["decide", "c4"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exit_code() {
    let o = perfcode(&["--budget", "3", "decide", "a(2,2,2,2,2)", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn enumerate_q8() {
    let o = perfcode(&["enumerate", "q8"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    let yes: Vec<&str> = rows
        .iter()
        .filter(|r| r.split('\t').nth(3) == Some("perfect_code"))
        .map(|r| r.split('\t').next().unwrap())
        .collect();
    assert_eq!(yes, ["1", "8"]);
}

#[test]
fn graph_edges() {
    // Z4 with H = {0}: the only transversal is all of G, so Cay is K4.
    let o = perfcode(&["graph", "c4", ""]);
    assert!(o.status.success());
    let edges: Vec<String> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(edges, ["0 1", "0 2", "0 3", "1 2", "1 3", "2 3"]);

    let o = perfcode(&["graph", "c4", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn total_codes() {
    assert_eq!(perfcode(&["total", "d4", "b"]).status.code(), Some(0));
    assert_eq!(perfcode(&["total", "c3", ""]).status.code(), Some(1));
}

#[test]
fn catalog_run() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("cat.toml");
    let out = dir.path().join("report.jsonl");
    std::fs::write(&config, "max_order = 12\nfamilies = [\"dihedral\", \"quaternion\"]\n").unwrap();
    let o = perfcode(&[
        "catalog",
        config.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
        "--properties",
        "P1,P9",
        "--jobs",
        "2",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report = std::fs::read_to_string(&out).unwrap();
    let kinds: Vec<String> = report
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["kind"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(kinds.first().map(String::as_str), Some("config"));
    assert_eq!(kinds.iter().filter(|k| *k == "property").count(), 2);
    assert!(kinds.iter().any(|k| k == "row"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("P9   pass"));

    let bad = perfcode(&["catalog", config.to_str().unwrap(), "--properties", "P11"]);
    assert_eq!(bad.status.code(), Some(2));
}
