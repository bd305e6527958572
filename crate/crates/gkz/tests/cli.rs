use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use gkz::fixtures::{self, Fixture};
use gkz::report::Report;
use serde_json::Value;

fn gkz(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gkz"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).env_remove("GKZ_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn gkz");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn shipped() -> Vec<Fixture> {
    let dir = fixtures::default_dir();
    let mut names: Vec<_> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    names.sort();
    names.iter().map(|p| fixtures::load(p).unwrap()).collect()
}

fn find<'a>(fx: &'a [Fixture], name: &str, args: &[&str]) -> &'a Value {
    let f = fx.iter().find(|f| f.name == name).unwrap();
    &f.cases.iter().find(|c| c.args == args).unwrap().expected
}

#[test]
fn shipped_fixtures_pass() {
    let o = gkz(&["verify", "--fixtures"], "", &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("all passed\n"));
}

#[test]
fn fixtures_hold_figure_values() {
    let fx = shipped();
    assert_eq!(fx.len(), 4);
    let sres = find(&fx, "semigroup-2-3", &["sets", "sres", "--box", "-6:6", "--step", "1"]);
    let members: Vec<&str> = sres["members"].as_array().unwrap().iter().map(|m| m[0].as_str().unwrap()).collect();
    assert_eq!(members, ["-6", "-5", "-4", "-3", "-2", "-1", "1"]);

    let dmod = find(&fx, "gap-configuration", &["factors", "dmod"]);
    assert_eq!(dmod["certification"], "isomorphism");
    assert_eq!(dmod["hypotheses"]["normal"], false);
    assert_eq!(dmod["levels"][1]["factors"].as_array().unwrap().len(), 2);
    let perverse = find(&fx, "gap-configuration", &["factors", "perverse"]);
    assert_eq!(perverse["levels"][1]["factors"].as_array().unwrap().len(), 3);
    let gap = find(&fx, "gap-configuration", &["gap-factors"]);
    assert_eq!(gap["candidates"][0]["class"]["rep"], serde_json::json!(["0", "1"]));
    assert_eq!(gap["candidates"][0]["class"]["order"], "2");

    let sq = find(&fx, "square-cone", &["factors", "perverse"]);
    assert_eq!(sq["numerology"]["count"], 4);
    assert_eq!(sq["numerology"]["bound"], 3);
    let faces = find(&fx, "square-cone", &["faces"]);
    assert_eq!(faces["facets"].as_array().unwrap().len(), 4);
}

#[test]
fn json_round_trips() {
    for f in shipped() {
        for case in &f.cases {
            let report: Report = serde_json::from_value(case.expected.clone()).unwrap();
            let text = report.to_json();
            assert_eq!(Report::from_json(&text).unwrap(), report, "{} {:?}", f.name, case.args);
            assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), case.expected);
        }
    }
}

#[test]
fn output_is_deterministic() {
    let doc = r#"{"matrix": [[1, 0, 1], [0, 2, 1]], "gamma": ["0", "1/2"]}"#;
    for args in [&["--json", "resonance"][..], &["factors", "compare"], &["--json", "sets", "dres", "--box", "-2:2", "--step", "1/2"]] {
        let a = gkz(args, doc, &[]);
        let b = gkz(args, doc, &[]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn reads_input_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.json");
    std::fs::write(&path, r#"{"matrix": [[2, 3]]}"#).unwrap();
    let o = gkz(&["sets", "sres", "--box", "-6:6", path.to_str().unwrap()], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("members: (-6) (-5) (-4) (-3) (-2) (-1) (1)"));
}

#[test]
fn exit_codes() {
    let bad = [
        ("{\"matrix\": [[1, 2]", vec!["faces"]),
        ("{\"matrix\": [[1, 2], [3]]}", vec!["faces"]),
        ("{\"matrix\": [[1, 2]]}", vec!["resonance"]),
        ("{\"matrix\": [[1, 2]], \"gamma\": [\"x\"]}", vec!["resonance"]),
        ("{\"matrix\": [[1, 2]]}", vec!["sets", "nope", "--box", "0:1"]),
        ("{\"matrix\": [[1, 2]]}", vec!["sets", "sres", "--box", "0-1"]),
    ];
    for (doc, args) in bad {
        let o = gkz(&args, doc, &[]);
        assert_eq!(o.status.code(), Some(2), "{doc} {args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
    let o = gkz(&["sets", "sres", "--box", "-3:3", "--step", "1/2"], r#"{"matrix": [[1, 1, 0], [0, 1, 2]]}"#, &[("GKZ_BUDGET", "10")]);
    assert_eq!(o.status.code(), Some(3));
    let o = gkz(&["faces"], "{\"matrix\": [[1]]}", &[("GKZ_BUDGET", "lots")]);
    assert_eq!(o.status.code(), Some(2));

    let bounded = r#"{"matrix": [[2, 3]], "gamma": ["-1"], "bounds": {"certify": false}}"#;
    let o = gkz(&["--json", "resonance"], bounded, &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["loci"]["dres"]["verdict"], "false_up_to_bounds");
    assert_eq!(v["loci"]["dres"]["bounds"]["certify"], false);
    let o = gkz(&["--strict", "resonance"], bounded, &[]);
    assert_eq!(o.status.code(), Some(4));
    assert!(!o.stdout.is_empty());
    let o = gkz(&["--strict", "resonance"], r#"{"matrix": [[2, 3]], "gamma": ["-1"]}"#, &[]);
    assert_eq!(o.status.code(), Some(0));
}

fn copy_fixtures(to: &Path) {
    for e in std::fs::read_dir(fixtures::default_dir()).unwrap() {
        let p = e.unwrap().path();
        std::fs::copy(&p, to.join(p.file_name().unwrap())).unwrap();
    }
}

#[test]
fn corrupted_fixture_fails_with_diff() {
    let dir = tempfile::tempdir().unwrap();
    copy_fixtures(dir.path());
    let path = dir.path().join("gap-configuration.json");
    let text = std::fs::read_to_string(&path).unwrap();
    let corrupted = text.replacen("\"certification\": \"isomorphism\"", "\"certification\": \"semisimple-certified\"", 1);
    assert_ne!(text, corrupted);
    std::fs::write(&path, corrupted).unwrap();
    let o = gkz(&["verify", "--fixtures", "--dir", dir.path().to_str().unwrap()], "", &[]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL gap-configuration#"), "{out}");
    assert!(out.contains("$.certification: expected \"semisimple-certified\", found \"isomorphism\""), "{out}");
    assert_eq!(out.matches("  FAIL ").count(), 1);
}

#[test]
fn filter_selects_one_fixture() {
    let o = gkz(&["--json", "verify", "--fixtures", "--filter", "gap-configuration"], "", &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["fixtures"]["fixtures"], serde_json::json!(["gap-configuration"]));
    assert!(v["suite"].is_null());
    let o = gkz(&["verify", "--fixtures", "--filter", "no-such-fixture"], "", &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn faces_of_identity_matrix() {
    for n in 1..=5usize {
        let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        let doc = serde_json::json!({ "matrix": rows }).to_string();
        let o = gkz(&["--json", "faces"], &doc, &[]);
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["faces"].as_array().unwrap().len(), 1 << n);
        assert_eq!(v["facets"].as_array().unwrap().len(), n);
    }
}

#[test]
fn verify_suite_passes() {
    let o = gkz(&["verify", "--suite"], "", &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS membership-oracle"));
}
