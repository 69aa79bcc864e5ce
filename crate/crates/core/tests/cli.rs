use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hcl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcl")).args(args).output().expect("hcl runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hcl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn bundled_laws_verify() {
    for law in ["gauss", "cube", "cubic", "pair", "quat"] {
        let o = hcl(&["verify", law]);
        assert_eq!(o.status.code(), Some(0), "{law}: {}", stdout(&o));
    }
    let o = hcl(&["verify", "senary", "-D", "-4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn fixture_files_verify() {
    let cube = fixture("cube_composition.json");
    let o = hcl(&["verify", "cube", "--in", cube.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn perturbed_payload_reports_failing_tuple() {
    let text = std::fs::read_to_string(fixture("cube_composition.json")).unwrap();
    let mut env: Value = serde_json::from_str(&text).unwrap();
    let entry = &mut env["objects"][5][0];
    let bumped = entry.as_str().unwrap().parse::<i64>().unwrap() + 1;
    *entry = Value::String(bumped.to_string());
    let p = scratch("perturbed.json", &env.to_string());
    let o = hcl(&["verify", "cube", "--in", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("at (e1,e1,e1,e1,e1,e1)"), "{out}");

    let o = hcl(&["--json", "verify", "cube", "--in", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["outcome"], "failed");
}

#[test]
fn bad_discriminant_is_malformed() {
    let o = hcl(&["classgroup", "-D", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_json_is_rejected() {
    let p = scratch("malformed.json", "{\"space\": ");
    let o = hcl(&["verify", "cube", "--in", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = hcl(&["verify", "cube", "--in", "/nonexistent/payload.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cube_composition_at_positive_discriminant_is_unsupported() {
    let o = hcl(&["compose", "cube", "[0,1,1,0,1,0,0,2]", "[0,1,1,0,1,0,0,2]"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
}

#[test]
fn classgroup_lists_classes() {
    let o = hcl(&["--json", "classgroup", "-D", "-47"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["outcome"], "ok");
    let o = hcl(&["compose", "bqf", "[2,1,6]", "[2,-1,6]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[1, 1, 12]"), "{}", stdout(&o));
}

#[test]
fn dual_output_feeds_verify() {
    let o = hcl(&["--json", "dual"]);
    assert_eq!(o.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    let text = std::fs::read_to_string(fixture("cube_composition.json")).unwrap();
    let mut env: Value = serde_json::from_str(&text).unwrap();
    let objs = env["objects"].as_array_mut().unwrap();
    objs.truncate(3);
    for k in ["R", "S", "T"] {
        objs.push(report["artifacts"][k].clone());
    }
    let p = scratch("dual.json", &env.to_string());
    let o = hcl(&["verify", "cube", "--in", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn examples_all_pass() {
    let o = hcl(&["examples"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed: 4/4"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(hcl(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(hcl(&[]).status.code(), Some(2));
}
