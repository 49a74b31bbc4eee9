//! End-to-end tests driving the compiled binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_reflekt"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("reflekt-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn verify_small_grid_passes() {
    let out = run(&["verify", "--grid", "r<=2,p|r,n<=2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("0 failed"), "{text}");
    assert!(text.contains("group/order/G(2,2,2)"), "{text}");
}

#[test]
fn verify_reports_are_byte_identical() {
    let dir = scratch("determinism");
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let out = run(&["verify", "4,2,2", "--json", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let bytes_a = fs::read(&a).unwrap();
    let bytes_b = fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b);
    let doc: serde_json::Value = serde_json::from_slice(&bytes_a).unwrap();
    assert_eq!(doc["schema"], "reflekt-report/1");
    assert_eq!(doc["summary"]["fail"], 0);
    assert_eq!(doc["config"]["grid"][0], "G(4,2,2)");
}

#[test]
fn empty_grid_is_an_empty_passing_report() {
    let out = run(&["verify", "--grid", "r<=0,p|r,n<=1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 passed, 0 failed, 0 skipped"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "5,2,2"][..],
        &["verify", "--grid", "nonsense"][..],
        &["verify", "--check", "bogus"][..],
        &["chars", "6,2,3", "--values"][..],
        &["gelfand", "6,2,3", "--variant", "weird"][..],
        &["aut", "not-a-key"][..],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn explicit_keys_and_suite_selection() {
    let out = run(&["verify", "6,3,2", "4,2,2", "--check", "classify,group"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("group/order/G(4,2,2)"));
    assert!(text.contains("classify/existence/G(6,3,2)"));
    assert!(!text.contains("chars/"), "unselected suite ran: {text}");
}

#[test]
fn cache_files_are_written_loaded_and_regenerated() {
    let dir = scratch("cache");
    let cache_flag = dir.to_str().unwrap();
    let file = dir.join("g3-1-2.json");

    let out = run(&["verify", "3,1,2", "--cache-dir", cache_flag, "--check", "group"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(file.exists());

    // A second run loads the file without complaint.
    let out = run(&["verify", "3,1,2", "--cache-dir", cache_flag, "--check", "group"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).is_empty());

    // Corruption is healed with a note.
    fs::write(&file, b"{not json").unwrap();
    let out = run(&["verify", "3,1,2", "--cache-dir", cache_flag, "--check", "group"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("regenerating"));
    let doc: serde_json::Value = serde_json::from_slice(&fs::read(&file).unwrap()).unwrap();
    assert_eq!(doc["schema"], "reflekt-cache/1");
    assert_eq!(doc["order"], 18);

    // A stale schema version is also regenerated.
    let mut stale: serde_json::Value = doc.clone();
    stale["schema"] = "reflekt-cache/0".into();
    fs::write(&file, serde_json::to_vec(&stale).unwrap()).unwrap();
    let out = run(&["verify", "3,1,2", "--cache-dir", cache_flag, "--check", "group"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("regenerating"));
}

#[test]
fn cache_dir_comes_from_environment_when_flag_is_absent() {
    let dir = scratch("env-cache");
    let out = bin()
        .args(["verify", "2,1,2", "--check", "group"])
        .env("REFLEKT_CACHE", &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(dir.join("g2-1-2.json").exists());
}

#[test]
fn chars_json_document() {
    let dir = scratch("chars");
    let path = dir.join("chars.json");
    let out = run(&["chars", "3,1,2", "--values", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc["key"], "G(3,1,2)");
    let irr = doc["irr"].as_array().unwrap();
    assert_eq!(irr.len(), 9);
    let squares: i64 =
        irr.iter().map(|e| e["degree"].as_i64().unwrap().pow(2)).sum();
    assert_eq!(squares, 18);
    // 9 conjugacy classes, each with an exact cyclotomic value.
    assert_eq!(irr[0]["values"].as_object().unwrap().len(), 9);
}

#[test]
fn gim_json_documents() {
    let dir = scratch("gim");
    let path = dir.join("gim.json");
    let out = run(&["gim", "6,2,2", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc["tau"], "inverse-transpose");
    assert_eq!(doc["verified"], true);
    assert_eq!(doc["classes"].as_array().unwrap().len(), 4);

    let path = dir.join("none.json");
    let out = run(&["gim", "4,2,2", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc["verified"], false);
    assert_eq!(doc["reason"], "central-commutator-obstruction");
    assert!(doc["classes"].as_array().unwrap().is_empty());
}

#[test]
fn gelfand_json_document() {
    let dir = scratch("gelfand");
    let path = dir.join("gelfand.json");
    let out = run(&["gelfand", "4,2,3", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc["variants"]["restricted"], false);
    assert_eq!(doc["variants"]["twisted"], true);
    assert_eq!(doc["variants"]["plain"], serde_json::Value::Null);
    let compared = &doc["compared"];
    assert_eq!(compared["variant"], "twisted");
    let model = compared["model"].as_array().unwrap();
    let counting = compared["counting"].as_array().unwrap();
    assert_eq!(model.len(), counting.len());
}

#[test]
fn aut_json_document() {
    let dir = scratch("aut");
    let path = dir.join("aut.json");
    let out = run(&["aut", "4,2,2", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc["aut_order"], 48);
    assert_eq!(doc["out_order"], 12);
    assert_eq!(doc["center_order"], 4);
    assert_eq!(doc["enumerated"], 48);
    assert_eq!(doc["match"], true);
}
