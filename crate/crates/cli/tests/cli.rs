use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_coxeter-fc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--report", "machine"]);
    let (code, out, err) = run(&all);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}")))
}

#[test]
fn analyze_g5_reports_the_focus() {
    let (code, report) = json(&["analyze", &data("g5.json")]);
    assert_eq!(code, 0);
    let comp = report["components"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["odd_component"] == serde_json::json!(["a", "c", "d"]))
        .unwrap();
    assert_eq!(comp["case"], "C");
    assert_eq!(comp["foci"], serde_json::json!([["a", "b"]]));
    let fc = report["fc"].as_array().unwrap();
    let a = fc.iter().find(|r| r["node"] == "a").unwrap();
    assert_eq!(a["J"], serde_json::json!(["b", "a"]));
    let c = fc.iter().find(|r| r["node"] == "c").unwrap();
    assert_eq!(c["visible"], false);
    assert_eq!(c["J"], Value::Null);
}

#[test]
fn report_keys_are_in_a_fixed_order() {
    let (_, out, _) = run(&["analyze", &data("g6.json"), "--report", "machine"]);
    let keys: Vec<usize> = ["\"nodes\"", "\"components\"", "\"fc\"", "\"rigidity\""]
        .iter()
        .map(|k| out.find(k).unwrap())
        .collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    assert!(!out.contains("\"oracle\""));
}

#[test]
fn empty_node_list_is_an_input_error() {
    let (code, _, err) = run(&["analyze", &data("empty.json")]);
    assert_eq!(code, 1);
    assert!(err.contains("nodes"), "{err}");
}

#[test]
fn missing_file_is_an_input_error() {
    let (code, _, _) = run(&["analyze", &data("does-not-exist.json")]);
    assert_eq!(code, 1);
}

#[test]
fn affine_a2_is_reflection_determined() {
    let (code, report) = json(&["analyze", &data("affine_a2.json")]);
    assert_eq!(code, 0);
    assert_eq!(report["rigidity"]["verdict"], "ReflectionsDetermined");
    let (_, out, _) = run(&["rigidity", &data("affine_a2.json")]);
    assert!(out.contains("ReflectionsDetermined"));
}

#[test]
fn oracle_fc_examples() {
    let (code, r) = json(&["oracle-fc", &data("g7.json"), "--node", "a", "--max-length", "10"]);
    assert_eq!(code, 0);
    assert_eq!((r["status"].as_str(), r["elements"].as_u64()), (Some("MATCH"), Some(4)));

    let (code, r) = json(&["oracle-fc", &data("i2_6.json"), "--node", "a", "--max-length", "12"]);
    assert_eq!(code, 0);
    assert_eq!((r["status"].as_str(), r["elements"].as_u64()), (Some("MATCH"), Some(12)));

    let (code, r) = json(&["oracle-fc", &data("g5.json"), "--node", "c", "--max-length", "10"]);
    assert_eq!(code, 0);
    assert_eq!(r["predicted"], Value::Null);
    assert_eq!(r["matches_visible"], Value::Null);
    assert!(r["elements"].as_u64().unwrap() > 1);
}

#[test]
fn budget_exhaustion_exits_with_two_and_labels_partial_results() {
    let file = data("affine_a2.json");
    let (code, out, err) = run(&["oracle-fc", &file, "--node", "a", "--max-length", "10", "--element-cap", "30"]);
    assert_eq!(code, 2, "{err}");
    assert!(out.contains("PARTIAL"));
    let (code, r) = json(&["oracle-fc", &file, "--node", "a", "--max-length", "10", "--element-cap", "30"]);
    assert_eq!(code, 2);
    assert_eq!(r["partial"], true);
}

#[test]
fn unsupported_labels_exit_with_one() {
    let (code, _, err) = run(&["oracle-fc", &data("i2_7.json"), "--node", "a"]);
    assert_eq!(code, 1);
    assert!(err.contains("label 7"), "{err}");
    // The classifier itself handles any label.
    let (code, out, _) = run(&["fc", &data("i2_7.json"), "--node", "a"]);
    assert_eq!(code, 0);
    assert!(out.contains("W_{a,b}"));
}

#[test]
fn export_dot_examples() {
    let (code, out, _) = run(&["export-dot", &data("i2_6.json")]);
    assert_eq!(code, 0);
    assert_eq!(out.matches(" -- ").count(), 1);
    assert!(out.contains("label=\"6\", style=dashed"));

    let (_, out, _) = run(&["export-dot", &data("g5.json")]);
    assert_eq!(out.matches(" -- ").count(), 4);
    assert!(out.contains("\"c\" -- \"d\" [label=\"inf\", style=bold]"));

    let (_, out, _) = run(&["export-dot", &data("rank1.json")]);
    assert!(!out.contains(" -- "));
    assert!(out.contains("\"x\";"));
}

#[test]
fn classify_and_fc_commands() {
    let (code, r) = json(&["classify", &data("h3_explicit_two.json"), "--subset", "x,y,z"]);
    assert_eq!(code, 0);
    assert_eq!(r["components"][0]["type"], "H3");
    assert_eq!(r["spherical"], true);
    assert_eq!(r["minus_one_type"], true);

    let (code, r) = json(&["classify", &data("g5.json"), "--subset", "c,d"]);
    assert_eq!(code, 0);
    assert_eq!(r["spherical"], false);

    let (code, _, err) = run(&["classify", &data("g5.json"), "--subset", "a,q"]);
    assert_eq!(code, 1);
    assert!(err.contains("q"));

    let (code, r) = json(&["fc", &data("g6.json"), "--node", "c"]);
    assert_eq!(code, 0);
    assert_eq!((r["case"].as_str(), r["visible"].as_bool()), (Some("D"), Some(false)));
}

#[test]
fn commands_are_deterministic() {
    for args in [
        vec!["analyze", "g7.json", "--oracle", "--max-length", "6"],
        vec!["export-dot", "g6.json"],
        vec!["oracle-fc", "g5.json", "--node", "a", "--max-length", "6"],
    ] {
        let mut args: Vec<String> = args.into_iter().map(String::from).collect();
        args[1] = data(&args[1]);
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        for format in ["human", "machine"] {
            let mut a = refs.clone();
            a.extend(["--report", format]);
            assert_eq!(run(&a), run(&a));
        }
    }
}

#[test]
fn analyze_with_oracle_compares_every_node() {
    let (code, r) = json(&["analyze", &data("g7.json"), "--oracle", "--max-length", "8"]);
    assert_eq!(code, 0);
    let oracle = r["oracle"].as_array().unwrap();
    assert_eq!(oracle.len(), 4);
    assert!(oracle.iter().all(|o| o["status"] == "MATCH"));
}
