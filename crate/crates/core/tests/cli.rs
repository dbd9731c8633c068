use std::process::{Command, Output};

fn g2def(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2def")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn deform_reports_totals() {
    for (name, total) in [("so5-so3", 0), ("squashed-s7", 0), ("n11", 8)] {
        let out = g2def(&["deform", name, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let v = json(&out);
        assert_eq!(v["total_dimension"], total, "{name}");
        assert_eq!(v["einstein_equals_g2"], true);
    }
}

#[test]
fn deform_output_is_byte_identical_across_runs() {
    let a = g2def(&["deform", "n11", "--format", "json", "--decimal"]);
    let b = g2def(&["deform", "n11", "--format", "json", "--decimal"]);
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(g2def(&["deform", "n11"]).stdout).unwrap();
    assert!(text.contains("total real dimension: 8"));
    assert!(text.contains("isomorphic to: su(3) (multiplicity 1)"));
}

#[test]
fn exported_space_reloads_to_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n11.json");
    let path = path.to_str().unwrap();
    assert_eq!(g2def(&["export", "n11", "--out", path]).status.code(), Some(0));
    let from_file = g2def(&["deform", path, "--format", "json"]);
    let builtin = g2def(&["deform", "n11", "--format", "json"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, builtin.stdout);
}

#[test]
fn candidates_and_check() {
    let out = g2def(&["candidates", "squashed-s7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let labels: Vec<&str> = v["candidates"].as_array().unwrap().iter().map(|c| c["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["V(2,0) ⊗ V(0)", "V(0,0) ⊗ V(2)"]);

    let out = g2def(&["check", "so5-so3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["nearly_parallel"], true);
    assert_eq!(v["scal"], "63/20");
}

#[test]
fn failing_check_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flipped.json");
    let text = String::from_utf8(g2def(&["export", "squashed-s7"]).stdout).unwrap();
    // Flipping the orientation keeps the space valid but breaks dσ = τ₀∗σ.
    let flipped = text.replacen("\"orientation\": 1", "\"orientation\": -1", 1);
    assert_ne!(flipped, text);
    std::fs::write(&path, flipped).unwrap();
    let out = g2def(&["check", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["nearly_parallel"], false);
}

#[test]
fn bad_input_exits_two() {
    let out = g2def(&["deform", "no-such-space"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("neither a built-in space"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{ \"name\": 3 }").unwrap();
    assert_eq!(g2def(&["check", path.to_str().unwrap()]).status.code(), Some(2));
}
