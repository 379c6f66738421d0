use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn hcf(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hcf")).args(args).output().expect("run hcf");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    let (code, out, err) = hcf(&v);
    (code, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}")))
}

/// Compares with `tests/golden/<name>`; `HCF_BLESS=1` rewrites the file.
fn golden(name: &str, args: &[&str]) {
    let (code, out, err) = hcf(args);
    assert!(code <= 1, "{err}");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("HCF_BLESS").is_some() {
        std::fs::write(&path, &out).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(out, expected, "output of {args:?} differs from {name}");
}

#[test]
fn algebra_passes_and_dumps() {
    let (code, out, _) = hcf(&["algebra", "--manifold", "S2"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("PASS\n"));
    let (code, v) = json(&["algebra", "--manifold", "CP3"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["algebra"]["basis"].as_array().unwrap().len(), 4);
    assert_eq!(v["algebra"]["degrees"], serde_json::json!([0, -2, -4, -6]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["algebra", "--manifold", "RP1"][..],
        &["algebra", "--manifold", "T2"],
        &["algebra"],
        &["e2", "--manifold", "S2", "--window", "3:1"],
        &["certify", "--manifold", "S2", "--l-range", "-1:4"],
        &["verify", "--manifold", "S2", "--hi", "-3"],
        &["verify", "--manifold", "S2", "--format", "xml"],
        &["frobnicate"],
    ] {
        let (code, out, err) = hcf(args);
        assert_eq!(code, 2, "{args:?}: {out} {err}");
        assert!(!err.is_empty());
    }
}

#[test]
fn hh_on_s3_has_two_classes_per_degree() {
    let (code, v) = json(&["hh", "--manifold", "S3", "--hdeg-max", "5"]);
    assert_eq!(code, 0);
    for m in 0..=5 {
        let dims: u64 = v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .filter(|r| r["m"] == m)
            .map(|r| r["dim"].as_u64().unwrap())
            .sum();
        assert_eq!(dims, 2, "m = {m}");
    }
}

#[test]
fn delta_on_rp2_contains_ut() {
    let (code, v) = json(&["delta", "--manifold", "RP2"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.iter().all(|r| r["agree"] == true));
    assert!(rows.iter().any(|r| r["class"] == "u t" && r["brute_force"] == "t" && r["closed_form"] == "t"));
}

#[test]
fn bracket_on_cp2() {
    let (code, out, _) = hcf(&["bracket", "--manifold", "CP2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "CP2,x,u,x,x,true"), "{out}");
}

#[test]
fn verify_agrees_on_spheres_and_odd_cases() {
    for m in ["S2", "S3", "RP3", "CP3"] {
        let (code, out, _) = hcf(&["verify", "--manifold", m, "--hi", "60"]);
        assert_eq!(code, 0, "{m}");
        assert!(out.ends_with("PASS\n"));
    }
}

#[test]
fn verify_reports_witness_on_even_cases() {
    let (code, v) = json(&["verify", "--manifold", "CP2", "--hi", "60"]);
    assert_eq!(code, 1);
    assert_eq!(v["ok"], false);
    assert_eq!(v["mismatch"]["exponent"], 1);
    assert!(v["closed_form_support"].as_str().unwrap().contains("negative exponent -1"));
}

#[test]
fn certify_odd_case_has_witnesses() {
    let (code, v) = json(&["certify", "--manifold", "CP3", "--rmax", "10"]);
    assert_eq!(code, 0);
    let c = &v["certificate"];
    assert_eq!(c["passed"], true);
    assert_eq!(c["witnesses_match"], true);
    let w = c["witnesses"].as_array().unwrap();
    assert_eq!(w.len(), 9);
    assert!(w.iter().all(|x| x["even_to_odd"].as_i64().unwrap() < 0 && x["odd_to_even"].as_i64().unwrap() < 0));
}

#[test]
fn e2_check_agrees_with_brute_force() {
    let (code, v) = json(&["e2", "--manifold", "RP2", "--window", "-2:4", "--col-cap", "2", "--check"]);
    assert_eq!(code, 0);
    assert_eq!(v["brute_force_agrees"], true);
    let page = v["page"].as_array().unwrap();
    let keys: Vec<(u64, i64)> = page.iter().map(|e| (e["p"].as_u64().unwrap(), e["q"].as_i64().unwrap())).collect();
    assert!(keys.windows(2).all(|w| w[0] <= w[1]), "page ordered by (p, q)");
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("hcf-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s2.json");
    let (code, stdout, _) = hcf(&["verify", "--manifold", "S2", "--hi", "12", "--format", "json"]);
    let (code2, empty, _) = hcf(&["verify", "--manifold", "S2", "--hi", "12", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!((code, code2), (0, 0));
    assert!(empty.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["e2", "--manifold", "CP2", "--format", "json"];
    assert_eq!(hcf(&args).1, hcf(&args).1);
}

#[test]
fn golden_outputs() {
    golden("algebra_RP2.txt", &["algebra", "--manifold", "RP2"]);
    golden("hh_S2.json", &["hh", "--manifold", "S2", "--hdeg-max", "3", "--format", "json"]);
    golden("delta_CP2.csv", &["delta", "--manifold", "CP2", "--hdeg-max", "3", "--format", "csv"]);
    golden("e2_S3.csv", &["e2", "--manifold", "S3", "--window", "0:6", "--col-cap", "2", "--format", "csv"]);
    golden("verify_RP2.json", &["verify", "--manifold", "RP2", "--hi", "8", "--format", "json"]);
    golden("certify_RP3.csv", &["certify", "--manifold", "RP3", "--rmax", "3", "--l-range", "0:2", "--format", "csv"]);
}
