use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn here(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(rel)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_celltower"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_json(out: &Output) -> Value {
    let text = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "{text}");
    serde_json::from_str(text.trim()).unwrap()
}

fn config(name: &str) -> String {
    here(&format!("fixtures/{name}.json")).display().to_string()
}

fn assert_golden(args: &[&str], golden: &str) {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let expected = fs::read_to_string(here(&format!("golden/{golden}"))).unwrap();
    assert_eq!(stdout(&out), expected, "{golden}");
}

#[test]
fn golden_params() {
    assert_golden(
        &["params", "validate", "--config", &config("r4p2n3")],
        "params_r4p2n3.json",
    );
}

#[test]
fn golden_orbits() {
    assert_golden(
        &["orbits", "--config", &config("r4p2n3")],
        "orbits_r4p2n3.json",
    );
}

#[test]
fn golden_rpn_datum() {
    assert_golden(
        &["datum", "--algebra", "rpn", "--config", &config("r4p2n3")],
        "datum_rpn_r4p2n3.json",
    );
}

#[test]
fn golden_skew_datum_on_half_orbit() {
    assert_golden(
        &[
            "datum",
            "--algebra",
            "skew",
            "--config",
            &config("half_orbit"),
        ],
        "datum_skew_half_orbit.json",
    );
}

#[test]
fn golden_decomposition_csv() {
    assert_golden(
        &["decomp", "--config", &config("resonant"), "--format", "csv"],
        "decomp_resonant.csv",
    );
}

#[test]
fn golden_poset_csv() {
    assert_golden(
        &[
            "poset",
            "--order",
            "shape_prime",
            "--config",
            &config("half_orbit"),
            "--format",
            "csv",
        ],
        "poset_half_orbit.csv",
    );
}

#[test]
fn golden_tableaux_table() {
    assert_golden(
        &[
            "enum",
            "tableaux",
            "--config",
            &config("resonant"),
            "--n",
            "3",
            "--format",
            "table",
        ],
        "enum_tableaux_resonant_n3.txt",
    );
}

#[test]
fn golden_flag_compares_existing_file() {
    let path = here("golden/orbits_r4p2n3.json").display().to_string();
    let out = run(&["orbits", "--config", &config("r4p2n3"), "--golden", &path]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn golden_flag_writes_then_detects_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("orbits.json");
    let p = path.display().to_string();
    let first = run(&["orbits", "--config", &config("r4p2n3"), "--golden", &p]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&path).unwrap(), stdout(&first));

    let again = run(&["orbits", "--config", &config("r4p2n3"), "--golden", &p]);
    assert_eq!(again.status.code(), Some(0));

    let other = run(&[
        "orbits",
        "--config",
        &config("r4p2n3"),
        "--n",
        "4",
        "--golden",
        &p,
    ]);
    assert_eq!(other.status.code(), Some(1));
    assert_eq!(stderr_json(&other)["error"], "GoldenMismatch");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec![
            "datum",
            "--algebra",
            "skew",
            "--r",
            "6",
            "--p",
            "3",
            "--n",
            "4",
            "--charges",
            "0,10",
        ],
        vec!["decomp", "--witnesses", "--config", "RESONANT"],
        vec!["verify", "all", "--config", "R4P2N3"],
    ] {
        let resonant = config("resonant");
        let r4 = config("r4p2n3");
        let args: Vec<&str> = args
            .iter()
            .map(|a| match *a {
                "RESONANT" => resonant.as_str(),
                "R4P2N3" => r4.as_str(),
                other => other,
            })
            .collect();
        let a = run(&args);
        let mut more = args.clone();
        more.extend(["--jobs", "3"]);
        let b = run(&more);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn not_divisible_is_exit_two() {
    let out = run(&["params", "validate", "--config", &config("not_divisible")]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], "NotDivisible");
    assert!(out.stdout.is_empty());
}

#[test]
fn inline_flags_override_config() {
    let out = run(&[
        "params",
        "validate",
        "--config",
        &config("not_divisible"),
        "--p",
        "3",
        "--charges",
        "0,10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["params"]["d"], 2);
}

#[test]
fn bad_inputs_are_exit_two() {
    let cases: [(&[&str], &str); 5] = [
        (
            &["params", "validate", "--config", "/nonexistent/c.json"],
            "ConfigUnreadable",
        ),
        (
            &["params", "validate", "--r", "2", "--p", "1"],
            "MissingParameter",
        ),
        (
            &[
                "params",
                "validate",
                "--r",
                "2",
                "--p",
                "1",
                "--n",
                "2",
                "--e",
                "3",
                "--charges",
                "0,5",
            ],
            "BadQuantumChar",
        ),
        (&["orbits", "--bogus"], "InvalidArguments"),
        (&["frobnicate"], "InvalidArguments"),
    ];
    for (args, kind) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr_json(&out)["error"], kind, "{args:?}");
    }
}

#[test]
fn malformed_config_is_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    fs::write(
        &path,
        r#"{"r": 2, "p": 1, "n": 2, "charges": [0, 5], "q": 3}"#,
    )
    .unwrap();
    let out = run(&[
        "params",
        "validate",
        "--config",
        &path.display().to_string(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr_json(&out)["error"], "ConfigInvalid");
}

#[test]
fn verify_all_passes_and_reports_deviations() {
    for name in ["r4p2n3", "resonant", "half_orbit"] {
        let out = run(&["verify", "all", "--config", &config(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", stdout(&out));
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["passed"], true);
        assert_eq!(v["suites"].as_array().unwrap().len(), 8);
    }
    let out = run(&[
        "verify",
        "all",
        "--config",
        &config("half_orbit"),
        "--format",
        "table",
    ]);
    let text = stdout(&out);
    assert!(text.contains("PAPER-CLAIM-DEVIATION"));
    assert!(text.contains("OrbitSizeBelowP"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn decomposition_witnesses_cover_nonzero_entries() {
    let out = run(&["decomp", "--witnesses", "--config", &config("resonant")]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order_used"], "dominance");
    let ones: u64 = v["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|row| row.as_array().unwrap())
        .map(|x| x.as_u64().unwrap())
        .sum();
    assert_eq!(v["witnesses"].as_array().unwrap().len() as u64, ones);
    assert!(ones > 5);

    let csv = run(&[
        "decomp",
        "--witnesses",
        "--config",
        &config("resonant"),
        "--format",
        "csv",
    ]);
    let text = stdout(&csv);
    let (matrix, trailer) = text.split_once("\n\n").unwrap();
    assert_eq!(matrix.lines().count(), 6);
    let trailer: Value = serde_json::from_str(trailer).unwrap();
    assert_eq!(trailer["witnesses"], v["witnesses"]);
}

#[test]
fn skew_datum_on_half_orbit_has_three_elements() {
    let out = run(&[
        "datum",
        "--algebra",
        "skew",
        "--config",
        &config("half_orbit"),
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["basis_count"], 3);
    let r1n = run(&[
        "datum",
        "--algebra",
        "r1n",
        "--config",
        &config("half_orbit"),
    ]);
    let w: Value = serde_json::from_str(&stdout(&r1n)).unwrap();
    assert_eq!(w["basis_count"], 6);
}

#[test]
fn poset_orbit_order_reports_antisymmetry_failure_at_p_three() {
    let out = run(&[
        "poset",
        "--order",
        "orbit",
        "--r",
        "3",
        "--p",
        "3",
        "--n",
        "3",
        "--charges",
        "0",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["poset"], false);
    assert!(v["violations"]["antisymmetry"].as_u64().unwrap() > 0);
}
