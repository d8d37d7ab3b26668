use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../data");
    p.push(name);
    p.display().to_string()
}

fn hdtheta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hdtheta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = hdtheta(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn compute_examples() {
    let v = json(&["compute", &data("d1.hdg")]);
    assert_eq!(v["theta_tilde"], "1/4");
    assert_eq!(v["e"], "-1/4");
    assert_eq!(v["J"][0][0], "1/2");
    let v = json(&["compute", &data("d2.hdg")]);
    assert_eq!(v["J"], serde_json::json!([["1/2", "0"], ["-1/2", "1"]]));
    assert_eq!(v["theta_tilde"], "-1/4");
    let v = json(&["compute", &data("s3.hdg")]);
    for k in ["ell2", "s_ell", "e", "theta_tilde"] {
        assert_eq!(v[k], "0");
    }
}

#[test]
fn input_errors_exit_2() {
    let o = hdtheta(&["compute", &data("malformed.hdg")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed.hdg:3:"));
    assert_eq!(
        hdtheta(&["compute", "/nonexistent.hdg"]).status.code(),
        Some(2)
    );
    assert_eq!(
        hdtheta(&["surgery", "--linking-matrix", &data("not_symplectic.txt")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        hdtheta(&[
            "surgery",
            "--linking-matrix",
            &data("trefoil.txt"),
            "--n",
            "0"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        hdtheta(&["verify", "--fuzz", "--checks", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(hdtheta(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let v = json(&[
        "verify",
        &data("d2.hdg"),
        "--checks",
        "twist",
        "--iters",
        "100",
    ]);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["checks"][0]["passed"], 100);
    let v = json(&[
        "verify",
        "--fuzz",
        "--checks",
        "w-change,m-change",
        "--iters",
        "50",
    ]);
    assert_eq!(v["status"], "pass");
    let v = json(&["verify", &data("d1.hdg"), "--checks", "slide"]);
    assert_eq!(v["checks"][0]["skipped"], 20);
    assert_eq!(v["status"], "pass");
}

#[test]
fn fuzz_runs() {
    let v = json(&["fuzz", "--count", "12", "--steps", "6", "--seed", "4"]);
    assert_eq!(v["failures"], 0);
    assert_eq!(v["cases"].as_array().unwrap().len(), 12);
}

#[test]
fn surgery_values() {
    let v = json(&["surgery", "--linking-matrix", &data("trefoil.txt")]);
    assert_eq!(v["lambda_prime"], 1);
    assert_eq!(
        v["alexander"],
        serde_json::json!({"-1": 1, "0": -1, "1": 1})
    );
    assert_eq!(v["delta_second_half"], "1");
    assert_eq!(v["surgery_delta"], 1);
    let v = json(&[
        "surgery",
        "--linking-matrix",
        &data("figure_eight.txt"),
        "--n",
        "3",
    ]);
    assert_eq!(v["surgery_delta"], -3);
    let v = json(&["surgery", "--linking-matrix", &data("unknot.txt")]);
    assert_eq!(v["lambda_prime"], 0);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "--seed", "9", "verify", "--fuzz", "--iters", "30"];
    let a = hdtheta(&args);
    let b = hdtheta(&[
        "--threads",
        "1",
        "--json",
        "--seed",
        "9",
        "verify",
        "--fuzz",
        "--iters",
        "30",
    ]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(a.status.code(), Some(0));
}
