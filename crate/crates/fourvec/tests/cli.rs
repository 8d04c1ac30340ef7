//! CLI contract tests: golden outputs, exit codes, determinism, and the
//! JSON shape. Bench timings are wall-clock measurements and therefore
//! only the deterministic parts of the bench output are asserted.

use std::process::Command;

fn cli(args: &[&str]) -> (i32, String, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_fourvec"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).expect("stdout is utf-8"),
        String::from_utf8(output.stderr).expect("stderr is utf-8"),
    )
}

#[test]
fn prod_golden() {
    let (code, stdout, _) = cli(&["prod", "(1,2,3,4)", "(5,6,7,8)"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(70, -8, 0, -16)\n");
}

#[test]
fn hprod_golden() {
    let (code, stdout, _) = cli(&["hprod", "(1,2,3,4)", "(5,6,7,8)"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(-60, 12, 30, 24)\n");
}

#[test]
fn divide_golden_at_precision_6() {
    let (code, stdout, _) = cli(&["divide", "(1,2,3,4)", "(3,6,9,12)", "--precision", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(0.333333, 0, 0, 0)\n");
}

#[test]
fn factor_right_golden() {
    let (code, stdout, _) = cli(&["factor-right", "(7,1,-3,5)", "(1,3+5i,2,-1)"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(-0.3-0.4i, 0.9-0.8i, 0.48-1.06i, 0.36-0.42i)\n");
}

#[test]
fn factor_left_golden() {
    let (code, stdout, _) = cli(&["factor-left", "(7,1,-3,5)", "(1,3+5i,2,-1)"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(0.16-0.02i, 0.78-1.16i, -0.76+0.22i, -0.22+0.84i)\n");
}

#[test]
fn table_golden() {
    let expected = " ** |    e    i    j    k
----+--------------------
  e |    e    i    j    k
  i |   -i    e    k   -j
  j |   -j   -k    e    i
  k |   -k    j   -i    e
";
    let (code, stdout, _) = cli(&["table"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, expected);
}

#[test]
fn rotate_adapter() {
    let (code, stdout, _) = cli(&[
        "rotate",
        "(0,1,0,0)",
        "--axis",
        "0,0,1",
        "--angle",
        "1.5707963267948966",
        "--precision",
        "6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(0, 0, 1, 0)\n");
}

#[test]
fn rotate_with_explicit_rotor() {
    // A quarter turn about x: rotor (cos(pi/4), sin(pi/4), 0, 0).
    let (code, stdout, _) = cli(&[
        "rotate",
        "(0,0,1,0)",
        "--rotor",
        "(0.7071067811865476, 0.7071067811865476, 0, 0)",
        "--precision",
        "6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(0, 0, 0, 1)\n");
}

#[test]
fn boost_golden() {
    let (code, stdout, _) = cli(&["boost", "(1,0,1,0)", "--beta", "0.6", "--precision", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(1, 0, 1.25i, -0.75)\n");
}

#[test]
fn reflect_golden() {
    let (code, stdout, _) = cli(&["reflect", "(0,1,2,3)", "(0,1,0,0)", "--precision", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(0, -1, 2, 3)\n");
}

#[test]
fn solve_quad_golden() {
    let (code, stdout, _) = cli(&["solve-quad", "(0,-1,1,0)", "(-1,0,0,1)", "--precision", "6"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "q1 = (0, 1-0.707107i, 0.707107i, 0)\nq2 = (0, 1+0.707107i, -0.707107i, 0)\n"
    );
}

#[test]
fn solve_quad_degenerate() {
    let (code, stdout, _) = cli(&["solve-quad", "(0,0,0,0)", "(1,0,0,0)"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "degenerate: a continuum of solutions exists; no isolated roots\n");
}

#[test]
fn json_shape() {
    let (code, stdout, _) = cli(&["prod", "(1,2,3,4)", "(5,6,7,8)", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(stdout.trim()).expect("valid json");
    for key in ["t", "x", "y", "z"] {
        let pair = value[key].as_array().expect("pair");
        assert_eq!(pair.len(), 2);
        assert!(pair.iter().all(|p| p.is_number()));
    }
    assert_eq!(value["t"][0], 70.0);
    assert_eq!(value["x"][0], -8.0);
    assert_eq!(value["z"][0], -16.0);
}

#[test]
fn parse_error_exits_2() {
    let (code, stdout, stderr) = cli(&["prod", "(1, 2, 3", "(1,0,0,0)"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("parse error"));
}

#[test]
fn usage_error_exits_2() {
    let (code, _, _) = cli(&["boost", "(1,0,0,0)"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["boost", "(1,0,0,0)", "--beta", "0.5", "--trig", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["rotate", "(1,0,0,0)"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _, _) = cli(&["prod", "(1,2,3,4)", "(5,6,7,8)", "--precision", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn domain_error_exits_3() {
    // A zero-norm divisor is well-formed input outside the domain.
    let (code, stdout, stderr) = cli(&["divide", "(1,2,3,4)", "(1,1i,0,0)"]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(stderr.contains("zero norm"));
    // A non-unit rotor.
    let (code, _, stderr) = cli(&["rotate", "(1,0,0,0)", "--rotor", "(2,0,0,0)"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("rotor"));
    // Reflecting a non-pure vector.
    let (code, _, _) = cli(&["reflect", "(1,1,0,0)", "(0,1,0,0)"]);
    assert_eq!(code, 3);
    // A superluminal speed fraction.
    let (code, _, _) = cli(&["boost", "(1,0,0,0)", "--beta", "1.5"]);
    assert_eq!(code, 3);
}

#[test]
fn verify_exit_codes() {
    let (code, stdout, _) = cli(&["verify", "--samples", "50"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("identities passed"));
    assert!(!stdout.contains("[FAIL]"));
    // Zero tolerance makes floating-point identities fail.
    let (code, stdout, _) = cli(&["verify", "--samples", "50", "--tol", "0"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("[FAIL]"));
    assert!(stdout.contains("[PASS] basis-table"));
}

#[test]
fn verify_json_reports_every_identity() {
    let (code, stdout, _) = cli(&["verify", "--samples", "20", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(stdout.trim()).expect("valid json");
    assert_eq!(value["all_passed"], true);
    assert_eq!(value["seed"], 42);
    let identities = value["identities"].as_array().expect("array");
    assert!(identities.len() >= 50);
    assert!(identities.iter().all(|i| i["passed"] == true));
}

#[test]
fn deterministic_output_for_identical_invocations() {
    for args in [
        vec!["verify", "--samples", "200", "--seed", "99"],
        vec!["solve-quad", "(0,-1,1,0)", "(-1,0,0,1)", "--json"],
        vec!["prod", "(1,2,3,4)", "(5,6,7,8)", "--json"],
        vec!["table", "--json"],
    ] {
        let first = cli(&args);
        let second = cli(&args);
        assert_eq!(first, second, "output differs for {args:?}");
    }
}

#[test]
fn bench_reports_counts() {
    let (code, stdout, _) = cli(&["bench", "--iterations", "500"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("fourvector product: 16 multiplications, 12 additions"));
    assert!(stdout.contains("3x3 matrix product: 27 multiplications, 18 additions"));
    let (code, stdout, _) = cli(&["bench", "--iterations", "1", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(stdout.trim()).expect("valid json");
    assert_eq!(value["mults_fourvector"], 16);
    assert_eq!(value["adds_fourvector"], 12);
    assert_eq!(value["mults_matrix"], 27);
    assert_eq!(value["adds_matrix"], 18);
    assert_eq!(value["counts_match_claim"], true);
    assert_eq!(value["iterations"], 1);
}

#[test]
fn precision_17_round_trips_exactly() {
    let literal = "(0.1, 0.2+0.30000000000000004i, -0.7, 1e-3)";
    // 1 ** A is exactly A, and precision 17 prints shortest exact forms.
    let (code, stdout, _) = cli(&["prod", "(1,0,0,0)", literal, "--precision", "17"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "(0.1, 0.2+0.30000000000000004i, -0.7, 0.001)\n");
}
