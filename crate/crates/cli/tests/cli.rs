//! CLI surface tests: argument handling, exit codes, flag plumbing, and the
//! shape of text and CSV output.

use std::process::Command;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_monocurve"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn usage_errors_exit_1() {
    let (code, _, _) = run_cli(&["analyze", "abc"]);
    assert_eq!(code, 1);
    let (code, _, _) = run_cli(&["analyze", "5"]);
    assert_eq!(code, 1); // single element
    let (code, _, _) = run_cli(&["analyze", "1,1,3"]);
    assert_eq!(code, 1); // duplicate
    let (code, _, _) = run_cli(&["bogus-subcommand"]);
    assert_eq!(code, 1);
    let (code, _, _) = run_cli(&["sweep", "--n-max", "1", "--a-max", "5"]);
    assert_eq!(code, 1); // n_max < 2
    let (code, _, _) = run_cli(&["sweep", "--n-max", "3", "--a-max", "5", "--checks", "bogus"]);
    assert_eq!(code, 1);
    let (code, _, _) = run_cli(&["decompose", "0,1,2", "--s", "0"]);
    assert_eq!(code, 1); // fold must be >= 1
}

#[test]
fn limit_errors_exit_2() {
    let (code, _, stderr) = run_cli(&["analyze", "0,1,2000000"]);
    assert_eq!(code, 2, "{stderr}");
    let (code, _, stderr) = run_cli(&["sweep", "--n-max", "8", "--a-max", "40"]);
    assert_eq!(code, 2, "{stderr}");
}

#[test]
fn help_exits_0() {
    let (code, _, _) = run_cli(&["--help"]);
    assert_eq!(code, 0);
    let (code, _, _) = run_cli(&["analyze", "--help"]);
    assert_eq!(code, 0);
}

#[test]
fn analyze_notes_normalization() {
    let (code, out, _) = run_cli(&["analyze", "3,5,9"]);
    assert_eq!(code, 0);
    assert!(out.contains("{0,1,3}"), "{out}");
    assert!(out.contains("shift 3, scale 2"), "{out}");
}

#[test]
fn analyze_flags_decomposition_fold() {
    let (code, out, _) = run_cli(&["analyze", "0,2,4,5,7", "--s", "5"]);
    assert_eq!(code, 0);
    assert!(out.contains("{0,2} ⊔ [4,33] ⊔ {35}"), "{out}");
}

#[test]
fn analyze_reports_progression_verdict() {
    let (code, out, _) = run_cli(&["analyze", "0,1,2"]);
    assert_eq!(code, 0);
    assert!(
        out.contains("arithmetic progression / rational normal curve"),
        "{out}"
    );
}

#[test]
fn decompose_renders_empty_blocks() {
    let (code, out, _) = run_cli(&["decompose", "0,1,2", "--s", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("∅ ⊔ [0,6] ⊔ ∅"), "{out}");

    let (code, out, _) = run_cli(&["decompose", "0,1,3,4", "--s", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("invalid, reason \"set mismatch\""), "{out}");
}

#[test]
fn ideal_subcommand_lists_generators() {
    let (code, out, _) = run_cli(&["ideal", "0,1,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 minimal generators"), "{out}");
    assert!(out.contains("x2^2 - x1*x3"), "{out}");

    let (code, out, _) = run_cli(&["ideal", "0,2,4,5,7", "--degree-cap", "5", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 6);
    assert_eq!(v["degree_cap"], 5);
}

#[test]
fn verify_reports_all_checks() {
    let (code, out, _) = run_cli(&["verify", "0,1,3,4"]);
    assert_eq!(code, 0);
    assert!(out.contains("lev-bound: holds"), "{out}");
    assert!(out.contains("cm = false"), "{out}");

    let (code, out, _) = run_cli(&["verify", "0,7,8,9,10", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["cm"], true);
    assert!(v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["holds"] == true));
}

#[test]
fn sweep_emits_header_and_rows() {
    let (code, out, _) = run_cli(&["sweep", "--n-max", "2", "--a-max", "1"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "n,a_list,a_n,delta1,delta2,hp_const,r,rho,sigma,num_generators,cm,bermejo_bound,lev_ok,rigidity_ok"
    );
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("2,0;1,1,"), "{out}");
}

#[test]
fn sweep_respects_check_selection() {
    let (code, out, _) = run_cli(&[
        "sweep",
        "--n-max",
        "3",
        "--a-max",
        "6",
        "--checks",
        "lev,rigidity",
    ]);
    assert_eq!(code, 0);
    // rows still carry the invariant data columns
    assert!(out.lines().count() > 5);
    for line in out.lines().skip(1) {
        assert!(line.ends_with("true,true"), "{line}");
    }
}

#[test]
fn sweep_includes_macaulay_set_as_non_cm() {
    let (code, out, _) = run_cli(&["sweep", "--n-max", "4", "--a-max", "6"]);
    assert_eq!(code, 0);
    let mac = out
        .lines()
        .find(|l| l.starts_with("4,0;1;3;4,"))
        .expect("Macaulay set in sweep");
    assert!(mac.contains(",false,NA,"), "{mac}");
}

#[test]
fn decompose_json_is_deterministic() {
    let (_, a, _) = run_cli(&["decompose", "0,2,4,5,7", "--s", "5", "--json"]);
    let (_, b, _) = run_cli(&["decompose", "0,2,4,5,7", "--s", "5", "--json"]);
    assert_eq!(a, b);
}

#[test]
fn text_and_json_agree_on_numeric_fields() {
    let (_, json_out, _) = run_cli(&["analyze", "0,2,4,5,7", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json_out).unwrap();
    let (_, text, _) = run_cli(&["analyze", "0,2,4,5,7"]);
    assert!(text.contains(&format!(
        "HP(s) = {}s - {}",
        v["hilbert"]["hp_slope"],
        -v["hilbert"]["hp_const"].as_i64().unwrap()
    )));
    assert!(text.contains(&format!(
        "sigma = {}",
        v["stabilization"]["sigma_empirical"]
    )));
    assert!(text.contains(&format!("{} minimal generators", v["ideal"]["count"])));
}
