//! End-to-end tests of the command-line surface: output, witnesses, exit
//! codes and the JSON contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binop"))
        .args(args)
        .env_remove("BINOP_GUARD_MAX")
        .output()
        .expect("binary runs")
}

fn run_with_guard(guard: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_binop"))
        .args(args)
        .env("BINOP_GUARD_MAX", guard)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn order_prints_the_formula_value() {
    let out = run(&["order", "-n", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "216\n");
    assert_eq!(stdout(&run(&["order", "-n", "2"])), "4\n");
    assert_eq!(stdout(&run(&["order", "-n", "4"])), "331776\n");
}

#[test]
fn validate_reports_kinds() {
    let out = run(&["validate", &fixture("phi1.bop")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("kind: binop"));
    assert!(text.contains("invertible: true"));

    let out = run(&["validate", &fixture("klein.grp")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("kind: group"));
    assert!(text.contains("order: 4"));
    assert!(text.contains("abelian: true"));
}

#[test]
fn validate_flags_group_axiom_failures_with_witness() {
    let out = run(&["validate", &fixture("nonassoc5.grp")]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("invalid"));
    assert!(text.contains("not associative"), "got: {text}");
}

#[test]
fn validate_rejects_malformed_files_as_input_errors() {
    let out = run(&["validate", &fixture("missingrow.bop")]);
    assert_eq!(code(&out), 2);
    let out = run(&["validate", "/nonexistent/file.bop"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn compose_writes_the_product_table() {
    let out = run(&["compose", &fixture("phi1.bop"), &fixture("phi2.bop")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "points: a b\na: b a\nb: a b\n");
}

#[test]
fn invert_round_trips_an_involution() {
    let out = run(&["invert", &fixture("phi2.bop")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "points: a b\na: a b\nb: b a\n");
}

#[test]
fn compose_writes_to_a_file_with_dash_o() {
    let dir = std::env::temp_dir().join(format!("binop-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("composed.bop");
    let out = run(&[
        "compose",
        &fixture("phi1.bop"),
        &fixture("phi1.bop"),
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "");
    assert_eq!(
        std::fs::read_to_string(&out_path).unwrap(),
        "points: a b\na: a b\nb: a b\n"
    );
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn invert_fails_with_witness_on_non_invertible_input() {
    let out = run(&["invert", &fixture("noninv.bop")]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("witness: slice t=a"));
}

#[test]
fn slices_lists_rows_with_labels() {
    let out = run(&["slices", &fixture("phi2.bop")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "a: a b\nb: b a\n");
}

#[test]
fn check_invertible_exit_codes() {
    let ok = run(&["check-invertible", &fixture("phi1.bop")]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("invertible"));

    let bad = run(&["check-invertible", &fixture("noninv.bop")]);
    assert_eq!(code(&bad), 1);
    let text = stdout(&bad);
    assert!(text.contains("not invertible"));
    assert!(text.contains("witness: slice t=a images=[a a]"), "got: {text}");
}

#[test]
fn check_distributive_reports_the_slice_witness() {
    let out = run(&[
        "check-distributive",
        &fixture("phi2.bop"),
        &fixture("phi2.bop"),
    ]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("t=b t'=a"), "got: {text}");

    let ok = run(&["check-distributive", &fixture("phi1.bop")]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("distributive"));
}

#[test]
fn check_distributive_subgroup_mode() {
    let ok = run(&[
        "check-distributive",
        "--subgroup",
        &fixture("identity2.bop"),
    ]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("distributive subgroup"));

    // {phi1} satisfies the pairwise relation but is not a subgroup.
    let bad = run(&["check-distributive", "--subgroup", &fixture("phi1.bop")]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("identity"));
}

#[test]
fn check_distributive_rejects_non_invertible_input() {
    let out = run(&["check-distributive", &fixture("noninv.bop")]);
    assert_eq!(code(&out), 2);
}

#[test]
fn closure_emits_four_elements_and_identifies_them() {
    let out = run(&[
        "closure",
        "--identify",
        &fixture("phi1.bop"),
        &fixture("phi2.bop"),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.matches("points: a b").count(), 4);
    assert!(text.ends_with("# group: V4\n"), "got: {text}");
}

#[test]
fn identify_names_the_klein_group() {
    let out = run(&["identify", &fixture("phi1.bop"), &fixture("phi2.bop")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "V4\n");
}

#[test]
fn census_counts_match_the_formula() {
    let out = run(&["census", "-n", "2", "--exhaustive-inverse"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("total_ops: 16"));
    assert!(text.contains("row_permutation_ops: 4"));
    assert!(text.contains("two_sided_invertible_ops: 4"));
    assert!(text.contains("formula_value: 4"));
}

#[test]
fn guards_map_to_exit_code_3() {
    assert_eq!(code(&run(&["census", "-n", "4"])), 3);
    assert_eq!(code(&run(&["enumerate", "-n", "4"])), 3);
    let out = run_with_guard(
        "2",
        &["closure", &fixture("phi1.bop"), &fixture("phi2.bop")],
    );
    assert_eq!(code(&out), 3);
}

#[test]
fn guard_override_reaches_every_guarded_command() {
    let out = run_with_guard("100", &["enumerate", "-n", "3"]);
    assert_eq!(code(&out), 3);
    let out = run_with_guard("3", &["enumerate", "-n", "2", "--invertible"]);
    assert_eq!(code(&out), 3);
    let out = run_with_guard("1", &["represent", &fixture("z2.grp"), "--verify"]);
    assert_eq!(code(&out), 3);
    let out = run_with_guard("100", &["census", "-n", "2"]);
    assert_eq!(code(&out), 0);
    let bad = run_with_guard("not-a-number", &["order", "-n", "2"]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn enumerate_streams_blank_line_separated_tables() {
    let out = run(&["enumerate", "-n", "2", "--invertible"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 4);
    assert!(blocks[0].starts_with("points: 0 1\n0: 0 1\n1: 0 1"));

    let limited = run(&["enumerate", "-n", "5", "--invertible", "--limit", "3"]);
    assert_eq!(code(&limited), 0);
    assert_eq!(stdout(&limited).split("\n\n").count(), 3);
}

#[test]
fn represent_emits_tables_and_verifies() {
    let out = run(&["represent", &fixture("z2.grp")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("# element: e\npoints: e g\ne: e g\ng: e g\n"));
    assert!(text.contains("# element: g\npoints: e g\ne: g e\ng: g e\n"));

    let verified = run(&["represent", &fixture("z2.grp"), "--verify"]);
    assert_eq!(code(&verified), 0);
    let text = stdout(&verified);
    assert!(text.contains("group: C2"));
    assert!(text.contains("injective: true"));
    assert!(text.contains("image_order: 2"));
    assert!(text.contains("isomorphic_to_source: true"));
}

#[test]
fn represent_rejects_invalid_groups() {
    let out = run(&["represent", &fixture("nonassoc5.grp")]);
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["no-such-command"])), 2);
    assert_eq!(code(&run(&["order"])), 2);
}

#[test]
fn json_objects_carry_ok_on_every_command() {
    let phi1 = fixture("phi1.bop");
    let phi2 = fixture("phi2.bop");
    let noninv = fixture("noninv.bop");
    let nonassoc = fixture("nonassoc5.grp");
    let z2 = fixture("z2.grp");
    let runs: Vec<(Vec<&str>, bool)> = vec![
        (vec!["--json", "validate", &phi1], true),
        (vec!["--json", "validate", &nonassoc], false),
        (vec!["--json", "compose", &phi1, &phi2], true),
        (vec!["--json", "invert", &noninv], false),
        (vec!["--json", "slices", &phi2], true),
        (vec!["--json", "check-invertible", &phi1], true),
        (vec!["--json", "check-distributive", &phi2, &phi2], false),
        (vec!["--json", "closure", "--identify", &phi1, &phi2], true),
        (vec!["--json", "order", "-n", "3"], true),
        (vec!["--json", "census", "-n", "2", "--exhaustive-inverse"], true),
        (
            vec!["--json", "enumerate", "-n", "2", "--invertible", "--limit", "2"],
            true,
        ),
        (vec!["--json", "represent", &z2, "--verify"], true),
        (vec!["--json", "identify", &phi1, &phi2], true),
    ];
    for (args, expect_ok) in runs {
        let out = run(&args);
        let text = stdout(&out);
        let value: serde_json::Value =
            serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: bad json {e}: {text}"));
        assert_eq!(
            value.get("ok").and_then(serde_json::Value::as_bool),
            Some(expect_ok),
            "{args:?}"
        );
        if expect_ok {
            assert_eq!(code(&out), 0, "{args:?}");
        } else {
            assert_eq!(code(&out), 1, "{args:?}");
            assert!(value.get("witness").is_some(), "{args:?}");
        }
    }
}

#[test]
fn json_failure_objects_on_errors() {
    let out = run(&["--json", "census", "-n", "4"]);
    assert_eq!(code(&out), 3);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["ok"], serde_json::json!(false));

    let out = run(&["--json", "validate", &fixture("missingrow.bop")]);
    assert_eq!(code(&out), 2);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["ok"], serde_json::json!(false));
}

#[test]
fn json_witness_names_the_failing_pair_and_parameters() {
    let out = run(&[
        "--json",
        "check-distributive",
        &fixture("phi2.bop"),
        &fixture("phi2.bop"),
    ]);
    assert_eq!(code(&out), 1);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["witness"]["t"], serde_json::json!("b"));
    assert_eq!(value["witness"]["t_prime"], serde_json::json!("a"));
    assert_eq!(
        value["witness"]["pair"],
        serde_json::json!(["phi2", "phi2"])
    );
}
