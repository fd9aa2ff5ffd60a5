//! End-to-end runs of the `schurforge` binary: golden outputs and the
//! exit-code contract.

use std::process::{Command, Output};

fn schurforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurforge"))
        .args(args)
        .env_remove("SCHURFORGE_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn show_trivial_and_elementary() {
    let o = schurforge(&["show", "-c", "0,1,2", "-f", "Q"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "1");
    let o = schurforge(&["show", "-c", "0,2,3", "-f", "Q"]);
    assert_eq!(first_line(&o), "x0*x1 + x0*x2 + x1*x2");
    assert!(stdout(&o).contains("partition: 1,1,0"));
    assert!(stdout(&o).contains("gaps: 2,1"));
}

#[test]
fn show_mod_seven_is_a_quartic_form() {
    let o = schurforge(&["show", "-c", "0,2,5", "-f", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let f = schurforge::FieldCtx::prime(7).unwrap();
    let p = schurforge::MPoly::parse(&f, 3, &first_line(&o)).unwrap();
    assert!(p.is_homogeneous());
    assert_eq!(p.total_degree().unwrap(), 4);
    // coefficient 2 survives reduction; nothing exceeds 6
    assert!(first_line(&o).contains("2*x0^2*x1*x2"));
}

#[test]
fn show_rejects_bad_input() {
    assert_eq!(schurforge(&["show", "-c", "0,2,2", "-f", "Q"]).status.code(), Some(2));
    assert_eq!(schurforge(&["show", "-c", "0,2,5", "-f", "4"]).status.code(), Some(2));
    assert_eq!(schurforge(&["show", "-c", "0,2,5", "--format", "csv"]).status.code(), Some(2));
}

fn expand_row(text: &str, i: u32) -> String {
    text.lines()
        .find(|l| l.starts_with(&format!("i={i}:")))
        .unwrap_or_else(|| panic!("row {i} missing in\n{text}"))
        .to_string()
}

#[test]
fn expand_annotations() {
    let o = schurforge(&["expand", "-c", "0,2,5", "-f", "Q"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let r0 = expand_row(&text, 0);
    assert!(r0.contains("div_C_3=true") && r0.contains("assoc_C_3=true"), "{r0}");
    assert!(expand_row(&text, 3).contains("assoc_C_2=true"));
    assert!(expand_row(&text, 1).contains("div_C_3=true"));
}

#[test]
fn expand_needs_three_variables() {
    assert_eq!(schurforge(&["expand", "-c", "0,2,5,7", "-f", "Q"]).status.code(), Some(2));
    assert_eq!(schurforge(&["expand", "-c", "0,2", "-f", "Q"]).status.code(), Some(2));
}

#[test]
fn irred_examples() {
    let o = schurforge(&["irred", "-c", "0,2,5", "-f", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert!(t.contains("applies=true") && t.contains("verdict: Irreducible"), "{t}");

    let o = schurforge(&["irred", "-c", "0,2,4", "-f", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert!(t.contains("only_if_holds=false") && t.contains("verdict: Reducible"), "{t}");
    assert!(t.contains("witness: x0 + x1\n"), "{t}");

    let o = schurforge(&["irred", "-c", "0,2,5,7", "-f", "5", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let t = stdout(&o);
    assert!(t.contains("verdict: Inconclusive") && t.contains("searched_degree: 2"), "{t}");
}

#[test]
fn irred_over_rationals_is_a_usage_error() {
    assert_eq!(schurforge(&["irred", "-c", "0,2,5", "-f", "Q"]).status.code(), Some(2));
}

#[test]
fn irred_strategies_and_workers_agree() {
    let base = stdout(&schurforge(&["irred", "-c", "0,2,6", "-f", "2"]));
    let naive = stdout(&schurforge(&["irred", "-c", "0,2,6", "-f", "2", "--strategy", "naive"]));
    let wide = stdout(&schurforge(&["irred", "-c", "0,2,6", "-f", "2", "--workers", "4"]));
    let pick = |t: &str| t.lines().filter(|l| l.starts_with("verdict") || l.starts_with("witness")).collect::<Vec<_>>().join("\n");
    assert_eq!(pick(&base), pick(&naive));
    assert_eq!(base, wide);
}

#[test]
fn survey_bounds_and_summary() {
    let o = schurforge(&["survey", "--amax", "20"]);
    assert_eq!(o.status.code(), Some(2));
    let o = schurforge(&["survey", "--amax", "6", "--primes", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let csv = stdout(&o);
    assert!(csv.starts_with("a,b,p,total_degree,theorem_applies,verdict,witness,candidates_tested,elapsed_ms\n"));
    assert_eq!(csv.lines().count(), 13);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("12 instances, "), "{err}");
    assert!(err.trim_end().ends_with(", 0 inconsistencies"), "{err}");
}

#[test]
fn survey_output_file_and_worker_env() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.csv");
    let many = dir.path().join("many.csv");
    let o = schurforge(&["survey", "--amax", "7", "-o", one.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("inconsistencies"));
    let o = Command::new(env!("CARGO_BIN_EXE_schurforge"))
        .args(["survey", "--amax", "7", "-o", many.to_str().unwrap()])
        .env("SCHURFORGE_WORKERS", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&one).unwrap(), std::fs::read(&many).unwrap());
}

#[test]
fn survey_to_unwritable_path_exits_2() {
    let o = schurforge(&["survey", "--amax", "5", "-o", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_facts_small_grid_and_mutation() {
    let args = ["verify-facts", "--bmax", "7", "--cmax", "6", "--nmax", "4", "--mirror-kmax", "6", "--primes", "2,3"];
    let o = schurforge(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));

    let mut mutated = args.to_vec();
    mutated.extend(["--facts", "expansion,minmax", "--inject-mutation"]);
    let o = schurforge(&mutated);
    assert_eq!(o.status.code(), Some(1));
    let t = stdout(&o);
    assert!(t.lines().any(|l| l.starts_with("FAIL expansion") && l.contains(" != ")), "{t}");
}

#[test]
fn verify_facts_rejects_out_of_envelope_grids() {
    assert_eq!(schurforge(&["verify-facts", "--bmax", "40"]).status.code(), Some(2));
    assert_eq!(schurforge(&["verify-facts", "--primes", "4"]).status.code(), Some(2));
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(schurforge(&[]).status.code(), Some(2));
    assert_eq!(schurforge(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(schurforge(&["show"]).status.code(), Some(2));
    assert_eq!(schurforge(&["--help"]).status.code(), Some(0));
    let v = schurforge(&["--version"]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains(schurforge::VERSION));
    let bad_env = Command::new(env!("CARGO_BIN_EXE_schurforge"))
        .args(["show", "-c", "0,1,2"])
        .env("SCHURFORGE_WORKERS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn json_reports_are_deterministic_across_workers() {
    let a = stdout(&schurforge(&["survey", "--amax", "7", "--format", "json", "--workers", "1"]));
    let b = stdout(&schurforge(&["survey", "--amax", "7", "--format", "json", "--workers", "3"]));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["version"], schurforge::VERSION);
    assert_eq!(v["config"]["params"]["amax"], 7);
}
