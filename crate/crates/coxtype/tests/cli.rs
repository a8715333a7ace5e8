use std::process::{Command, Output};

fn coxtype(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxtype")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn level_zero_listing() {
    let out = coxtype(&["adm", "--datum", "C2:id:mu=[0,1]:K={0}", "--level0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 . tau2\ns1 . tau2\ns2 . tau2\n");
}

#[test]
fn bad_input_exits_with_one() {
    for datum in ["A3:id:mu=[0,0,0]:K={}", "A3:id:mu=[0,x,0]:K={}", "Q3:id:mu=[1,0,0]:K={}"] {
        let out = coxtype(&["check", "--datum", datum]);
        assert_eq!(out.status.code(), Some(1), "{datum}");
        assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
    }
}

#[test]
fn json_is_byte_stable() {
    let args = ["--json", "smooth", "--datum", "A3:id:mu=[1,0,1]:K={0,1,2}", "--per-stratum"];
    let first = coxtype(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, coxtype(&args).stdout);
    let value: serde_json::Value = serde_json::from_slice(&first.stdout).expect("valid JSON");
    assert_eq!(value[0]["datum"], "A3:id:mu=[1,0,1]:K={0,1,2}");
    assert_eq!(value[0]["agrees"], true);
}

#[test]
fn check_reports_all_conditions() {
    let out = coxtype(&["--json", "check", "--datum", "B3:Ad(tau1):mu=[1,0,0]:K={0,1,2}"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    for key in ["condition_1", "condition_2", "condition_3", "consistent"] {
        assert_eq!(value[key], true, "{key}");
    }
}

#[test]
fn small_tables_match_golden() {
    let out = coxtype(&["--max-rank", "3", "tables"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}
