//! Black-box tests of the built binary: argument surface, exit codes, and
//! golden output lines.

use std::process::Command;

fn flagcomb(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_flagcomb"))
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
fn gen_emits_canonical_json() {
    let (code, stdout, _) = flagcomb(&["gen", "cycle:5"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout.trim(),
        r#"{"n":5,"facets":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#
    );
}

#[test]
fn stats_emits_csv_row() {
    let (code, stdout, _) = flagcomb(&["stats", "cycle:5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("name,d,f,h,gamma,g_coeffs,p_coeffs"));
    assert!(stdout.contains(r#"cycle:5,2,"1,5,5","1,3,1","1,1","3,1","3,2""#));
}

#[test]
fn suite_exit_codes() {
    let (code, _, stderr) = flagcomb(&["suite", "gamcheb", "--max-n", "8"]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stderr.contains("suite gamcheb: pass"));

    // Comparison suites report mismatches through exit code 2.
    let (code, _, _) = flagcomb(&["suite", "danzinput"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = flagcomb(&["suite", "no-such-suite"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("unknown suite"));

    let (code, _, _) = flagcomb(&["suite", "gamcheb", "--max-n", "3"]);
    assert_eq!(code, 1);
}

#[test]
fn io_round_trips_generated_complexes() {
    let dir = std::env::temp_dir();
    let a = dir.join("flagcomb_cli_bin_a.json");
    let b = dir.join("flagcomb_cli_bin_b.json");
    let (code, _, _) = flagcomb(&["gen", "join(cycle:5,cycle:5)", "--out", a.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, _, _) = flagcomb(&["io", a.to_str().unwrap(), "--out", b.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(
        std::fs::read_to_string(&a).unwrap(),
        std::fs::read_to_string(&b).unwrap()
    );
}

#[test]
fn suite_reports_canonicalize_through_io() {
    let dir = std::env::temp_dir();
    let r = dir.join("flagcomb_cli_bin_report.json");
    let (code, _, _) = flagcomb(&["suite", "tchebF", "--out", r.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (code, stdout, _) = flagcomb(&["io", r.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"suite\": \"tchebF\""));
}

#[test]
fn search_reports_all_readings() {
    let (code, stdout, _) = flagcomb(&["search-gamma-witness", "cycle:5"]);
    assert_eq!(code, 0);
    for reading in ["truncated", "full", "gamma"] {
        assert!(stdout.contains(reading));
    }
}
