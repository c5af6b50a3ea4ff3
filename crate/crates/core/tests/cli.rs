use std::process::{Command, Output};

use hq_euler::arith::parse_qrat;
use hq_euler::euler::{euler_gf, euler_number_higher};
use hq_euler::QRat;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hq-euler"))
        .args(args)
        .env_remove("HQ_EULER_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn compute_plain_zeroth() {
    assert_eq!(stdout(&["compute", "--n", "0", "--h", "1", "--v", "1", "--format", "plain"]), "2/(q + 1)\n");
}

#[test]
fn compute_json_first() {
    assert_eq!(
        stdout(&["compute", "--n", "1", "--h", "1", "--v", "1", "--format", "json"]),
        "{\"num\":[\"0\",\"-2\"],\"den\":[\"1\",\"2\",\"1\"]}\n"
    );
}

#[test]
fn compute_specialized_classical() {
    assert_eq!(stdout(&["compute", "--n", "3", "--h", "1", "--v", "1", "--q0", "1", "--format", "plain"]), "1/4\n");
}

#[test]
fn json_and_plain_agree() {
    for (n, h, v) in [(4, -2, 1), (3, 0, 2), (5, 3, 3)] {
        let (n, h, v) = (n.to_string(), h.to_string(), v.to_string());
        let base = ["compute", "--n", &n, "--h", &h, "--v", &v];
        let json: QRat = serde_json::from_str(&stdout(&[&base[..], &["--format", "json"]].concat())).unwrap();
        let plain = parse_qrat(stdout(&[&base[..], &["--format", "plain"]].concat()).trim()).unwrap();
        assert_eq!(json, plain);
        assert_eq!(json, euler_number_higher(n.parse().unwrap(), h.parse().unwrap(), v.parse().unwrap()));
    }
}

#[test]
fn table_matches_series() {
    let text = stdout(&["table", "--nmax", "2", "--h", "1", "--v", "1"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(rows.len(), 3);
    let gf = euler_gf(1, 2);
    for (n, row) in rows.iter().enumerate() {
        assert_eq!(row["n"], n);
        let value: QRat = serde_json::from_value(row["value"].clone()).unwrap();
        assert_eq!(&value, &gf.coeffs()[n]);
    }
}

#[test]
fn table_single_row_csv() {
    // 8/(q^2 + 1)^3
    assert_eq!(
        stdout(&["table", "--nmax", "0", "--h", "2", "--v", "3", "--format", "csv"]),
        "n,num,den\n0,8,1;0;3;0;3;0;1\n"
    );
}

#[test]
fn table_latex_is_tabular() {
    let text = stdout(&["table", "--nmax", "1", "--h", "1", "--format", "latex"]);
    assert!(text.starts_with("\\begin{tabular}"));
    assert!(text.contains("\\frac{2}{q + 1}"));
    assert!(text.trim_end().ends_with("\\end{tabular}"));
}

#[test]
fn usage_errors_exit_2_without_output() {
    for args in [
        &["table", "--nmax", "two", "--h", "1"][..],
        &["compute", "--n", "1"],
        &["compute", "--n", "1", "--h", "1", "--v", "0"],
        &["compute", "--n", "1", "--h", "1", "--x", "q+"],
        &["verify", "no-such-identity"],
        &["verify", "distribution", "--d", "2"],
        &["verify", "all", "--format", "yaml"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_3() {
    // 2/(q + 1) has a pole at q = -1.
    let out = run(&["compute", "--n", "0", "--h", "1", "--q0", "-1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
    let out = run(&["verify", "complete-sum-numbers", "--max-n", "6", "--max-v", "3", "--cap", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_streams_pass_records() {
    let out = run(&["verify", "complete-sum-numbers", "--max-n", "6", "--max-v", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let records: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // 7 values of n, 3 orders, 6 values of h
    assert_eq!(records.len(), 7 * 3 * 6);
    assert!(records.iter().all(|r| r["status"] == "pass" && r["identity"] == "complete-sum-numbers"));
}

#[test]
fn verify_all_small_grid_passes() {
    let out = run(&["verify", "all", "--max-n", "8", "--max-v", "3", "--seed", "0"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest", "--format", "plain"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS mutation")).count(), 9);
    assert!(!text.contains("FAIL"));
}

#[test]
fn cache_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env-cache.json");
    let args = ["compute", "--n", "5", "--h", "-1", "--v", "2"];
    let plain = stdout(&args);
    let with_env = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_hq-euler"))
            .args(args)
            .args(extra)
            .env("HQ_EULER_CACHE", &path)
            .output()
            .unwrap()
    };
    assert_eq!(with_env(&[]).stdout, plain.as_bytes());
    assert!(path.exists());
    assert_eq!(with_env(&[]).stdout, plain.as_bytes());
    std::fs::remove_file(&path).unwrap();
    assert_eq!(with_env(&["--no-cache"]).stdout, plain.as_bytes());
    assert!(!path.exists());
}
