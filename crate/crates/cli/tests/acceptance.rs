//! Acceptance: the verification suite behind the CLI is deterministic —
//! identical invocations produce byte-identical output and exit 0.

use std::process::{Command, Output};
use std::time::Instant;

fn run_verify() -> Output {
    Command::new(env!("CARGO_BIN_EXE_rwhitney"))
        .args(["verify", "--nmax", "12", "--seed", "1", "--format", "json"])
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_11_cli_determinism() {
    let start = Instant::now();
    let first = run_verify();
    let second = run_verify();

    assert!(first.status.success(), "first run must exit 0");
    assert!(second.status.success(), "second run must exit 0");
    assert_eq!(first.status.code(), Some(0));
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout, "output must be byte-identical");

    let reports: serde_json::Value = serde_json::from_slice(&first.stdout).expect("valid JSON");
    let reports = reports.as_array().expect("a JSON array of reports");
    assert!(!reports.is_empty());
    for report in reports {
        assert_eq!(report["status"], "pass");
        for key in ["identity_id", "instance", "lhs", "rhs"] {
            assert!(report.get(key).is_some(), "report missing {key}");
        }
    }

    println!(
        "PASS criterion 11: verify --nmax 12 --seed 1 --format json is byte-identical twice and exits 0 ({:.2?}, {} reports)",
        start.elapsed(),
        reports.len()
    );
}
